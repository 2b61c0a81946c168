#include "kf/synthesis.hpp"

#include "builder.hpp"
#include "kf/error.hpp"

namespace kf {

using namespace build;

namespace {

Equivalence to_public(const Equiv& e) { return {e.lhs, e.rhs, e.to, e.from}; }

// ---- plain congruences ---------------------------------------------------

class Congruence {
public:
    explicit Congruence(Labels& labels) : labels_(labels) {}

    Equiv refl(const F& a) {
        std::string x = labels_.fresh("x");
        P id = lam(x, a, hyp(x));
        return {a, a, id, id};
    }

    Equiv conj(const Equiv& a, const Equiv& b) {
        return {build::conj(a.lhs, b.lhs), build::conj(a.rhs, b.rhs),
                map_conj(a.to, b.to, build::conj(a.lhs, b.lhs)),
                map_conj(a.from, b.from, build::conj(a.rhs, b.rhs))};
    }

    Equiv disj(const Equiv& a, const Equiv& b) {
        F l = build::disj(a.lhs, b.lhs);
        F r = build::disj(a.rhs, b.rhs);
        return {l, r, map_disj(a.to, b.to, l, r), map_disj(a.from, b.from, r, l)};
    }

    Equiv impl(const Equiv& a, const Equiv& b) {
        F l = imp(a.lhs, b.lhs);
        F r = imp(a.rhs, b.rhs);
        return {l, r, map_impl(a.from, b.to, l, a.rhs), map_impl(a.to, b.from, r, a.lhs)};
    }

    Equiv forall(const std::string& x, const Equiv& e) {
        F l = F::forall(x, e.lhs);
        F r = F::forall(x, e.rhs);
        return {l, r, map_forall(x, e.to, l), map_forall(x, e.from, r)};
    }

    Equiv exists(const std::string& x, const Equiv& e) {
        F l = F::exists(x, e.lhs);
        F r = F::exists(x, e.rhs);
        return {l, r, map_exists(x, e.to, l, r), map_exists(x, e.from, r, l)};
    }

    // (A → B) → B  ↔  (A' → B') → B'
    Equiv dneg(const Equiv& a, const Equiv& b) { return impl(impl(a, b), b); }

    // f: A → B gives ∀x A → ∀x B
    P map_forall(const std::string& x, const P& f, const F& src) {
        std::string u = labels_.fresh("u");
        return lam(u, src, gen(x, app(f, inst(hyp(u), x))));
    }

private:
    P map_conj(const P& f, const P& g, const F& src) {
        std::string p = labels_.fresh("p");
        return lam(p, src, pair(app(f, fst(hyp(p))), app(g, snd(hyp(p)))));
    }

    P map_disj(const P& f, const P& g, const F& src, const F& dst) {
        std::string u = labels_.fresh("u");
        std::string a = labels_.fresh("a");
        std::string b = labels_.fresh("b");
        return lam(u, src,
                   cases(hyp(u), a, inl(app(f, hyp(a)), dst.right()), b,
                         inr(dst.left(), app(g, hyp(b)))));
    }

    // back: B1 → A1, fwd: A2 → B2 gives (A1 → A2) → (B1 → B2)
    P map_impl(const P& back, const P& fwd, const F& src, const F& dst_premise) {
        std::string f = labels_.fresh("f");
        std::string y = labels_.fresh("y");
        return lam(f, src, lam(y, dst_premise, app(fwd, app(hyp(f), app(back, hyp(y))))));
    }

    P map_exists(const std::string& x, const P& f, const F& src, const F& dst) {
        std::string u = labels_.fresh("u");
        std::string h = labels_.fresh("h");
        return lam(u, src, unpack(hyp(u), x, h, wit(x, app(f, hyp(h)), dst)));
    }

    Labels& labels_;
};

// ---- T1..T3 --------------------------------------------------------------

// Ti(⊥) ↔ ⊥
Equiv bottom_collapse(TranslationKind t, Labels& labels) {
    F tb = leivant_translate(t, bot());
    std::string u = labels.fresh("u");
    std::string a = labels.fresh("a");
    std::string b = labels.fresh("b");
    if (t == TranslationKind::t1) {
        return {tb, bot(), lam(u, tb, cases(hyp(u), a, hyp(a), b, hyp(b))),
                lam(b, bot(), inl(hyp(b), bot()))};
    }
    // (⊥ → ⊥) → ⊥ for T2 and T3
    return {tb, bot(), lam(u, tb, app(hyp(u), lam(a, bot(), hyp(a)))),
            lam(b, bot(), lam(a, imp(bot(), bot()), hyp(b)))};
}

class LeivantEquiv {
public:
    explicit LeivantEquiv(TranslationKind t) : t_(t), cong_(labels_) {}

    Equiv outer(const F& a) {
        Equiv bq = bottom_collapse(t_, labels_);
        return cong_.dneg(inner(a, bq), bq);
    }

private:
    // Ti(A°) ↔ A_Ki
    Equiv inner(const F& a, const Equiv& bq) {
        switch (a.kind()) {
            case Connective::bottom:
            case Connective::atom: return cong_.refl(leivant_translate(t_, a));
            case Connective::conj: return cong_.conj(inner(a.left(), bq), inner(a.right(), bq));
            case Connective::disj: return cong_.disj(inner(a.left(), bq), inner(a.right(), bq));
            case Connective::impl: return cong_.impl(inner(a.left(), bq), inner(a.right(), bq));
            case Connective::forall:
                return cong_.forall(a.variable(), cong_.dneg(inner(a.body(), bq), bq));
            case Connective::exists: return cong_.exists(a.variable(), inner(a.body(), bq));
        }
        throw ContractViolation("unreachable formula kind");
    }

    TranslationKind t_;
    Labels labels_;
    Congruence cong_;
};

// ---- T4 ------------------------------------------------------------------

// up: U → V ∨ ⊥ and down: V → U ∨ ⊥ with U = T4(A°), V = A_K4.
struct BotMaps {
    F u;
    F v;
    P up;
    P down;
};

class T4Equiv {
public:
    T4Equiv() : cong_(labels_) {}

    Equiv outer(const F& a) { return dneg(maps(a)); }

private:
    F bb() const { return disj(bot(), bot()); }
    F fbot() const { return disj(bb(), bot()); }

    // (⊥ ∨ ⊥) ∨ ⊥ → ⊥
    P collapse() {
        std::string z = labels_.fresh("z");
        std::string a = labels_.fresh("a");
        std::string b = labels_.fresh("b");
        std::string c = labels_.fresh("c");
        return lam(z, fbot(), cases(hyp(z), a, cases(hyp(a), b, hyp(b), c, hyp(c)), c, hyp(c)));
    }

    // (U → T4⊥ ∨ ⊥) → T4⊥ ∨ ⊥  ↔  (V → ⊥) → ⊥
    Equiv dneg(const BotMaps& m) {
        F lhs = imp(imp(m.u, fbot()), fbot());
        F rhs = nn(m.v);
        std::string w = labels_.fresh("w");
        std::string n = labels_.fresh("n");
        std::string x = labels_.fresh("x");
        std::string c = labels_.fresh("c");
        std::string z = labels_.fresh("z");
        P to = lam(w, lhs,
                   lam(n, neg(m.v),
                       app(collapse(),
                           app(hyp(w), lam(x, m.u,
                                           cases(app(m.up, hyp(x)), c,
                                                 inr(bb(), app(hyp(n), hyp(c))), z,
                                                 inr(bb(), hyp(z))))))));
        std::string w2 = labels_.fresh("w");
        std::string k = labels_.fresh("k");
        std::string y = labels_.fresh("y");
        std::string c2 = labels_.fresh("c");
        std::string z2 = labels_.fresh("z");
        P from = lam(w2, rhs,
                     lam(k, imp(m.u, fbot()),
                         inr(bb(), app(hyp(w2),
                                       lam(y, m.v,
                                           cases(app(m.down, hyp(y)), c2,
                                                 app(collapse(), app(hyp(k), hyp(c2))), z2,
                                                 hyp(z2)))))));
        return {lhs, rhs, to, from};
    }

    // Wraps a proof of `dst` as an element of dst ∨ ⊥.
    static P ok(P t) { return inl(std::move(t), bot()); }

    P conj_map(const P& f, const P& g, const F& src, const F& dst) {
        std::string p = labels_.fresh("p");
        std::string a = labels_.fresh("a");
        std::string b = labels_.fresh("b");
        std::string z = labels_.fresh("z");
        std::string z2 = labels_.fresh("z");
        return lam(p, src,
                   cases(app(f, fst(hyp(p))), a,
                         cases(app(g, snd(hyp(p))), b, ok(pair(hyp(a), hyp(b))), z,
                               inr(dst, hyp(z))),
                         z2, inr(dst, hyp(z2))));
    }

    P disj_map(const P& f, const P& g, const F& src, const F& dst) {
        std::string w = labels_.fresh("w");
        std::string a = labels_.fresh("a");
        std::string b = labels_.fresh("b");
        std::string c = labels_.fresh("c");
        std::string z = labels_.fresh("z");
        return lam(w, src,
                   cases(hyp(w), a,
                         cases(app(f, hyp(a)), c, ok(inl(hyp(c), dst.right())), z,
                               inr(dst, hyp(z))),
                         b,
                         cases(app(g, hyp(b)), c, ok(inr(dst.left(), hyp(c))), z,
                               inr(dst, hyp(z)))));
    }

    // src = S1 → S2 ∨ ⊥, dst = D1 → D2 ∨ ⊥; back: D1 → S1 ∨ ⊥, fwd: S2 → D2 ∨ ⊥
    P impl_map(const P& back, const P& fwd, const F& src, const F& dst) {
        F d2 = dst.right().left();
        std::string f = labels_.fresh("f");
        std::string y = labels_.fresh("y");
        std::string c = labels_.fresh("c");
        std::string e = labels_.fresh("e");
        std::string z = labels_.fresh("z");
        std::string z2 = labels_.fresh("z");
        return lam(f, src,
                   ok(lam(y, dst.left(),
                          cases(app(back, hyp(y)), c,
                                cases(app(hyp(f), hyp(c)), e, app(fwd, hyp(e)), z,
                                      inr(d2, hyp(z))),
                                z2, inr(d2, hyp(z2))))));
    }

    P exists_map(const std::string& x, const P& f, const F& src, const F& dst) {
        std::string w = labels_.fresh("w");
        std::string h = labels_.fresh("h");
        std::string c = labels_.fresh("c");
        std::string z = labels_.fresh("z");
        return lam(w, src,
                   unpack(hyp(w), x, h,
                          cases(app(f, hyp(h)), c, ok(wit(x, hyp(c), dst)), z,
                                inr(dst, hyp(z)))));
    }

    BotMaps maps(const F& a) {
        switch (a.kind()) {
            case Connective::bottom:
            case Connective::atom: {
                F u = leivant_translate(TranslationKind::t4, a);
                std::string x = labels_.fresh("x");
                std::string y = labels_.fresh("y");
                return {u, a, lam(x, u, hyp(x)), lam(y, a, ok(ok(hyp(y))))};
            }
            case Connective::conj: {
                BotMaps l = maps(a.left());
                BotMaps r = maps(a.right());
                F u = conj(l.u, r.u);
                F v = conj(l.v, r.v);
                return {u, v, conj_map(l.up, r.up, u, v), conj_map(l.down, r.down, v, u)};
            }
            case Connective::disj: {
                BotMaps l = maps(a.left());
                BotMaps r = maps(a.right());
                F u = disj(l.u, r.u);
                F v = disj(l.v, r.v);
                return {u, v, disj_map(l.up, r.up, u, v), disj_map(l.down, r.down, v, u)};
            }
            case Connective::impl: {
                BotMaps l = maps(a.left());
                BotMaps r = maps(a.right());
                F u = imp(l.u, disj(r.u, bot()));
                F v = imp(l.v, disj(r.v, bot()));
                return {u, v, impl_map(l.down, r.up, u, v), impl_map(l.up, r.down, v, u)};
            }
            case Connective::forall: {
                const std::string& x = a.variable();
                Equiv e = dneg(maps(a.body()));
                F u = F::forall(x, e.lhs);
                F v = F::forall(x, e.rhs);
                std::string w = labels_.fresh("w");
                std::string w2 = labels_.fresh("w");
                return {u, v, lam(w, u, ok(app(cong_.map_forall(x, e.to, u), hyp(w)))),
                        lam(w2, v, ok(app(cong_.map_forall(x, e.from, v), hyp(w2))))};
            }
            case Connective::exists: {
                const std::string& x = a.variable();
                BotMaps b = maps(a.body());
                F u = F::exists(x, b.u);
                F v = F::exists(x, b.v);
                return {u, v, exists_map(x, b.up, u, v), exists_map(x, b.down, v, u)};
            }
        }
        throw ContractViolation("unreachable formula kind");
    }

    Labels labels_;
    Congruence cong_;
};

// ---- T5 ------------------------------------------------------------------

// f: W → ¬¬V and g: V → ¬¬W with W = (T5 A)° and V = A_K5.
struct NNMaps {
    F w;
    F v;
    P f;
    P g;
};

class ShoenfieldEquiv {
public:
    explicit ShoenfieldEquiv(F witness) : c_(std::move(witness)) {}

    Equiv outer(const F& a) {
        NNMaps m = maps(a);
        std::string x = labels_.fresh("a");
        std::string k = labels_.fresh("k");
        std::string w = labels_.fresh("w");
        std::string y = labels_.fresh("b");
        std::string k2 = labels_.fresh("k");
        std::string v = labels_.fresh("v");
        return {nn(m.w), nn(m.v),
                lam(x, nn(m.w),
                    lam(k, neg(m.v), app(hyp(x), lam(w, m.w, app(m.f, hyp(w), hyp(k)))))),
                lam(y, nn(m.v),
                    lam(k2, neg(m.w), app(hyp(y), lam(v, m.v, app(m.g, hyp(v), hyp(k2))))))};
    }

private:
    // λx:A. λk:¬A. k x
    P dn_unit(const F& a) {
        std::string x = labels_.fresh("x");
        std::string k = labels_.fresh("k");
        return lam(x, a, lam(k, neg(a), app(hyp(k), hyp(x))));
    }

    // f and g of a disjunction-shaped pair: cases on the input, re-inject
    // through the component maps.
    P disj_map(const P& f1, const P& f2, const F& src, const F& dst) {
        std::string x = labels_.fresh("x");
        std::string k = labels_.fresh("k");
        std::string a = labels_.fresh("a");
        std::string b = labels_.fresh("b");
        std::string c = labels_.fresh("c");
        return lam(x, src,
                   lam(k, neg(dst),
                       cases(hyp(x), a,
                             app(f1, hyp(a), lam(c, dst.left(), app(hyp(k), inl(hyp(c), dst.right())))),
                             b,
                             app(f2, hyp(b),
                                 lam(c, dst.right(), app(hyp(k), inr(dst.left(), hyp(c))))))));
    }

    // src = ¬S1 ∨ S2, dst = ¬D1 ∨ D2; back: D1 → ¬¬S1, fwd: S2 → ¬¬D2
    P impl_map(const P& back, const P& fwd, const F& src, const F& dst) {
        F d1 = dst.left().negated();
        F d2 = dst.right();
        std::string x = labels_.fresh("x");
        std::string k = labels_.fresh("k");
        std::string n = labels_.fresh("n");
        std::string a = labels_.fresh("a");
        std::string b = labels_.fresh("b");
        std::string c = labels_.fresh("c");
        return lam(x, src,
                   lam(k, neg(dst),
                       cases(hyp(x), n,
                             app(hyp(k), inl(lam(a, d1, app(back, hyp(a), hyp(n))), d2)), b,
                             app(fwd, hyp(b),
                                 lam(c, d2, app(hyp(k), inr(dst.left(), hyp(c))))))));
    }

    P exists_map(const std::string& var, const P& f, const F& src, const F& dst) {
        std::string x = labels_.fresh("x");
        std::string k = labels_.fresh("k");
        std::string h = labels_.fresh("h");
        std::string c = labels_.fresh("c");
        return lam(x, src,
                   lam(k, neg(dst),
                       unpack(hyp(x), var, h,
                              app(f, hyp(h),
                                  lam(c, dst.body(), app(hyp(k), wit(var, hyp(c), dst)))))));
    }

    NNMaps maps(const F& a) {
        switch (a.kind()) {
            case Connective::bottom: {
                F w = inner_translate(TranslationKind::k, shoenfield_translate(a, c_));
                F excluded = w.negated();  // ¬C° ∨ C°
                F cs = excluded.right();
                std::string x = labels_.fresh("x");
                std::string k = labels_.fresh("k");
                std::string c = labels_.fresh("c");
                std::string b = labels_.fresh("b");
                std::string k2 = labels_.fresh("k");
                P f = lam(x, w,
                          lam(k, neg(bot()),
                              app(hyp(x), inl(lam(c, cs, app(hyp(x), inr(excluded.left(), hyp(c)))),
                                              cs))));
                P g = lam(b, bot(), lam(k2, neg(w), hyp(b)));
                return {w, bot(), f, g};
            }
            case Connective::atom: return {a, a, dn_unit(a), dn_unit(a)};
            case Connective::conj: {
                NNMaps l = maps(a.left());
                NNMaps r = maps(a.right());
                F w = neg(disj(neg(l.w), neg(r.w)));
                F v = conj(l.v, r.v);
                std::string x = labels_.fresh("x");
                std::string k = labels_.fresh("k");
                std::string p = labels_.fresh("p");
                std::string q = labels_.fresh("q");
                std::string c = labels_.fresh("c");
                std::string d = labels_.fresh("d");
                P f = lam(x, w,
                          lam(k, neg(v),
                              app(hyp(x),
                                  inl(lam(p, l.w,
                                          app(hyp(x),
                                              inr(neg(l.w),
                                                  lam(q, r.w,
                                                      app(l.f, hyp(p),
                                                          lam(c, l.v,
                                                              app(r.f, hyp(q),
                                                                  lam(d, r.v,
                                                                      app(hyp(k),
                                                                          pair(hyp(c), hyp(d))))))))))),
                                      neg(r.w)))));
                std::string y = labels_.fresh("y");
                std::string k2 = labels_.fresh("k");
                std::string u = labels_.fresh("u");
                std::string n1 = labels_.fresh("n");
                std::string n2 = labels_.fresh("n");
                P g = lam(y, v,
                          lam(k2, neg(w),
                              app(hyp(k2),
                                  lam(u, disj(neg(l.w), neg(r.w)),
                                      cases(hyp(u), n1, app(l.g, fst(hyp(y)), hyp(n1)), n2,
                                            app(r.g, snd(hyp(y)), hyp(n2)))))));
                return {w, v, f, g};
            }
            case Connective::disj: {
                NNMaps l = maps(a.left());
                NNMaps r = maps(a.right());
                F w = disj(l.w, r.w);
                F v = disj(l.v, r.v);
                return {w, v, disj_map(l.f, r.f, w, v), disj_map(l.g, r.g, v, w)};
            }
            case Connective::impl: {
                NNMaps l = maps(a.left());
                NNMaps r = maps(a.right());
                F w = disj(neg(l.w), r.w);
                F v = disj(neg(l.v), r.v);
                return {w, v, impl_map(l.g, r.f, w, v), impl_map(l.f, r.g, v, w)};
            }
            case Connective::forall: {
                const std::string& var = a.variable();
                NNMaps b = maps(a.body());
                F ex = F::exists(var, neg(b.w));
                F w = neg(ex);
                F v = F::forall(var, nn(b.v));
                std::string y = labels_.fresh("y");
                std::string k = labels_.fresh("k");
                std::string n = labels_.fresh("n");
                std::string p = labels_.fresh("p");
                P f = lam(y, w,
                          lam(k, neg(v),
                              app(hyp(k),
                                  gen(var, lam(n, neg(b.v),
                                               app(hyp(y), wit(var, lam(p, b.w, app(b.f, hyp(p), hyp(n))),
                                                               ex)))))));
                std::string z = labels_.fresh("z");
                std::string k2 = labels_.fresh("k");
                std::string e = labels_.fresh("e");
                std::string m = labels_.fresh("m");
                std::string q = labels_.fresh("q");
                P g = lam(z, v,
                          lam(k2, neg(w),
                              app(hyp(k2),
                                  lam(e, ex,
                                      unpack(hyp(e), var, m,
                                             app(inst(hyp(z), var),
                                                 lam(q, b.v, app(b.g, hyp(q), hyp(m)))))))));
                return {w, v, f, g};
            }
            case Connective::exists: {
                const std::string& var = a.variable();
                NNMaps b = maps(a.body());
                F w = F::exists(var, b.w);
                F v = F::exists(var, b.v);
                return {w, v, exists_map(var, b.f, w, v), exists_map(var, b.g, v, w)};
            }
        }
        throw ContractViolation("unreachable formula kind");
    }

    F c_;
    Labels labels_;
};

// ---- K6 vs K7 / K8 -------------------------------------------------------

class K678Equiv {
public:
    explicit K678Equiv(TranslationKind j) : j_(j), cong_(labels_) {}

    // K6°(A) ↔ Kj°(A)
    Equiv inner(const F& a) {
        switch (a.kind()) {
            case Connective::bottom:
            case Connective::atom: return cong_.refl(a);
            case Connective::conj: return cong_.conj(inner(a.left()), inner(a.right()));
            case Connective::disj: return cong_.disj(inner(a.left()), inner(a.right()));
            case Connective::forall:
                return cong_.forall(a.variable(), cong_.dneg(inner(a.body()), cong_.refl(bot())));
            case Connective::exists: return cong_.exists(a.variable(), inner(a.body()));
            case Connective::impl: break;
        }
        Equiv ex = inner(a.left());
        Equiv ey = inner(a.right());
        F lhs = imp(ex.lhs, nn(ey.lhs));
        std::string u = labels_.fresh("u");
        std::string v = labels_.fresh("v");
        std::string n = labels_.fresh("n");
        std::string x = labels_.fresh("x");
        std::string y = labels_.fresh("y");
        std::string m = labels_.fresh("m");
        std::string p = labels_.fresh("p");
        if (j_ == TranslationKind::k7) {
            F rhs = imp(neg(ey.rhs), neg(ex.rhs));
            P to = lam(u, lhs,
                       lam(n, neg(ey.rhs),
                           lam(x, ex.rhs,
                               app(hyp(u), app(ex.from, hyp(x)),
                                   lam(y, ey.lhs, app(hyp(n), app(ey.to, hyp(y))))))));
            P from = lam(v, rhs,
                         lam(x, ex.lhs,
                             lam(m, neg(ey.lhs),
                                 app(hyp(v), lam(y, ey.rhs, app(hyp(m), app(ey.from, hyp(y)))),
                                     app(ex.to, hyp(x))))));
            return {lhs, rhs, to, from};
        }
        F rhs = neg(conj(ex.rhs, neg(ey.rhs)));
        P to = lam(u, lhs,
                   lam(p, conj(ex.rhs, neg(ey.rhs)),
                       app(hyp(u), app(ex.from, fst(hyp(p))),
                           lam(y, ey.lhs, app(snd(hyp(p)), app(ey.to, hyp(y)))))));
        P from = lam(v, rhs,
                     lam(x, ex.lhs,
                         lam(m, neg(ey.lhs),
                             app(hyp(v), pair(app(ex.to, hyp(x)),
                                              lam(y, ey.rhs, app(hyp(m), app(ey.from, hyp(y)))))))));
        return {lhs, rhs, to, from};
    }

private:
    TranslationKind j_;
    Labels labels_;
    Congruence cong_;
};

}  // namespace

ProofTerm synthesize_absorption(TranslationKind t, const Formula& formula) {
    if (!is_leivant(t)) throw ContractViolation("absorption is defined for T1..T4 only");
    Labels labels;
    std::string b = labels.fresh("b");
    auto body = [&](auto&& self, const F& a) -> P {
        switch (a.kind()) {
            case Connective::bottom:
            case Connective::atom:
                switch (t) {
                    case TranslationKind::t2: {
                        std::string n = labels.fresh("n");
                        return lam(n, neg(a), hyp(b));
                    }
                    case TranslationKind::t3: {
                        std::string f = labels.fresh("f");
                        return lam(f, imp(bot(), a), app(hyp(f), hyp(b)));
                    }
                    default: return inr(a, hyp(b));
                }
            case Connective::conj: return pair(self(self, a.left()), self(self, a.right()));
            case Connective::disj:
                return inl(self(self, a.left()), leivant_translate(t, a.right()));
            case Connective::impl: {
                std::string x = labels.fresh("x");
                F premise = leivant_translate(t, a.left());
                if (t == TranslationKind::t4) {
                    return lam(x, premise, inr(leivant_translate(t, a.right()), hyp(b)));
                }
                return lam(x, premise, self(self, a.right()));
            }
            case Connective::forall: return gen(a.variable(), self(self, a.body()));
            case Connective::exists:
                return wit(a.variable(), self(self, a.body()), leivant_translate(t, a));
        }
        throw ContractViolation("unreachable formula kind");
    };
    return lam(b, bot(), body(body, formula));
}

Equivalence equivalence_leivant(TranslationKind t, const Formula& formula) {
    if (!is_leivant(t)) throw ContractViolation("expected one of T1..T4");
    if (t == TranslationKind::t4) return to_public(T4Equiv().outer(formula));
    return to_public(LeivantEquiv(t).outer(formula));
}

Equivalence equivalence_shoenfield(const Formula& formula, const Formula& witness) {
    if (!witness.free_variables().empty()) {
        throw ContractViolation("T5 witness must be closed");
    }
    return to_public(ShoenfieldEquiv(witness).outer(formula));
}

Equivalence equivalence_k678(TranslationKind variant, const Formula& formula) {
    if (variant != TranslationKind::k7 && variant != TranslationKind::k8) {
        throw ContractViolation("expected K7 or K8");
    }
    return to_public(K678Equiv(variant).inner(formula));
}

ProofTerm synthesize_equiv_leivant(TranslationKind t, const Formula& formula) {
    return equivalence_leivant(t, formula).proof();
}

ProofTerm synthesize_equiv_shoenfield(const Formula& formula, const Formula& witness) {
    return equivalence_shoenfield(formula, witness).proof();
}

ProofTerm synthesize_equiv_k678(TranslationKind variant, const Formula& formula) {
    return equivalence_k678(variant, formula).proof();
}

}  // namespace kf
