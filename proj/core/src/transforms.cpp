#include "kf/transforms.hpp"

#include <tuple>

#include "builder.hpp"
#include "kf/error.hpp"
#include "kf/lemmas.hpp"
#include "kf/synthesis.hpp"

namespace kf {

using namespace build;

namespace {

Derivation checked(const ProofTerm& proof, const Sequent& sequent, LogicId logic) {
    try {
        return derive(proof, sequent, logic);
    } catch (const ProofRejected& e) {
        throw ContractViolation("input proof does not check in " + std::string(to_string(logic)) +
                                ": " + e.what());
    }
}

std::set<std::string> reserved_labels(const ProofTerm& proof, const Sequent& sequent) {
    std::set<std::string> out = proof.all_labels();
    for (const auto& h : sequent.hypotheses) out.insert(h.label);
    return out;
}

class Kuroda {
public:
    explicit Kuroda(std::set<std::string> reserved) : labels_(std::move(reserved)) {}

    // d : B  becomes a term of type ¬¬B°
    P run(const Derivation& d) {
        const P& t = d.term;
        const auto& ps = d.premises;
        switch (t.rule()) {
            case Rule::hyp: return t;
            case Rule::abst: {
                F c = star(t.formula());
                F e = star(ps[0].conclusion);
                return app(lemmas::dn_impl_intro(c, e), lam(t.label(), nn(c), run(ps[0])));
            }
            case Rule::apply: {
                const F& fn = ps[0].conclusion;
                F c = star(fn.left());
                F e = star(fn.right());
                auto [k, g, x] = fresh3("k", "g", "c");
                return lam(k, neg(e),
                           app(run(ps[0]),
                               lam(g, imp(c, e),
                                   app(run(ps[1]),
                                       lam(x, c, app(hyp(k), app(hyp(g), hyp(x))))))));
            }
            case Rule::pair: {
                F a = star(ps[0].conclusion);
                F b = star(ps[1].conclusion);
                auto [k, x, y] = fresh3("k", "a", "b");
                return lam(k, neg(conj(a, b)),
                           app(run(ps[0]),
                               lam(x, a,
                                   app(run(ps[1]),
                                       lam(y, b, app(hyp(k), pair(hyp(x), hyp(y))))))));
            }
            case Rule::proj_l:
            case Rule::proj_r: {
                F ab = star(ps[0].conclusion);
                F target = star(d.conclusion);
                std::string k = fresh("k");
                std::string p = fresh("p");
                P proj = t.rule() == Rule::proj_l ? fst(hyp(p)) : snd(hyp(p));
                return lam(k, neg(target), app(run(ps[0]), lam(p, ab, app(hyp(k), proj))));
            }
            case Rule::inj_l:
            case Rule::inj_r: {
                F sum = star(d.conclusion);
                F part = star(ps[0].conclusion);
                std::string k = fresh("k");
                std::string x = fresh("a");
                P inj = t.rule() == Rule::inj_l ? inl(hyp(x), sum.right()) : inr(sum.left(), hyp(x));
                return lam(k, neg(sum), app(run(ps[0]), lam(x, part, app(hyp(k), inj))));
            }
            case Rule::cases: {
                const F& sum = ps[0].conclusion;
                F c = star(sum.left());
                F e = star(sum.right());
                F target = star(d.conclusion);
                auto [k, u, x] = fresh3("k", "u", "c");
                auto [y, n1, n2] = fresh3("d", "n", "n");
                P left = app(app(lam(t.label(), nn(c), run(ps[1])),
                                 lam(n1, neg(c), app(hyp(n1), hyp(x)))),
                             hyp(k));
                P right = app(app(lam(t.label_r(), nn(e), run(ps[2])),
                                  lam(n2, neg(e), app(hyp(n2), hyp(y)))),
                              hyp(k));
                return lam(k, neg(target),
                           app(run(ps[0]),
                               lam(u, disj(c, e), cases(hyp(u), x, left, y, right))));
            }
            case Rule::gen: {
                std::string k = fresh("k");
                return lam(k, neg(star(d.conclusion)),
                           app(hyp(k), gen(t.variable(), run(ps[0]))));
            }
            case Rule::inst: {
                std::string k = fresh("k");
                std::string g = fresh("g");
                return lam(k, neg(star(d.conclusion)),
                           app(run(ps[0]), lam(g, star(ps[0].conclusion),
                                               app(P::inst(hyp(g), t.term()), hyp(k)))));
            }
            case Rule::witness: {
                F target = star(d.conclusion);
                std::string k = fresh("k");
                std::string b = fresh("b");
                return lam(k, neg(target),
                           app(run(ps[0]),
                               lam(b, star(ps[0].conclusion),
                                   app(hyp(k), P::witness(t.term(), hyp(b), target)))));
            }
            case Rule::unpack: {
                const F& ex = ps[0].conclusion;
                F opened = star(ex.body().substitute(ex.variable(), Term::variable(t.variable())));
                auto [k, e, h] = fresh3("k", "e", "h");
                std::string n = fresh("n");
                P body = app(app(lam(t.label(), nn(opened), run(ps[1])),
                                 lam(n, neg(opened), app(hyp(n), hyp(h)))),
                             hyp(k));
                return lam(k, neg(star(d.conclusion)),
                           app(run(ps[0]), lam(e, star(ex), unpack(hyp(e), t.variable(), h, body))));
            }
            case Rule::ex_falso: {
                std::string k = fresh("k");
                std::string b = fresh("b");
                return lam(k, neg(star(d.conclusion)), app(run(ps[0]), lam(b, bot(), hyp(b))));
            }
            case Rule::dne: {
                F b = star(d.conclusion);
                std::string k = fresh("k");
                std::string h = fresh("h");
                return lam(k, neg(b), app(run(ps[0]), lam(h, nn(b), app(hyp(h), hyp(k)))));
            }
        }
        throw ContractViolation("unreachable rule");
    }

private:
    static F star(const F& f) { return inner_translate(TranslationKind::k, f); }

    std::tuple<std::string, std::string, std::string> fresh3(std::string_view a, std::string_view b,
                                                             std::string_view c) {
        std::string x = fresh(a);
        std::string y = fresh(b);
        return {x, y, fresh(c)};
    }

    std::string fresh(std::string_view base) { return labels_.fresh(base); }

    Labels labels_;
};

class Leivant {
public:
    Leivant(TranslationKind t, std::set<std::string> reserved)
        : t_(t), labels_(std::move(reserved)) {}

    P run(const Derivation& d) {
        const P& t = d.term;
        const auto& ps = d.premises;
        bool t4 = t_ == TranslationKind::t4;
        switch (t.rule()) {
            case Rule::hyp: return t;
            case Rule::abst: {
                P body = run(ps[0]);
                if (t4) body = inl(std::move(body), bot());
                return lam(t.label(), tr(t.formula()), std::move(body));
            }
            case Rule::apply: {
                P r = app(run(ps[0]), run(ps[1]));
                if (!t4) return r;
                std::string y = labels_.fresh("y");
                std::string z = labels_.fresh("z");
                return cases(std::move(r), y, hyp(y), z,
                             app(synthesize_absorption(t_, d.conclusion), hyp(z)));
            }
            case Rule::pair: return pair(run(ps[0]), run(ps[1]));
            case Rule::proj_l: return fst(run(ps[0]));
            case Rule::proj_r: return snd(run(ps[0]));
            case Rule::inj_l: return inl(run(ps[0]), tr(t.formula()));
            case Rule::inj_r: return inr(tr(t.formula()), run(ps[0]));
            case Rule::cases:
                return cases(run(ps[0]), t.label(), run(ps[1]), t.label_r(), run(ps[2]));
            case Rule::gen: return gen(t.variable(), run(ps[0]));
            case Rule::inst: return P::inst(run(ps[0]), t.term());
            case Rule::witness: return P::witness(t.term(), run(ps[0]), tr(t.formula()));
            case Rule::unpack:
                return unpack(run(ps[0]), t.variable(), t.label(), run(ps[1]));
            case Rule::ex_falso:
                return app(synthesize_absorption(t_, d.conclusion), collapse(run(ps[0])));
            case Rule::dne: break;
        }
        throw ContractViolation("double negation elimination has no Leivant image");
    }

private:
    F tr(const F& f) const { return leivant_translate(t_, f); }

    // Ti(⊥) → ⊥ applied to t
    P collapse(P t) {
        if (t_ == TranslationKind::t1 || t_ == TranslationKind::t4) {
            std::string a = labels_.fresh("a");
            std::string b = labels_.fresh("b");
            return cases(std::move(t), a, hyp(a), b, hyp(b));
        }
        std::string b = labels_.fresh("b");
        return app(std::move(t), lam(b, bot(), hyp(b)));
    }

    TranslationKind t_;
    Labels labels_;
};

}  // namespace

Sequent translate_sequent(TranslationKind id, const Sequent& sequent) {
    if (is_leivant(id)) {
        return map_sequent(sequent, [&](const Formula& f) { return leivant_translate(id, f); });
    }
    return map_sequent(sequent, [&](const Formula& f) { return translate(id, f); });
}

ProofTerm kuroda_transform(const ProofTerm& proof, const Sequent& sequent) {
    Derivation d = checked(proof, sequent, LogicId::cl);
    return Kuroda(reserved_labels(proof, sequent)).run(d);
}

ProofTerm leivant_transform(TranslationKind t, const ProofTerm& proof, const Sequent& sequent) {
    if (!is_leivant(t)) throw ContractViolation("expected one of T1..T4");
    Derivation d = checked(proof, sequent, LogicId::il);
    return Leivant(t, reserved_labels(proof, sequent)).run(d);
}

ProofTerm soundness_pipeline(TranslationKind variant, const ProofTerm& proof,
                             const Sequent& sequent) {
    int i = variant_index(variant);
    if (!is_kuroda_family(variant) || i < 1 || i > 4) {
        throw ContractViolation("the pipeline covers K1..K4 only");
    }
    TranslationKind t = leivant_variant(i);

    ProofTerm il = kuroda_transform(proof, sequent);
    Sequent k_sequent = translate_sequent(TranslationKind::k, sequent);
    ProofTerm ml = leivant_transform(t, il, k_sequent);

    // ml proves Ti(KA) from Ti(KΓ); convert both ends.
    ProofTerm out = app(equivalence_leivant(t, sequent.conclusion).forward, std::move(ml));
    for (auto it = sequent.hypotheses.rbegin(); it != sequent.hypotheses.rend(); ++it) {
        Equivalence e = equivalence_leivant(t, it->formula);
        out = app(lam(it->label, e.lhs, std::move(out)), app(e.backward, hyp(it->label)));
    }
    return out;
}

}  // namespace kf
