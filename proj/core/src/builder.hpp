#pragma once

// Shorthands for assembling proof terms inside the library.

#include <set>
#include <string>
#include <string_view>

#include "kf/formula.hpp"
#include "kf/proof.hpp"

namespace kf::build {

using F = Formula;
using P = ProofTerm;

/// Fresh hypothesis labels that avoid a reserved set.
class Labels {
public:
    Labels() = default;
    explicit Labels(std::set<std::string> reserved) : reserved_(std::move(reserved)) {}

    std::string fresh(std::string_view base) {
        while (true) {
            std::string candidate = std::string(base) + std::to_string(++next_);
            if (!reserved_.contains(candidate)) return candidate;
        }
    }

private:
    std::set<std::string> reserved_;
    std::size_t next_ = 0;
};

inline F bot() { return F::bottom(); }
inline F neg(const F& a) { return F::neg(a); }
inline F nn(const F& a) { return F::neg(F::neg(a)); }
inline F imp(const F& a, const F& b) { return F::impl(a, b); }
inline F conj(const F& a, const F& b) { return F::conj(a, b); }
inline F disj(const F& a, const F& b) { return F::disj(a, b); }

inline P hyp(const std::string& l) { return P::hyp(l); }
inline P lam(const std::string& l, const F& a, P body) { return P::abst(l, a, std::move(body)); }
inline P app(P f, P a) { return P::apply(std::move(f), std::move(a)); }
inline P app(P f, P a, P b) { return app(app(std::move(f), std::move(a)), std::move(b)); }
inline P pair(P a, P b) { return P::pair(std::move(a), std::move(b)); }
inline P fst(P t) { return P::proj_l(std::move(t)); }
inline P snd(P t) { return P::proj_r(std::move(t)); }
inline P inl(P t, const F& other) { return P::inj_l(std::move(t), other); }
inline P inr(const F& other, P t) { return P::inj_r(other, std::move(t)); }
inline P cases(P s, const std::string& l, P bl, const std::string& r, P br) {
    return P::cases(std::move(s), l, std::move(bl), r, std::move(br));
}
inline P gen(const std::string& x, P body) { return P::gen(x, std::move(body)); }
inline P inst(P t, const std::string& x) { return P::inst(std::move(t), Term::variable(x)); }
inline P wit(const std::string& x, P t, const F& target) {
    return P::witness(Term::variable(x), std::move(t), target);
}
inline P unpack(P s, const std::string& x, const std::string& l, P body) {
    return P::unpack(std::move(s), x, l, std::move(body));
}
inline P efq(P t, const F& target) { return P::ex_falso(std::move(t), target); }

/// Closed proofs of lhs → rhs and rhs → lhs.
struct Equiv {
    F lhs;
    F rhs;
    P to;
    P from;

    P as_conjunction() const { return pair(to, from); }
};

inline Equiv flip(const Equiv& e) { return {e.rhs, e.lhs, e.from, e.to}; }

}  // namespace kf::build
