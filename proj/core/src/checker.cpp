#include <array>
#include <utility>

#include "kf/error.hpp"
#include "kf/proof.hpp"
#include "kf/syntax.hpp"

namespace kf {

std::string_view to_string(RejectReason reason) noexcept {
    static constexpr std::array<std::string_view, 7> names = {
        "unknown-hypothesis",      "connective-mismatch", "type-mismatch",
        "eigenvariable-violation", "rule-not-in-logic",   "conclusion-mismatch",
        "malformed-sequent"};
    return names[static_cast<std::size_t>(reason)];
}

std::string Rejection::path_string() const {
    if (path.empty()) return "root";
    std::string out;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i) out += '.';
        out += std::to_string(path[i]);
    }
    return out;
}

std::string CheckResult::describe() const {
    if (is_accepted()) return "accepted";
    return "rejected at " + rejection_->path_string() + ": " +
           std::string(to_string(rejection_->reason)) + ": " + rejection_->detail;
}

ProofRejected::ProofRejected(Rejection r)
    : rejection_(std::move(r)),
      what_(std::string(to_string(rejection_.reason)) + " at " + rejection_.path_string() + ": " +
            rejection_.detail) {}

namespace {

template <class... Premises>
Derivation node(const ProofTerm& t, Formula conclusion, Premises&&... premises) {
    Derivation d{t, std::move(conclusion), {}};
    d.premises.reserve(sizeof...(premises));
    (d.premises.push_back(std::forward<Premises>(premises)), ...);
    return d;
}

class Checker {
public:
    Checker(const Sequent& sequent, LogicId logic) : logic_(logic) {
        for (const auto& h : sequent.hypotheses) context_.emplace_back(h.label, h.formula);
    }

    Derivation run(const ProofTerm& t) {
        switch (t.rule()) {
            case Rule::hyp: {
                const Formula* f = lookup(t.label());
                if (!f) fail(RejectReason::unknown_hypothesis, "no hypothesis labelled '" + t.label() + "'");
                return node(t, *f);
            }
            case Rule::abst: {
                context_.emplace_back(t.label(), t.formula());
                auto body = sub(t, 0);
                context_.pop_back();
                Formula c = Formula::impl(t.formula(), body.conclusion);
                return node(t, c, std::move(body));
            }
            case Rule::apply: {
                auto fn = sub(t, 0);
                auto arg = sub(t, 1);
                if (fn.conclusion.kind() != Connective::impl) {
                    fail_at(0, RejectReason::connective_mismatch,
                            "applied proof concludes " + render(fn.conclusion) + ", not an implication");
                }
                if (!(fn.conclusion.left() == arg.conclusion)) {
                    fail_at(1, RejectReason::type_mismatch,
                            "argument proves " + render(arg.conclusion) + ", expected " +
                                render(fn.conclusion.left()));
                }
                Formula c = fn.conclusion.right();
                return node(t, c, std::move(fn), std::move(arg));
            }
            case Rule::pair: {
                auto l = sub(t, 0);
                auto r = sub(t, 1);
                Formula c = Formula::conj(l.conclusion, r.conclusion);
                return node(t, c, std::move(l), std::move(r));
            }
            case Rule::proj_l:
            case Rule::proj_r: {
                auto p = sub(t, 0);
                if (p.conclusion.kind() != Connective::conj) {
                    fail_at(0, RejectReason::connective_mismatch,
                            "projection from " + render(p.conclusion) + ", not a conjunction");
                }
                Formula c = t.rule() == Rule::proj_l ? p.conclusion.left() : p.conclusion.right();
                return node(t, c, std::move(p));
            }
            case Rule::inj_l: {
                auto p = sub(t, 0);
                Formula c = Formula::disj(p.conclusion, t.formula());
                return node(t, c, std::move(p));
            }
            case Rule::inj_r: {
                auto p = sub(t, 0);
                Formula c = Formula::disj(t.formula(), p.conclusion);
                return node(t, c, std::move(p));
            }
            case Rule::cases: {
                auto s = sub(t, 0);
                if (s.conclusion.kind() != Connective::disj) {
                    fail_at(0, RejectReason::connective_mismatch,
                            "case analysis on " + render(s.conclusion) + ", not a disjunction");
                }
                context_.emplace_back(t.label(), s.conclusion.left());
                auto l = sub(t, 1);
                context_.back() = {t.label_r(), s.conclusion.right()};
                auto r = sub(t, 2);
                context_.pop_back();
                if (!(l.conclusion == r.conclusion)) {
                    fail_at(2, RejectReason::type_mismatch,
                            "branches conclude " + render(l.conclusion) + " and " + render(r.conclusion));
                }
                Formula c = l.conclusion;
                return node(t, c, std::move(s), std::move(l), std::move(r));
            }
            case Rule::gen: {
                auto b = sub(t, 0);
                check_eigenvariable(t.variable(), t.child(0), "");
                Formula c = Formula::forall(t.variable(), b.conclusion);
                return node(t, c, std::move(b));
            }
            case Rule::inst: {
                auto p = sub(t, 0);
                if (p.conclusion.kind() != Connective::forall) {
                    fail_at(0, RejectReason::connective_mismatch,
                            "instantiating " + render(p.conclusion) + ", not a universal");
                }
                Formula c = p.conclusion.body().substitute(p.conclusion.variable(), t.term());
                return node(t, c, std::move(p));
            }
            case Rule::witness: {
                const Formula& target = t.formula();
                if (target.kind() != Connective::exists) {
                    fail(RejectReason::connective_mismatch,
                         "witness target " + render(target) + " is not existential");
                }
                auto p = sub(t, 0);
                Formula expected = target.body().substitute(target.variable(), t.term());
                if (!(p.conclusion == expected)) {
                    fail_at(0, RejectReason::type_mismatch,
                            "witness proof concludes " + render(p.conclusion) + ", expected " +
                                render(expected));
                }
                return node(t, target, std::move(p));
            }
            case Rule::unpack: {
                auto s = sub(t, 0);
                if (s.conclusion.kind() != Connective::exists) {
                    fail_at(0, RejectReason::connective_mismatch,
                            "unpacking " + render(s.conclusion) + ", not an existential");
                }
                const std::string& y = t.variable();
                Formula opened =
                    s.conclusion.body().substitute(s.conclusion.variable(), Term::variable(y));
                context_.emplace_back(t.label(), opened);
                auto b = sub(t, 1);
                context_.pop_back();
                if (s.conclusion.has_free(y)) {
                    fail(RejectReason::eigenvariable_violation,
                         "eigenvariable " + y + " is free in " + render(s.conclusion));
                }
                if (b.conclusion.has_free(y)) {
                    fail(RejectReason::eigenvariable_violation,
                         "eigenvariable " + y + " is free in the conclusion " + render(b.conclusion));
                }
                check_eigenvariable(y, t.child(1), t.label());
                Formula c = b.conclusion;
                return node(t, c, std::move(s), std::move(b));
            }
            case Rule::ex_falso: {
                if (logic_ == LogicId::ml) {
                    fail(RejectReason::rule_not_in_logic, "ex falso is not a rule of minimal logic");
                }
                auto p = sub(t, 0);
                if (!p.conclusion.is_bottom()) {
                    fail_at(0, RejectReason::connective_mismatch,
                            "ex falso from " + render(p.conclusion) + ", not false");
                }
                return node(t, t.formula(), std::move(p));
            }
            case Rule::dne: {
                if (logic_ != LogicId::cl) {
                    fail(RejectReason::rule_not_in_logic,
                         "double negation elimination is only a rule of classical logic");
                }
                auto p = sub(t, 0);
                if (!(p.conclusion.is_negation() && p.conclusion.negated().is_negation())) {
                    fail_at(0, RejectReason::connective_mismatch,
                            "double negation elimination from " + render(p.conclusion));
                }
                Formula c = p.conclusion.negated().negated();
                return node(t, c, std::move(p));
            }
        }
        fail(RejectReason::connective_mismatch, "unknown rule");
    }

    [[noreturn]] void fail(RejectReason reason, std::string detail) {
        throw ProofRejected(Rejection{path_, reason, std::move(detail)});
    }

private:
    Derivation sub(const ProofTerm& t, std::size_t i) {
        path_.push_back(i);
        auto d = run(t.child(i));
        path_.pop_back();
        return d;
    }

    [[noreturn]] void fail_at(std::size_t child, RejectReason reason, std::string detail) {
        path_.push_back(child);
        fail(reason, std::move(detail));
    }

    const Formula* lookup(const std::string& label) const {
        for (auto it = context_.rbegin(); it != context_.rend(); ++it) {
            if (it->first == label) return &it->second;
        }
        return nullptr;
    }

    // `body` is checked in the current context; `own` is a label bound by
    // the rule itself and therefore exempt.
    void check_eigenvariable(const std::string& var, const ProofTerm& body, const std::string& own) {
        for (const auto& label : body.free_labels()) {
            if (label == own) continue;
            const Formula* f = lookup(label);
            if (f && f->has_free(var)) {
                fail(RejectReason::eigenvariable_violation,
                     "eigenvariable " + var + " is free in open hypothesis " + label + ": " + render(*f));
            }
        }
    }

    LogicId logic_;
    std::vector<std::pair<std::string, Formula>> context_;
    std::vector<std::size_t> path_;
};

}  // namespace

Derivation derive(const ProofTerm& proof, const Sequent& sequent, LogicId logic) {
    try {
        sequent.validate();
    } catch (const ContractViolation& e) {
        throw ProofRejected(Rejection{{}, RejectReason::malformed_sequent, e.what()});
    }
    Checker checker(sequent, logic);
    Derivation d = checker.run(proof);
    if (!(d.conclusion == sequent.conclusion)) {
        checker.fail(RejectReason::conclusion_mismatch,
                     "proof concludes " + render(d.conclusion) + ", sequent asks for " +
                         render(sequent.conclusion));
    }
    return d;
}

CheckResult check_proof(const ProofTerm& proof, const Sequent& sequent, LogicId logic) {
    try {
        derive(proof, sequent, logic);
        return CheckResult::accepted();
    } catch (const ProofRejected& e) {
        return CheckResult::rejected(e.rejection());
    }
}

std::optional<Formula> infer(const ProofTerm& proof, const Sequent& context, LogicId logic) {
    try {
        Checker checker(context, logic);
        return checker.run(proof).conclusion;
    } catch (const ProofRejected&) {
        return std::nullopt;
    }
}

}  // namespace kf
