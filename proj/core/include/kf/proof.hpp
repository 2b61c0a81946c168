#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kf/formula.hpp"

namespace kf {

enum class Rule {
    hyp,       // Hyp(label)
    abst,      // Abst(label, hypothesis, body)           →I
    apply,     // Apply(fn, arg)                           →E
    pair,      // Pair(l, r)                               ∧I
    proj_l,    // ProjL(t)                                 ∧E
    proj_r,    // ProjR(t)                                 ∧E
    inj_l,     // InjL(t, other)                           ∨I
    inj_r,     // InjR(other, t)                           ∨I
    cases,     // Case(scrut, labelL, bodyL, labelR, bodyR) ∨E
    gen,       // Gen(variable, body)                      ∀I
    inst,      // Inst(t, term)                            ∀E
    witness,   // Witness(term, t, target)                 ∃I
    unpack,    // Unpack(scrut, variable, label, body)     ∃E
    ex_falso,  // ExFalso(t, target)     IL and CL only
    dne,       // DoubleNegElim(t)       CL only
};

std::string_view to_string(Rule rule) noexcept;

/// Natural-deduction derivation as a Curry-Howard term. Every node carries
/// enough annotation for its conclusion to be inferred bottom-up.
class ProofTerm {
public:
    static ProofTerm hyp(std::string label);
    static ProofTerm abst(std::string label, Formula hypothesis, ProofTerm body);
    static ProofTerm apply(ProofTerm fn, ProofTerm arg);
    static ProofTerm pair(ProofTerm left, ProofTerm right);
    static ProofTerm proj_l(ProofTerm t);
    static ProofTerm proj_r(ProofTerm t);
    static ProofTerm inj_l(ProofTerm t, Formula other);
    static ProofTerm inj_r(Formula other, ProofTerm t);
    static ProofTerm cases(ProofTerm scrutinee, std::string label_l, ProofTerm body_l,
                           std::string label_r, ProofTerm body_r);
    static ProofTerm gen(std::string variable, ProofTerm body);
    static ProofTerm inst(ProofTerm t, Term term);
    static ProofTerm witness(Term term, ProofTerm t, Formula target);
    static ProofTerm unpack(ProofTerm scrutinee, std::string variable, std::string label,
                            ProofTerm body);
    static ProofTerm ex_falso(ProofTerm t, Formula target);
    static ProofTerm dne(ProofTerm t);

    Rule rule() const noexcept;

    /// Hyp / Abst label; Case left label; Unpack label.
    const std::string& label() const noexcept;
    /// Case right label.
    const std::string& label_r() const noexcept;
    /// Gen / Unpack eigenvariable.
    const std::string& variable() const noexcept;
    /// Abst hypothesis, InjL/InjR other disjunct, Witness/ExFalso target.
    const Formula& formula() const;
    /// Inst / Witness term.
    const Term& term() const;

    /// Immediate subterms in a fixed order: Apply(fn, arg), Pair(l, r),
    /// Case(scrut, bodyL, bodyR), Unpack(scrut, body), otherwise the one body.
    std::span<const ProofTerm> children() const noexcept;
    const ProofTerm& child(std::size_t i) const { return children()[i]; }

    std::size_t size() const noexcept;
    bool uses_rule(Rule rule) const noexcept;

    /// Hypothesis labels occurring free.
    std::set<std::string> free_labels() const;
    /// Every label, bound or free.
    std::set<std::string> all_labels() const;

    struct Node;  // implementation detail

private:
    explicit ProofTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

enum class RejectReason {
    unknown_hypothesis,
    connective_mismatch,
    type_mismatch,
    eigenvariable_violation,
    rule_not_in_logic,
    conclusion_mismatch,
    malformed_sequent,
};

/// Stable machine-readable code, e.g. "rule-not-in-logic".
std::string_view to_string(RejectReason reason) noexcept;

struct Rejection {
    /// Child indices from the root to the offending node.
    std::vector<std::size_t> path;
    RejectReason reason;
    std::string detail;

    std::string path_string() const;  // "root" or "0.1.2"
};

class CheckResult {
public:
    static CheckResult accepted() { return CheckResult{}; }
    static CheckResult rejected(Rejection r) { return CheckResult{std::move(r)}; }

    bool is_accepted() const noexcept { return !rejection_.has_value(); }
    explicit operator bool() const noexcept { return is_accepted(); }
    const Rejection& rejection() const { return *rejection_; }
    std::string describe() const;

private:
    CheckResult() = default;
    explicit CheckResult(Rejection r) : rejection_(std::move(r)) {}
    std::optional<Rejection> rejection_;
};

/// A checked proof with the conclusion of every node attached.
struct Derivation {
    ProofTerm term;
    Formula conclusion;
    std::vector<Derivation> premises;  // parallel to term.children()
};

/// Thrown by derive() when the term does not check.
class ProofRejected : public std::exception {
public:
    explicit ProofRejected(Rejection r);
    const Rejection& rejection() const noexcept { return rejection_; }
    const char* what() const noexcept override { return what_.c_str(); }

private:
    Rejection rejection_;
    std::string what_;
};

/// Type-checks `proof` against `sequent` in `logic`. ExFalso needs IL or CL,
/// DoubleNegElim needs CL. Conclusions are compared up to alpha-equivalence.
/// The eigenvariable of Gen must not be free in the formula of any
/// hypothesis the body actually uses; for Unpack the same holds for the body
/// minus its own label, and additionally for the scrutinee and the result.
CheckResult check_proof(const ProofTerm& proof, const Sequent& sequent, LogicId logic);

/// As check_proof but returns the annotated derivation (throws ProofRejected).
Derivation derive(const ProofTerm& proof, const Sequent& sequent, LogicId logic);

/// Conclusion of a term under the sequent's hypotheses, if it checks.
std::optional<Formula> infer(const ProofTerm& proof, const Sequent& context, LogicId logic);

}  // namespace kf
