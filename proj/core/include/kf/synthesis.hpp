#pragma once

#include "kf/formula.hpp"
#include "kf/proof.hpp"
#include "kf/translations.hpp"

namespace kf {

/// Closed minimal-logic proofs of lhs → rhs and rhs → lhs.
struct Equivalence {
    Formula lhs;
    Formula rhs;
    ProofTerm forward;
    ProofTerm backward;

    /// (lhs → rhs) ∧ (rhs → lhs)
    Formula statement() const { return Formula::iff(lhs, rhs); }
    ProofTerm proof() const { return ProofTerm::pair(forward, backward); }
};

/// ML proof of ⊥ → Ti(A) for i in T1..T4, by recursion on A.
ProofTerm synthesize_absorption(TranslationKind leivant_id, const Formula& formula);

/// Ti(K(A)) ↔ Ki(A) for Ti in T1..T4 (Ki is the matching K1..K4).
///
/// T1..T3 agree with Ki on K's output everywhere except inside the ∀
/// clause, where Ti(⊥) replaces ⊥; Ti(⊥) ↔ ⊥ closes the gap. T4 maps atoms
/// to P ∨ ⊥ while K4 keeps them, which is only equivalent under ¬¬, so the
/// recursion carries the weaker pair X → Y ∨ ⊥, Y → X ∨ ⊥ instead.
Equivalence equivalence_leivant(TranslationKind leivant_id, const Formula& formula);

/// K(T5(A)) ↔ K5(A) for a closed witness; the recursion carries maps
/// X → ¬¬Y and Y → ¬¬X between the inner bodies.
Equivalence equivalence_shoenfield(const Formula& formula, const Formula& witness);

/// K6°(A) ↔ Kj°(A) for j in {K7, K8}: an exact equivalence of the inner
/// bodies.
Equivalence equivalence_k678(TranslationKind variant, const Formula& formula);

/// The corresponding proofs of the conjunction of both implications.
ProofTerm synthesize_equiv_leivant(TranslationKind leivant_id, const Formula& formula);
ProofTerm synthesize_equiv_shoenfield(const Formula& formula, const Formula& witness);
ProofTerm synthesize_equiv_k678(TranslationKind variant, const Formula& formula);

}  // namespace kf
