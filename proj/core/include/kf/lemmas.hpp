#pragma once

#include <string>
#include <vector>

#include "kf/formula.hpp"
#include "kf/proof.hpp"

/// Closed proof terms for the small facts the transformers and
/// synthesizers are assembled from. All are minimal-logic proofs unless
/// noted otherwise.
namespace kf::lemmas {

/// D → ¬¬D
ProofTerm dn_intro(const Formula& d);
/// ¬¬(D → ¬E) → (D → ¬E)
ProofTerm dn_stable_neg_impl(const Formula& d, const Formula& e);
/// D ∨ ¬¬E → ¬¬(D ∨ E)
ProofTerm disj_dn(const Formula& d, const Formula& e);
/// (A → B) → ¬¬A → ¬¬B
ProofTerm dn_map(const Formula& a, const Formula& b);
/// ¬¬¬A → ¬A
ProofTerm triple_neg(const Formula& a);
/// (⊥ ∨ ⊥ → ⊥) ∧ (⊥ → ⊥ ∨ ⊥)
ProofTerm bot_or_bot();
/// (¬¬⊥ → ⊥) ∧ (⊥ → ¬¬⊥)
ProofTerm dn_bot();
/// (¬¬C → ¬¬D) → ¬¬(C → D). Intuitionistic: uses ex falso.
ProofTerm dn_impl_intro(const Formula& c, const Formula& d);

struct LemmaInstance {
    std::string name;
    Formula statement;
    ProofTerm proof;
    LogicId logic;
};

/// Every lemma instantiated at D and E (lemmas taking one formula use D).
std::vector<LemmaInstance> library(const Formula& d, const Formula& e);

}  // namespace kf::lemmas
