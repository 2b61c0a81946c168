#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kf/formula.hpp"

namespace kf {

enum class Decision { provable, unprovable };

std::string_view to_string(Decision d) noexcept;

/// Propositional decision procedure. IL uses a contraction-free sequent
/// search (Dyckhoff's G4ip); ML runs the same search with the ⊥-left rule
/// switched off, so ⊥ behaves as an ordinary atom; CL uses truth tables.
/// Throws ContractViolation if any formula has a quantifier.
Decision decide(LogicId logic, const Sequent& sequent);
Decision decide(LogicId logic, const Formula& formula);

/// A proof found by the sequent search, one rule application per line,
/// indented by depth. Empty for unprovable sequents and for CL.
struct ProofTrace {
    Decision decision = Decision::unprovable;
    std::vector<std::string> lines;
};

ProofTrace decide_with_trace(LogicId logic, const Sequent& sequent);

/// Truth-table validity with ⊥ false. Throws ContractViolation on
/// quantifiers.
bool classical_valid(const Formula& formula);

}  // namespace kf
