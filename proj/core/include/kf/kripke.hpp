#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kf/formula.hpp"

namespace kf {

/// Finite rooted Kripke model. World 0 is the root; `order` lists every
/// pair (v, w) with v ≤ w, including the reflexive ones. Valuations hold
/// rendered atoms, with "false" marking the worlds that force ⊥ (ML only).
struct KripkeModel {
    LogicId logic = LogicId::il;
    std::size_t worlds = 1;
    std::vector<std::pair<std::size_t, std::size_t>> order;
    std::vector<std::set<std::string>> valuation;

    bool leq(std::size_t v, std::size_t w) const;

    /// Throws ContractViolation unless the order is a partial order with
    /// least element 0, the valuation is persistent, and (outside ML) no
    /// world forces ⊥.
    void validate() const;

    /// {"logic","root","worlds","order","valuation"}
    std::string to_json() const;
};

/// Forcing at `world`. ⊥ is an atom in ML and false elsewhere.
/// Throws ContractViolation for an unknown world or a quantifier.
bool eval_model(const KripkeModel& model, std::size_t world, const Formula& formula);

/// A model with at most `max_worlds` worlds whose root does not force
/// `formula`, searching posets up to isomorphism by increasing size. For
/// ML every size is first tried with ⊥ forced nowhere, and only then with
/// ⊥ as an ordinary atom. logic must be ML or IL; max_worlds is 1..7.
std::optional<KripkeModel> countermodel(LogicId logic, const Formula& formula,
                                        std::size_t max_worlds = 4);

}  // namespace kf
