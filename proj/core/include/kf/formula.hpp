#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kf {

/// First-order term: a variable or a function symbol applied to terms.
/// Immutable; copies share structure.
class Term {
public:
    enum class Kind { variable, application };

    static Term variable(std::string name);
    static Term application(std::string symbol, std::vector<Term> arguments = {});

    Kind kind() const noexcept;
    bool is_variable() const noexcept { return kind() == Kind::variable; }

    /// Variable name, or function symbol for applications.
    const std::string& name() const noexcept;
    std::span<const Term> arguments() const noexcept;

    std::set<std::string> variables() const;
    void collect_variables(std::set<std::string>& out) const;
    bool mentions(std::string_view variable) const;

    /// Replaces every occurrence of `variable` by `replacement`.
    Term substitute(std::string_view variable, const Term& replacement) const;

    friend bool operator==(const Term& a, const Term& b);

    struct Node;  // implementation detail

private:
    explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

enum class Connective { bottom, atom, conj, disj, impl, forall, exists };

/// First-order formula over ⊥, atoms, ∧, ∨, →, ∀, ∃.
///
/// There is no negation node: ¬A is Impl(A, Bottom) and every helper that
/// talks about negation recognises exactly that shape. Equality is
/// alpha-equivalence; use identical() for name-sensitive comparison.
class Formula {
public:
    static Formula bottom();
    static Formula atom(std::string predicate, std::vector<Term> arguments = {});
    static Formula conj(Formula left, Formula right);
    static Formula disj(Formula left, Formula right);
    static Formula impl(Formula left, Formula right);
    static Formula neg(Formula operand);
    static Formula forall(std::string variable, Formula body);
    static Formula exists(std::string variable, Formula body);
    /// (a → b) ∧ (b → a)
    static Formula iff(const Formula& a, const Formula& b);

    Connective kind() const noexcept;
    bool is_bottom() const noexcept { return kind() == Connective::bottom; }
    bool is_atomic() const noexcept {
        return kind() == Connective::bottom || kind() == Connective::atom;
    }
    bool is_binary() const noexcept {
        auto k = kind();
        return k == Connective::conj || k == Connective::disj || k == Connective::impl;
    }
    bool is_quantifier() const noexcept {
        return kind() == Connective::forall || kind() == Connective::exists;
    }
    /// True for Impl(A, Bottom).
    bool is_negation() const noexcept;

    const std::string& predicate() const noexcept;
    std::span<const Term> arguments() const noexcept;
    Formula left() const;
    Formula right() const;
    /// Operand of a negation-shaped implication.
    Formula negated() const { return left(); }
    const std::string& variable() const noexcept;
    Formula body() const;

    /// Node count.
    std::size_t size() const noexcept;
    /// Atoms and ⊥ have depth 1.
    std::size_t depth() const noexcept;
    bool quantifier_free() const noexcept;

    std::set<std::string> free_variables() const;
    bool has_free(std::string_view variable) const;
    /// Every variable name that occurs, bound or free.
    std::set<std::string> all_variables() const;

    /// Capture-avoiding substitution of `replacement` for the free
    /// occurrences of `variable`. Bound variables that would capture a
    /// variable of `replacement` are renamed to fresh names.
    Formula substitute(std::string_view variable, const Term& replacement) const;

    /// Replaces every ⊥ node by `replacement`.
    Formula replace_bottom(const Formula& replacement) const;

    /// Names of the predicate symbols that occur.
    std::set<std::string> predicates() const;

    /// Structural equality including bound-variable names.
    bool identical(const Formula& other) const;

    /// Alpha-equivalence.
    friend bool operator==(const Formula& a, const Formula& b);

    /// Stable hash that agrees with identical().
    std::size_t hash() const noexcept;

    struct Node;  // implementation detail

private:
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

Formula substitute(const Formula& formula, std::string_view variable, const Term& term);
std::set<std::string> free_variables(const Formula& formula);

/// Returns `base` if it is not in `avoid`, otherwise base1, base2, ...
std::string fresh_name(const std::string& base, const std::set<std::string>& avoid);

bool is_identifier(std::string_view text) noexcept;

enum class LogicId { ml, il, cl };

std::string_view to_string(LogicId logic) noexcept;
/// Accepts "ml", "il", "cl" in either case; throws ContractViolation otherwise.
LogicId parse_logic(std::string_view text);

struct Hypothesis {
    std::string label;
    Formula formula;
};

/// hypotheses ⊢ conclusion
struct Sequent {
    std::vector<Hypothesis> hypotheses;
    Formula conclusion;

    /// Throws ContractViolation on duplicate or malformed labels.
    void validate() const;
    const Hypothesis* find(std::string_view label) const noexcept;
    bool quantifier_free() const noexcept;
};

inline Sequent sequent_of(Formula conclusion) { return Sequent{{}, std::move(conclusion)}; }

}  // namespace kf
