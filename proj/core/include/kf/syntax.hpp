#pragma once

#include <string>
#include <string_view>

#include "kf/formula.hpp"

namespace kf {

enum class Style { ascii, unicode };

/// Parses the concrete formula syntax.
///
///   formula := impl ( '<->' impl )?
///   impl    := disj ( '->' impl )?
///   disj    := conj ( '|' conj )*
///   conj    := unary ( '&' unary )*
///   unary   := '~' unary | ('forall'|'exists') ident '.' formula | primary
///   primary := 'false' | ident [ '(' term, ... ')' ] | '(' formula ')'
///
/// Unicode aliases ⊥ ¬ ∧ ∨ → ↔ ∀ ∃ are accepted. `~A` is Impl(A, Bottom)
/// and `A <-> B` is (A -> B) & (B -> A). Quantifier bodies extend as far
/// right as possible. Throws ParseError (syntax or arity).
Formula parse(std::string_view text);

/// Parses a single term. In term position a bare identifier is a variable;
/// `c()` is a nullary function application.
Term parse_term(std::string_view text);

/// Prints a formula so that parse(render(f, s)) is identical to f.
/// Negation-shaped implications are printed with `~`/`¬`.
std::string render(const Formula& formula, Style style = Style::ascii);
std::string render(const Term& term);

/// CL′ fragment: non-⊥ atoms closed under ∨, ∃ and negation Impl(X, ⊥).
bool in_clprime_fragment(const Formula& formula);

}  // namespace kf
