#pragma once

#include <string>
#include <string_view>

#include "kf/formula.hpp"
#include "kf/proof.hpp"

namespace kf {

/// A proof file: header naming the sequent and logic, then one term.
///
///   (sequent (hyp h1 "~~P") "P" cl)
///   (dne (hyp h1))
///
/// Term constructors: (hyp l) (lam l "A" t) (app t u) (pair t u) (fst t)
/// (snd t) (inl t "B") (inr "A" t) (case s l t r u) (gen x t)
/// (inst t "term") (wit "term" t "exists x. A") (unpack s x l t)
/// (efq t "A") (dne t). Formulas and terms are string literals in the
/// concrete syntax; `;` starts a comment that runs to end of line.
struct ProofFile {
    Sequent sequent;
    LogicId logic;
    ProofTerm proof;
};

/// Throws ParseError with the line/column of the offending token.
ProofFile read_proof_file(std::string_view text);
ProofTerm read_proof_term(std::string_view text);

std::string write_proof_term(const ProofTerm& proof);
std::string write_proof_file(const ProofFile& file);

}  // namespace kf
