#pragma once

#include "kf/formula.hpp"
#include "kf/proof.hpp"
#include "kf/translations.hpp"

namespace kf {

/// Maps every hypothesis and the conclusion through `f`.
template <class Fn>
Sequent map_sequent(const Sequent& s, Fn&& f) {
    Sequent out{{}, f(s.conclusion)};
    out.hypotheses.reserve(s.hypotheses.size());
    for (const auto& h : s.hypotheses) out.hypotheses.push_back({h.label, f(h.formula)});
    return out;
}

/// Sequent with K (or Ki) applied to every formula.
Sequent translate_sequent(TranslationKind id, const Sequent& sequent);

/// CL proof of Γ ⊢ A  =>  IL proof of KΓ ⊢ KA.
///
/// Each subproof of B becomes a proof of ¬¬B° with every hypothesis C read
/// as ¬¬C°. Only →-introduction needs ex falso; double negation
/// elimination and ex falso translate into minimal logic.
/// Throws ContractViolation if `proof` does not check under CL.
ProofTerm kuroda_transform(const ProofTerm& proof, const Sequent& sequent);

/// IL proof of Γ ⊢ A  =>  ML proof of TiΓ ⊢ TiA for Ti in T1..T4.
/// Throws ContractViolation if `proof` does not check under IL.
ProofTerm leivant_transform(TranslationKind leivant_id, const ProofTerm& proof,
                            const Sequent& sequent);

/// CL proof of Γ ⊢ A  =>  ML proof of KiΓ ⊢ KiA for Ki in K1..K4, via
/// kuroda_transform, leivant_transform and the Ti(K·) ↔ Ki equivalences.
ProofTerm soundness_pipeline(TranslationKind variant, const ProofTerm& proof,
                             const Sequent& sequent);

}  // namespace kf
