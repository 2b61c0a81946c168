#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "kf/formula.hpp"

namespace kf {

/// Kuroda translation K, its minimal-logic variants K1..K8, the
/// Leivant-style auxiliaries T1..T4 and the Shoenfield-style T5.
enum class TranslationKind { k, k1, k2, k3, k4, k5, k6, k7, k8, t1, t2, t3, t4, t5 };

struct TranslationId {
    TranslationKind kind;
    /// Only meaningful for T5; must be closed.
    std::optional<Formula> witness;
};

std::string_view to_string(TranslationKind kind) noexcept;
/// "k", "k1".."k8", "t1".."t5", case-insensitive.
TranslationKind parse_translation_kind(std::string_view text);

bool is_kuroda_family(TranslationKind kind) noexcept;   // K, K1..K8
bool is_leivant(TranslationKind kind) noexcept;         // T1..T4

/// 1..8 for K1..K8, 1..4 for T1..T4, 0 for K.
int variant_index(TranslationKind kind) noexcept;
TranslationKind kuroda_variant(int index);   // 0 -> K
TranslationKind leivant_variant(int index);  // 1..4

/// Deliberately broken clauses, used to check that the verification
/// suites detect a wrong translation. `none` is the real translation.
enum class Mutation {
    none,
    k1_atom,    // K1: P -> P
    k2_atom,    // K2: P -> ~P
    k3_atom,    // K3: P -> (false -> P)
    k4_impl,    // K4: A -> B | false  becomes  A -> B
    k5_impl,    // K5: ~A | B  becomes  A | B
    k6_impl,    // K6: A -> ~~B  becomes  A -> B
    k7_impl,    // K7: ~B -> ~A  becomes  ~A -> ~B
    k8_impl,    // K8: ~(A & ~B)  becomes  ~(A & B)
    t1_atom,    // T1: P | false  becomes  P
    t4_impl,    // T4: A -> B | false  becomes  A -> B
    t5_bottom,  // T5: ~(~C | C)  becomes  ~C | C
    t5_impl,    // T5: ~A | B  becomes  A | B
};

std::string_view to_string(Mutation mutation) noexcept;
Mutation parse_mutation(std::string_view text);
/// Every mutation except `none`.
std::span<const Mutation> shipped_mutations() noexcept;

/// The starred body of K / Ki (everything but the outer double negation).
/// Throws ContractViolation for T ids.
Formula inner_translate(TranslationKind id, const Formula& formula,
                        Mutation mutation = Mutation::none);

/// ~~inner_translate(id, formula).
Formula translate(TranslationKind id, const Formula& formula,
                  Mutation mutation = Mutation::none);

/// T1..T4. Throws ContractViolation for other ids.
Formula leivant_translate(TranslationKind id, const Formula& formula,
                          Mutation mutation = Mutation::none);

/// Reserved name of the default T5 witness.
inline constexpr std::string_view kDefaultWitness = "C0";

/// The nullary atom C0. Throws ContractViolation if C0 occurs in `input`.
Formula default_witness(const Formula& input);

/// T5 with the given closed witness. Throws ContractViolation on an open
/// witness.
Formula shoenfield_translate(const Formula& formula, const Formula& witness,
                             Mutation mutation = Mutation::none);

/// Dispatches on the id: K family -> translate, T1..T4 ->
/// leivant_translate, T5 -> shoenfield_translate (default witness when
/// none is given).
Formula apply_translation(const TranslationId& id, const Formula& formula);

}  // namespace kf
