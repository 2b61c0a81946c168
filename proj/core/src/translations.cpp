#include "kf/translations.hpp"

#include <array>
#include <cctype>
#include <string>

#include "kf/error.hpp"
#include "kf/syntax.hpp"

namespace kf {

namespace {

constexpr std::array<std::string_view, 14> kKindNames = {
    "k", "k1", "k2", "k3", "k4", "k5", "k6", "k7", "k8", "t1", "t2", "t3", "t4", "t5"};

constexpr std::array<std::string_view, 13> kMutationNames = {
    "none",    "k1-atom", "k2-atom", "k3-atom", "k4-impl",   "k5-impl", "k6-impl",
    "k7-impl", "k8-impl", "t1-atom", "t4-impl", "t5-bottom", "t5-impl"};

constexpr std::array<Mutation, 12> kShipped = {
    Mutation::k1_atom, Mutation::k2_atom, Mutation::k3_atom, Mutation::k4_impl,
    Mutation::k5_impl, Mutation::k6_impl, Mutation::k7_impl, Mutation::k8_impl,
    Mutation::t1_atom, Mutation::t4_impl, Mutation::t5_bottom, Mutation::t5_impl};

std::string lowercase(std::string_view text) {
    std::string out;
    for (char c : text) out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    return out;
}

using F = Formula;

F nn(const F& f) { return F::neg(F::neg(f)); }

F kuroda_atom(TranslationKind id, const F& p, Mutation m) {
    switch (id) {
        case TranslationKind::k1:
            return m == Mutation::k1_atom ? p : F::disj(p, F::bottom());
        case TranslationKind::k2:
            return m == Mutation::k2_atom ? F::neg(p) : nn(p);
        case TranslationKind::k3:
            return m == Mutation::k3_atom ? F::impl(F::bottom(), p)
                                          : F::impl(F::impl(F::bottom(), p), p);
        default:
            return p;
    }
}

F kuroda_impl(TranslationKind id, const F& a, const F& b, Mutation m) {
    switch (id) {
        case TranslationKind::k4:
            return m == Mutation::k4_impl ? F::impl(a, b) : F::impl(a, F::disj(b, F::bottom()));
        case TranslationKind::k5:
            return m == Mutation::k5_impl ? F::disj(a, b) : F::disj(F::neg(a), b);
        case TranslationKind::k6:
            return m == Mutation::k6_impl ? F::impl(a, b) : F::impl(a, nn(b));
        case TranslationKind::k7:
            return m == Mutation::k7_impl ? F::impl(F::neg(a), F::neg(b))
                                          : F::impl(F::neg(b), F::neg(a));
        case TranslationKind::k8:
            return m == Mutation::k8_impl ? F::neg(F::conj(a, b))
                                          : F::neg(F::conj(a, F::neg(b)));
        default:
            return F::impl(a, b);
    }
}

F kuroda_inner(TranslationKind id, const F& f, Mutation m) {
    switch (f.kind()) {
        case Connective::bottom:
        case Connective::atom:
            return kuroda_atom(id, f, m);
        case Connective::conj:
            return F::conj(kuroda_inner(id, f.left(), m), kuroda_inner(id, f.right(), m));
        case Connective::disj:
            return F::disj(kuroda_inner(id, f.left(), m), kuroda_inner(id, f.right(), m));
        case Connective::impl:
            return kuroda_impl(id, kuroda_inner(id, f.left(), m), kuroda_inner(id, f.right(), m), m);
        case Connective::forall:
            return F::forall(f.variable(), nn(kuroda_inner(id, f.body(), m)));
        case Connective::exists:
            return F::exists(f.variable(), kuroda_inner(id, f.body(), m));
    }
    return f;
}

F leivant(TranslationKind id, const F& f, Mutation m) {
    switch (f.kind()) {
        case Connective::bottom:
        case Connective::atom:
            switch (id) {
                case TranslationKind::t1:
                    return m == Mutation::t1_atom ? f : F::disj(f, F::bottom());
                case TranslationKind::t2: return nn(f);
                case TranslationKind::t3: return F::impl(F::impl(F::bottom(), f), f);
                default: return F::disj(f, F::bottom());
            }
        case Connective::conj:
            return F::conj(leivant(id, f.left(), m), leivant(id, f.right(), m));
        case Connective::disj:
            return F::disj(leivant(id, f.left(), m), leivant(id, f.right(), m));
        case Connective::impl: {
            F a = leivant(id, f.left(), m);
            F b = leivant(id, f.right(), m);
            if (id == TranslationKind::t4 && m != Mutation::t4_impl) {
                return F::impl(a, F::disj(b, F::bottom()));
            }
            return F::impl(a, b);
        }
        case Connective::forall: return F::forall(f.variable(), leivant(id, f.body(), m));
        case Connective::exists: return F::exists(f.variable(), leivant(id, f.body(), m));
    }
    return f;
}

F shoenfield(const F& f, const F& c, Mutation m) {
    switch (f.kind()) {
        case Connective::bottom: {
            F excluded = F::disj(F::neg(c), c);
            return m == Mutation::t5_bottom ? excluded : F::neg(excluded);
        }
        case Connective::atom:
            return f;
        case Connective::conj:
            return F::neg(F::disj(F::neg(shoenfield(f.left(), c, m)),
                                  F::neg(shoenfield(f.right(), c, m))));
        case Connective::disj:
            return F::disj(shoenfield(f.left(), c, m), shoenfield(f.right(), c, m));
        case Connective::impl: {
            F a = shoenfield(f.left(), c, m);
            F b = shoenfield(f.right(), c, m);
            return m == Mutation::t5_impl ? F::disj(a, b) : F::disj(F::neg(a), b);
        }
        case Connective::forall:
            return F::neg(F::exists(f.variable(), F::neg(shoenfield(f.body(), c, m))));
        case Connective::exists:
            return F::exists(f.variable(), shoenfield(f.body(), c, m));
    }
    return f;
}

}  // namespace

std::string_view to_string(TranslationKind kind) noexcept {
    return kKindNames[static_cast<std::size_t>(kind)];
}

TranslationKind parse_translation_kind(std::string_view text) {
    std::string lower = lowercase(text);
    for (std::size_t i = 0; i < kKindNames.size(); ++i) {
        if (kKindNames[i] == lower) return static_cast<TranslationKind>(i);
    }
    throw ContractViolation("unknown translation '" + std::string(text) + "'");
}

bool is_kuroda_family(TranslationKind kind) noexcept {
    return static_cast<int>(kind) <= static_cast<int>(TranslationKind::k8);
}

bool is_leivant(TranslationKind kind) noexcept {
    return kind == TranslationKind::t1 || kind == TranslationKind::t2 ||
           kind == TranslationKind::t3 || kind == TranslationKind::t4;
}

int variant_index(TranslationKind kind) noexcept {
    int k = static_cast<int>(kind);
    if (k <= static_cast<int>(TranslationKind::k8)) return k;
    return k - static_cast<int>(TranslationKind::t1) + 1;
}

TranslationKind kuroda_variant(int index) {
    if (index < 0 || index > 8) throw ContractViolation("Kuroda variant index out of range");
    return static_cast<TranslationKind>(index);
}

TranslationKind leivant_variant(int index) {
    if (index < 1 || index > 4) throw ContractViolation("Leivant translation index out of range");
    return static_cast<TranslationKind>(static_cast<int>(TranslationKind::t1) + index - 1);
}

std::string_view to_string(Mutation mutation) noexcept {
    return kMutationNames[static_cast<std::size_t>(mutation)];
}

Mutation parse_mutation(std::string_view text) {
    std::string lower = lowercase(text);
    for (auto& c : lower) {
        if (c == '_') c = '-';
    }
    for (std::size_t i = 0; i < kMutationNames.size(); ++i) {
        if (kMutationNames[i] == lower) return static_cast<Mutation>(i);
    }
    throw ContractViolation("unknown mutation '" + std::string(text) + "'");
}

std::span<const Mutation> shipped_mutations() noexcept { return kShipped; }

Formula inner_translate(TranslationKind id, const Formula& formula, Mutation mutation) {
    if (!is_kuroda_family(id)) {
        throw ContractViolation("inner_translate expects K or K1..K8, got " +
                                std::string(to_string(id)));
    }
    return kuroda_inner(id, formula, mutation);
}

Formula translate(TranslationKind id, const Formula& formula, Mutation mutation) {
    return nn(inner_translate(id, formula, mutation));
}

Formula leivant_translate(TranslationKind id, const Formula& formula, Mutation mutation) {
    if (!is_leivant(id)) {
        throw ContractViolation("leivant_translate expects T1..T4, got " +
                                std::string(to_string(id)));
    }
    return leivant(id, formula, mutation);
}

Formula default_witness(const Formula& input) {
    if (input.predicates().contains(std::string(kDefaultWitness))) {
        throw ContractViolation("reserved witness atom C0 occurs in the input; pass an explicit witness");
    }
    return Formula::atom(std::string(kDefaultWitness));
}

Formula shoenfield_translate(const Formula& formula, const Formula& witness, Mutation mutation) {
    if (!witness.free_variables().empty()) {
        throw ContractViolation("T5 witness must be closed: " + render(witness));
    }
    return shoenfield(formula, witness, mutation);
}

Formula apply_translation(const TranslationId& id, const Formula& formula) {
    if (is_kuroda_family(id.kind)) return translate(id.kind, formula);
    if (is_leivant(id.kind)) return leivant_translate(id.kind, formula);
    Formula witness = id.witness ? *id.witness : default_witness(formula);
    return shoenfield_translate(formula, witness);
}

}  // namespace kf
