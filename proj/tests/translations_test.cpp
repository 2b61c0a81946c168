#include <gtest/gtest.h>

#include "kf/error.hpp"
#include "kf/harness.hpp"
#include "kf/syntax.hpp"
#include "kf/translations.hpp"

using namespace kf;

namespace {

std::string tr(TranslationKind id, const char* text) { return render(translate(id, parse(text))); }
std::string inner(TranslationKind id, const char* text) {
    return render(inner_translate(id, parse(text)));
}
std::string leivant(TranslationKind id, const char* text) {
    return render(leivant_translate(id, parse(text)));
}
std::string shoenfield(const char* text) {
    return render(shoenfield_translate(parse(text), Formula::atom("C0")));
}

}  // namespace

TEST(Inner, Examples) {
    EXPECT_EQ(inner(TranslationKind::k, "forall x. P(x)"), "forall x. ~~P(x)");
    EXPECT_EQ(inner(TranslationKind::k4, "P -> Q"), "P -> (Q | false)");
    EXPECT_EQ(inner(TranslationKind::k8, "P -> Q"), "~(P & ~Q)");
}

TEST(Translate, Examples) {
    EXPECT_EQ(tr(TranslationKind::k, "P"), "~~P");
    EXPECT_EQ(tr(TranslationKind::k1, "P"), "~~(P | false)");
    EXPECT_EQ(tr(TranslationKind::k2, "P"), "~~(~~P)");
    EXPECT_EQ(tr(TranslationKind::k5, "P -> Q"), "~~(~P | Q)");
    EXPECT_EQ(tr(TranslationKind::k6, "P -> Q"), "~~(P -> ~~Q)");
}

TEST(Translate, BottomIsAtomic) {
    EXPECT_EQ(inner(TranslationKind::k1, "false"), "false | false");
    EXPECT_EQ(inner(TranslationKind::k, "false"), "false");
}

TEST(Leivant, Examples) {
    EXPECT_EQ(leivant(TranslationKind::t2, "P -> Q"), "~~P -> ~~Q");
    EXPECT_EQ(leivant(TranslationKind::t3, "P"), "(false -> P) -> P");
    EXPECT_EQ(leivant(TranslationKind::t4, "P -> Q"), "(P | false) -> ((Q | false) | false)");
    EXPECT_EQ(leivant(TranslationKind::t1, "false"), "false | false");
}

TEST(Shoenfield, Examples) {
    EXPECT_EQ(shoenfield("false"), "~(~C0 | C0)");
    EXPECT_EQ(shoenfield("P & Q"), "~(~P | ~Q)");
    EXPECT_EQ(shoenfield("forall x. P(x)"), "~exists x. ~P(x)");
}

TEST(Shoenfield, OpenWitnessRejected) {
    Formula open = Formula::atom("C", {Term::variable("x")});
    EXPECT_THROW(shoenfield_translate(parse("P"), open), ContractViolation);
    EXPECT_THROW(default_witness(parse("C0 & P")), ContractViolation);
}

TEST(Ids, WrongFamilyRejected) {
    EXPECT_THROW(inner_translate(TranslationKind::t1, parse("P")), ContractViolation);
    EXPECT_THROW(leivant_translate(TranslationKind::k1, parse("P")), ContractViolation);
    EXPECT_THROW(parse_translation_kind("k9"), ContractViolation);
    EXPECT_EQ(parse_translation_kind("K3"), TranslationKind::k3);
}

TEST(Mutations, NamesRoundTrip) {
    EXPECT_EQ(shipped_mutations().size(), 12u);
    for (Mutation m : shipped_mutations()) EXPECT_EQ(parse_mutation(to_string(m)), m);
}

TEST(TranslationProperties, CommutationSizeDeterminism) {
    GeneratorConfig config;
    config.quantifier_free = false;
    for (std::uint64_t i = 0; i < 200; ++i) {
        Formula a = random_formula(config, 2 * i);
        Formula b = random_formula(config, 2 * i + 1);
        for (int k = 0; k <= 8; ++k) {
            TranslationKind id = kuroda_variant(k);
            Formula ta = inner_translate(id, a);
            Formula tb = inner_translate(id, b);
            EXPECT_TRUE(inner_translate(id, Formula::conj(a, b)).identical(Formula::conj(ta, tb)));
            EXPECT_TRUE(inner_translate(id, Formula::disj(a, b)).identical(Formula::disj(ta, tb)));
            EXPECT_TRUE(inner_translate(id, Formula::exists("x", a)).identical(Formula::exists("x", ta)));
            EXPECT_LE(translate(id, a).size(), 6 * a.size() + 4) << render(a);
            EXPECT_TRUE(translate(id, a).identical(translate(id, a)));
        }
        for (int t = 1; t <= 4; ++t) {
            EXPECT_LE(leivant_translate(leivant_variant(t), a).size(), 6 * a.size() + 4);
        }
    }
}
