#include <gtest/gtest.h>

#include "json.hpp"

#include "kf/error.hpp"
#include "kf/harness.hpp"
#include "kf/kripke.hpp"
#include "kf/prover.hpp"
#include "kf/syntax.hpp"
#include "kf/translations.hpp"

using namespace kf;

namespace {

Decision d(LogicId logic, const char* text) { return decide(logic, parse(text)); }

constexpr auto yes = Decision::provable;
constexpr auto no = Decision::unprovable;

}  // namespace

TEST(Decide, MinimalLemmas) {
    EXPECT_EQ(d(LogicId::ml, "P -> ~~P"), yes);
    EXPECT_EQ(d(LogicId::ml, "~~(P -> ~Q) -> (P -> ~Q)"), yes);
    EXPECT_EQ(d(LogicId::ml, "P | ~~Q -> ~~(P | Q)"), yes);
}

TEST(Decide, LogicGaps) {
    EXPECT_EQ(d(LogicId::ml, "false -> P"), no);
    EXPECT_EQ(d(LogicId::il, "false -> P"), yes);
    EXPECT_EQ(d(LogicId::cl, "P | ~P"), yes);
    EXPECT_EQ(d(LogicId::il, "P | ~P"), no);
    EXPECT_EQ(d(LogicId::il, "~~(P | ~P)"), yes);
    EXPECT_EQ(d(LogicId::ml, "~~(P | ~P)"), yes);
    EXPECT_EQ(d(LogicId::il, "((P -> Q) -> P) -> P"), no);
    EXPECT_EQ(d(LogicId::cl, "((P -> Q) -> P) -> P"), yes);
    EXPECT_EQ(d(LogicId::ml, "~~~P -> ~P"), yes);
}

TEST(Decide, Sequents) {
    Sequent s{{{"a", parse("P -> Q")}, {"b", parse("Q -> R")}}, parse("P -> R")};
    EXPECT_EQ(decide(LogicId::ml, s), yes);
    Sequent t{{{"a", parse("~P")}}, parse("P -> Q")};
    EXPECT_EQ(decide(LogicId::ml, t), no);
    EXPECT_EQ(decide(LogicId::il, t), yes);
}

TEST(Decide, QuantifiersRejected) {
    EXPECT_THROW(d(LogicId::il, "forall x. P(x)"), ContractViolation);
    EXPECT_THROW(classical_valid(parse("exists x. P(x)")), ContractViolation);
}

TEST(Decide, Trace) {
    ProofTrace t = decide_with_trace(LogicId::il, sequent_of(parse("P & Q -> Q & P")));
    EXPECT_EQ(t.decision, yes);
    EXPECT_FALSE(t.lines.empty());
}

TEST(ClassicalValid, Examples) {
    EXPECT_TRUE(classical_valid(parse("P | ~P")));
    EXPECT_TRUE(classical_valid(parse("false -> P")));
    EXPECT_TRUE(classical_valid(parse("P <-> ~~(P | false)")));
    EXPECT_FALSE(classical_valid(parse("P -> Q")));
}

TEST(Countermodel, DoubleNegationElimination) {
    auto m = countermodel(LogicId::ml, parse("~~P -> P"), 2);
    ASSERT_TRUE(m);
    EXPECT_EQ(m->worlds, 2u);
    EXPECT_TRUE(m->valuation[0].empty());
    EXPECT_EQ(m->valuation[1], (std::set<std::string>{"P"}));
    EXPECT_TRUE(m->leq(0, 1));
    EXPECT_FALSE(eval_model(*m, 0, parse("~~P -> P")));
}

TEST(Countermodel, ExFalsoInMinimalLogic) {
    auto m = countermodel(LogicId::ml, parse("false -> P"), 1);
    ASSERT_TRUE(m);
    EXPECT_EQ(m->worlds, 1u);
    EXPECT_EQ(m->valuation[0], (std::set<std::string>{"false"}));
    auto j = nlohmann::json::parse(m->to_json());
    EXPECT_EQ(j["logic"], "ml");
    EXPECT_EQ(j["worlds"].size(), 1u);
    EXPECT_FALSE(countermodel(LogicId::il, parse("false -> P"), 4));
}

TEST(Countermodel, NoneForValidFormulas) {
    EXPECT_FALSE(countermodel(LogicId::ml, parse("P -> P"), 4));
    EXPECT_FALSE(countermodel(LogicId::il, parse("~~(P | ~P)"), 4));
}

TEST(Countermodel, ExcludedMiddle) {
    auto m = countermodel(LogicId::il, parse("P | ~P"), 4);
    ASSERT_TRUE(m);
    EXPECT_EQ(m->worlds, 2u);
}

TEST(Countermodel, BadArguments) {
    EXPECT_THROW(countermodel(LogicId::cl, parse("P"), 2), ContractViolation);
    EXPECT_THROW(countermodel(LogicId::il, parse("P"), 0), ContractViolation);
    EXPECT_THROW(countermodel(LogicId::il, parse("P"), 8), ContractViolation);
}

TEST(EvalModel, Examples) {
    KripkeModel one{LogicId::il, 1, {{0, 0}}, {{"P"}}};
    EXPECT_FALSE(eval_model(one, 0, parse("P & Q")));
    EXPECT_TRUE(eval_model(one, 0, parse("P -> P")));

    KripkeModel chain{LogicId::il, 2, {{0, 0}, {0, 1}, {1, 1}}, {{}, {"P"}}};
    EXPECT_TRUE(eval_model(chain, 0, parse("~~P")));
    EXPECT_FALSE(eval_model(chain, 0, parse("P")));
    EXPECT_TRUE(eval_model(chain, 1, parse("P -> P")));
    EXPECT_THROW(eval_model(chain, 2, parse("P")), ContractViolation);
}

TEST(EvalModel, BottomAsAtomInMinimalMode) {
    KripkeModel m{LogicId::ml, 1, {{0, 0}}, {{"false"}}};
    EXPECT_TRUE(eval_model(m, 0, parse("false")));
    KripkeModel i{LogicId::il, 1, {{0, 0}}, {{}}};
    EXPECT_FALSE(eval_model(i, 0, parse("false")));
}

namespace {

Formula replace(const Formula& f, const Formula& from, const Formula& to) {
    if (f.identical(from)) return to;
    switch (f.kind()) {
        case Connective::conj: return Formula::conj(replace(f.left(), from, to), replace(f.right(), from, to));
        case Connective::disj: return Formula::disj(replace(f.left(), from, to), replace(f.right(), from, to));
        case Connective::impl: return Formula::impl(replace(f.left(), from, to), replace(f.right(), from, to));
        default: return f;
    }
}

}  // namespace

// Reading where the atomic clauses of K1..K3 skip false: translate with a
// fresh atom in place of false, then map the atom's image back to false.
TEST(BottomReading, NonAtomicBottomIsAlsoSoundAndCharacterising) {
    GeneratorConfig config;
    Formula z = Formula::atom("Z0");
    for (int k = 1; k <= 3; ++k) {
        TranslationKind v = kuroda_variant(k);
        Formula image = inner_translate(v, z);
        for (std::uint64_t i = 0; i < 200; ++i) {
            Formula a = random_formula(config, i);
            Formula alt = replace(translate(v, a.replace_bottom(z)), image, Formula::bottom());
            EXPECT_FALSE(alt.predicates().count("Z0")) << render(alt);
            EXPECT_EQ(decide(LogicId::cl, a), decide(LogicId::ml, alt)) << to_string(v) << " " << render(a);
            EXPECT_TRUE(classical_valid(Formula::iff(a, alt))) << to_string(v) << " " << render(a);
        }
    }
}
