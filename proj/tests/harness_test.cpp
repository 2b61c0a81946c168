#include <gtest/gtest.h>

#include "json.hpp"

#include "kf/error.hpp"
#include "kf/harness.hpp"
#include "kf/syntax.hpp"

using namespace kf;

TEST(Generator, DepthOneIsAnAtom) {
    GeneratorConfig c;
    c.max_depth = 1;
    c.atoms = {"P"};
    c.include_bottom = false;
    for (std::uint64_t i = 0; i < 20; ++i) EXPECT_EQ(render(random_formula(c, i)), "P");
}

TEST(Generator, Deterministic) {
    GeneratorConfig c;
    for (std::uint64_t i = 0; i < 50; ++i) {
        EXPECT_TRUE(random_formula(c, i).identical(random_formula(c, i)));
    }
    GeneratorConfig other = c;
    other.seed = 2;
    int same = 0;
    for (std::uint64_t i = 0; i < 50; ++i) {
        same += random_formula(c, i).identical(random_formula(other, i));
    }
    EXPECT_LT(same, 25);
}

TEST(Generator, DepthBound) {
    GeneratorConfig c;
    c.max_depth = 4;
    for (std::uint64_t i = 0; i < 100; ++i) {
        Formula f = random_formula(c, i);
        EXPECT_LE(f.depth(), 4u);
        EXPECT_TRUE(f.quantifier_free());
    }
}

TEST(Generator, FirstOrder) {
    GeneratorConfig c;
    c.quantifier_free = false;
    bool saw_quantifier = false;
    for (std::uint64_t i = 0; i < 100; ++i) saw_quantifier |= !random_formula(c, i).quantifier_free();
    EXPECT_TRUE(saw_quantifier);
}

TEST(Generator, BadConfig) {
    GeneratorConfig c;
    c.max_depth = 0;
    EXPECT_THROW(c.validate(), ContractViolation);
    c = {};
    c.atoms.clear();
    c.include_bottom = false;
    EXPECT_THROW(c.validate(), ContractViolation);
    c = {};
    c.connective_weights["xor"] = 1;
    EXPECT_THROW(c.validate(), ContractViolation);
}

TEST(Suites, SmallRunsPass) {
    GeneratorConfig c;
    SuiteOptions o;
    o.samples = 20;
    for (auto id : suite_ids()) {
        SuiteReport r = run_suite(id, c, {}, o);
        EXPECT_TRUE(r.passed()) << id << ": " << r.to_json(2);
        EXPECT_EQ(r.samples, 20u);
    }
}

TEST(Suites, ProverSuitesNeedQuantifierFree) {
    GeneratorConfig c;
    c.quantifier_free = false;
    EXPECT_THROW(run_suite("soundness-derivability", c), ContractViolation);
    EXPECT_THROW(run_suite("no-such-suite", GeneratorConfig{}), ContractViolation);
}

TEST(Suites, MutationIsCaughtAndReproducible) {
    GeneratorConfig c;
    SuiteOptions o;
    o.samples = 50;
    o.mutation = Mutation::k2_atom;
    std::vector<TranslationKind> v{TranslationKind::k2};
    SuiteReport a = run_suite("characterisation", c, v, o);
    SuiteReport b = run_suite("characterisation", c, v, o);
    ASSERT_FALSE(a.passed());
    ASSERT_EQ(a.failures.size(), b.failures.size());
    for (std::size_t i = 0; i < a.failures.size(); ++i) {
        EXPECT_EQ(a.failures[i].index, b.failures[i].index);
        EXPECT_EQ(a.failures[i].formula, b.failures[i].formula);
        EXPECT_EQ(a.failures[i].replay, b.failures[i].replay);
    }
    std::string flag = "--mutation " + std::string(to_string(Mutation::k2_atom));
    EXPECT_NE(a.failures.front().replay.find(flag), std::string::npos);

    SuiteOptions replay = o;
    replay.only_index = a.failures.front().index;
    SuiteReport one = run_suite("characterisation", c, v, replay);
    ASSERT_EQ(one.failures.size(), 1u);
    EXPECT_EQ(one.failures.front().formula, a.failures.front().formula);
}

TEST(Suites, ReportJson) {
    GeneratorConfig c;
    SuiteOptions o;
    o.samples = 5;
    SuiteReport r = run_suite("round-trip", c, {}, o);
    auto j = nlohmann::json::parse(r.to_json());
    for (const char* key : {"suite", "variants", "samples", "seed", "config", "failures", "elapsed_ms"}) {
        EXPECT_TRUE(j.contains(key)) << key;
    }
    EXPECT_EQ(j["suite"], "round-trip");
}
