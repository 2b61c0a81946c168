#include <sstream>
#include <vector>

#include <gtest/gtest.h>

#include "json.hpp"

#include "kf/cli.hpp"

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult kf_run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = kf::cli_main(args, out, err);
    return {code, out.str(), err.str()};
}

std::string proof(const char* name) { return std::string(KF_TEST_DATA) + "/proofs/" + name; }

}  // namespace

TEST(Cli, Translate) {
    CliResult r = kf_run({"translate", "--variant", "k2", "P"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "~~(~~P)\n");
    EXPECT_EQ(kf_run({"translate", "--variant", "k4", "--inner", "P -> Q"}).out, "P -> (Q | false)\n");
    EXPECT_EQ(kf_run({"--format", "unicode", "translate", "--variant", "k", "P"}).out, "¬¬P\n");
    EXPECT_EQ(kf_run({"translate", "--variant", "t5", "--witness", "D", "false"}).out, "~(~D | D)\n");
}

TEST(Cli, TranslateJson) {
    CliResult r = kf_run({"--format", "json", "translate", "--variant", "k1", "P"});
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["output"], "~~(P | false)");
}

TEST(Cli, Prove) {
    EXPECT_EQ(kf_run({"prove", "--logic", "ml", "false -> P"}).code, 1);
    CliResult r = kf_run({"prove", "--logic", "il", "false -> P"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "provable\n");
}

TEST(Cli, CheckProof) {
    EXPECT_EQ(kf_run({"check-proof", proof("peirce.proof")}).code, 0);
    CliResult bad = kf_run({"check-proof", proof("ex_falso_ml.proof")});
    EXPECT_EQ(bad.code, 1);
    EXPECT_NE(bad.out.find("rejected"), std::string::npos);
}

TEST(Cli, Countermodel) {
    CliResult r = kf_run({"countermodel", "--logic", "ml", "--max-worlds", "2", "~~P -> P"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(nlohmann::json::parse(r.out)["worlds"].size(), 2u);
    CliResult none = kf_run({"countermodel", "--logic", "il", "P -> P"});
    EXPECT_EQ(none.code, 1);
    EXPECT_TRUE(none.out.empty());
}

TEST(Cli, Verify) {
    CliResult r = kf_run({"verify", "--suite", "all", "--samples", "50", "--seed", "7"});
    EXPECT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    ASSERT_TRUE(j.is_array());
    for (const auto& report : j) EXPECT_TRUE(report["failures"].empty());
}

TEST(Cli, VerifyMutationFails) {
    CliResult r = kf_run({"verify", "--suite", "characterisation", "--variants", "k5", "--samples", "50",
                    "--mutation", "k5_impl"});
    EXPECT_EQ(r.code, 1);
    EXPECT_FALSE(nlohmann::json::parse(r.out)["failures"].empty());
}

TEST(Cli, Transform) {
    CliResult r = kf_run({"transform", "--variant", "k1", proof("dne.proof")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("ml"), std::string::npos);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(kf_run({}).code, 2);
    EXPECT_EQ(kf_run({"translate", "--bogus", "P"}).code, 2);
    EXPECT_EQ(kf_run({"translate", "--variant", "k2", "P ->"}).code, 2);
    EXPECT_EQ(kf_run({"countermodel", "--logic", "il", "--max-worlds", "9", "P"}).code, 2);
    EXPECT_EQ(kf_run({"prove", "--logic", "il", "forall x. P(x)"}).code, 2);
}
