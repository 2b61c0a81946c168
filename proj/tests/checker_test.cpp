#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "kf/error.hpp"
#include "kf/harness.hpp"
#include "kf/lemmas.hpp"
#include "kf/proof.hpp"
#include "kf/proof_io.hpp"
#include "kf/prover.hpp"
#include "kf/syntax.hpp"

using namespace kf;

namespace {

using PT = ProofTerm;

Formula P() { return Formula::atom("P"); }

std::string data(const std::string& name) {
    std::ifstream in(std::string(KF_TEST_DATA) + "/proofs/" + name);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST(Checker, Identity) {
    PT id = PT::abst("x", P(), PT::hyp("x"));
    EXPECT_TRUE(check_proof(id, sequent_of(parse("P -> P")), LogicId::ml));
    CheckResult r = check_proof(id, sequent_of(parse("P -> Q")), LogicId::ml);
    ASSERT_FALSE(r);
    EXPECT_EQ(r.rejection().reason, RejectReason::conclusion_mismatch);
}

TEST(Checker, ExFalsoIsTheGap) {
    PT efq = PT::abst("x", Formula::bottom(), PT::ex_falso(PT::hyp("x"), P()));
    Sequent s = sequent_of(parse("false -> P"));
    CheckResult ml = check_proof(efq, s, LogicId::ml);
    ASSERT_FALSE(ml);
    EXPECT_EQ(ml.rejection().reason, RejectReason::rule_not_in_logic);
    EXPECT_TRUE(check_proof(efq, s, LogicId::il));
    EXPECT_TRUE(check_proof(efq, s, LogicId::cl));
}

TEST(Checker, DoubleNegationIntro) {
    Formula d = parse("P & Q");
    PT t = PT::abst("d", d, PT::abst("k", Formula::neg(d), PT::apply(PT::hyp("k"), PT::hyp("d"))));
    EXPECT_TRUE(check_proof(t, sequent_of(Formula::impl(d, Formula::neg(Formula::neg(d)))), LogicId::ml));
}

TEST(Checker, DneOnlyInClassical) {
    PT t = PT::abst("h", parse("~~P"), PT::dne(PT::hyp("h")));
    Sequent s = sequent_of(parse("~~P -> P"));
    EXPECT_FALSE(check_proof(t, s, LogicId::il));
    EXPECT_TRUE(check_proof(t, s, LogicId::cl));
}

TEST(Checker, UnknownHypothesisHasPath) {
    PT t = PT::abst("x", P(), PT::hyp("y"));
    CheckResult r = check_proof(t, sequent_of(parse("P -> P")), LogicId::ml);
    ASSERT_FALSE(r);
    EXPECT_EQ(r.rejection().reason, RejectReason::unknown_hypothesis);
    EXPECT_EQ(r.rejection().path_string(), "0");
}

TEST(Checker, Quantifiers) {
    Sequent s{{{"h", parse("forall x. P(x) & Q(x)")}}, parse("forall y. Q(y)")};
    PT t = PT::gen("y", PT::proj_r(PT::inst(PT::hyp("h"), Term::variable("y"))));
    EXPECT_TRUE(check_proof(t, s, LogicId::ml));

    Sequent e{{}, parse("(exists x. P(x)) -> exists y. P(y)")};
    PT u = PT::abst("h", parse("exists x. P(x)"),
                    PT::unpack(PT::hyp("h"), "z", "p",
                               PT::witness(Term::variable("z"), PT::hyp("p"), parse("exists y. P(y)"))));
    EXPECT_TRUE(check_proof(u, e, LogicId::ml));
}

TEST(Checker, EigenvariableViolation) {
    ProofFile f = read_proof_file(data("bad_eigenvariable.proof"));
    CheckResult r = check_proof(f.proof, f.sequent, f.logic);
    ASSERT_FALSE(r);
    EXPECT_EQ(r.rejection().reason, RejectReason::eigenvariable_violation);
}

TEST(Checker, UnusedHypothesisDoesNotBlockGen) {
    Sequent s{{{"h", parse("Q(x)")}}, parse("forall x. P(x) -> P(x)")};
    PT t = PT::gen("x", PT::abst("p", parse("P(x)"), PT::hyp("p")));
    EXPECT_TRUE(check_proof(t, s, LogicId::ml));
}

TEST(ProofFiles, ReadAndCheck) {
    for (const char* name : {"peirce.proof", "dne.proof", "not_forall.proof"}) {
        ProofFile f = read_proof_file(data(name));
        EXPECT_EQ(f.logic, LogicId::cl);
        EXPECT_TRUE(check_proof(f.proof, f.sequent, f.logic)) << name;
    }
    ProofFile ml = read_proof_file(data("ex_falso_ml.proof"));
    EXPECT_FALSE(check_proof(ml.proof, ml.sequent, ml.logic));
}

TEST(ProofFiles, RoundTrip) {
    ProofFile f = read_proof_file(data("not_forall.proof"));
    ProofFile again = read_proof_file(write_proof_file(f));
    EXPECT_EQ(write_proof_term(again.proof), write_proof_term(f.proof));
    EXPECT_TRUE(again.sequent.conclusion.identical(f.sequent.conclusion));
    EXPECT_TRUE(check_proof(again.proof, again.sequent, again.logic));
}

TEST(ProofFiles, Malformed) {
    EXPECT_THROW(read_proof_file("(sequent \"P\" cl) (lam x"), ParseError);
    EXPECT_THROW(read_proof_file("(sequent \"P ->\" cl) (hyp x)"), ParseError);
    EXPECT_THROW(read_proof_file("(sequent \"P\" xl) (hyp x)"), Error);
}

TEST(Lemmas, LibraryAcceptedInItsLogic) {
    GeneratorConfig config;
    config.quantifier_free = false;
    for (std::uint64_t i = 0; i < 50; ++i) {
        Formula d = random_formula(config, 2 * i);
        Formula e = random_formula(config, 2 * i + 1);
        for (const auto& lemma : lemmas::library(d, e)) {
            EXPECT_TRUE(check_proof(lemma.proof, sequent_of(lemma.statement), lemma.logic))
                << lemma.name << ": " << render(lemma.statement);
        }
    }
}

TEST(Lemmas, CheckedProofsAreProvable) {
    GeneratorConfig config;
    config.max_depth = 3;
    for (std::uint64_t i = 0; i < 50; ++i) {
        Formula d = random_formula(config, 2 * i);
        Formula e = random_formula(config, 2 * i + 1);
        for (const auto& lemma : lemmas::library(d, e)) {
            EXPECT_EQ(decide(lemma.logic, lemma.statement), Decision::provable) << lemma.name;
        }
    }
}
