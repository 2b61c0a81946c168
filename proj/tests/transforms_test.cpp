#include <gtest/gtest.h>

#include "kf/corpus.hpp"
#include "kf/error.hpp"
#include "kf/harness.hpp"
#include "kf/proof.hpp"
#include "kf/proof_io.hpp"
#include "kf/syntax.hpp"
#include "kf/synthesis.hpp"
#include "kf/transforms.hpp"
#include "kf/translations.hpp"

using namespace kf;

namespace {

using PT = ProofTerm;

const ProofFile& corpus_item(const std::string& name) {
    for (const auto& e : proof_corpus()) {
        if (e.name == name) return e.file;
    }
    throw std::out_of_range(name);
}

Sequent leivant_sequent(TranslationKind t, const Sequent& s) {
    return map_sequent(s, [&](const Formula& f) { return leivant_translate(t, f); });
}

::testing::AssertionResult accepted(const PT& p, const Sequent& s, LogicId logic) {
    CheckResult r = check_proof(p, s, logic);
    if (r) return ::testing::AssertionSuccess();
    return ::testing::AssertionFailure() << r.describe();
}

}  // namespace

TEST(KurodaTransform, Examples) {
    for (const char* name : {"dne", "excluded-middle", "peirce"}) {
        const ProofFile& f = corpus_item(name);
        EXPECT_TRUE(accepted(kuroda_transform(f.proof, f.sequent),
                             translate_sequent(TranslationKind::k, f.sequent), LogicId::il))
            << name;
    }
    Sequent id = sequent_of(parse("P -> P"));
    EXPECT_TRUE(accepted(kuroda_transform(PT::abst("x", parse("P"), PT::hyp("x")), id),
                         sequent_of(parse("~~(P -> P)")), LogicId::il));
}

TEST(KurodaTransform, RejectsUncheckedInput) {
    Sequent s = sequent_of(parse("P -> Q"));
    EXPECT_THROW(kuroda_transform(PT::abst("x", parse("P"), PT::hyp("x")), s), ContractViolation);
}

TEST(LeivantTransform, Examples) {
    PT efq = PT::abst("b", Formula::bottom(), PT::ex_falso(PT::hyp("b"), parse("P")));
    Sequent s = sequent_of(parse("false -> P"));
    PT out = leivant_transform(TranslationKind::t2, efq, s);
    EXPECT_TRUE(accepted(out, sequent_of(parse("~~false -> ~~P")), LogicId::ml));

    PT id = PT::abst("q", parse("Q"), PT::hyp("q"));
    EXPECT_TRUE(accepted(leivant_transform(TranslationKind::t1, id, sequent_of(parse("Q -> Q"))),
                         sequent_of(parse("(Q | false) -> (Q | false)")), LogicId::ml));

    Sequent with_hyp{{{"p", parse("P")}}, parse("P | Q")};
    PT inj = PT::inj_l(PT::hyp("p"), parse("Q"));
    EXPECT_TRUE(accepted(leivant_transform(TranslationKind::t3, inj, with_hyp),
                         leivant_sequent(TranslationKind::t3, with_hyp), LogicId::ml));
}

TEST(LeivantTransform, RejectsClassicalInput) {
    const ProofFile& f = corpus_item("dne");
    EXPECT_THROW(leivant_transform(TranslationKind::t1, f.proof, f.sequent), ContractViolation);
}

TEST(Absorption, Examples) {
    EXPECT_TRUE(accepted(synthesize_absorption(TranslationKind::t1, parse("P")),
                         sequent_of(parse("false -> P | false")), LogicId::ml));
    EXPECT_TRUE(accepted(synthesize_absorption(TranslationKind::t2, parse("P")),
                         sequent_of(parse("false -> ~~P")), LogicId::ml));
    EXPECT_TRUE(accepted(synthesize_absorption(TranslationKind::t4, parse("P -> Q")),
                         sequent_of(parse("false -> (P | false) -> ((Q | false) | false)")),
                         LogicId::ml));
}

TEST(Equivalences, LeivantExamples) {
    for (auto [t, text] : {std::pair{TranslationKind::t1, "P"}, std::pair{TranslationKind::t2, "P"},
                           std::pair{TranslationKind::t3, "P -> Q"}}) {
        Formula a = parse(text);
        Equivalence e = equivalence_leivant(t, a);
        EXPECT_TRUE(e.lhs.identical(leivant_translate(t, translate(TranslationKind::k, a))));
        EXPECT_TRUE(e.rhs.identical(translate(kuroda_variant(variant_index(t)), a)));
        EXPECT_TRUE(accepted(synthesize_equiv_leivant(t, a), sequent_of(e.statement()), LogicId::ml));
    }
}

TEST(Equivalences, ShoenfieldExamples) {
    Formula c = Formula::atom("C0");
    for (const char* text : {"P", "P -> Q", "false"}) {
        Formula a = parse(text);
        Equivalence e = equivalence_shoenfield(a, c);
        EXPECT_TRUE(e.lhs.identical(translate(TranslationKind::k, shoenfield_translate(a, c))));
        EXPECT_TRUE(e.rhs.identical(translate(TranslationKind::k5, a)));
        EXPECT_TRUE(accepted(synthesize_equiv_shoenfield(a, c), sequent_of(e.statement()), LogicId::ml))
            << text;
    }
    EXPECT_THROW(synthesize_equiv_shoenfield(parse("P"), parse("C(x)")), ContractViolation);
}

TEST(Equivalences, K678Examples) {
    EXPECT_TRUE(accepted(synthesize_equiv_k678(TranslationKind::k7, parse("P")),
                         sequent_of(parse("P <-> P")), LogicId::ml));
    EXPECT_TRUE(accepted(synthesize_equiv_k678(TranslationKind::k7, parse("P -> Q")),
                         sequent_of(parse("(P -> ~~Q) <-> (~Q -> ~P)")), LogicId::ml));
    EXPECT_TRUE(accepted(synthesize_equiv_k678(TranslationKind::k8, parse("P -> Q")),
                         sequent_of(parse("(P -> ~~Q) <-> ~(P & ~Q)")), LogicId::ml));
}

TEST(Equivalences, TotalOnRandomFirstOrderFormulas) {
    GeneratorConfig config;
    config.quantifier_free = false;
    for (std::uint64_t i = 0; i < 60; ++i) {
        Formula a = random_formula(config, i);
        for (int k = 1; k <= 4; ++k) {
            TranslationKind t = leivant_variant(k);
            EXPECT_TRUE(accepted(synthesize_equiv_leivant(t, a),
                                 sequent_of(equivalence_leivant(t, a).statement()), LogicId::ml));
            EXPECT_TRUE(accepted(synthesize_absorption(t, a),
                                 sequent_of(Formula::impl(Formula::bottom(), leivant_translate(t, a))),
                                 LogicId::ml));
        }
        if (a.free_variables().empty()) {
            Formula w = default_witness(a);
            EXPECT_TRUE(accepted(synthesize_equiv_shoenfield(a, w),
                                 sequent_of(equivalence_shoenfield(a, w).statement()), LogicId::ml));
        }
        for (auto j : {TranslationKind::k7, TranslationKind::k8}) {
            EXPECT_TRUE(accepted(synthesize_equiv_k678(j, a),
                                 sequent_of(equivalence_k678(j, a).statement()), LogicId::ml));
        }
    }
}

TEST(Pipeline, Examples) {
    for (auto [v, name] : {std::pair{TranslationKind::k1, "peirce"}, std::pair{TranslationKind::k2, "dne"},
                           std::pair{TranslationKind::k3, "not-forall"}}) {
        const ProofFile& f = corpus_item(name);
        EXPECT_TRUE(accepted(soundness_pipeline(v, f.proof, f.sequent), translate_sequent(v, f.sequent),
                             LogicId::ml))
            << name;
    }
}

TEST(Pipeline, WholeCorpus) {
    const auto& corpus = proof_corpus();
    EXPECT_GE(corpus.size(), 20u);
    std::size_t first_order = 0;
    for (const auto& e : corpus) {
        ASSERT_TRUE(accepted(e.file.proof, e.file.sequent, LogicId::cl)) << e.name;
        if (!e.file.sequent.quantifier_free()) ++first_order;
        EXPECT_TRUE(accepted(kuroda_transform(e.file.proof, e.file.sequent),
                             translate_sequent(TranslationKind::k, e.file.sequent), LogicId::il))
            << e.name;
        for (int k = 1; k <= 4; ++k) {
            TranslationKind v = kuroda_variant(k);
            EXPECT_TRUE(accepted(soundness_pipeline(v, e.file.proof, e.file.sequent),
                                 translate_sequent(v, e.file.sequent), LogicId::ml))
                << e.name << " " << to_string(v);
        }
    }
    EXPECT_GE(first_order, 3u);
}

TEST(Pipeline, OnlyK1ToK4) {
    const ProofFile& f = corpus_item("dne");
    EXPECT_THROW(soundness_pipeline(TranslationKind::k5, f.proof, f.sequent), ContractViolation);
}
