#include <gtest/gtest.h>

#include "kf/error.hpp"
#include "kf/formula.hpp"
#include "kf/harness.hpp"
#include "kf/syntax.hpp"
#include "kf/translations.hpp"

using namespace kf;

namespace {

Formula P() { return Formula::atom("P"); }
Formula Q() { return Formula::atom("Q"); }
Formula R() { return Formula::atom("R"); }
Formula Px() { return Formula::atom("P", {Term::variable("x")}); }
Formula bot() { return Formula::bottom(); }

}  // namespace

TEST(Parse, Precedence) {
    EXPECT_TRUE(parse("P -> Q | R").identical(Formula::impl(P(), Formula::disj(Q(), R()))));
    EXPECT_TRUE(parse("P & Q | R").identical(Formula::disj(Formula::conj(P(), Q()), R())));
    EXPECT_TRUE(parse("P -> Q -> R").identical(Formula::impl(P(), Formula::impl(Q(), R()))));
}

TEST(Parse, NegationIsSugar) {
    EXPECT_TRUE(parse("~P").identical(Formula::impl(P(), bot())));
    EXPECT_TRUE(parse("¬P").identical(Formula::impl(P(), bot())));
    EXPECT_TRUE(parse("~~P & Q").identical(Formula::conj(Formula::neg(Formula::neg(P())), Q())));
}

TEST(Parse, QuantifierExtendsRight) {
    EXPECT_TRUE(parse("forall x. P(x) -> Q").identical(Formula::forall("x", Formula::impl(Px(), Q()))));
    EXPECT_TRUE(parse("(forall x. P(x)) -> Q").identical(Formula::impl(Formula::forall("x", Px()), Q())));
}

TEST(Parse, Iff) {
    EXPECT_TRUE(parse("P <-> Q").identical(Formula::iff(P(), Q())));
}

TEST(Parse, Errors) {
    EXPECT_THROW(parse("P ->"), ParseError);
    EXPECT_THROW(parse("(P & Q"), ParseError);
    EXPECT_THROW(parse("P(x) & P(x, y)"), ParseError);
    try {
        parse("P & & Q");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 1u);
        EXPECT_EQ(e.column(), 5u);
    }
}

TEST(Render, Examples) {
    EXPECT_EQ(render(Formula::impl(P(), bot())), "~P");
    EXPECT_EQ(render(Formula::impl(P(), bot()), Style::unicode), "¬P");
    EXPECT_EQ(render(Formula::disj(P(), bot())), "P | false");
    EXPECT_EQ(render(Formula::forall("x", Formula::neg(Formula::neg(Px())))), "forall x. ~~P(x)");
}

TEST(Render, BinaryOperandsParenthesized) {
    EXPECT_EQ(render(parse("P -> Q | R")), "P -> (Q | R)");
    EXPECT_EQ(render(parse("~(P & Q)")), "~(P & Q)");
}

TEST(Substitute, Examples) {
    Term fy = Term::application("f", {Term::variable("y")});
    EXPECT_TRUE(substitute(Px(), "x", fy).identical(Formula::atom("P", {fy})));

    Formula all = Formula::forall("x", Px());
    EXPECT_TRUE(substitute(all, "x", Term::application("c")).identical(all));

    Formula pxy = Formula::atom("P", {Term::variable("x"), Term::variable("y")});
    Formula out = substitute(Formula::forall("y", pxy), "x", Term::variable("y"));
    ASSERT_EQ(out.kind(), Connective::forall);
    EXPECT_NE(out.variable(), "y");
    EXPECT_TRUE(out.body().identical(
        Formula::atom("P", {Term::variable("y"), Term::variable(out.variable())})));
}

TEST(FreeVariables, Examples) {
    EXPECT_EQ(free_variables(Px()), (std::set<std::string>{"x"}));
    EXPECT_TRUE(free_variables(Formula::forall("x", Px())).empty());
    EXPECT_EQ(free_variables(parse("P(x) -> exists y. Q(x, y)")), (std::set<std::string>{"x"}));
}

TEST(Equality, AlphaEquivalence) {
    EXPECT_EQ(parse("forall x. P(x)"), parse("forall y. P(y)"));
    EXPECT_FALSE(parse("forall x. P(x)").identical(parse("forall y. P(y)")));
    EXPECT_NE(parse("forall x. P(x)"), parse("forall y. P(x)"));
}

TEST(Fragment, Examples) {
    EXPECT_TRUE(in_clprime_fragment(parse("~P | Q")));
    EXPECT_FALSE(in_clprime_fragment(parse("P & Q")));
    EXPECT_FALSE(in_clprime_fragment(parse("false")));
    EXPECT_TRUE(in_clprime_fragment(shoenfield_translate(parse("P & Q"), Formula::atom("C0"))));
}

TEST(SyntaxProperties, RoundTripAndFragmentClosure) {
    GeneratorConfig config;
    config.quantifier_free = false;
    for (std::uint64_t i = 0; i < 300; ++i) {
        Formula a = random_formula(config, i);
        for (Style style : {Style::ascii, Style::unicode}) {
            EXPECT_TRUE(parse(render(a, style)).identical(a)) << render(a);
        }
        if (a.free_variables().empty()) {
            EXPECT_TRUE(in_clprime_fragment(shoenfield_translate(a, Formula::atom("C0"))))
                << render(a);
        }
    }
}

TEST(SyntaxProperties, SubstitutionFreshness) {
    GeneratorConfig config;
    config.quantifier_free = false;
    Term t = Term::application("f", {Term::variable("y")});
    for (std::uint64_t i = 0; i < 300; ++i) {
        Formula a = random_formula(config, i);
        std::set<std::string> allowed = a.free_variables();
        allowed.erase("x");
        allowed.insert("y");
        for (const auto& v : substitute(a, "x", t).free_variables()) {
            EXPECT_TRUE(allowed.count(v)) << render(a) << " gained " << v;
        }
    }
}
