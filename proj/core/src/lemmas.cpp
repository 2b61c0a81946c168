#include "kf/lemmas.hpp"

#include "builder.hpp"

namespace kf::lemmas {

using namespace build;

ProofTerm dn_intro(const Formula& d) {
    return lam("d", d, lam("k", neg(d), app(hyp("k"), hyp("d"))));
}

ProofTerm dn_stable_neg_impl(const Formula& d, const Formula& e) {
    F target = imp(d, neg(e));
    return lam("h", nn(target),
               lam("d", d,
                   lam("e", e,
                       app(hyp("h"), lam("f", target, app(hyp("f"), hyp("d"), hyp("e")))))));
}

ProofTerm disj_dn(const Formula& d, const Formula& e) {
    return lam("u", disj(d, nn(e)),
               lam("k", neg(disj(d, e)),
                   cases(hyp("u"),
                         "a", app(hyp("k"), inl(hyp("a"), e)),
                         "b", app(hyp("b"), lam("x", e, app(hyp("k"), inr(d, hyp("x"))))))));
}

ProofTerm dn_map(const Formula& a, const Formula& b) {
    return lam("f", imp(a, b),
               lam("a", nn(a),
                   lam("k", neg(b),
                       app(hyp("a"), lam("x", a, app(hyp("k"), app(hyp("f"), hyp("x"))))))));
}

ProofTerm triple_neg(const Formula& a) {
    return lam("h", neg(nn(a)),
               lam("a", a, app(hyp("h"), lam("k", neg(a), app(hyp("k"), hyp("a"))))));
}

ProofTerm bot_or_bot() {
    return pair(lam("u", disj(bot(), bot()), cases(hyp("u"), "a", hyp("a"), "b", hyp("b"))),
                lam("b", bot(), inl(hyp("b"), bot())));
}

ProofTerm dn_bot() {
    return pair(lam("h", nn(bot()), app(hyp("h"), lam("b", bot(), hyp("b")))),
                lam("b", bot(), lam("k", neg(bot()), hyp("b"))));
}

ProofTerm dn_impl_intro(const Formula& c, const Formula& d) {
    F cd = imp(c, d);
    return lam("f", imp(nn(c), nn(d)),
               lam("k", neg(cd),
                   app(hyp("f"),
                       lam("n", neg(c),
                           app(hyp("k"), lam("c", c, efq(app(hyp("n"), hyp("c")), d)))),
                       lam("y", d, app(hyp("k"), lam("c", c, hyp("y")))))));
}

std::vector<LemmaInstance> library(const Formula& d, const Formula& e) {
    F bb = disj(bot(), bot());
    return {
        {"dn-intro", imp(d, nn(d)), dn_intro(d), LogicId::ml},
        {"dn-stable-neg-impl", imp(nn(imp(d, neg(e))), imp(d, neg(e))), dn_stable_neg_impl(d, e),
         LogicId::ml},
        {"disj-dn", imp(disj(d, nn(e)), nn(disj(d, e))), disj_dn(d, e), LogicId::ml},
        {"dn-map", imp(imp(d, e), imp(nn(d), nn(e))), dn_map(d, e), LogicId::ml},
        {"triple-neg", imp(neg(nn(d)), neg(d)), triple_neg(d), LogicId::ml},
        {"bot-or-bot", Formula::iff(bb, bot()), bot_or_bot(), LogicId::ml},
        {"dn-bot", Formula::iff(nn(bot()), bot()), dn_bot(), LogicId::ml},
        {"dn-impl-intro", imp(imp(nn(d), nn(e)), nn(imp(d, e))), dn_impl_intro(d, e), LogicId::il},
    };
}

}  // namespace kf::lemmas
