#include "kf/corpus.hpp"

#include <utility>

namespace kf {

namespace {

constexpr std::pair<const char*, const char*> kSources[] = {
    {"dne", R"pf((sequent "~~P -> P" cl)
(lam h "~~P" (dne (hyp h))))pf"},

    {"dne-hypothesis", R"pf((sequent (hyp h "~~P") "P" cl)
(dne (hyp h)))pf"},

    {"excluded-middle", R"pf((sequent "P | ~P" cl)
(dne (lam k "~(P | ~P)"
  (app (hyp k) (inr "P" (lam p "P" (app (hyp k) (inl (hyp p) "~P"))))))))pf"},

    {"peirce", R"pf((sequent "((P -> Q) -> P) -> P" cl)
(lam f "(P -> Q) -> P"
  (dne (lam k "~P"
    (app (hyp k) (app (hyp f) (lam p "P" (efq (app (hyp k) (hyp p)) "Q"))))))))pf"},

    {"de-morgan-and", R"pf((sequent "~(P & Q) -> ~P | ~Q" cl)
(lam h "~(P & Q)"
  (dne (lam k "~(~P | ~Q)"
    (app (hyp k)
      (inl (lam p "P"
             (app (hyp k) (inr "~P" (lam q "Q" (app (hyp h) (pair (hyp p) (hyp q)))))))
           "~Q"))))))pf"},

    {"de-morgan-or", R"pf((sequent "~(P | Q) -> ~P & ~Q" cl)
(lam h "~(P | Q)"
  (pair (lam p "P" (app (hyp h) (inl (hyp p) "Q")))
        (lam q "Q" (app (hyp h) (inr "P" (hyp q)))))))pf"},

    {"de-morgan-converse", R"pf((sequent "~P | ~Q -> ~(P & Q)" cl)
(lam u "~P | ~Q"
  (lam c "P & Q"
    (case (hyp u) a (app (hyp a) (fst (hyp c))) b (app (hyp b) (snd (hyp c)))))))pf"},

    {"contraposition", R"pf((sequent "(~Q -> ~P) -> P -> Q" cl)
(lam f "~Q -> ~P"
  (lam p "P" (dne (lam n "~Q" (app (app (hyp f) (hyp n)) (hyp p)))))))pf"},

    {"material-implication", R"pf((sequent "(P -> Q) -> ~P | Q" cl)
(lam f "P -> Q"
  (dne (lam k "~(~P | Q)"
    (app (hyp k)
      (inl (lam p "P" (app (hyp k) (inr "~P" (app (hyp f) (hyp p))))) "Q"))))))pf"},

    {"ex-falso", R"pf((sequent "false -> P" cl)
(lam b "false" (efq (hyp b) "P")))pf"},

    {"negation-explosion", R"pf((sequent "~P -> P -> Q" cl)
(lam n "~P" (lam p "P" (efq (app (hyp n) (hyp p)) "Q"))))pf"},

    {"dummett", R"pf((sequent "(P -> Q) | (Q -> P)" cl)
(dne (lam k "~((P -> Q) | (Q -> P))"
  (app (hyp k)
    (inl (lam p "P"
           (dne (lam nq "~Q"
             (app (hyp k) (inr "P -> Q" (lam q "Q" (efq (app (hyp nq) (hyp q)) "P")))))))
         "Q -> P")))))pf"},

    {"modus-tollens", R"pf((sequent (hyp h1 "P -> Q") (hyp h2 "~Q") "~P" cl)
(lam p "P" (app (hyp h2) (app (hyp h1) (hyp p)))))pf"},

    {"or-by-cases", R"pf((sequent "((P -> Q) -> Q) -> (Q -> P) -> P" cl)
(lam f "(P -> Q) -> Q"
  (lam g "Q -> P"
    (dne (lam k "~P"
      (app (hyp k)
        (app (hyp g) (app (hyp f) (lam p "P" (efq (app (hyp k) (hyp p)) "Q"))))))))))pf"},

    {"disjunctive-syllogism", R"pf((sequent "~~(P | Q) -> ~P -> Q" cl)
(lam h "~~(P | Q)"
  (lam n "~P"
    (dne (lam k "~Q"
      (app (hyp h) (lam u "P | Q" (case (hyp u) a (app (hyp n) (hyp a)) b (app (hyp k) (hyp b))))))))))pf"},

    {"split-implication", R"pf((sequent "(P -> Q | R) -> (P -> Q) | (P -> R)" cl)
(lam f "P -> Q | R"
  (dne (lam k "~((P -> Q) | (P -> R))"
    (app (hyp k)
      (inl (lam p "P"
             (case (app (hyp f) (hyp p))
               a (hyp a)
               b (efq (app (hyp k) (inr "P -> Q" (lam p2 "P" (hyp b)))) "Q")))
           "P -> R"))))))pf"},

    {"negated-implication-left", R"pf((sequent "~(P -> Q) -> P" cl)
(lam h "~(P -> Q)"
  (dne (lam n "~P" (app (hyp h) (lam p "P" (efq (app (hyp n) (hyp p)) "Q")))))))pf"},

    {"negated-implication-right", R"pf((sequent "~(P -> Q) -> ~Q" cl)
(lam h "~(P -> Q)" (lam q "Q" (app (hyp h) (lam p "P" (hyp q))))))pf"},

    {"consequentia-mirabilis", R"pf((sequent "(~P -> P) -> P" cl)
(lam f "~P -> P" (dne (lam n "~P" (app (hyp n) (app (hyp f) (hyp n)))))))pf"},

    {"contraposition-swap", R"pf((sequent "(~P -> Q) -> ~Q -> P" cl)
(lam f "~P -> Q" (lam n "~Q" (dne (lam m "~P" (app (hyp n) (app (hyp f) (hyp m))))))))pf"},

    {"distribution", R"pf((sequent "P & (Q | R) -> P & Q | P & R" cl)
(lam h "P & (Q | R)"
  (case (snd (hyp h))
    q (inl (pair (fst (hyp h)) (hyp q)) "P & R")
    r (inr "P & Q" (pair (fst (hyp h)) (hyp r))))))pf"},

    {"not-forall", R"pf((sequent "~(forall x. P(x)) -> exists x. ~P(x)" cl)
(lam h "~(forall x. P(x))"
  (dne (lam k "~(exists x. ~P(x))"
    (app (hyp h)
      (gen x (dne (lam n "~P(x)" (app (hyp k) (wit "x" (hyp n) "exists x. ~P(x)"))))))))))pf"},

    {"not-exists", R"pf((sequent "~(exists x. P(x)) -> forall x. ~P(x)" cl)
(lam h "~(exists x. P(x))"
  (gen x (lam p "P(x)" (app (hyp h) (wit "x" (hyp p) "exists x. P(x)"))))))pf"},

    {"forall-exists", R"pf((sequent "(forall x. P(x)) -> exists x. P(x)" cl)
(lam h "forall x. P(x)" (wit "x" (inst (hyp h) "x") "exists x. P(x)")))pf"},

    {"not-forall-not", R"pf((sequent "~(forall x. ~P(x)) -> exists x. P(x)" cl)
(lam h "~(forall x. ~P(x))"
  (dne (lam k "~(exists x. P(x))"
    (app (hyp h) (gen x (lam p "P(x)" (app (hyp k) (wit "x" (hyp p) "exists x. P(x)")))))))))pf"},

    {"drinker", R"pf((sequent "exists x. (P(x) -> forall y. P(y))" cl)
(dne (lam k "~(exists x. (P(x) -> forall y. P(y)))"
  (app (hyp k)
    (wit "x"
      (lam p "P(x)"
        (gen y
          (dne (lam n "~P(y)"
            (app (hyp k)
              (wit "y" (lam q "P(y)" (efq (app (hyp n) (hyp q)) "forall y. P(y)"))
                   "exists x. (P(x) -> forall y. P(y))"))))))
      "exists x. (P(x) -> forall y. P(y))")))))pf"},

    {"forall-projection", R"pf((sequent (hyp h "forall x. P(x) & Q(x)") "forall x. P(x)" cl)
(gen x (fst (inst (hyp h) "x"))))pf"},

    {"exists-unpack", R"pf((sequent "(exists x. P(x) & Q(x)) -> exists x. Q(x)" cl)
(lam h "exists x. P(x) & Q(x)"
  (unpack (hyp h) y e (wit "y" (snd (hyp e)) "exists x. Q(x)"))))pf"},
};

std::vector<CorpusEntry> load() {
    std::vector<CorpusEntry> out;
    for (const auto& [name, source] : kSources) {
        out.push_back({name, source, read_proof_file(source)});
    }
    return out;
}

}  // namespace

const std::vector<CorpusEntry>& proof_corpus() {
    static const std::vector<CorpusEntry> corpus = load();
    return corpus;
}

}  // namespace kf
