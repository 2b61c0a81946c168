#include <benchmark/benchmark.h>

#include "kf/corpus.hpp"
#include "kf/harness.hpp"
#include "kf/kripke.hpp"
#include "kf/prover.hpp"
#include "kf/proof.hpp"
#include "kf/synthesis.hpp"
#include "kf/syntax.hpp"
#include "kf/transforms.hpp"
#include "kf/translations.hpp"

namespace {

using namespace kf;

std::vector<Formula> sample(int depth, bool quantifier_free = true, std::size_t n = 64) {
    GeneratorConfig c;
    c.max_depth = depth;
    c.quantifier_free = quantifier_free;
    std::vector<Formula> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(random_formula(c, i));
    return out;
}

void BM_Parse(benchmark::State& state) {
    std::vector<std::string> texts;
    for (const auto& f : sample(static_cast<int>(state.range(0)), false)) texts.push_back(render(f));
    for (auto _ : state) {
        for (const auto& t : texts) benchmark::DoNotOptimize(parse(t));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(texts.size()));
}
BENCHMARK(BM_Parse)->Arg(3)->Arg(5)->Arg(7);

void BM_Translate(benchmark::State& state) {
    auto fs = sample(static_cast<int>(state.range(0)), false);
    for (auto _ : state) {
        for (const auto& f : fs) {
            for (int k = 0; k <= 8; ++k) benchmark::DoNotOptimize(translate(kuroda_variant(k), f));
        }
    }
}
BENCHMARK(BM_Translate)->Arg(5);

void BM_Decide(benchmark::State& state) {
    auto fs = sample(static_cast<int>(state.range(0)));
    LogicId logic = static_cast<LogicId>(state.range(1));
    for (auto _ : state) {
        for (const auto& f : fs) benchmark::DoNotOptimize(decide(logic, f));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(fs.size()));
}
BENCHMARK(BM_Decide)->ArgsProduct({{3, 5}, {0, 1, 2}});

void BM_DecideTranslated(benchmark::State& state) {
    auto fs = sample(5);
    TranslationKind v = kuroda_variant(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        for (const auto& f : fs) benchmark::DoNotOptimize(decide(LogicId::ml, translate(v, f)));
    }
}
BENCHMARK(BM_DecideTranslated)->DenseRange(1, 8);

void BM_Countermodel(benchmark::State& state) {
    auto fs = sample(4, true, 16);
    for (auto _ : state) {
        for (const auto& f : fs) benchmark::DoNotOptimize(countermodel(LogicId::il, f, state.range(0)));
    }
}
BENCHMARK(BM_Countermodel)->Arg(2)->Arg(3)->Arg(4);

void BM_CheckSynthesizedEquivalence(benchmark::State& state) {
    auto fs = sample(5, false, 16);
    TranslationKind t = leivant_variant(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        for (const auto& f : fs) {
            Equivalence e = equivalence_leivant(t, f);
            benchmark::DoNotOptimize(check_proof(e.proof(), sequent_of(e.statement()), LogicId::ml));
        }
    }
}
BENCHMARK(BM_CheckSynthesizedEquivalence)->DenseRange(1, 4);

void BM_Pipeline(benchmark::State& state) {
    const auto& corpus = proof_corpus();
    TranslationKind v = kuroda_variant(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        for (const auto& e : corpus) {
            benchmark::DoNotOptimize(soundness_pipeline(v, e.file.proof, e.file.sequent));
        }
    }
}
BENCHMARK(BM_Pipeline)->DenseRange(1, 4);

}  // namespace

BENCHMARK_MAIN();
