// Prints one PASS/FAIL line per acceptance criterion; exits 1 if any fail.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "kf/corpus.hpp"
#include "kf/harness.hpp"
#include "kf/proof.hpp"
#include "kf/transforms.hpp"
#include "kf/translations.hpp"

using namespace kf;

namespace {

struct Outcome {
    bool ok;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

GeneratorConfig config_with_depth(int depth) {
    GeneratorConfig c;
    c.max_depth = depth;
    return c;
}

// Runs the suites and reports total failures and time.
Outcome suites(const std::vector<std::string>& ids, const GeneratorConfig& config,
               std::size_t samples, double limit_s = 0,
               std::vector<TranslationKind> variants = {}) {
    SuiteOptions o;
    o.samples = samples;
    auto start = Clock::now();
    std::size_t failures = 0;
    std::string first;
    for (const auto& id : ids) {
        SuiteReport r = run_suite(id, config, variants, o);
        failures += r.failures.size();
        if (first.empty() && !r.failures.empty()) first = "; first: " + r.failures.front().replay;
    }
    double s = seconds_since(start);
    bool ok = failures == 0 && (limit_s == 0 || s < limit_s);
    std::string detail = std::to_string(failures) + " failure(s), " + std::to_string(s) + " s";
    if (limit_s > 0) detail += " (limit " + std::to_string(static_cast<int>(limit_s)) + " s)";
    return {ok, detail + first};
}

Outcome quoted_lemmas() { return suites({"k6-lemmas"}, config_with_depth(4), 100, 10); }

Outcome soundness() {
    std::vector<TranslationKind> all;
    for (int k = 1; k <= 8; ++k) all.push_back(kuroda_variant(k));
    return suites({"soundness-derivability"}, config_with_depth(5), 200, 60, all);
}

Outcome characterisation() { return suites({"characterisation"}, config_with_depth(5), 200); }

Outcome equivalences() {
    return suites({"leivant-equivalence", "shoenfield-equivalence", "k678-equivalence"},
                  config_with_depth(5), 200);
}

Outcome pipeline() {
    const auto& corpus = proof_corpus();
    std::set<std::string> names;
    std::size_t first_order = 0;
    std::size_t rejected = 0;
    for (const auto& e : corpus) {
        names.insert(e.name);
        if (!e.file.sequent.quantifier_free()) ++first_order;
        for (int k = 1; k <= 4; ++k) {
            TranslationKind v = kuroda_variant(k);
            ProofTerm p = soundness_pipeline(v, e.file.proof, e.file.sequent);
            if (!check_proof(p, translate_sequent(v, e.file.sequent), LogicId::ml)) ++rejected;
        }
    }
    bool covered = corpus.size() >= 20 && first_order >= 3;
    for (const char* required : {"peirce", "dne", "excluded-middle", "de-morgan-and"}) {
        covered = covered && names.count(required);
    }
    // The pipeline suite checks every synthesizer on each random formula.
    Outcome synth = suites({"pipeline"}, config_with_depth(5), 100);
    std::string detail = std::to_string(corpus.size()) + " corpus proofs (" +
                         std::to_string(first_order) + " first-order), " + std::to_string(rejected) +
                         " rejected pipeline output(s); synthesizers: " + synth.detail;
    return {covered && rejected == 0 && synth.ok, detail};
}

Outcome prover_cross() { return suites({"prover-cross"}, config_with_depth(5), 1000, 120); }

Outcome mutations() {
    std::vector<std::string> all(suite_ids().begin(), suite_ids().end());
    GeneratorConfig config;
    std::string missed;
    for (Mutation m : shipped_mutations()) {
        SuiteOptions o;
        o.mutation = m;
        std::size_t failures = 0;
        for (const auto& id : all) {
            failures += run_suite(id, config, {}, o).failures.size();
            if (failures) break;
        }
        if (!failures) missed += " " + std::string(to_string(m));
    }
    std::string detail = std::to_string(shipped_mutations().size()) + " mutation(s)";
    if (!missed.empty()) detail += ", undetected:" + missed;
    return {missed.empty(), detail};
}

Outcome round_trip() {
    GeneratorConfig config;
    config.quantifier_free = false;
    return suites({"round-trip"}, config, 1000);
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"quoted minimal-logic lemmas", quoted_lemmas},
        {"soundness/derivability K1..K8", soundness},
        {"characterisation", characterisation},
        {"equivalence lemmas", equivalences},
        {"constructive pipeline", pipeline},
        {"prover cross-validation", prover_cross},
        {"mutation sanity", mutations},
        {"parse/render round trip", round_trip},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        all = all && o.ok;
        std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first
                  << " - " << o.detail << std::endl;
    }
    return all ? 0 : 1;
}
