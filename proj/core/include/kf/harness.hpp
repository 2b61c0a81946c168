#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kf/formula.hpp"
#include "kf/translations.hpp"

namespace kf {

/// Random formula generator settings. Weight keys: atom, and, or, imp,
/// not, forall, exists. `atom` is the weight of stopping early with a leaf.
struct GeneratorConfig {
    int max_depth = 5;
    std::vector<std::string> atoms{"P", "Q", "R"};
    bool include_bottom = true;
    std::map<std::string, double> connective_weights{
        {"atom", 2.0}, {"and", 2.0},    {"or", 2.0},    {"imp", 3.0},
        {"not", 1.0},  {"forall", 1.0}, {"exists", 1.0}};
    bool quantifier_free = true;
    std::uint64_t seed = 1;

    /// Throws ContractViolation when the config is unusable.
    void validate() const;
};

/// Deterministic in (config, index). Depth counts an atom as 1. In
/// first-order mode atoms become unary predicates over x, y or c().
Formula random_formula(const GeneratorConfig& config, std::uint64_t index);

struct SuiteFailure {
    std::uint64_t index;
    std::string variant;
    std::string formula;
    std::string expected;
    std::string actual;
    std::string replay;
};

struct SuiteReport {
    std::string suite;
    std::vector<std::string> variants;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    GeneratorConfig config;
    Mutation mutation = Mutation::none;
    std::vector<SuiteFailure> failures;  // sorted by index, then variant
    double elapsed_ms = 0;

    bool passed() const noexcept { return failures.empty(); }
    /// {suite, variants, samples, seed, config, failures, elapsed_ms}
    std::string to_json(int indent = -1) const;
};

struct SuiteOptions {
    std::size_t samples = 200;
    Mutation mutation = Mutation::none;
    /// 0 picks the hardware concurrency.
    unsigned workers = 0;
    /// Run a single sample (replay).
    std::optional<std::uint64_t> only_index;
};

/// soundness-derivability, characterisation, leivant-equivalence,
/// shoenfield-equivalence, k678-equivalence, k6-lemmas, pipeline,
/// prover-cross, round-trip.
std::span<const std::string_view> suite_ids() noexcept;

/// The variants a suite covers when none are selected.
std::vector<TranslationKind> default_variants(std::string_view suite);

/// Runs one suite. `variants` are K-family ids; suites that work on the
/// Ti side map Ki to Ti (leivant-equivalence) and ignore ids they do not
/// cover. Empty means default_variants(suite). Prover-based suites need
/// quantifier_free; the pipeline and round-trip suites generate
/// first-order formulas regardless.
/// Throws ContractViolation for an unknown suite or a bad config.
SuiteReport run_suite(std::string_view suite, const GeneratorConfig& config,
                      std::span<const TranslationKind> variants = {},
                      const SuiteOptions& options = {});

/// JSON array of several reports.
std::string reports_to_json(std::span<const SuiteReport> reports, int indent = -1);

}  // namespace kf
