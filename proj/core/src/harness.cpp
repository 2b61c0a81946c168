#include "kf/harness.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <random>
#include <thread>
#include <tuple>

#include "json.hpp"

#include "kf/corpus.hpp"
#include "kf/error.hpp"
#include "kf/kripke.hpp"
#include "kf/lemmas.hpp"
#include "kf/proof.hpp"
#include "kf/prover.hpp"
#include "kf/synthesis.hpp"
#include "kf/syntax.hpp"
#include "kf/transforms.hpp"

namespace kf {

namespace {

using nlohmann::json;

constexpr std::array<std::string_view, 9> kSuites = {
    "soundness-derivability", "characterisation", "leivant-equivalence",
    "shoenfield-equivalence", "k678-equivalence",  "k6-lemmas",
    "pipeline",               "prover-cross",      "round-trip"};

constexpr std::array<std::string_view, 7> kWeightKeys = {"atom", "and",    "or",    "imp",
                                                         "not",  "forall", "exists"};

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

class Generator {
public:
    Generator(const GeneratorConfig& config, std::uint64_t index)
        : config_(config), rng_(splitmix64(config.seed ^ splitmix64(index))) {
        std::vector<double> w;
        for (auto key : kWeightKeys) {
            auto it = config.connective_weights.find(std::string(key));
            double weight = it == config.connective_weights.end() ? 0.0 : it->second;
            if (config.quantifier_free && (key == "forall" || key == "exists")) weight = 0.0;
            w.push_back(weight);
        }
        pick_ = std::discrete_distribution<int>(w.begin(), w.end());
    }

    Formula formula(int depth) {
        if (depth <= 1) return leaf();
        switch (pick_(rng_)) {
            case 1: return Formula::conj(formula(depth - 1), formula(depth - 1));
            case 2: return Formula::disj(formula(depth - 1), formula(depth - 1));
            case 3: return Formula::impl(formula(depth - 1), formula(depth - 1));
            case 4: return Formula::neg(formula(depth - 1));
            case 5: return Formula::forall(variable(), formula(depth - 1));
            case 6: return Formula::exists(variable(), formula(depth - 1));
            default: return leaf();
        }
    }

private:
    std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

    std::string variable() { return below(2) == 0 ? "x" : "y"; }

    Formula leaf() {
        std::size_t n = config_.atoms.size() + (config_.include_bottom ? 1 : 0);
        std::size_t k = below(n);
        if (k == config_.atoms.size()) return Formula::bottom();
        if (config_.quantifier_free) return Formula::atom(config_.atoms[k]);
        std::size_t t = below(3);
        Term term = t == 2 ? Term::application("c", {}) : Term::variable(t == 0 ? "x" : "y");
        return Formula::atom(config_.atoms[k], {term});
    }

    const GeneratorConfig& config_;
    std::mt19937_64 rng_;
    std::discrete_distribution<int> pick_;
};

bool is_k_variant(TranslationKind v) {
    int i = variant_index(v);
    return is_kuroda_family(v) && i >= 1;
}

struct Run {
    std::string suite;
    GeneratorConfig config;
    std::vector<TranslationKind> variants;
    Mutation mutation;
};

class Sample {
public:
    Sample(const Run& run, std::uint64_t index) : run_(run), index_(index) {}

    std::vector<SuiteFailure> failures;

    void fail(std::string variant, const Formula& f, std::string expected, std::string actual) {
        fail(std::move(variant), render(f), std::move(expected), std::move(actual));
    }

    void fail(std::string variant, std::string formula, std::string expected, std::string actual) {
        std::string replay = "kf verify --suite " + run_.suite + " --seed " +
                             std::to_string(run_.config.seed) + " --depth " +
                             std::to_string(run_.config.max_depth) + " --index " +
                             std::to_string(index_);
        bool translation = true;
        try {
            parse_translation_kind(variant);
        } catch (const ContractViolation&) {
            translation = false;
        }
        if (translation) replay += " --variants " + variant;
        if (run_.mutation != Mutation::none) {
            replay += " --mutation " + std::string(to_string(run_.mutation));
        }
        failures.push_back({index_, std::move(variant), std::move(formula), std::move(expected),
                            std::move(actual), std::move(replay)});
    }

    Formula formula(std::uint64_t offset = 0) const {
        return random_formula(run_.config, index_ + offset);
    }

    // First-order formula for the suites that do not need the prover.
    Formula first_order(std::uint64_t i) const {
        GeneratorConfig c = run_.config;
        c.quantifier_free = false;
        if (c.connective_weights["forall"] <= 0 && c.connective_weights["exists"] <= 0) {
            c.connective_weights["forall"] = 1.0;
            c.connective_weights["exists"] = 1.0;
        }
        return random_formula(c, i);
    }

    const Run& run() const { return run_; }
    std::uint64_t index() const { return index_; }
    Mutation m() const { return run_.mutation; }

private:
    const Run& run_;
    std::uint64_t index_;
};

std::string str(Decision d) { return std::string(to_string(d)); }

void check_ml(Sample& s, const std::string& variant, const Formula& statement) {
    Decision d = decide(LogicId::ml, statement);
    if (d != Decision::provable) s.fail(variant, statement, "provable", str(d));
}

void check_proof_ml(Sample& s, const std::string& variant, const ProofTerm& p, const Sequent& sq) {
    CheckResult r = check_proof(p, sq, LogicId::ml);
    if (!r) {
        s.fail(variant, sq.hypotheses.empty() ? render(sq.conclusion) : "sequent ending in " + render(sq.conclusion),
               "accepted", r.describe());
    }
}

void soundness(Sample& s) {
    Formula a = s.formula();
    std::string expected = str(decide(LogicId::cl, a));
    for (auto v : s.run().variants) {
        if (!is_k_variant(v)) continue;
        std::string actual = str(decide(LogicId::ml, translate(v, a, s.m())));
        if (actual != expected) s.fail(std::string(to_string(v)), a, "ml " + expected, "ml " + actual);
    }
}

void characterisation(Sample& s) {
    Formula a = s.formula();
    for (auto v : s.run().variants) {
        if (!is_kuroda_family(v)) continue;
        if (!classical_valid(Formula::iff(a, translate(v, a, s.m())))) {
            s.fail(std::string(to_string(v)), a, "valid", "invalid");
        }
    }
}

// Ki -> Ti for i <= 4; Ti stays.
std::optional<TranslationKind> leivant_of(TranslationKind v) {
    if (is_leivant(v)) return v;
    int i = variant_index(v);
    if (is_kuroda_family(v) && i >= 1 && i <= 4) return leivant_variant(i);
    return std::nullopt;
}

Formula leivant_statement(TranslationKind t, const Formula& a, Mutation m) {
    TranslationKind k = kuroda_variant(variant_index(t));
    return Formula::iff(leivant_translate(t, translate(TranslationKind::k, a, m), m),
                        translate(k, a, m));
}

Formula shoenfield_statement(const Formula& a, const Formula& witness, Mutation m) {
    return Formula::iff(translate(TranslationKind::k, shoenfield_translate(a, witness, m), m),
                        translate(TranslationKind::k5, a, m));
}

Formula k678_statement(TranslationKind j, const Formula& a, Mutation m) {
    return Formula::iff(inner_translate(TranslationKind::k6, a, m), inner_translate(j, a, m));
}

void leivant_equivalence(Sample& s) {
    Formula a = s.formula();
    for (auto v : s.run().variants) {
        auto t = leivant_of(v);
        if (!t) continue;
        check_ml(s, std::string(to_string(*t)), leivant_statement(*t, a, s.m()));
    }
}

bool selected(const Sample& s, TranslationKind v) {
    const auto& vs = s.run().variants;
    return std::find(vs.begin(), vs.end(), v) != vs.end();
}

void shoenfield_equivalence(Sample& s) {
    if (!selected(s, TranslationKind::k5) && !selected(s, TranslationKind::t5)) return;
    Formula a = s.formula();
    check_ml(s, "k5", shoenfield_statement(a, default_witness(a), s.m()));
}

void k678_equivalence(Sample& s) {
    Formula a = s.formula();
    for (auto j : {TranslationKind::k7, TranslationKind::k8}) {
        if (selected(s, j)) check_ml(s, std::string(to_string(j)), k678_statement(j, a, s.m()));
    }
}

void k6_lemmas(Sample& s) {
    Formula d = random_formula(s.run().config, 2 * s.index());
    Formula e = random_formula(s.run().config, 2 * s.index() + 1);
    auto nn = [](const Formula& f) { return Formula::neg(Formula::neg(f)); };
    check_ml(s, "dn-intro", Formula::impl(d, nn(d)));
    Formula dne = Formula::impl(d, Formula::neg(e));
    check_ml(s, "dn-stable-neg-impl", Formula::impl(nn(dne), dne));
    check_ml(s, "disj-dn", Formula::impl(Formula::disj(d, nn(e)), nn(Formula::disj(d, e))));
}

void pipeline(Sample& s) {
    Formula a = s.first_order(s.index());
    Mutation m = s.m();
    const auto& corpus = proof_corpus();
    for (auto v : s.run().variants) {
        if (!is_k_variant(v)) continue;
        std::string name(to_string(v));
        int i = variant_index(v);
        if (i <= 4) {
            TranslationKind t = leivant_variant(i);
            check_proof_ml(s, name, synthesize_equiv_leivant(t, a),
                           Sequent{{}, leivant_statement(t, a, m)});
            check_proof_ml(s, std::string(to_string(t)), synthesize_absorption(t, a),
                           Sequent{{}, Formula::impl(Formula::bottom(), leivant_translate(t, a, m))});
            if (s.index() < corpus.size()) {
                const CorpusEntry& entry = corpus[s.index()];
                const Sequent& sq = entry.file.sequent;
                ProofTerm p = soundness_pipeline(v, entry.file.proof, sq);
                Sequent target =
                    map_sequent(sq, [&](const Formula& f) { return translate(v, f, m); });
                CheckResult r = check_proof(p, target, LogicId::ml);
                if (!r) s.fail(name, "corpus " + entry.name, "accepted", r.describe());
            }
        } else if (i == 5) {
            Formula w = default_witness(a);
            check_proof_ml(s, name, synthesize_equiv_shoenfield(a, w),
                           Sequent{{}, shoenfield_statement(a, w, m)});
        } else if (i == 6) {
            Formula d = s.first_order(2 * s.index());
            Formula e = s.first_order(2 * s.index() + 1);
            for (const auto& lemma : lemmas::library(d, e)) {
                CheckResult r = check_proof(lemma.proof, Sequent{{}, lemma.statement}, lemma.logic);
                if (!r) s.fail(name + ":" + lemma.name, lemma.statement, "accepted", r.describe());
            }
        } else {
            check_proof_ml(s, name, synthesize_equiv_k678(v, a), Sequent{{}, k678_statement(v, a, m)});
        }
    }
}

void prover_cross(Sample& s) {
    Formula a = s.formula();
    Decision ml = decide(LogicId::ml, a);
    Decision il = decide(LogicId::il, a);
    Decision cl = decide(LogicId::cl, a);

    std::set<std::string> used = a.predicates();
    Formula p0 = Formula::atom(fresh_name("p0", used));
    Decision reduced = decide(LogicId::il, a.replace_bottom(p0));
    if (reduced != ml) s.fail("ml-via-il", a, "il " + str(ml), "il " + str(reduced));

    Decision glivenko = decide(LogicId::il, Formula::neg(Formula::neg(a)));
    if (glivenko != cl) s.fail("glivenko", a, "il " + str(cl), "il " + str(glivenko));

    if (cl != (classical_valid(a) ? Decision::provable : Decision::unprovable)) {
        s.fail("cl-truth-table", a, str(cl), "truth table disagrees");
    }
    if ((ml == Decision::provable && il != Decision::provable) ||
        (il == Decision::provable && cl != Decision::provable)) {
        s.fail("monotonicity", a, "ml <= il <= cl",
               "ml " + str(ml) + ", il " + str(il) + ", cl " + str(cl));
    }

    for (auto [logic, d] : {std::pair{LogicId::ml, ml}, std::pair{LogicId::il, il}}) {
        std::string name = "countermodel-" + std::string(to_string(logic));
        auto model = countermodel(logic, a, 4);
        if (d == Decision::provable && model) {
            s.fail(name, a, "no countermodel", model->to_json());
        } else if (model) {
            model->validate();
            if (eval_model(*model, 0, a)) s.fail(name, a, "refuted at root", "forced at root");
        }
    }
}

void round_trip(Sample& s) {
    Formula a = s.first_order(s.index());
    for (Style style : {Style::ascii, Style::unicode}) {
        std::string text = render(a, style);
        Formula back = parse(text);
        std::string again = render(back, style);
        if (!back.identical(a) || again != text) {
            s.fail(style == Style::ascii ? "ascii" : "unicode", text, text, again);
        }
    }
}

using SuiteFn = void (*)(Sample&);

SuiteFn suite_fn(std::string_view id) {
    if (id == "soundness-derivability") return soundness;
    if (id == "characterisation") return characterisation;
    if (id == "leivant-equivalence") return leivant_equivalence;
    if (id == "shoenfield-equivalence") return shoenfield_equivalence;
    if (id == "k678-equivalence") return k678_equivalence;
    if (id == "k6-lemmas") return k6_lemmas;
    if (id == "pipeline") return pipeline;
    if (id == "prover-cross") return prover_cross;
    if (id == "round-trip") return round_trip;
    throw ContractViolation("unknown suite '" + std::string(id) + "'");
}

bool prover_based(std::string_view id) {
    return id != "pipeline" && id != "round-trip";
}

std::vector<std::string> covered_names(std::string_view suite,
                                       const std::vector<TranslationKind>& variants) {
    std::vector<std::string> out;
    auto push = [&](TranslationKind v) {
        std::string name(to_string(v));
        if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
    };
    for (auto v : variants) {
        if (suite == "leivant-equivalence") {
            if (auto t = leivant_of(v)) push(*t);
        } else if (suite == "shoenfield-equivalence") {
            if (v == TranslationKind::k5 || v == TranslationKind::t5) push(TranslationKind::k5);
        } else if (suite == "k678-equivalence") {
            if (v == TranslationKind::k7 || v == TranslationKind::k8) push(v);
        } else if (suite == "characterisation") {
            if (is_kuroda_family(v)) push(v);
        } else if (suite == "soundness-derivability" || suite == "pipeline") {
            if (is_k_variant(v)) push(v);
        } else if (suite == "k6-lemmas") {
            if (v == TranslationKind::k6) push(v);
        }
    }
    return out;
}

json config_json(const GeneratorConfig& c) {
    return json{{"max_depth", c.max_depth},
                {"atoms", c.atoms},
                {"include_bottom", c.include_bottom},
                {"connective_weights", c.connective_weights},
                {"quantifier_free", c.quantifier_free},
                {"seed", c.seed}};
}

json report_json(const SuiteReport& r) {
    json failures = json::array();
    for (const auto& f : r.failures) {
        failures.push_back({{"index", f.index},
                            {"variant", f.variant},
                            {"formula", f.formula},
                            {"expected", f.expected},
                            {"actual", f.actual},
                            {"replay", f.replay}});
    }
    json j{{"suite", r.suite},
           {"variants", r.variants},
           {"samples", r.samples},
           {"seed", r.seed},
           {"config", config_json(r.config)},
           {"failures", failures},
           {"elapsed_ms", r.elapsed_ms}};
    if (r.mutation != Mutation::none) j["mutation"] = std::string(to_string(r.mutation));
    return j;
}

}  // namespace

void GeneratorConfig::validate() const {
    if (max_depth < 1) throw ContractViolation("max_depth must be at least 1");
    if (atoms.empty() && !include_bottom) throw ContractViolation("no atoms to generate");
    for (const auto& a : atoms) {
        if (!is_identifier(a)) throw ContractViolation("atom '" + a + "' is not an identifier");
    }
    double total = 0;
    for (const auto& [key, weight] : connective_weights) {
        if (std::find(kWeightKeys.begin(), kWeightKeys.end(), key) == kWeightKeys.end()) {
            throw ContractViolation("unknown connective weight '" + key + "'");
        }
        if (!(weight >= 0)) throw ContractViolation("weight of '" + key + "' is negative");
        total += weight;
    }
    if (total <= 0) throw ContractViolation("connective weights are all zero");
}

Formula random_formula(const GeneratorConfig& config, std::uint64_t index) {
    config.validate();
    return Generator(config, index).formula(config.max_depth);
}

std::string SuiteReport::to_json(int indent) const { return report_json(*this).dump(indent); }

std::string reports_to_json(std::span<const SuiteReport> reports, int indent) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(report_json(r));
    return arr.dump(indent);
}

std::span<const std::string_view> suite_ids() noexcept { return kSuites; }

std::vector<TranslationKind> default_variants(std::string_view suite) {
    using K = TranslationKind;
    if (suite == "soundness-derivability" || suite == "pipeline") {
        return {K::k1, K::k2, K::k3, K::k4, K::k5, K::k6, K::k7, K::k8};
    }
    if (suite == "characterisation") return {K::k, K::k1, K::k2, K::k3, K::k4, K::k5, K::k6, K::k7, K::k8};
    if (suite == "leivant-equivalence") return {K::t1, K::t2, K::t3, K::t4};
    if (suite == "shoenfield-equivalence") return {K::k5};
    if (suite == "k678-equivalence") return {K::k7, K::k8};
    if (suite == "k6-lemmas") return {K::k6};
    suite_fn(suite);  // rejects unknown ids
    return {};
}

SuiteReport run_suite(std::string_view suite, const GeneratorConfig& config,
                      std::span<const TranslationKind> variants, const SuiteOptions& options) {
    SuiteFn fn = suite_fn(suite);
    config.validate();
    if (prover_based(suite) && !config.quantifier_free) {
        throw ContractViolation("suite '" + std::string(suite) + "' needs quantifier-free formulas");
    }

    Run run{std::string(suite), config,
            variants.empty() ? default_variants(suite)
                             : std::vector<TranslationKind>(variants.begin(), variants.end()),
            options.mutation};

    SuiteReport report;
    report.suite = run.suite;
    report.variants = covered_names(suite, run.variants);
    report.samples = options.only_index ? 1 : options.samples;
    report.seed = config.seed;
    report.config = config;
    report.mutation = options.mutation;

    auto start = std::chrono::steady_clock::now();
    std::vector<std::uint64_t> indices;
    if (options.only_index) {
        indices.push_back(*options.only_index);
    } else {
        for (std::uint64_t i = 0; i < options.samples; ++i) indices.push_back(i);
    }

    std::atomic<std::size_t> next{0};
    std::mutex merge;
    auto worker = [&] {
        while (true) {
            std::size_t k = next.fetch_add(1);
            if (k >= indices.size()) return;
            Sample sample(run, indices[k]);
            try {
                fn(sample);
            } catch (const std::exception& e) {
                sample.fail("error", render(random_formula(config, indices[k])), "no error", e.what());
            }
            std::lock_guard lock(merge);
            for (auto& f : sample.failures) report.failures.push_back(std::move(f));
        }
    };
    unsigned workers = options.workers ? options.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, indices.size()));
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    }
    std::stable_sort(report.failures.begin(), report.failures.end(),
                     [](const SuiteFailure& a, const SuiteFailure& b) {
                         return std::tie(a.index, a.variant) < std::tie(b.index, b.variant);
                     });
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace kf
