#include "kf/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "kf/error.hpp"
#include "kf/harness.hpp"
#include "kf/kripke.hpp"
#include "kf/proof_io.hpp"
#include "kf/prover.hpp"
#include "kf/syntax.hpp"
#include "kf/transforms.hpp"
#include "kf/translations.hpp"

namespace kf {

namespace {

using nlohmann::json;

// Thrown for bad flag combinations discovered after parsing.
struct UsageError : Error {
    using Error::Error;
};

struct Options {
    std::string format = "ascii";

    std::string variant;
    bool inner = false;
    std::string witness;
    std::string formula;

    std::string logic;
    bool trace = false;
    std::size_t max_worlds = 4;

    std::string file;

    std::string suite = "all";
    std::string variants;
    std::size_t samples = 200;
    std::optional<std::uint64_t> seed;
    int depth = 5;
    std::string mutation;
    std::optional<std::uint64_t> index;
    unsigned workers = 0;
    std::string json_path;
};

Style style_of(const Options& o) { return o.format == "unicode" ? Style::unicode : Style::ascii; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::uint64_t default_seed() {
    const char* env = std::getenv("KF_SEED");
    if (!env || !*env) return 1;
    try {
        std::size_t used = 0;
        std::uint64_t seed = std::stoull(env, &used);
        if (used == std::string_view(env).size()) return seed;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("KF_SEED is not an unsigned integer: ") + env);
}

// "k1..k8", "k2,k5" or a mix of both.
std::vector<TranslationKind> parse_variants(const std::string& text) {
    std::vector<TranslationKind> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(parse_translation_kind(item));
            continue;
        }
        TranslationKind lo = parse_translation_kind(item.substr(0, dots));
        TranslationKind hi = parse_translation_kind(item.substr(dots + 2));
        if (is_kuroda_family(lo) != is_kuroda_family(hi) || static_cast<int>(lo) > static_cast<int>(hi)) {
            throw UsageError("bad variant range '" + item + "'");
        }
        for (int k = static_cast<int>(lo); k <= static_cast<int>(hi); ++k) {
            out.push_back(static_cast<TranslationKind>(k));
        }
    }
    return out;
}

int run_translate(const Options& o, std::ostream& out) {
    TranslationKind id = parse_translation_kind(o.variant);
    Formula input = parse(o.formula);
    if (!o.witness.empty() && id != TranslationKind::t5) {
        throw UsageError("--witness only applies to t5");
    }
    Formula result = Formula::bottom();
    if (o.inner) {
        if (!is_kuroda_family(id)) throw UsageError("--inner only applies to k and k1..k8");
        result = inner_translate(id, input);
    } else {
        TranslationId tid{id, std::nullopt};
        if (!o.witness.empty()) tid.witness = parse(o.witness);
        result = apply_translation(tid, input);
    }
    if (o.format == "json") {
        out << json{{"variant", std::string(to_string(id))},
                    {"inner", o.inner},
                    {"input", render(input)},
                    {"output", render(result)}}
                   .dump()
            << "\n";
    } else {
        out << render(result, style_of(o)) << "\n";
    }
    return 0;
}

int run_prove(const Options& o, std::ostream& out) {
    LogicId logic = parse_logic(o.logic);
    Formula f = parse(o.formula);
    ProofTrace t;
    if (o.trace) {
        t = decide_with_trace(logic, Sequent{{}, f});
    } else {
        t.decision = decide(logic, f);
    }
    if (o.format == "json") {
        json j{{"logic", std::string(to_string(logic))},
               {"formula", render(f)},
               {"decision", std::string(to_string(t.decision))}};
        if (o.trace) j["trace"] = t.lines;
        out << j.dump() << "\n";
    } else {
        out << to_string(t.decision) << "\n";
        for (const auto& line : t.lines) out << line << "\n";
    }
    return t.decision == Decision::provable ? 0 : 1;
}

std::string render_sequent(const Sequent& s, Style style) {
    std::string text;
    for (std::size_t i = 0; i < s.hypotheses.size(); ++i) {
        if (i) text += ", ";
        text += s.hypotheses[i].label + ": " + render(s.hypotheses[i].formula, style);
    }
    text += text.empty() ? "|- " : " |- ";
    return text + render(s.conclusion, style);
}

int run_check_proof(const Options& o, std::ostream& out) {
    ProofFile file = read_proof_file(read_file(o.file));
    CheckResult r = check_proof(file.proof, file.sequent, file.logic);
    if (o.format == "json") {
        json j{{"file", o.file},
               {"logic", std::string(to_string(file.logic))},
               {"sequent", render_sequent(file.sequent, Style::ascii)},
               {"accepted", r.is_accepted()}};
        if (!r) {
            j["rejection"] = {{"path", r.rejection().path_string()},
                              {"reason", std::string(to_string(r.rejection().reason))},
                              {"detail", r.rejection().detail}};
        }
        out << j.dump() << "\n";
    } else {
        out << (r ? "accepted" : "rejected: " + r.describe()) << "\n";
    }
    return r ? 0 : 1;
}

int run_countermodel(const Options& o, std::ostream& out, std::ostream& err) {
    LogicId logic = parse_logic(o.logic);
    Formula f = parse(o.formula);
    auto model = countermodel(logic, f, o.max_worlds);
    if (!model) {
        err << "no countermodel with at most " << o.max_worlds << " worlds\n";
        return 1;
    }
    out << model->to_json() << "\n";
    return 0;
}

int run_verify(const Options& o, std::ostream& out, std::ostream& err) {
    GeneratorConfig config;
    config.max_depth = o.depth;
    config.seed = o.seed ? *o.seed : default_seed();

    SuiteOptions options;
    options.samples = o.samples;
    options.workers = o.workers;
    options.only_index = o.index;
    if (!o.mutation.empty()) options.mutation = parse_mutation(o.mutation);

    std::vector<TranslationKind> variants;
    if (!o.variants.empty()) variants = parse_variants(o.variants);

    std::vector<std::string> suites;
    if (o.suite == "all") {
        for (auto id : suite_ids()) suites.emplace_back(id);
    } else {
        suites.push_back(o.suite);
    }

    std::vector<SuiteReport> reports;
    bool passed = true;
    for (const auto& id : suites) {
        reports.push_back(run_suite(id, config, variants, options));
        const SuiteReport& r = reports.back();
        passed = passed && r.passed();
        err << id << ": " << r.failures.size() << " failure(s) in " << r.samples << " sample(s), "
            << static_cast<long long>(r.elapsed_ms) << " ms\n";
    }
    std::string text = o.suite == "all" ? reports_to_json(reports, 2) : reports.front().to_json(2);
    if (!o.json_path.empty()) {
        std::ofstream file(o.json_path);
        if (!file) throw UsageError("cannot write '" + o.json_path + "'");
        file << text << "\n";
    }
    out << text << "\n";
    return passed ? 0 : 1;
}

int run_transform(const Options& o, std::ostream& out) {
    TranslationKind id = parse_translation_kind(o.variant);
    ProofFile file = read_proof_file(read_file(o.file));
    ProofFile result{translate_sequent(id, file.sequent), LogicId::ml, file.proof};
    if (id == TranslationKind::k) {
        result.proof = kuroda_transform(file.proof, file.sequent);
        result.logic = LogicId::il;
    } else if (is_leivant(id)) {
        result.proof = leivant_transform(id, file.proof, file.sequent);
    } else {
        result.proof = soundness_pipeline(id, file.proof, file.sequent);
    }
    out << write_proof_file(result);
    return 0;
}

}  // namespace

int cli_main(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Negative translations, proof checking and propositional decision procedures", "kf"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--format", o.format, "Output style")
        ->check(CLI::IsMember({"ascii", "unicode", "json"}));

    auto* translate_cmd = app.add_subcommand("translate", "Print the translation of a formula");
    translate_cmd->add_option("--variant", o.variant, "k, k1..k8, t1..t5")->required();
    translate_cmd->add_flag("--inner", o.inner, "Omit the outer double negation");
    translate_cmd->add_option("--witness", o.witness, "Closed witness formula for t5");
    translate_cmd->add_option("formula", o.formula)->required();

    auto* prove_cmd = app.add_subcommand("prove", "Decide a propositional formula");
    prove_cmd->add_option("--logic", o.logic, "ml, il or cl")->required();
    prove_cmd->add_flag("--trace", o.trace, "Print the sequent derivation when provable");
    prove_cmd->add_option("formula", o.formula)->required();

    auto* check_cmd = app.add_subcommand("check-proof", "Check a proof file");
    check_cmd->add_option("file", o.file)->required();

    auto* cm_cmd = app.add_subcommand("countermodel", "Search for a refuting Kripke model");
    cm_cmd->add_option("--logic", o.logic, "ml or il")->required();
    cm_cmd->add_option("--max-worlds", o.max_worlds, "Largest model size tried")
        ->check(CLI::Range(1, 7));
    cm_cmd->add_option("formula", o.formula)->required();

    auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
    verify_cmd->add_option("--suite", o.suite, "Suite id or 'all'");
    verify_cmd->add_option("--variants", o.variants, "e.g. k1..k8 or k2,k5");
    verify_cmd->add_option("--samples", o.samples, "Samples per suite");
    verify_cmd->add_option("--seed", o.seed, "Generator seed (default: KF_SEED or 1)");
    verify_cmd->add_option("--depth", o.depth, "Maximum formula depth")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--mutation", o.mutation, "Inject a broken translation clause");
    verify_cmd->add_option("--index", o.index, "Replay a single sample");
    verify_cmd->add_option("--workers", o.workers, "Worker threads (0 = all cores)");
    verify_cmd->add_option("--json", o.json_path, "Also write the report to this file");

    auto* transform_cmd = app.add_subcommand(
        "transform", "Transform a proof file: k (CL to IL), t1..t4 (IL to ML), k1..k4 (CL to ML)");
    transform_cmd->add_option("--variant", o.variant)->required();
    transform_cmd->add_option("file", o.file)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "kf: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        if (translate_cmd->parsed()) return run_translate(o, out);
        if (prove_cmd->parsed()) return run_prove(o, out);
        if (check_cmd->parsed()) return run_check_proof(o, out);
        if (cm_cmd->parsed()) return run_countermodel(o, out, err);
        if (verify_cmd->parsed()) return run_verify(o, out, err);
        if (transform_cmd->parsed()) return run_transform(o, out);
    } catch (const ParseError& e) {
        err << "kf: parse error at " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "kf: " << e.what() << "\n";
        return 2;
    }
    err << app.help();
    return 2;
}

}  // namespace kf
