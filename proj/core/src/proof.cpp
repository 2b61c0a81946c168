#include "kf/proof.hpp"

#include <array>

#include "kf/error.hpp"

namespace kf {

struct ProofTerm::Node {
    Rule rule = Rule::hyp;
    std::string label;
    std::string label_r;
    std::string variable;
    std::optional<Formula> formula;
    std::optional<Term> term;
    std::vector<ProofTerm> children;
    std::size_t size = 1;
};

namespace {

ProofTerm::Node blank(Rule rule) {
    ProofTerm::Node n;
    n.rule = rule;
    return n;
}

std::shared_ptr<const ProofTerm::Node> finish(ProofTerm::Node n) {
    for (const auto& c : n.children) n.size += c.size();
    return std::make_shared<const ProofTerm::Node>(std::move(n));
}

}  // namespace

std::string_view to_string(Rule rule) noexcept {
    static constexpr std::array<std::string_view, 15> names = {
        "hyp",  "lam",  "app", "pair", "fst",    "snd", "inl", "inr",
        "case", "gen", "inst", "wit", "unpack", "efq", "dne"};
    return names[static_cast<std::size_t>(rule)];
}

ProofTerm ProofTerm::hyp(std::string label) {
    Node n = blank(Rule::hyp);
    n.label = std::move(label);
    return ProofTerm(finish(std::move(n)));
}

ProofTerm ProofTerm::abst(std::string label, Formula hypothesis, ProofTerm body) {
    Node n = blank(Rule::abst);
    n.label = std::move(label);
    n.formula = std::move(hypothesis);
    n.children = {std::move(body)};
    return ProofTerm(finish(std::move(n)));
}

ProofTerm ProofTerm::apply(ProofTerm fn, ProofTerm arg) {
    Node n = blank(Rule::apply);
    n.children = {std::move(fn), std::move(arg)};
    return ProofTerm(finish(std::move(n)));
}

ProofTerm ProofTerm::pair(ProofTerm left, ProofTerm right) {
    Node n = blank(Rule::pair);
    n.children = {std::move(left), std::move(right)};
    return ProofTerm(finish(std::move(n)));
}

ProofTerm ProofTerm::proj_l(ProofTerm t) {
    Node n = blank(Rule::proj_l);
    n.children = {std::move(t)};
    return ProofTerm(finish(std::move(n)));
}

ProofTerm ProofTerm::proj_r(ProofTerm t) {
    Node n = blank(Rule::proj_r);
    n.children = {std::move(t)};
    return ProofTerm(finish(std::move(n)));
}

ProofTerm ProofTerm::inj_l(ProofTerm t, Formula other) {
    Node n = blank(Rule::inj_l);
    n.formula = std::move(other);
    n.children = {std::move(t)};
    return ProofTerm(finish(std::move(n)));
}

ProofTerm ProofTerm::inj_r(Formula other, ProofTerm t) {
    Node n = blank(Rule::inj_r);
    n.formula = std::move(other);
    n.children = {std::move(t)};
    return ProofTerm(finish(std::move(n)));
}

ProofTerm ProofTerm::cases(ProofTerm scrutinee, std::string label_l, ProofTerm body_l,
                           std::string label_r, ProofTerm body_r) {
    Node n = blank(Rule::cases);
    n.label = std::move(label_l);
    n.label_r = std::move(label_r);
    n.children = {std::move(scrutinee), std::move(body_l), std::move(body_r)};
    return ProofTerm(finish(std::move(n)));
}

ProofTerm ProofTerm::gen(std::string variable, ProofTerm body) {
    Node n = blank(Rule::gen);
    n.variable = std::move(variable);
    n.children = {std::move(body)};
    return ProofTerm(finish(std::move(n)));
}

ProofTerm ProofTerm::inst(ProofTerm t, Term term) {
    Node n = blank(Rule::inst);
    n.term = std::move(term);
    n.children = {std::move(t)};
    return ProofTerm(finish(std::move(n)));
}

ProofTerm ProofTerm::witness(Term term, ProofTerm t, Formula target) {
    Node n = blank(Rule::witness);
    n.term = std::move(term);
    n.formula = std::move(target);
    n.children = {std::move(t)};
    return ProofTerm(finish(std::move(n)));
}

ProofTerm ProofTerm::unpack(ProofTerm scrutinee, std::string variable, std::string label,
                            ProofTerm body) {
    Node n = blank(Rule::unpack);
    n.variable = std::move(variable);
    n.label = std::move(label);
    n.children = {std::move(scrutinee), std::move(body)};
    return ProofTerm(finish(std::move(n)));
}

ProofTerm ProofTerm::ex_falso(ProofTerm t, Formula target) {
    Node n = blank(Rule::ex_falso);
    n.formula = std::move(target);
    n.children = {std::move(t)};
    return ProofTerm(finish(std::move(n)));
}

ProofTerm ProofTerm::dne(ProofTerm t) {
    Node n = blank(Rule::dne);
    n.children = {std::move(t)};
    return ProofTerm(finish(std::move(n)));
}

Rule ProofTerm::rule() const noexcept { return node_->rule; }
const std::string& ProofTerm::label() const noexcept { return node_->label; }
const std::string& ProofTerm::label_r() const noexcept { return node_->label_r; }
const std::string& ProofTerm::variable() const noexcept { return node_->variable; }

const Formula& ProofTerm::formula() const {
    if (!node_->formula) throw ContractViolation("proof node has no formula annotation");
    return *node_->formula;
}

const Term& ProofTerm::term() const {
    if (!node_->term) throw ContractViolation("proof node has no term annotation");
    return *node_->term;
}

std::span<const ProofTerm> ProofTerm::children() const noexcept { return node_->children; }
std::size_t ProofTerm::size() const noexcept { return node_->size; }

bool ProofTerm::uses_rule(Rule rule) const noexcept {
    if (node_->rule == rule) return true;
    for (const auto& c : node_->children) {
        if (c.uses_rule(rule)) return true;
    }
    return false;
}

namespace {

void collect_free(const ProofTerm& t, std::vector<std::string>& bound, std::set<std::string>& out) {
    auto is_bound = [&](const std::string& l) {
        for (const auto& b : bound) {
            if (b == l) return true;
        }
        return false;
    };
    switch (t.rule()) {
        case Rule::hyp:
            if (!is_bound(t.label())) out.insert(t.label());
            return;
        case Rule::abst:
            bound.push_back(t.label());
            collect_free(t.child(0), bound, out);
            bound.pop_back();
            return;
        case Rule::cases:
            collect_free(t.child(0), bound, out);
            bound.push_back(t.label());
            collect_free(t.child(1), bound, out);
            bound.back() = t.label_r();
            collect_free(t.child(2), bound, out);
            bound.pop_back();
            return;
        case Rule::unpack:
            collect_free(t.child(0), bound, out);
            bound.push_back(t.label());
            collect_free(t.child(1), bound, out);
            bound.pop_back();
            return;
        default:
            for (const auto& c : t.children()) collect_free(c, bound, out);
    }
}

void collect_all(const ProofTerm& t, std::set<std::string>& out) {
    switch (t.rule()) {
        case Rule::hyp:
        case Rule::abst:
        case Rule::unpack:
            out.insert(t.label());
            break;
        case Rule::cases:
            out.insert(t.label());
            out.insert(t.label_r());
            break;
        default:
            break;
    }
    for (const auto& c : t.children()) collect_all(c, out);
}

}  // namespace

std::set<std::string> ProofTerm::free_labels() const {
    std::vector<std::string> bound;
    std::set<std::string> out;
    collect_free(*this, bound, out);
    return out;
}

std::set<std::string> ProofTerm::all_labels() const {
    std::set<std::string> out;
    collect_all(*this, out);
    return out;
}

}  // namespace kf
