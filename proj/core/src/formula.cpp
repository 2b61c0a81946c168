#include "kf/formula.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "kf/error.hpp"

namespace kf {

// ---------------------------------------------------------------- Term

struct Term::Node {
    Kind kind;
    std::string name;
    std::vector<Term> args;
};

Term Term::variable(std::string name) {
    return Term(std::make_shared<const Node>(Node{Kind::variable, std::move(name), {}}));
}

Term Term::application(std::string symbol, std::vector<Term> arguments) {
    return Term(std::make_shared<const Node>(
        Node{Kind::application, std::move(symbol), std::move(arguments)}));
}

Term::Kind Term::kind() const noexcept { return node_->kind; }
const std::string& Term::name() const noexcept { return node_->name; }
std::span<const Term> Term::arguments() const noexcept { return node_->args; }

void Term::collect_variables(std::set<std::string>& out) const {
    if (is_variable()) {
        out.insert(name());
        return;
    }
    for (const auto& a : node_->args) a.collect_variables(out);
}

std::set<std::string> Term::variables() const {
    std::set<std::string> out;
    collect_variables(out);
    return out;
}

bool Term::mentions(std::string_view variable) const {
    if (is_variable()) return name() == variable;
    return std::any_of(node_->args.begin(), node_->args.end(),
                       [&](const Term& a) { return a.mentions(variable); });
}

Term Term::substitute(std::string_view variable, const Term& replacement) const {
    if (is_variable()) return name() == variable ? replacement : *this;
    if (!mentions(variable)) return *this;
    std::vector<Term> args;
    args.reserve(node_->args.size());
    for (const auto& a : node_->args) args.push_back(a.substitute(variable, replacement));
    return application(name(), std::move(args));
}

bool operator==(const Term& a, const Term& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind() || a.name() != b.name()) return false;
    auto aa = a.arguments();
    auto ba = b.arguments();
    return std::equal(aa.begin(), aa.end(), ba.begin(), ba.end());
}

// ------------------------------------------------------------- Formula

struct Formula::Node {
    Connective kind;
    std::string name;  // predicate symbol or bound variable
    std::vector<Term> args;
    std::shared_ptr<const Node> lhs;  // also the quantifier body
    std::shared_ptr<const Node> rhs;
    std::size_t size = 1;
    std::size_t depth = 1;
    bool qfree = true;
    std::size_t hash = 0;
    std::vector<std::string> free;  // sorted
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t hash_term(const Term& t) {
    std::size_t h = std::hash<std::string>{}(t.name()) + static_cast<std::size_t>(t.kind());
    for (const auto& a : t.arguments()) h = mix(h, hash_term(a));
    return h;
}

std::vector<std::string> sorted_union(const std::vector<std::string>& a,
                                      const std::vector<std::string>& b) {
    std::vector<std::string> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

namespace {
using NodePtr = std::shared_ptr<const Formula::Node>;
}

Formula Formula::bottom() {
    static const Formula b = [] {
        auto n = std::make_shared<Node>();
        n->kind = Connective::bottom;
        n->hash = 0x5bd1e995;
        return Formula(std::move(n));
    }();
    return b;
}

Formula Formula::atom(std::string predicate, std::vector<Term> arguments) {
    auto n = std::make_shared<Node>();
    n->kind = Connective::atom;
    n->name = std::move(predicate);
    n->args = std::move(arguments);
    std::size_t h = mix(1, std::hash<std::string>{}(n->name));
    std::set<std::string> vars;
    for (const auto& a : n->args) {
        h = mix(h, hash_term(a));
        a.collect_variables(vars);
    }
    n->hash = h;
    n->free.assign(vars.begin(), vars.end());
    return Formula(std::move(n));
}

namespace {

Formula::Node make_binary(Connective kind, const Formula& l, const Formula& r,
                          const NodePtr& lp, const NodePtr& rp) {
    Formula::Node n;
    n.kind = kind;
    n.lhs = lp;
    n.rhs = rp;
    n.size = 1 + l.size() + r.size();
    n.depth = 1 + std::max(l.depth(), r.depth());
    n.qfree = l.quantifier_free() && r.quantifier_free();
    n.hash = mix(mix(static_cast<std::size_t>(kind) * 31, l.hash()), r.hash());
    n.free = sorted_union(lp->free, rp->free);
    return n;
}

}  // namespace

Formula Formula::conj(Formula left, Formula right) {
    return Formula(std::make_shared<const Node>(
        make_binary(Connective::conj, left, right, left.node_, right.node_)));
}

Formula Formula::disj(Formula left, Formula right) {
    return Formula(std::make_shared<const Node>(
        make_binary(Connective::disj, left, right, left.node_, right.node_)));
}

Formula Formula::impl(Formula left, Formula right) {
    return Formula(std::make_shared<const Node>(
        make_binary(Connective::impl, left, right, left.node_, right.node_)));
}

Formula Formula::neg(Formula operand) { return impl(std::move(operand), bottom()); }

Formula Formula::iff(const Formula& a, const Formula& b) {
    return conj(impl(a, b), impl(b, a));
}

namespace {

Formula::Node make_quantifier(Connective kind, std::string variable, const Formula& body,
                              const NodePtr& bp) {
    Formula::Node n;
    n.kind = kind;
    n.name = std::move(variable);
    n.lhs = bp;
    n.size = 1 + body.size();
    n.depth = 1 + body.depth();
    n.qfree = false;
    n.hash = mix(mix(static_cast<std::size_t>(kind) * 31, std::hash<std::string>{}(n.name)),
                 body.hash());
    n.free = bp->free;
    auto it = std::lower_bound(n.free.begin(), n.free.end(), n.name);
    if (it != n.free.end() && *it == n.name) n.free.erase(it);
    return n;
}

}  // namespace

Formula Formula::forall(std::string variable, Formula body) {
    return Formula(std::make_shared<const Node>(
        make_quantifier(Connective::forall, std::move(variable), body, body.node_)));
}

Formula Formula::exists(std::string variable, Formula body) {
    return Formula(std::make_shared<const Node>(
        make_quantifier(Connective::exists, std::move(variable), body, body.node_)));
}

Connective Formula::kind() const noexcept { return node_->kind; }

bool Formula::is_negation() const noexcept {
    return node_->kind == Connective::impl && node_->rhs->kind == Connective::bottom;
}

const std::string& Formula::predicate() const noexcept { return node_->name; }
std::span<const Term> Formula::arguments() const noexcept { return node_->args; }
Formula Formula::left() const { return Formula(node_->lhs); }
Formula Formula::right() const { return Formula(node_->rhs); }
const std::string& Formula::variable() const noexcept { return node_->name; }
Formula Formula::body() const { return Formula(node_->lhs); }
std::size_t Formula::size() const noexcept { return node_->size; }
std::size_t Formula::depth() const noexcept { return node_->depth; }
bool Formula::quantifier_free() const noexcept { return node_->qfree; }
std::size_t Formula::hash() const noexcept { return node_->hash; }

std::set<std::string> Formula::free_variables() const {
    return {node_->free.begin(), node_->free.end()};
}

bool Formula::has_free(std::string_view variable) const {
    return std::binary_search(node_->free.begin(), node_->free.end(), variable,
                              [](const auto& a, const auto& b) {
                                  return std::string_view(a) < std::string_view(b);
                              });
}

std::set<std::string> Formula::all_variables() const {
    std::set<std::string> out;
    std::function<void(const Formula&)> walk = [&](const Formula& f) {
        switch (f.kind()) {
            case Connective::bottom: break;
            case Connective::atom:
                for (const auto& a : f.arguments()) a.collect_variables(out);
                break;
            case Connective::conj:
            case Connective::disj:
            case Connective::impl:
                walk(f.left());
                walk(f.right());
                break;
            case Connective::forall:
            case Connective::exists:
                out.insert(f.variable());
                walk(f.body());
                break;
        }
    };
    walk(*this);
    return out;
}

std::set<std::string> Formula::predicates() const {
    std::set<std::string> out;
    std::function<void(const Formula&)> walk = [&](const Formula& f) {
        if (f.kind() == Connective::atom) {
            out.insert(f.predicate());
        } else if (f.is_binary()) {
            walk(f.left());
            walk(f.right());
        } else if (f.is_quantifier()) {
            walk(f.body());
        }
    };
    walk(*this);
    return out;
}

Formula Formula::substitute(std::string_view variable, const Term& replacement) const {
    if (!has_free(variable)) return *this;
    switch (kind()) {
        case Connective::bottom:
            return *this;
        case Connective::atom: {
            std::vector<Term> args;
            args.reserve(node_->args.size());
            for (const auto& a : node_->args) args.push_back(a.substitute(variable, replacement));
            return atom(predicate(), std::move(args));
        }
        case Connective::conj:
            return conj(left().substitute(variable, replacement),
                        right().substitute(variable, replacement));
        case Connective::disj:
            return disj(left().substitute(variable, replacement),
                        right().substitute(variable, replacement));
        case Connective::impl:
            return impl(left().substitute(variable, replacement),
                        right().substitute(variable, replacement));
        case Connective::forall:
        case Connective::exists: {
            // variable is free here, so the binder differs from it
            std::string bound = this->variable();
            Formula b = body();
            if (replacement.mentions(bound)) {
                std::set<std::string> avoid = replacement.variables();
                auto inner = b.all_variables();
                avoid.insert(inner.begin(), inner.end());
                avoid.insert(std::string(variable));
                std::string renamed = fresh_name(bound, avoid);
                b = b.substitute(bound, Term::variable(renamed));
                bound = renamed;
            }
            b = b.substitute(variable, replacement);
            return kind() == Connective::forall ? forall(bound, b) : exists(bound, b);
        }
    }
    return *this;
}

Formula Formula::replace_bottom(const Formula& replacement) const {
    switch (kind()) {
        case Connective::bottom: return replacement;
        case Connective::atom: return *this;
        case Connective::conj:
            return conj(left().replace_bottom(replacement), right().replace_bottom(replacement));
        case Connective::disj:
            return disj(left().replace_bottom(replacement), right().replace_bottom(replacement));
        case Connective::impl:
            return impl(left().replace_bottom(replacement), right().replace_bottom(replacement));
        case Connective::forall: return forall(variable(), body().replace_bottom(replacement));
        case Connective::exists: return exists(variable(), body().replace_bottom(replacement));
    }
    return *this;
}

namespace {

bool identical_terms(const Term& a, const Term& b) { return a == b; }

bool identical_nodes(const NodePtr& a, const NodePtr& b) {
    if (a == b) return true;
    if (a->kind != b->kind || a->hash != b->hash || a->size != b->size) return false;
    if (a->name != b->name) return false;
    if (a->kind == Connective::atom) {
        return std::equal(a->args.begin(), a->args.end(), b->args.begin(), b->args.end(),
                          identical_terms);
    }
    if (a->lhs && !identical_nodes(a->lhs, b->lhs)) return false;
    if (a->rhs && !identical_nodes(a->rhs, b->rhs)) return false;
    return true;
}

using Binders = std::vector<std::string>;

std::ptrdiff_t binder_index(const Binders& binders, const std::string& name) {
    for (std::size_t i = binders.size(); i-- > 0;) {
        if (binders[i] == name) return static_cast<std::ptrdiff_t>(i);
    }
    return -1;
}

bool alpha_terms(const Term& a, const Term& b, const Binders& ba, const Binders& bb) {
    if (a.kind() != b.kind()) return false;
    if (a.is_variable()) {
        auto ia = binder_index(ba, a.name());
        auto ib = binder_index(bb, b.name());
        if (ia != ib) return false;
        return ia >= 0 || a.name() == b.name();
    }
    if (a.name() != b.name() || a.arguments().size() != b.arguments().size()) return false;
    for (std::size_t i = 0; i < a.arguments().size(); ++i) {
        if (!alpha_terms(a.arguments()[i], b.arguments()[i], ba, bb)) return false;
    }
    return true;
}

bool alpha_nodes(const NodePtr& a, const NodePtr& b, Binders& ba, Binders& bb) {
    if (a == b && ba == bb) return true;
    if (a->kind != b->kind || a->size != b->size) return false;
    switch (a->kind) {
        case Connective::bottom:
            return true;
        case Connective::atom:
            if (a->name != b->name || a->args.size() != b->args.size()) return false;
            for (std::size_t i = 0; i < a->args.size(); ++i) {
                if (!alpha_terms(a->args[i], b->args[i], ba, bb)) return false;
            }
            return true;
        case Connective::conj:
        case Connective::disj:
        case Connective::impl:
            return alpha_nodes(a->lhs, b->lhs, ba, bb) && alpha_nodes(a->rhs, b->rhs, ba, bb);
        case Connective::forall:
        case Connective::exists: {
            ba.push_back(a->name);
            bb.push_back(b->name);
            bool ok = alpha_nodes(a->lhs, b->lhs, ba, bb);
            ba.pop_back();
            bb.pop_back();
            return ok;
        }
    }
    return false;
}

}  // namespace

bool Formula::identical(const Formula& other) const { return identical_nodes(node_, other.node_); }

bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.node_->free != b.node_->free) return false;
    Binders ba, bb;
    return alpha_nodes(a.node_, b.node_, ba, bb);
}

Formula substitute(const Formula& formula, std::string_view variable, const Term& term) {
    return formula.substitute(variable, term);
}

std::set<std::string> free_variables(const Formula& formula) { return formula.free_variables(); }

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
    if (!avoid.contains(base)) return base;
    std::string stem = base;
    while (stem.size() > 1 && std::isdigit(static_cast<unsigned char>(stem.back()))) stem.pop_back();
    for (std::size_t i = 1;; ++i) {
        std::string candidate = stem + std::to_string(i);
        if (!avoid.contains(candidate)) return candidate;
    }
}

bool is_identifier(std::string_view text) noexcept {
    if (text.empty()) return false;
    auto head = static_cast<unsigned char>(text.front());
    if (!(std::isalpha(head) || head == '_')) return false;
    return std::all_of(text.begin() + 1, text.end(), [](char c) {
        auto u = static_cast<unsigned char>(c);
        return u < 0x80 && (std::isalnum(u) || u == '_');
    }) && head < 0x80;
}

std::string_view to_string(LogicId logic) noexcept {
    switch (logic) {
        case LogicId::ml: return "ml";
        case LogicId::il: return "il";
        case LogicId::cl: return "cl";
    }
    return "?";
}

LogicId parse_logic(std::string_view text) {
    std::string lower;
    for (char c : text) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (lower == "ml") return LogicId::ml;
    if (lower == "il") return LogicId::il;
    if (lower == "cl") return LogicId::cl;
    throw ContractViolation("unknown logic '" + std::string(text) + "' (expected ml, il or cl)");
}

void Sequent::validate() const {
    std::set<std::string> seen;
    for (const auto& h : hypotheses) {
        if (!is_identifier(h.label)) {
            throw ContractViolation("hypothesis label '" + h.label + "' is not an identifier");
        }
        if (!seen.insert(h.label).second) {
            throw ContractViolation("duplicate hypothesis label '" + h.label + "'");
        }
    }
}

const Hypothesis* Sequent::find(std::string_view label) const noexcept {
    for (const auto& h : hypotheses) {
        if (h.label == label) return &h;
    }
    return nullptr;
}

bool Sequent::quantifier_free() const noexcept {
    return conclusion.quantifier_free() &&
           std::all_of(hypotheses.begin(), hypotheses.end(),
                       [](const Hypothesis& h) { return h.formula.quantifier_free(); });
}

}  // namespace kf
