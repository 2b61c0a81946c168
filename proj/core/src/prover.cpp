#include "kf/prover.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_map>

#include "kf/error.hpp"
#include "kf/syntax.hpp"

namespace kf {

namespace {

void require_propositional(const Sequent& s, std::string_view what) {
    if (!s.quantifier_free()) {
        throw ContractViolation(std::string(what) + ": quantifiers are not supported");
    }
}

// Hash-consed propositional formulas; ids are dense indices.
class Table {
public:
    struct Node {
        Connective kind;
        int left = -1;
        int right = -1;
    };

    Table() { bottom_ = intern(Formula::bottom()); }

    int intern(const Formula& f) {
        switch (f.kind()) {
            case Connective::bottom:
            case Connective::atom: {
                std::string key = render(f);
                auto it = atoms_.find(key);
                if (it != atoms_.end()) return it->second;
                int id = push({f.kind()}, f);
                atoms_.emplace(std::move(key), id);
                atom_slot_.emplace(id, static_cast<int>(atom_slot_.size()));
                return id;
            }
            case Connective::conj:
            case Connective::disj:
            case Connective::impl:
                return make(f.kind(), intern(f.left()), intern(f.right()));
            case Connective::forall:
            case Connective::exists: break;
        }
        throw ContractViolation("decide: quantifiers are not supported");
    }

    int make(Connective kind, int l, int r) {
        std::uint64_t key = (static_cast<std::uint64_t>(kind) << 56) |
                            (static_cast<std::uint64_t>(l) << 28) | static_cast<std::uint64_t>(r);
        auto it = composite_.find(key);
        if (it != composite_.end()) return it->second;
        Formula f = kind == Connective::conj   ? Formula::conj(forms_[l], forms_[r])
                    : kind == Connective::disj ? Formula::disj(forms_[l], forms_[r])
                                               : Formula::impl(forms_[l], forms_[r]);
        int id = push({kind, l, r}, std::move(f));
        composite_.emplace(key, id);
        return id;
    }

    const Node& node(int id) const { return nodes_[id]; }

    /// Truth value of `id` under every assignment of the atoms, bit k for
    /// assignment k. Only defined while atoms() <= kMaxTableAtoms.
    std::uint64_t truth(int id, bool bottom_is_atom) {
        auto& cache = bottom_is_atom ? truth_atomic_bottom_ : truth_;
        if (cache.size() < nodes_.size()) cache.resize(nodes_.size(), kUnknown);
        if (cache[id] != kUnknown) return cache[id];
        const Node n = nodes_[id];
        std::uint64_t v = 0;
        switch (n.kind) {
            case Connective::bottom:
                v = bottom_is_atom ? column(atom_slot_.at(id)) : 0;
                break;
            case Connective::atom: v = column(atom_slot_.at(id)); break;
            case Connective::conj: v = truth(n.left, bottom_is_atom) & truth(n.right, bottom_is_atom); break;
            case Connective::disj: v = truth(n.left, bottom_is_atom) | truth(n.right, bottom_is_atom); break;
            default: v = ~truth(n.left, bottom_is_atom) | truth(n.right, bottom_is_atom); break;
        }
        v &= row_mask();
        auto& again = bottom_is_atom ? truth_atomic_bottom_ : truth_;
        again[id] = v;
        return v;
    }

    bool small_enough_for_tables() const { return atom_slot_.size() <= kMaxTableAtoms; }
    const Formula& formula(int id) const { return forms_[id]; }
    int bottom() const { return bottom_; }

private:
    static constexpr std::size_t kMaxTableAtoms = 6;
    static constexpr std::uint64_t kUnknown = ~std::uint64_t{0} - 1;  // never a valid row mask

    // Assignment k gives atom slot i the value of bit i of k.
    static std::uint64_t column(int slot) {
        std::uint64_t v = 0;
        for (int k = 0; k < 64; ++k) {
            if (k >> slot & 1) v |= std::uint64_t{1} << k;
        }
        return v;
    }

    std::uint64_t row_mask() const {
        std::size_t rows = std::size_t{1} << atom_slot_.size();
        return rows >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << rows) - 1;
    }

    int push(Node n, Formula f) {
        nodes_.push_back(n);
        forms_.push_back(std::move(f));
        return static_cast<int>(nodes_.size()) - 1;
    }

    std::vector<Node> nodes_;
    std::vector<Formula> forms_;
    std::unordered_map<std::string, int> atoms_;
    std::unordered_map<std::uint64_t, int> composite_;
    std::unordered_map<int, int> atom_slot_;
    std::vector<std::uint64_t> truth_;
    std::vector<std::uint64_t> truth_atomic_bottom_;
    int bottom_ = -1;
};

using Context = std::vector<int>;

struct ContextHash {
    std::size_t operator()(const std::pair<Context, int>& k) const noexcept {
        std::size_t h = std::hash<int>{}(k.second);
        for (int x : k.first) h = h * 1000003u ^ static_cast<std::size_t>(x);
        return h;
    }
};

// G4ip. Invertible rules are applied eagerly; ∨R and the (C→D)→B left rule
// are the only backtracking points.
class Search {
public:
    Search(Table& table, bool minimal, bool tracing)
        : t_(table), minimal_(minimal), tracing_(tracing) {}

    bool prove(Context ctx, int goal, int depth) {
        const Table::Node g = t_.node(goal);
        if (g.kind == Connective::conj) {
            note(depth, "and-R", ctx, goal);
            return prove(ctx, g.left, depth + 1) && prove(std::move(ctx), g.right, depth + 1);
        }
        if (g.kind == Connective::impl) {
            note(depth, "imp-R", ctx, goal);
            ctx.push_back(g.left);
            return prove(std::move(ctx), g.right, depth + 1);
        }
        std::sort(ctx.begin(), ctx.end());
        ctx.erase(std::unique(ctx.begin(), ctx.end()), ctx.end());
        if (tracing_) return search(ctx, goal, depth);
        auto key = std::make_pair(ctx, goal);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        bool r = search(ctx, goal, depth);
        memo_.emplace(std::move(key), r);
        return r;
    }

    std::vector<std::string> take_lines() { return std::move(lines_); }

private:
    static bool contains(const Context& ctx, int f) {
        return std::binary_search(ctx.begin(), ctx.end(), f);
    }

    static Context without(const Context& ctx, std::size_t i) {
        Context out;
        out.reserve(ctx.size() + 2);
        for (std::size_t j = 0; j < ctx.size(); ++j) {
            if (j != i) out.push_back(ctx[j]);
        }
        return out;
    }

    static Context with(Context ctx, std::initializer_list<int> extra) {
        ctx.insert(ctx.end(), extra);
        return ctx;
    }

    void note(int depth, std::string_view rule, const Context& ctx, int goal) {
        if (!tracing_) return;
        std::string line(static_cast<std::size_t>(depth) * 2, ' ');
        line += rule;
        line += ": ";
        for (std::size_t i = 0; i < ctx.size(); ++i) {
            if (i) line += ", ";
            line += render(t_.formula(ctx[i]));
        }
        line += ctx.empty() ? "=> " : " => ";
        line += render(t_.formula(goal));
        lines_.push_back(std::move(line));
    }

    bool is_atomic(int f) const {
        auto k = t_.node(f).kind;
        return k == Connective::atom || k == Connective::bottom;
    }

    // Every sequent provable in ML (⊥ read as an atom) or IL is classically
    // valid, so an invalid one can be dropped without searching.
    bool classically_refuted(const Context& ctx, int goal) {
        if (!t_.small_enough_for_tables()) return false;
        std::uint64_t premises = ~std::uint64_t{0};
        for (int f : ctx) premises &= t_.truth(f, minimal_);
        return (premises & ~t_.truth(goal, minimal_)) != 0;
    }

    bool search(const Context& ctx, int goal, int depth) {
        if (classically_refuted(ctx, goal)) return false;
        if (contains(ctx, goal)) {
            note(depth, "axiom", ctx, goal);
            return true;
        }
        if (!minimal_ && contains(ctx, t_.bottom())) {
            note(depth, "bot-L", ctx, goal);
            return true;
        }

        for (std::size_t i = 0; i < ctx.size(); ++i) {
            const Table::Node n = t_.node(ctx[i]);
            switch (n.kind) {
                case Connective::conj:
                    note(depth, "and-L", ctx, goal);
                    return prove(with(without(ctx, i), {n.left, n.right}), goal, depth + 1);
                case Connective::disj: {
                    note(depth, "or-L", ctx, goal);
                    Context rest = without(ctx, i);
                    return prove(with(rest, {n.left}), goal, depth + 1) &&
                           prove(with(rest, {n.right}), goal, depth + 1);
                }
                case Connective::impl: {
                    const Table::Node a = t_.node(n.left);
                    if (n.left == t_.bottom() && !minimal_) {
                        note(depth, "bot-imp-L", ctx, goal);
                        return prove(without(ctx, i), goal, depth + 1);
                    }
                    if (is_atomic(n.left) && contains(ctx, n.left)) {
                        note(depth, "atom-imp-L", ctx, goal);
                        return prove(with(without(ctx, i), {n.right}), goal, depth + 1);
                    }
                    if (a.kind == Connective::conj) {
                        note(depth, "and-imp-L", ctx, goal);
                        int curried = t_.make(Connective::impl, a.left,
                                              t_.make(Connective::impl, a.right, n.right));
                        return prove(with(without(ctx, i), {curried}), goal, depth + 1);
                    }
                    if (a.kind == Connective::disj) {
                        note(depth, "or-imp-L", ctx, goal);
                        int l = t_.make(Connective::impl, a.left, n.right);
                        int r = t_.make(Connective::impl, a.right, n.right);
                        return prove(with(without(ctx, i), {l, r}), goal, depth + 1);
                    }
                    break;
                }
                default: break;
            }
        }

        const Table::Node g = t_.node(goal);
        if (g.kind == Connective::disj) {
            std::size_t mark = lines_.size();
            note(depth, "or-R1", ctx, goal);
            if (prove(ctx, g.left, depth + 1)) return true;
            lines_.resize(mark);
            note(depth, "or-R2", ctx, goal);
            if (prove(ctx, g.right, depth + 1)) return true;
            lines_.resize(mark);
        }
        for (std::size_t i = 0; i < ctx.size(); ++i) {
            const Table::Node n = t_.node(ctx[i]);
            if (n.kind != Connective::impl) continue;
            const Table::Node a = t_.node(n.left);
            if (a.kind != Connective::impl) continue;
            std::size_t mark = lines_.size();
            note(depth, "imp-imp-L", ctx, goal);
            Context rest = without(ctx, i);
            int db = t_.make(Connective::impl, a.right, n.right);
            if (prove(with(rest, {db}), n.left, depth + 1) &&
                prove(with(rest, {n.right}), goal, depth + 1)) {
                return true;
            }
            lines_.resize(mark);
        }
        return false;
    }

    Table& t_;
    bool minimal_;
    bool tracing_;
    std::vector<std::string> lines_;
    std::unordered_map<std::pair<Context, int>, bool, ContextHash> memo_;
};

bool sequent_search(LogicId logic, const Sequent& s, bool tracing, std::vector<std::string>* lines) {
    Table table;
    Context ctx;
    for (const auto& h : s.hypotheses) ctx.push_back(table.intern(h.formula));
    int goal = table.intern(s.conclusion);
    Search search(table, logic == LogicId::ml, tracing);
    bool r = search.prove(std::move(ctx), goal, 0);
    if (lines && r) *lines = search.take_lines();
    return r;
}

// ---- truth tables ----------------------------------------------------------

bool evaluate(const Formula& f, const std::map<std::string, int>& index, std::uint64_t row) {
    switch (f.kind()) {
        case Connective::bottom: return false;
        case Connective::atom: return (row >> index.at(render(f))) & 1u;
        case Connective::conj: return evaluate(f.left(), index, row) && evaluate(f.right(), index, row);
        case Connective::disj: return evaluate(f.left(), index, row) || evaluate(f.right(), index, row);
        case Connective::impl: return !evaluate(f.left(), index, row) || evaluate(f.right(), index, row);
        default: break;
    }
    throw ContractViolation("classical_valid: quantifiers are not supported");
}

void collect_atoms(const Formula& f, std::map<std::string, int>& index) {
    switch (f.kind()) {
        case Connective::atom: index.emplace(render(f), 0); return;
        case Connective::conj:
        case Connective::disj:
        case Connective::impl:
            collect_atoms(f.left(), index);
            collect_atoms(f.right(), index);
            return;
        default: return;
    }
}

bool truth_table(const Sequent& s) {
    std::map<std::string, int> index;
    for (const auto& h : s.hypotheses) collect_atoms(h.formula, index);
    collect_atoms(s.conclusion, index);
    if (index.size() > 24) throw ContractViolation("classical_valid: too many atoms for a truth table");
    int next = 0;
    for (auto& [name, i] : index) i = next++;
    for (std::uint64_t row = 0; row < (std::uint64_t{1} << index.size()); ++row) {
        bool premises = std::all_of(s.hypotheses.begin(), s.hypotheses.end(),
                                    [&](const Hypothesis& h) { return evaluate(h.formula, index, row); });
        if (premises && !evaluate(s.conclusion, index, row)) return false;
    }
    return true;
}

}  // namespace

std::string_view to_string(Decision d) noexcept {
    return d == Decision::provable ? "provable" : "unprovable";
}

Decision decide(LogicId logic, const Sequent& sequent) {
    require_propositional(sequent, "decide");
    bool r = logic == LogicId::cl ? truth_table(sequent) : sequent_search(logic, sequent, false, nullptr);
    return r ? Decision::provable : Decision::unprovable;
}

Decision decide(LogicId logic, const Formula& formula) {
    return decide(logic, Sequent{{}, formula});
}

ProofTrace decide_with_trace(LogicId logic, const Sequent& sequent) {
    require_propositional(sequent, "decide");
    ProofTrace out;
    if (logic == LogicId::cl) {
        out.decision = truth_table(sequent) ? Decision::provable : Decision::unprovable;
        return out;
    }
    bool r = sequent_search(logic, sequent, true, &out.lines);
    out.decision = r ? Decision::provable : Decision::unprovable;
    return out;
}

bool classical_valid(const Formula& formula) {
    Sequent s{{}, formula};
    require_propositional(s, "classical_valid");
    return truth_table(s);
}

}  // namespace kf
