#include "kf/kripke.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>

#include "json.hpp"

#include "kf/error.hpp"
#include "kf/syntax.hpp"

namespace kf {

namespace {

constexpr std::size_t kMaxWorlds = 7;
constexpr std::string_view kBottomName = "false";

using Mask = std::uint32_t;

// up[w] = worlds above w (w included); world 0 is the root.
using Poset = std::vector<Mask>;

bool transitive(const Poset& up) {
    for (std::size_t w = 0; w < up.size(); ++w) {
        for (std::size_t v = 0; v < up.size(); ++v) {
            if ((up[w] >> v & 1u) && (up[v] & ~up[w])) return false;
        }
    }
    return true;
}

// Bit (i*n + j) set when i ≤ j, after relabelling with perm.
std::uint64_t encode(const Poset& up, const std::vector<std::size_t>& perm) {
    std::size_t n = up.size();
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (up[i] >> j & 1u) code |= std::uint64_t{1} << (perm[i] * n + perm[j]);
        }
    }
    return code;
}

std::vector<Poset> generate_rooted_posets(std::size_t n) {
    // Non-root worlds are numbered along a linear extension, so only pairs
    // i < j need choosing; isomorphic copies are dropped by a minimal code.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
    std::vector<Poset> out;
    std::vector<std::uint64_t> seen;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs.size()); ++bits) {
        Poset up(n);
        up[0] = (Mask{1} << n) - 1;
        for (std::size_t i = 1; i < n; ++i) up[i] = Mask{1} << i;
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            if (bits >> k & 1u) up[pairs[k].first] |= Mask{1} << pairs[k].second;
        }
        if (!transitive(up)) continue;
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::uint64_t best = encode(up, perm);
        while (std::next_permutation(perm.begin() + 1, perm.end())) {
            best = std::min(best, encode(up, perm));
        }
        if (std::find(seen.begin(), seen.end(), best) != seen.end()) continue;
        seen.push_back(best);
        out.push_back(std::move(up));
    }
    return out;
}

const std::vector<Poset>& rooted_posets(std::size_t n) {
    static std::mutex mutex;
    static std::map<std::size_t, std::vector<Poset>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, generate_rooted_posets(n)).first;
    return it->second;
}

std::vector<Mask> upsets(const Poset& up) {
    std::vector<Mask> out;
    Mask all = (Mask{1} << up.size()) - 1;
    for (Mask s = 0; s <= all; ++s) {
        bool closed = true;
        for (std::size_t w = 0; w < up.size() && closed; ++w) {
            if ((s >> w & 1u) && (up[w] & ~s)) closed = false;
        }
        if (closed) out.push_back(s);
    }
    return out;
}

// Postorder program over atom slots; slot 0 is ⊥.
struct Program {
    struct Op {
        Connective kind;
        int left = -1;   // operand index, or atom slot for atoms
        int right = -1;
    };
    std::vector<Op> ops;
    std::vector<std::string> atoms;  // slot 1.. names
    bool has_bottom = false;

    int compile(const Formula& f, std::map<std::string, int>& slots) {
        switch (f.kind()) {
            case Connective::bottom:
                ops.push_back({Connective::bottom, 0});
                has_bottom = true;
                break;
            case Connective::atom: {
                std::string name = render(f);
                auto [it, inserted] = slots.emplace(name, static_cast<int>(atoms.size()) + 1);
                if (inserted) atoms.push_back(name);
                ops.push_back({Connective::atom, it->second});
                break;
            }
            case Connective::conj:
            case Connective::disj:
            case Connective::impl: {
                int l = compile(f.left(), slots);
                int r = compile(f.right(), slots);
                ops.push_back({f.kind(), l, r});
                break;
            }
            default: throw ContractViolation("countermodel: quantifiers are not supported");
        }
        return static_cast<int>(ops.size()) - 1;
    }

    Mask run(const Poset& up, const std::vector<Mask>& slot_values, std::vector<Mask>& scratch) const {
        scratch.resize(ops.size());
        for (std::size_t i = 0; i < ops.size(); ++i) {
            const Op& op = ops[i];
            switch (op.kind) {
                case Connective::bottom:
                case Connective::atom: scratch[i] = slot_values[op.left]; break;
                case Connective::conj: scratch[i] = scratch[op.left] & scratch[op.right]; break;
                case Connective::disj: scratch[i] = scratch[op.left] | scratch[op.right]; break;
                default: {
                    Mask a = scratch[op.left];
                    Mask b = scratch[op.right];
                    Mask m = 0;
                    for (std::size_t w = 0; w < up.size(); ++w) {
                        if ((up[w] & a & ~b) == 0) m |= Mask{1} << w;
                    }
                    scratch[i] = m;
                }
            }
        }
        return scratch.back();
    }
};

KripkeModel build_model(LogicId logic, const Poset& up, const Program& prog,
                        const std::vector<Mask>& slot_values) {
    KripkeModel m;
    m.logic = logic;
    m.worlds = up.size();
    m.valuation.resize(up.size());
    for (std::size_t v = 0; v < up.size(); ++v) {
        for (std::size_t w = 0; w < up.size(); ++w) {
            if (up[v] >> w & 1u) m.order.emplace_back(v, w);
        }
        if (slot_values[0] >> v & 1u) m.valuation[v].insert(std::string(kBottomName));
        for (std::size_t a = 0; a < prog.atoms.size(); ++a) {
            if (slot_values[a + 1] >> v & 1u) m.valuation[v].insert(prog.atoms[a]);
        }
    }
    return m;
}

std::optional<KripkeModel> search_size(LogicId logic, const Program& prog, std::size_t n,
                                       bool bottom_free) {
    std::vector<Mask> scratch;
    for (const Poset& up : rooted_posets(n)) {
        std::vector<Mask> sets = upsets(up);  // sets[0] is the empty set
        std::size_t slots = prog.atoms.size() + 1;
        // Odometer over upset choices; ⊥ either fixed empty or nonempty.
        std::vector<std::size_t> choice(slots, 0);
        if (!bottom_free) choice[0] = 1;
        std::vector<Mask> values(slots, 0);
        while (true) {
            for (std::size_t s = 0; s < slots; ++s) values[s] = sets[choice[s]];
            if (!(prog.run(up, values, scratch) & 1u)) return build_model(logic, up, prog, values);
            std::size_t s = 1;
            while (s < slots && ++choice[s] == sets.size()) choice[s++] = 0;
            if (s == slots) {
                if (bottom_free || ++choice[0] == sets.size()) break;
            }
        }
    }
    return std::nullopt;
}

bool force(const KripkeModel& m, std::size_t w, const Formula& f) {
    switch (f.kind()) {
        case Connective::bottom:
            return m.logic == LogicId::ml && m.valuation[w].contains(std::string(kBottomName));
        case Connective::atom: return m.valuation[w].contains(render(f));
        case Connective::conj: return force(m, w, f.left()) && force(m, w, f.right());
        case Connective::disj: return force(m, w, f.left()) || force(m, w, f.right());
        case Connective::impl:
            for (std::size_t v = 0; v < m.worlds; ++v) {
                if (m.leq(w, v) && force(m, v, f.left()) && !force(m, v, f.right())) return false;
            }
            return true;
        default: break;
    }
    throw ContractViolation("eval_model: quantifiers are not supported");
}

}  // namespace

bool KripkeModel::leq(std::size_t v, std::size_t w) const {
    return std::find(order.begin(), order.end(), std::make_pair(v, w)) != order.end();
}

void KripkeModel::validate() const {
    if (worlds == 0) throw ContractViolation("Kripke model without worlds");
    if (valuation.size() != worlds) throw ContractViolation("valuation size does not match worlds");
    for (auto [v, w] : order) {
        if (v >= worlds || w >= worlds) throw ContractViolation("order mentions an unknown world");
    }
    for (std::size_t u = 0; u < worlds; ++u) {
        if (!leq(u, u)) throw ContractViolation("order is not reflexive");
        if (!leq(0, u)) throw ContractViolation("world 0 is not the root");
        for (std::size_t v = 0; v < worlds; ++v) {
            if (u != v && leq(u, v) && leq(v, u)) throw ContractViolation("order is not antisymmetric");
            if (!leq(u, v)) continue;
            for (std::size_t w = 0; w < worlds; ++w) {
                if (leq(v, w) && !leq(u, w)) throw ContractViolation("order is not transitive");
            }
            for (const auto& atom : valuation[u]) {
                if (!valuation[v].contains(atom)) throw ContractViolation("valuation is not persistent");
            }
        }
        if (logic != LogicId::ml && valuation[u].contains(std::string(kBottomName))) {
            throw ContractViolation("false is forced outside minimal logic");
        }
    }
}

std::string KripkeModel::to_json() const {
    nlohmann::json j;
    j["logic"] = std::string(to_string(logic));
    j["root"] = 0;
    std::vector<std::size_t> ids(worlds);
    std::iota(ids.begin(), ids.end(), 0);
    j["worlds"] = ids;
    j["order"] = nlohmann::json::array();
    for (auto [v, w] : order) j["order"].push_back({v, w});
    j["valuation"] = nlohmann::json::array();
    for (const auto& atoms : valuation) j["valuation"].push_back(atoms);
    return j.dump();
}

bool eval_model(const KripkeModel& model, std::size_t world, const Formula& formula) {
    if (world >= model.worlds) {
        throw ContractViolation("unknown world " + std::to_string(world));
    }
    return force(model, world, formula);
}

std::optional<KripkeModel> countermodel(LogicId logic, const Formula& formula,
                                        std::size_t max_worlds) {
    if (logic == LogicId::cl) throw ContractViolation("countermodel: logic must be ml or il");
    if (max_worlds == 0 || max_worlds > kMaxWorlds) {
        throw ContractViolation("countermodel: max_worlds must be between 1 and " +
                                std::to_string(kMaxWorlds));
    }
    Program prog;
    std::map<std::string, int> slots;
    prog.compile(formula, slots);
    for (std::size_t n = 1; n <= max_worlds; ++n) {
        if (auto m = search_size(logic, prog, n, true)) return m;
    }
    if (logic == LogicId::ml && prog.has_bottom) {
        for (std::size_t n = 1; n <= max_worlds; ++n) {
            if (auto m = search_size(logic, prog, n, false)) return m;
        }
    }
    return std::nullopt;
}

}  // namespace kf
