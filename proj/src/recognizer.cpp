#include "modcom/recognizer.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <unordered_map>

#include "modcom/md_tree.hpp"

namespace modcom {

namespace {

std::optional<ModuleSequence> recognize_impl(const Graph& g, const std::vector<int>& ids);

// Connected case. Eliminated vertices are inserted after whatever remains,
// in reverse elimination order.
std::optional<ModuleSequence> recognize_connected(Graph h, std::vector<int> ids) {
    std::vector<int> eliminated;
    std::optional<ModuleSequence> base = ModuleSequence{};
    while (h.vertex_count() > 0) {
        if (h.vertex_count() == 1) {
            eliminated.push_back(ids[0]);
            break;
        }
        auto comps = connected_components(h);
        if (comps.size() > 1) {
            base = recognize_impl(h, ids);
            if (!base) return std::nullopt;
            break;
        }
        MDTree t = modular_decomposition(h);
        const MDNode& root = t.root_node();
        std::vector<int> batch;  // local vertex ids to eliminate in this pass
        if (root.kind == MDKind::Join) {
            for (int c : root.children)
                if (t.node(c).kind == MDKind::Leaf) batch.push_back(t.node(c).vertex);
            if (batch.empty()) {
                for (int c : root.children)
                    if (t.node(c).kind == MDKind::CoJoin)
                        for (int cc : t.node(c).children)
                            if (t.node(cc).kind == MDKind::Leaf)
                                batch.push_back(t.node(cc).vertex);
            }
        } else if (root.kind == MDKind::Prime) {
            Graph q = quotient_graph(h, t, t.root);
            for (size_t i = 0; i < root.children.size(); ++i)
                if (q.degree(static_cast<int>(i)) == 1 &&
                    t.node(root.children[i]).kind == MDKind::Leaf)
                    batch.push_back(t.node(root.children[i]).vertex);
            if (batch.empty()) {
                for (size_t i = 0; i < root.children.size(); ++i) {
                    const MDNode& child = t.node(root.children[i]);
                    if (q.degree(static_cast<int>(i)) == 1 && child.kind == MDKind::CoJoin)
                        for (int cc : child.children)
                            if (t.node(cc).kind == MDKind::Leaf)
                                batch.push_back(t.node(cc).vertex);
                }
            }
        }
        if (batch.empty()) return std::nullopt;
        std::sort(batch.begin(), batch.end());
        for (int v : batch) eliminated.push_back(ids[v]);
        std::vector<char> drop(h.vertex_count(), 0);
        for (int v : batch) drop[v] = 1;
        std::vector<int> keep;
        for (int v = 0; v < h.vertex_count(); ++v)
            if (!drop[v]) keep.push_back(v);
        auto sub = induced_subgraph(h, keep);
        std::vector<int> new_ids(keep.size());
        for (size_t i = 0; i < keep.size(); ++i) new_ids[i] = ids[keep[i]];
        h = std::move(sub.graph);
        ids = std::move(new_ids);
    }
    ModuleSequence seq = *base;
    seq.insert(seq.end(), eliminated.rbegin(), eliminated.rend());
    return seq;
}

// ids maps local vertices of g to caller vertices; component sequences are
// concatenated in discovery order.
std::optional<ModuleSequence> recognize_impl(const Graph& g, const std::vector<int>& ids) {
    ModuleSequence seq;
    for (const auto& comp : connected_components(g)) {
        auto sub = induced_subgraph(g, comp);
        std::vector<int> sub_ids(comp.size());
        for (size_t i = 0; i < comp.size(); ++i) sub_ids[i] = ids[comp[i]];
        auto part = recognize_connected(std::move(sub.graph), std::move(sub_ids));
        if (!part) return std::nullopt;
        seq.insert(seq.end(), part->begin(), part->end());
    }
    return seq;
}

}  // namespace

std::optional<ModuleSequence> recognize(const Graph& g) {
    std::vector<int> ids(g.vertex_count());
    std::iota(ids.begin(), ids.end(), 0);
    return recognize_impl(g, ids);
}

namespace {

struct BruteForce {
    int n;
    std::vector<uint32_t> row;
    bool need_independent;
    std::unordered_map<uint32_t, int> choice;  // mask -> eliminable vertex, -1 = NO

    bool composed(uint32_t mask) {
        if (std::popcount(mask) <= 1) return true;
        auto it = choice.find(mask);
        if (it != choice.end()) return it->second >= 0;
        int found = -1;
        for (uint32_t bits = mask; bits && found < 0; bits &= bits - 1) {
            int v = std::countr_zero(bits);
            uint32_t nb = row[v] & mask;
            uint32_t rest = mask & ~(1u << v);
            if (need_independent) {
                bool indep = true;
                for (uint32_t b = nb; b && indep; b &= b - 1)
                    if (row[std::countr_zero(b)] & nb) indep = false;
                if (!indep) continue;
            }
            // nb must be a module of the graph induced by rest
            bool mod = true;
            if (std::popcount(nb) > 1) {
                int ref = std::countr_zero(nb);
                for (uint32_t b = nb & (nb - 1); b && mod; b &= b - 1)
                    if ((row[ref] ^ row[std::countr_zero(b)]) & rest & ~nb) mod = false;
            }
            if (mod && composed(rest)) found = v;
        }
        choice[mask] = found;
        return found >= 0;
    }

    std::optional<ModuleSequence> run(const Graph& g) {
        n = g.vertex_count();
        if (n > 12) throw guard_error("brute_force_recognize: graph too large (n > 12)");
        row.assign(n, 0);
        for (int u = 0; u < n; ++u)
            for (int v : g.neighbors(u)) row[u] |= 1u << v;
        uint32_t full = n == 0 ? 0 : (1u << n) - 1;
        if (!composed(full)) return std::nullopt;
        ModuleSequence seq;
        uint32_t mask = full;
        while (std::popcount(mask) > 1) {
            int v = choice.at(mask);
            seq.push_back(v);
            mask &= ~(1u << v);
        }
        if (mask) seq.push_back(std::countr_zero(mask));
        std::reverse(seq.begin(), seq.end());
        return seq;
    }
};

}  // namespace

std::optional<ModuleSequence> brute_force_recognize(const Graph& g) {
    BruteForce bf;
    bf.need_independent = false;
    return bf.run(g);
}

std::optional<ModuleSequence> brute_force_recognize_independent(const Graph& g) {
    BruteForce bf;
    bf.need_independent = true;
    return bf.run(g);
}

}  // namespace modcom
