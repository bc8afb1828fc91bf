#include "modcom/class_oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "modcom/bipartite_dh.hpp"
#include "modcom/md_tree.hpp"
#include "modcom/named_graphs.hpp"

namespace modcom {

namespace {

std::vector<uint32_t> adjacency_rows(const Graph& g) {
    std::vector<uint32_t> row(g.vertex_count(), 0);
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u)) row[u] |= 1u << v;
    return row;
}

std::vector<int> mask_vertices(uint32_t mask) {
    std::vector<int> vs;
    for (uint32_t b = mask; b; b &= b - 1) vs.push_back(std::countr_zero(b));
    return vs;
}

bool connected_in_mask(const std::vector<uint32_t>& row, uint32_t mask) {
    uint32_t reached = mask & (~mask + 1);  // lowest bit
    while (true) {
        uint32_t frontier = 0;
        for (uint32_t b = reached; b; b &= b - 1) frontier |= row[std::countr_zero(b)];
        frontier = (frontier & mask) | reached;
        if (frontier == reached) break;
        reached = frontier;
    }
    return reached == mask;
}

}  // namespace

std::optional<std::vector<int>> contains_induced(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count();
    const int nh = h.vertex_count();
    if (nh > 10) throw guard_error("contains_induced: pattern too large (n > 10)");
    if (ng > 14) throw guard_error("contains_induced: host too large (n > 14)");
    if (nh == 0) return std::vector<int>{};
    if (nh > ng) return std::nullopt;
    // pattern vertices in decreasing degree order for earlier pruning
    std::vector<int> porder(nh);
    for (int i = 0; i < nh; ++i) porder[i] = i;
    std::sort(porder.begin(), porder.end(),
              [&](int a, int b) { return h.degree(a) > h.degree(b); });
    std::vector<int> image(nh, -1);  // pattern vertex -> host vertex
    std::vector<char> used(ng, 0);
    auto backtrack = [&](auto&& self, int i) -> bool {
        if (i == nh) return true;
        int p = porder[i];
        for (int v = 0; v < ng; ++v) {
            if (used[v] || g.degree(v) < h.degree(p)) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                if (h.adjacent(p, porder[j]) != g.adjacent(v, image[porder[j]])) ok = false;
            if (!ok) continue;
            image[p] = v;
            used[v] = 1;
            if (self(self, i + 1)) return true;
            used[v] = 0;
            image[p] = -1;
        }
        return false;
    };
    if (!backtrack(backtrack, 0)) return std::nullopt;
    std::vector<int> result(image.begin(), image.end());
    std::sort(result.begin(), result.end());
    return result;
}

std::optional<std::vector<int>> has_hole(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 14) throw guard_error("has_hole: graph too large (n > 14)");
    auto row = adjacency_rows(g);
    const uint32_t full = n == 0 ? 0 : (1u << n) - 1;
    for (uint32_t mask = 0; mask <= full && full; ++mask) {
        if (std::popcount(mask) < 5) continue;
        bool cycle = true;
        for (uint32_t b = mask; b && cycle; b &= b - 1)
            if (std::popcount(row[std::countr_zero(b)] & mask) != 2) cycle = false;
        if (cycle && connected_in_mask(row, mask)) return mask_vertices(mask);
    }
    return std::nullopt;
}

std::optional<std::vector<int>> contains_sun(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 14) throw guard_error("contains_sun: graph too large (n > 14)");
    for (int k = 3; 2 * k <= n; ++k)
        if (auto w = contains_induced(g, named_graph(NamedKind::CompleteSun, k))) return w;
    return std::nullopt;
}

namespace {

// chromatic number of the graph restricted to `mask`, by DP over subsets
int chromatic_of_mask(const std::vector<uint32_t>& row, uint32_t mask) {
    auto verts = mask_vertices(mask);
    const int k = static_cast<int>(verts.size());
    if (k == 0) return 0;
    // compact reindexing
    std::vector<uint32_t> crow(k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (row[verts[i]] & (1u << verts[j])) crow[i] |= 1u << j;
    const uint32_t cfull = (1u << k) - 1;
    std::vector<char> indep(cfull + 1, 0);
    indep[0] = 1;
    for (uint32_t s = 1; s <= cfull; ++s) {
        int low = std::countr_zero(s);
        uint32_t rest = s & (s - 1);
        indep[s] = indep[rest] && !(crow[low] & rest);
    }
    std::vector<int> chi(cfull + 1, 0);
    for (uint32_t s = 1; s <= cfull; ++s) {
        int low = std::countr_zero(s);
        int best = k + 1;
        // color classes containing the lowest vertex
        for (uint32_t t = s; t; t = (t - 1) & s) {
            if (!(t & (1u << low)) || !indep[t]) continue;
            best = std::min(best, 1 + chi[s & ~t]);
        }
        chi[s] = best;
    }
    return chi[cfull];
}

int clique_of_mask(const std::vector<uint32_t>& row, uint32_t mask) {
    int best = 0;
    auto grow = [&](auto&& self, uint32_t clique, uint32_t candidates) -> void {
        best = std::max(best, std::popcount(clique));
        while (candidates) {
            if (std::popcount(clique) + std::popcount(candidates) <= best) return;
            int v = std::countr_zero(candidates);
            candidates &= candidates - 1;
            self(self, clique | (1u << v), candidates & row[v]);
        }
    };
    grow(grow, 0, mask);
    return best;
}

constexpr int kNumbersGuard = 12;

std::vector<uint32_t> rows_guarded(const Graph& g, int cap, const char* what) {
    if (g.vertex_count() > cap)
        throw guard_error(std::string(what) + ": graph too large (n > " + std::to_string(cap) +
                          ")");
    return adjacency_rows(g);
}

// a cycle through all of `mask` using only edges of `row`
bool has_hamiltonian_cycle(const std::vector<uint32_t>& row, uint32_t mask) {
    int k = std::popcount(mask);
    if (k < 3) return false;
    int start = std::countr_zero(mask);
    auto extend = [&](auto&& self, int v, uint32_t visited) -> bool {
        if (visited == mask) return (row[v] & (1u << start)) != 0;
        for (uint32_t b = row[v] & mask & ~visited; b; b &= b - 1) {
            int w = std::countr_zero(b);
            if (self(self, w, visited | (1u << w))) return true;
        }
        return false;
    };
    return extend(extend, start, 1u << start);
}

Membership forbidden(const Graph& g, const std::vector<Graph>& patterns, bool also_sun,
                     bool also_hole) {
    for (const auto& p : patterns)
        if (auto w = contains_induced(g, p)) return {false, w};
    if (also_hole)
        if (auto w = has_hole(g)) return {false, w};
    if (also_sun)
        if (auto w = contains_sun(g)) return {false, w};
    return {true, std::nullopt};
}

bool md_tree_has_prime(const MDTree& t) {
    for (const auto& nd : t.nodes)
        if (nd.kind == MDKind::Prime) return true;
    return false;
}

}  // namespace

int chromatic_number(const Graph& g) {
    auto row = rows_guarded(g, kNumbersGuard, "chromatic_number");
    return chromatic_of_mask(row, g.vertex_count() ? (1u << g.vertex_count()) - 1 : 0);
}

int clique_number(const Graph& g) {
    auto row = rows_guarded(g, kNumbersGuard, "clique_number");
    return clique_of_mask(row, g.vertex_count() ? (1u << g.vertex_count()) - 1 : 0);
}

int independence_number(const Graph& g) {
    if (g.vertex_count() > kNumbersGuard)
        throw guard_error("independence_number: graph too large (n > 12)");
    return clique_number(complement(g));
}

int clique_cover_number(const Graph& g) {
    if (g.vertex_count() > kNumbersGuard)
        throw guard_error("clique_cover_number: graph too large (n > 12)");
    return chromatic_number(complement(g));
}

Membership class_membership(const Graph& g, ClassId c) {
    const int n = g.vertex_count();
    const Graph house = named_graph(NamedKind::House);
    const Graph domino = named_graph(NamedKind::Domino);
    switch (c) {
        case ClassId::Cograph: {
            bool member = n <= 1 || !md_tree_has_prime(modular_decomposition(g));
            if (member) return {true, std::nullopt};
            std::optional<std::vector<int>> w;
            if (n <= 14) w = contains_induced(g, named_graph(NamedKind::Path, 4));
            return {false, w};
        }
        case ClassId::TriviallyPerfect:
            return forbidden(
                g, {named_graph(NamedKind::Cycle, 4), named_graph(NamedKind::Path, 4)}, false,
                false);
        case ClassId::Co2C4Free:
            return forbidden(g, {named_graph(NamedKind::Co2C4)}, false, false);
        case ClassId::P4Free:
            return forbidden(g, {named_graph(NamedKind::Path, 4)}, false, false);
        case ClassId::C4Free:
            return forbidden(g, {named_graph(NamedKind::Cycle, 4)}, false, false);
        case ClassId::HhdFree:
            return forbidden(g, {house, domino}, false, true);
        case ClassId::HhdsFree:
            return forbidden(g, {house, domino}, true, true);
        case ClassId::HhdgFree:
            return forbidden(g, {house, domino, named_graph(NamedKind::Gem)}, false, true);
        case ClassId::WeaklyChordal: {
            if (auto w = has_hole(g)) return {false, w};
            if (auto w = has_hole(complement(g))) return {false, w};
            return {true, std::nullopt};
        }
        case ClassId::Perfect: {
            auto row = rows_guarded(g, 9, "class_membership(perfect)");
            const uint32_t full = n == 0 ? 0 : (1u << n) - 1;
            for (uint32_t mask = 1; mask <= full && full; ++mask)
                if (chromatic_of_mask(row, mask) != clique_of_mask(row, mask))
                    return {false, mask_vertices(mask)};
            return {true, std::nullopt};
        }
        case ClassId::Chordal62: {
            auto row = rows_guarded(g, 14, "class_membership(chordal62)");
            const uint32_t full = n == 0 ? 0 : (1u << n) - 1;
            for (uint32_t mask = 1; mask <= full && full; ++mask) {
                int k = std::popcount(mask);
                if (k < 6) continue;
                int edges = 0;
                for (uint32_t b = mask; b; b &= b - 1)
                    edges += std::popcount(row[std::countr_zero(b)] & mask);
                edges /= 2;
                // a Hamiltonian cycle of this subset would have edges - k chords
                if (edges <= k + 1 && has_hamiltonian_cycle(row, mask))
                    return {false, mask_vertices(mask)};
            }
            return {true, std::nullopt};
        }
        case ClassId::HoleFree: {
            if (auto w = has_hole(g)) return {false, w};
            return {true, std::nullopt};
        }
        case ClassId::SunFree: {
            if (auto w = contains_sun(g)) return {false, w};
            return {true, std::nullopt};
        }
        case ClassId::Bipartite:
            return {is_bipartite(g).has_value(), std::nullopt};
    }
    throw std::invalid_argument("unknown class id");
}

namespace {

std::optional<ModuleSequence> cograph_sequence_node(const Graph& g, const MDTree& t, int node);

bool subtree_has_edge(const MDTree& t, int node) {
    const MDNode& nd = t.node(node);
    if (nd.kind == MDKind::Leaf) return false;
    if (nd.kind == MDKind::Join) return true;
    for (int c : nd.children)
        if (subtree_has_edge(t, c)) return true;
    return false;
}

// 2K2 is co-connected, so under a join it must sit inside one child; under a
// co-join it appears as soon as two children carry an edge.
bool subtree_has_2k2(const MDTree& t, int node) {
    const MDNode& nd = t.node(node);
    if (nd.kind == MDKind::Leaf) return false;
    if (nd.kind == MDKind::CoJoin) {
        int edgy = 0;
        for (int c : nd.children)
            if (subtree_has_edge(t, c)) ++edgy;
        if (edgy >= 2) return true;
    }
    for (int c : nd.children)
        if (subtree_has_2k2(t, c)) return true;
    return false;
}

// Append order for a 2K2-free subtree: every prefix keeps the property that
// non-neighbors of the next vertex are complete to its neighbors, so each
// vertex joins with a module neighborhood once everything outside the subtree
// is fully adjacent. Under a co-join the (single) edge-bearing child leads
// and isolated vertices trail; under a join children concatenate.
void append_order_2k2_free(const MDTree& t, int node, ModuleSequence& out) {
    const MDNode& nd = t.node(node);
    if (nd.kind == MDKind::Leaf) {
        out.push_back(nd.vertex);
        return;
    }
    if (nd.kind == MDKind::CoJoin) {
        for (int c : nd.children)
            if (subtree_has_edge(t, c)) append_order_2k2_free(t, c, out);
        for (int c : nd.children)
            if (!subtree_has_edge(t, c)) append_order_2k2_free(t, c, out);
        return;
    }
    for (int c : nd.children) append_order_2k2_free(t, c, out);
}

std::optional<ModuleSequence> cograph_sequence_join(const Graph& g, const MDTree& t,
                                                    const MDNode& nd) {
    // co-2C4 = join of two 2K2s, each inside a single co-component; so the
    // join is feasible iff at most one child contains an induced 2K2
    int base_child = -1;
    for (int c : nd.children) {
        if (!subtree_has_2k2(t, c)) continue;
        if (base_child != -1) return std::nullopt;
        base_child = c;
    }
    if (base_child == -1) base_child = nd.children.front();
    auto seq = cograph_sequence_node(g, t, base_child);
    if (!seq) return std::nullopt;
    for (int c : nd.children)
        if (c != base_child) append_order_2k2_free(t, c, *seq);
    return seq;
}

std::optional<ModuleSequence> cograph_sequence_node(const Graph& g, const MDTree& t, int node) {
    const MDNode& nd = t.node(node);
    switch (nd.kind) {
        case MDKind::Leaf:
            return ModuleSequence{nd.vertex};
        case MDKind::CoJoin: {
            ModuleSequence seq;
            for (int c : nd.children) {
                auto part = cograph_sequence_node(g, t, c);
                if (!part) return std::nullopt;
                seq.insert(seq.end(), part->begin(), part->end());
            }
            return seq;
        }
        case MDKind::Join:
            return cograph_sequence_join(g, t, nd);
        case MDKind::Prime:
            break;
    }
    throw std::logic_error("cograph tree contains a prime node");
}

}  // namespace

std::optional<ModuleSequence> cograph_module_sequence(const Graph& g) {
    if (g.vertex_count() == 0) return ModuleSequence{};
    MDTree t = modular_decomposition(g);
    if (md_tree_has_prime(t)) throw std::invalid_argument("input is not a cograph");
    return cograph_sequence_node(g, t, t.root);
}

std::string class_name(ClassId c) {
    switch (c) {
        case ClassId::Cograph: return "cograph";
        case ClassId::TriviallyPerfect: return "trivially-perfect";
        case ClassId::Co2C4Free: return "co-2C4-free";
        case ClassId::P4Free: return "P4-free";
        case ClassId::C4Free: return "C4-free";
        case ClassId::HhdFree: return "hhd-free";
        case ClassId::HhdsFree: return "hhds-free";
        case ClassId::HhdgFree: return "distance-hereditary";
        case ClassId::WeaklyChordal: return "weakly-chordal";
        case ClassId::Perfect: return "perfect";
        case ClassId::Chordal62: return "chordal-6-2";
        case ClassId::HoleFree: return "hole-free";
        case ClassId::SunFree: return "sun-free";
        case ClassId::Bipartite: return "bipartite";
    }
    return "?";
}

std::optional<ClassId> parse_class_name(const std::string& name) {
    for (ClassId c : kAllClassIds)
        if (class_name(c) == name) return c;
    return std::nullopt;
}

}  // namespace modcom
