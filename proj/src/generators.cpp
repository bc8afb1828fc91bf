#include "modcom/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "modcom/md_tree.hpp"

namespace modcom {

std::pair<Graph, ModuleSequence> random_module_composed(int n, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_module_composed: n must be >= 1");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    Graph g(1);
    for (int t = 1; t < n; ++t) {
        std::vector<int> hood;
        if (rng() % 10 == 0) {
            // isolated insertion; the empty set is a module
        } else {
            MDTree tree = modular_decomposition(g);
            const MDNode& node = tree.node(static_cast<int>(rng() % tree.nodes.size()));
            if (node.kind == MDKind::Join || node.kind == MDKind::CoJoin) {
                if (rng() % 2 == 0) {
                    // any union of children of a degenerate node is a module
                    std::vector<int> chosen;
                    while (chosen.empty())
                        for (int c : node.children)
                            if (rng() % 2 == 0) chosen.push_back(c);
                    for (int c : chosen) {
                        const auto& vs = tree.node(c).vertices;
                        hood.insert(hood.end(), vs.begin(), vs.end());
                    }
                } else {
                    hood = node.vertices;
                }
            } else {
                hood = node.vertices;
            }
        }
        for (int w : hood) edges.emplace_back(t, w);
        g = Graph::from_edges(t + 1, edges);
    }
    ModuleSequence seq(n);
    std::iota(seq.begin(), seq.end(), 0);
    return {std::move(g), std::move(seq)};
}

Graph random_bipartite_dh(int n, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_bipartite_dh: n must be >= 1");
    std::mt19937_64 rng(seed);
    std::vector<std::vector<int>> adj(n);
    for (int t = 1; t < n; ++t) {
        int v = static_cast<int>(rng() % t);
        if (rng() % 2 == 0) {
            // pendant
            adj[t].push_back(v);
            adj[v].push_back(t);
        } else {
            // false twin: same neighborhood, no edge to the twin
            adj[t] = adj[v];
            for (int w : adj[t]) adj[w].push_back(t);
        }
    }
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int w : adj[u])
            if (u < w) edges.emplace_back(u, w);
    return Graph::from_edges(n, edges);
}

Graph random_graph(int n, double p, uint64_t seed) {
    if (n < 0 || p < 0.0 || p > 1.0) throw std::invalid_argument("random_graph: bad parameters");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

namespace {

Graph random_cograph_rec(int n, std::mt19937_64& rng) {
    if (n == 1) return Graph(1);
    int parts = 2 + static_cast<int>(rng() % 2);
    parts = std::min(parts, n);
    // random composition of n into `parts` positive summands
    std::vector<int> sizes(parts, 1);
    for (int extra = n - parts; extra > 0; --extra) ++sizes[rng() % parts];
    bool use_join = rng() % 2 == 0;
    Graph acc = random_cograph_rec(sizes[0], rng);
    for (int i = 1; i < parts; ++i) {
        Graph next = random_cograph_rec(sizes[i], rng);
        acc = use_join ? join(acc, next) : disjoint_union(acc, next);
    }
    return acc;
}

}  // namespace

Graph random_cograph(int n, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_cograph: n must be >= 1");
    std::mt19937_64 rng(seed);
    return random_cograph_rec(n, rng);
}

}  // namespace modcom
