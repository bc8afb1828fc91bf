#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "modcom/bipartite_dh.hpp"
#include "modcom/class_oracles.hpp"
#include "modcom/generators.hpp"
#include "modcom/named_graphs.hpp"
#include "modcom/recognizer.hpp"
#include "modcom/sequence.hpp"

using namespace modcom;

namespace {

Graph mask_graph(int n, uint64_t mask) {
    std::vector<std::pair<int, int>> edges;
    int b = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++b)
            if (mask >> b & 1) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

}  // namespace

TEST_CASE("bipartiteness") {
    CHECK(is_bipartite(named_graph(NamedKind::Cycle, 6)).has_value());
    CHECK(!is_bipartite(named_graph(NamedKind::Cycle, 5)).has_value());
    auto col = is_bipartite(named_graph(NamedKind::Star, 4));
    REQUIRE(col.has_value());
    CHECK((*col)[0] != (*col)[1]);
}

TEST_CASE("bfs levels") {
    Graph p5 = named_graph(NamedKind::Path, 5);
    BfsLevels lv = bfs_levels(p5, 0);
    REQUIRE(lv.levels.size() == 5);
    CHECK(lv.level_of[4] == 4);
    Graph two = disjoint_union(p5, Graph(1));
    lv = bfs_levels(two, 0);
    CHECK(lv.level_of[5] == -1);
}

TEST_CASE("level test on named graphs") {
    CHECK(check_bdh(named_graph(NamedKind::Path, 8)));
    CHECK(check_bdh(named_graph(NamedKind::Star, 6)));
    CHECK(check_bdh(named_graph(NamedKind::Cycle, 4)));
    CHECK(check_bdh(Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}})));
    CHECK(!check_bdh(named_graph(NamedKind::Domino)));
    CHECK(!check_bdh(named_graph(NamedKind::Cycle, 6)));
    CHECK(!check_bdh(named_graph(NamedKind::Cycle, 8)));
    // trees pass
    CHECK(check_bdh(Graph::from_edges(7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {5, 6}})));
}

TEST_CASE("verdict does not depend on component entry points") {
    // the test must start from the BFS discovery vertex of each component;
    // permuting labels must not change the verdict
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 5 + static_cast<int>(rng() % 5);
        Graph g = random_bipartite_dh(n, rng());
        bool base = check_bdh(g);
        CHECK(base);  // generated bipartite DH graphs must pass
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::pair<int, int>> edges;
        for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
        CHECK(check_bdh(Graph::from_edges(n, edges)) == base);
    }
}

TEST_CASE("bipartite graphs: level test == independent module-composed, n<=7") {
    for (int n = 1; n <= 7; ++n) {
        int bits = n * (n - 1) / 2;
        for (uint64_t mask = 0; mask < (1ULL << bits); ++mask) {
            Graph g = mask_graph(n, mask);
            if (!is_bipartite(g)) continue;
            bool lvl = check_bdh(g);
            bool imc = brute_force_recognize_independent(g).has_value();
            CAPTURE(n);
            CAPTURE(mask);
            REQUIRE(lvl == imc);
        }
    }
}

TEST_CASE("emitted sequences verify") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = random_bipartite_dh(2 + static_cast<int>(rng() % 30), rng());
        auto seq = independent_module_sequence(g);
        CAPTURE(trial);
        REQUIRE(seq.has_value());
        REQUIRE(verify_independent_module_sequence(g, *seq));
    }
    CHECK(!independent_module_sequence(named_graph(NamedKind::Cycle, 6)).has_value());
}

TEST_CASE("lex-bfs output is a bfs order with lexicographic refinement") {
    Graph g = named_graph(NamedKind::Cycle, 6);
    auto order = lex_bfs(g, 0);
    REQUIRE(order.size() == 6);
    CHECK(order[0] == 0);
    CHECK((order == ModuleSequence{0, 1, 5, 2, 4, 3}));

    // all vertices appear exactly once even across components
    Graph two = disjoint_union(named_graph(NamedKind::Path, 3), named_graph(NamedKind::Path, 2));
    auto o2 = lex_bfs(two, 1);
    std::vector<int> sorted = o2;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(o2[0] == 1);

    // random tie-breaking is deterministic per seed
    Graph k33 = join(Graph(3), Graph(3));
    CHECK(lex_bfs(k33, 0, LexBfsTie::Random, 5) == lex_bfs(k33, 0, LexBfsTie::Random, 5));
}

TEST_CASE("reverse lex-bfs order of an accepted graph is a valid sequence") {
    // semi-perfect elimination: on graphs passing the level test, a lex-bfs
    // from any vertex, reversed... is exactly what the pipeline exploits via
    // the per-level reordering; spot-check that the pipeline sequence exists
    // whenever the level test passes (random bipartite graphs)
    std::mt19937_64 rng(13);
    int passed = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        Graph g = random_graph(7, 0.3, rng());
        if (!is_bipartite(g) || !check_bdh(g)) continue;
        ++passed;
        auto seq = independent_module_sequence(g);
        REQUIRE(seq.has_value());
        REQUIRE(verify_independent_module_sequence(g, *seq));
    }
    CHECK(passed > 50);
}
