#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modcom/bipartite_dh.hpp"
#include "modcom/class_oracles.hpp"
#include "modcom/generators.hpp"
#include "modcom/sequence.hpp"

using namespace modcom;

TEST_CASE("module-composed generator emits members with a valid certificate") {
    for (uint64_t seed = 0; seed < 60; ++seed) {
        auto [g, seq] = random_module_composed(10, seed);
        CAPTURE(seed);
        CHECK(g.vertex_count() == 10);
        REQUIRE(verify_module_sequence(g, seq));
    }
}

TEST_CASE("generators are deterministic per seed") {
    CHECK(random_module_composed(12, 5).first == random_module_composed(12, 5).first);
    CHECK(random_bipartite_dh(12, 5) == random_bipartite_dh(12, 5));
    CHECK(random_graph(12, 0.5, 5) == random_graph(12, 0.5, 5));
    CHECK(random_cograph(12, 5) == random_cograph(12, 5));
    CHECK(random_graph(12, 0.5, 5) != random_graph(12, 0.5, 6));
}

TEST_CASE("bipartite DH generator output passes the level test") {
    for (uint64_t seed = 0; seed < 60; ++seed) {
        Graph g = random_bipartite_dh(15, seed);
        CAPTURE(seed);
        CHECK(is_bipartite(g).has_value());
        CHECK(check_bdh(g));
    }
}

TEST_CASE("cograph generator emits cographs") {
    for (uint64_t seed = 0; seed < 60; ++seed) {
        Graph g = random_cograph(9, seed);
        CAPTURE(seed);
        CHECK(class_membership(g, ClassId::Cograph).member);
    }
}

TEST_CASE("gnp edge counts are sane") {
    CHECK(random_graph(10, 0.0, 1).edge_count() == 0);
    CHECK(random_graph(10, 1.0, 1).edge_count() == 45);
    CHECK_THROWS_AS(random_graph(5, 1.5, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_module_composed(0, 1), std::invalid_argument);
}
