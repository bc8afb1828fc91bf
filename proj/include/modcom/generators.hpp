#ifndef MODCOM_GENERATORS_HPP
#define MODCOM_GENERATORS_HPP

#include <cstdint>
#include <utility>

#include "modcom/graph.hpp"
#include "modcom/sequence.hpp"

namespace modcom {

// Grows a graph by n-1 vertex insertions whose neighborhoods are modules of
// the current graph (vertex sets of modular-decomposition nodes, or unions
// of children of a degenerate node). The returned insertion order 0..n-1 is
// a valid module-sequence by construction.
std::pair<Graph, ModuleSequence> random_module_composed(int n, uint64_t seed);

// Grows from a single vertex by attaching pendant vertices and false twins;
// the result is bipartite distance hereditary.
Graph random_bipartite_dh(int n, uint64_t seed);

// Erdos-Renyi G(n, p).
Graph random_graph(int n, double p, uint64_t seed);

// Random cotree with n leaves, random join/co-join labels.
Graph random_cograph(int n, uint64_t seed);

}  // namespace modcom

#endif
