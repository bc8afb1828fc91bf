#ifndef MODCOM_MD_TREE_HPP
#define MODCOM_MD_TREE_HPP

#include <vector>

#include "modcom/graph.hpp"

namespace modcom {

enum class MDKind { Leaf, Join, CoJoin, Prime };

struct MDNode {
    MDKind kind;
    int vertex = -1;            // leaf only
    std::vector<int> children;  // node indices, inner nodes only
    std::vector<int> vertices;  // leaves below, sorted
};

struct MDTree {
    std::vector<MDNode> nodes;
    int root = -1;

    const MDNode& node(int i) const { return nodes.at(static_cast<size_t>(i)); }
    const MDNode& root_node() const { return node(root); }
};

// True iff all members of m have identical neighborhoods outside m.
// Empty sets, singletons and the full vertex set are trivially modules.
bool is_module(const Graph& g, const std::vector<int>& m);

// All modules that overlap no other module, as sorted vertex sets.
// Exponential enumeration; guarded at 16 vertices.
std::vector<std::vector<int>> strong_modules_bruteforce(const Graph& g);

// Inclusion tree of the strong modules. Inner nodes are labeled by their
// quotient: clique (join), edgeless (co-join) or prime. Runs in polynomial
// time via partition refinement; no attempt at the linear-time algorithms.
MDTree modular_decomposition(const Graph& g);

// One vertex per child of the given inner node, adjacency via representatives.
Graph quotient_graph(const Graph& g, const MDTree& t, int node);

}  // namespace modcom

#endif
