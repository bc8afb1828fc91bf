#ifndef MODCOM_NAMED_GRAPHS_HPP
#define MODCOM_NAMED_GRAPHS_HPP

#include <optional>
#include <string>

#include "modcom/graph.hpp"

namespace modcom {

enum class NamedKind {
    Cycle,        // C_n, n >= 3
    CoCycle,      // complement of C_n, n >= 3
    Path,         // P_n, n >= 1
    Clique,       // K_n, n >= 1
    House,        // C5 plus one chord forming a triangle
    Gem,          // P4 plus a universal vertex
    Domino,       // two squares sharing an edge
    CoK33MinusE,  // complement of K3,3 minus one edge
    Sun,          // k-sun with inner cycle, k >= 3
    CompleteSun,  // k-sun with inner clique, k >= 3
    Co2C4,        // complement of the disjoint union of two C4
    Star,         // K_{1,k}, k >= 1 leaves, center 0
};

struct NamedGraphId {
    NamedKind kind;
    int param = 0;  // size parameter where applicable
};

Graph named_graph(const NamedGraphId& id);
Graph named_graph(NamedKind kind, int param = 0);

// Accepts "C5", "co-C5", "P4", "K3", "house", "gem", "domino", "co-K33-e",
// "sun3", "complete-sun3", "co-2C4", "star4".
std::optional<NamedGraphId> parse_graph_name(const std::string& name);
std::string graph_name(const NamedGraphId& id);

}  // namespace modcom

#endif
