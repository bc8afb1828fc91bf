#ifndef MODCOM_RECOGNIZER_HPP
#define MODCOM_RECOGNIZER_HPP

#include <optional>

#include "modcom/graph.hpp"
#include "modcom/sequence.hpp"

namespace modcom {

// Decides whether the graph is module-composed. A YES verdict carries a
// module-sequence in insertion order; NO is reported as nullopt.
//
// Repeatedly builds the modular decomposition of each connected part and
// eliminates, under a join root, all leaf children (else all leaf children of
// co-join children); under a prime root the same restricted to children of
// quotient-degree 1. The insertion order is the reverse of the elimination
// stream.
std::optional<ModuleSequence> recognize(const Graph& g);

// Exact exponential reference: a graph is module-composed iff some vertex v
// has N(v) forming a module of G - v with G - v module-composed.
// Memoized over vertex subsets; guarded at 12 vertices.
std::optional<ModuleSequence> brute_force_recognize(const Graph& g);

// Same recursion with the extra requirement that N(v) is an independent set;
// decides independent module-composedness. Guarded at 12 vertices.
std::optional<ModuleSequence> brute_force_recognize_independent(const Graph& g);

}  // namespace modcom

#endif
