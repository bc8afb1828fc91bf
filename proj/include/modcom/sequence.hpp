#ifndef MODCOM_SEQUENCE_HPP
#define MODCOM_SEQUENCE_HPP

#include <vector>

#include "modcom/graph.hpp"

namespace modcom {

// Insertion order: order[0] is inserted first. A valid module-sequence has,
// for every later vertex, a prefix-neighborhood that is a module of the
// graph induced by the prefix.
using ModuleSequence = std::vector<int>;

bool verify_module_sequence(const Graph& g, const ModuleSequence& seq);

// Additionally requires every prefix-neighborhood to be an independent set.
bool verify_independent_module_sequence(const Graph& g, const ModuleSequence& seq);

}  // namespace modcom

#endif
