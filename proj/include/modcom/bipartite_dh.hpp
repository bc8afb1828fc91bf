#ifndef MODCOM_BIPARTITE_DH_HPP
#define MODCOM_BIPARTITE_DH_HPP

#include <cstdint>
#include <optional>

#include "modcom/graph.hpp"
#include "modcom/sequence.hpp"

namespace modcom {

// Distance levels from a start vertex; vertices outside the start's
// component carry level -1.
struct BfsLevels {
    int start = 0;
    std::vector<std::vector<int>> levels;  // levels[i] = vertices at distance i
    std::vector<int> level_of;
};

// Proper 2-coloring (0/1 per vertex) if one exists.
std::optional<std::vector<int>> is_bipartite(const Graph& g);

BfsLevels bfs_levels(const Graph& g, int u);

// BFS-level test for bipartite distance-hereditary graphs: all levels are
// edgeless, back-neighborhoods two levels up agree for neighbors of a common
// vertex, and back-neighborhoods within a level form a laminar family.
// Disconnected graphs are checked per component. Runs in O(n + m log m).
bool check_bdh(const Graph& g);

// BFS order with each level k >= 2 rearranged so that larger (superset)
// back-neighborhoods come first. Absent iff check_bdh fails. Components are
// processed independently and concatenated.
std::optional<ModuleSequence> independent_module_sequence(const Graph& g);

enum class LexBfsTie { MinIndex, Random };

// Lexicographic BFS visit order from u; remaining components are appended in
// the same manner. Ties broken by smallest index or by the seeded RNG.
ModuleSequence lex_bfs(const Graph& g, int u, LexBfsTie tie = LexBfsTie::MinIndex,
                       uint64_t seed = 0);

}  // namespace modcom

#endif
