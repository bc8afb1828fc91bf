#ifndef MODCOM_GRAPH_HPP
#define MODCOM_GRAPH_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace modcom {

// Malformed input (edge lists, sequences, CLI arguments).
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An exponential-time oracle was asked for an instance above its size cap.
struct guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Immutable simple undirected graph on vertices 0..n-1.
// Invariants: no self-loops, symmetric adjacency, sorted neighbor lists.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(check_count(n)) {}

    // Deduplicates edges; rejects self-loops and out-of-range endpoints.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return m_; }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    const std::vector<int>& neighbors(int v) const;
    bool adjacent(int u, int v) const;

    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph&) const = default;

private:
    static int check_count(int n);
    std::vector<std::vector<int>> adj_;
    int m_ = 0;
};

// Edge-list format: header "n m", then m lines "u v" (0-based).
// '#'-prefixed lines are comments; duplicate edges are ignored.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
Graph parse_edge_list_file(const std::string& path);
std::string to_edge_list(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_original;  // sub index -> original vertex
    std::vector<int> to_sub;       // original vertex -> sub index, -1 if dropped
};

// Keeps the order of `vertices` as the new indexing.
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph join(const Graph& a, const Graph& b);

// Components in BFS discovery order; vertices within a component in visit order.
std::vector<std::vector<int>> connected_components(const Graph& g);
// Connected components of the complement, computed without materializing it.
std::vector<std::vector<int>> co_connected_components(const Graph& g);

}  // namespace modcom

#endif
