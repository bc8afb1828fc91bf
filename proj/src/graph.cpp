#include "modcom/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace modcom {

int Graph::check_count(int n) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    return n;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::out_of_range("edge endpoint out of range: " + std::to_string(u) + " " +
                                    std::to_string(v));
        if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        g.m_ += static_cast<int>(nb.size());
    }
    g.m_ /= 2;
    return g;
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= vertex_count())
        throw std::out_of_range("vertex out of range: " + std::to_string(v));
    return adj_[v];
}

bool Graph::adjacent(int u, int v) const {
    const auto& nb = neighbors(u);
    if (v < 0 || v >= vertex_count())
        throw std::out_of_range("vertex out of range: " + std::to_string(v));
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> es;
    es.reserve(m_);
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v) es.emplace_back(u, v);
    return es;
}

Graph parse_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    auto next_line = [&](std::string& out) {
        while (std::getline(in, line)) {
            ++lineno;
            auto pos = line.find_first_not_of(" \t\r");
            if (pos == std::string::npos || line[pos] == '#') continue;
            out = line;
            return true;
        }
        return false;
    };
    std::string header;
    if (!next_line(header)) throw parse_error("empty input, expected header \"n m\"");
    long long n, m;
    {
        std::istringstream hs(header);
        if (!(hs >> n >> m) || n < 0 || m < 0)
            throw parse_error("line " + std::to_string(lineno) + ": malformed header \"" + header +
                              "\"");
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) {
        std::string el;
        if (!next_line(el))
            throw parse_error("expected " + std::to_string(m) + " edge lines, got " +
                              std::to_string(i));
        long long u, v;
        std::istringstream es(el);
        if (!(es >> u >> v))
            throw parse_error("line " + std::to_string(lineno) + ": malformed edge \"" + el + "\"");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error("line " + std::to_string(lineno) + ": vertex out of range in \"" +
                              el + "\"");
        if (u == v)
            throw parse_error("line " + std::to_string(lineno) + ": self-loop in \"" + el + "\"");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

Graph parse_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file: " + path);
    return parse_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    const int n = g.vertex_count();
    InducedSubgraph sub;
    sub.to_sub.assign(n, -1);
    sub.to_original = vertices;
    for (size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (v < 0 || v >= n) throw std::out_of_range("vertex out of range: " + std::to_string(v));
        if (sub.to_sub[v] != -1)
            throw std::invalid_argument("duplicate vertex in subset: " + std::to_string(v));
        sub.to_sub[v] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < vertices.size(); ++i)
        for (int w : g.neighbors(vertices[i])) {
            int j = sub.to_sub[w];
            if (j > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), j);
        }
    sub.graph = Graph::from_edges(static_cast<int>(vertices.size()), edges);
    return sub;
}

Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        const auto& nb = g.neighbors(u);
        size_t k = 0;
        for (int v = u + 1; v < n; ++v) {
            while (k < nb.size() && nb[k] < v) ++k;
            if (k == nb.size() || nb[k] != v) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    const int na = a.vertex_count();
    std::vector<std::pair<int, int>> edges = a.edges();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + na, v + na);
    return Graph::from_edges(na + b.vertex_count(), edges);
}

Graph join(const Graph& a, const Graph& b) {
    const int na = a.vertex_count();
    const int nb = b.vertex_count();
    std::vector<std::pair<int, int>> edges = a.edges();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + na, v + na);
    for (int u = 0; u < na; ++u)
        for (int v = 0; v < nb; ++v) edges.emplace_back(u, na + v);
    return Graph::from_edges(na + nb, edges);
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(n, 0);
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        queue.clear();
        queue.push_back(s);
        seen[s] = 1;
        for (size_t head = 0; head < queue.size(); ++head)
            for (int w : g.neighbors(queue[head]))
                if (!seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
        comps.push_back(queue);
    }
    return comps;
}

std::vector<std::vector<int>> co_connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> comps;
    // Unvisited vertices kept in a shrinking list; complement-BFS pulls from it.
    std::vector<int> unvisited(n);
    for (int i = 0; i < n; ++i) unvisited[i] = i;
    std::vector<char> mark(n, 0);
    std::vector<int> queue, keep;
    while (!unvisited.empty()) {
        queue.clear();
        queue.push_back(unvisited.back());
        unvisited.pop_back();
        for (size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int w : g.neighbors(u)) mark[w] = 1;
            keep.clear();
            for (int w : unvisited) {
                if (mark[w])
                    keep.push_back(w);
                else
                    queue.push_back(w);
            }
            unvisited.swap(keep);
            for (int w : g.neighbors(u)) mark[w] = 0;
        }
        comps.push_back(queue);
    }
    return comps;
}

}  // namespace modcom
