#include "modcom/named_graphs.hpp"

#include <cctype>

namespace modcom {

namespace {

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph path(int n) {
    if (n < 1) throw std::invalid_argument("path needs at least 1 vertex");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

Graph clique(int n) {
    if (n < 1) throw std::invalid_argument("clique needs at least 1 vertex");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

// 2k vertices: inner u_0..u_{k-1} then outer w_0..w_{k-1} (independent);
// w_j is adjacent to u_j and u_{(j+1) mod k}.
Graph sun(int k, bool complete_inner) {
    if (k < 3) throw std::invalid_argument("sun needs k >= 3");
    std::vector<std::pair<int, int>> edges;
    if (complete_inner) {
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) edges.emplace_back(i, j);
    } else {
        for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
    }
    for (int j = 0; j < k; ++j) {
        edges.emplace_back(k + j, j);
        edges.emplace_back(k + j, (j + 1) % k);
    }
    return Graph::from_edges(2 * k, edges);
}

Graph star(int leaves) {
    if (leaves < 1) throw std::invalid_argument("star needs at least 1 leaf");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return Graph::from_edges(leaves + 1, edges);
}

}  // namespace

Graph named_graph(const NamedGraphId& id) {
    switch (id.kind) {
        case NamedKind::Cycle:
            return cycle(id.param);
        case NamedKind::CoCycle:
            return complement(cycle(id.param));
        case NamedKind::Path:
            return path(id.param);
        case NamedKind::Clique:
            return clique(id.param);
        case NamedKind::House:
            // cycle 0-1-2-3-4 plus chord {0,2}: triangle 0,1,2 over square 0,2,3,4
            return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}});
        case NamedKind::Gem:
            return join(path(4), clique(1));
        case NamedKind::Domino:
            // 6-cycle plus chord {0,3}: squares 0,1,2,3 and 0,3,4,5
            return Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}});
        case NamedKind::CoK33MinusE: {
            // K3,3 on {0,1,2}|{3,4,5} minus edge {0,3}, complemented:
            // two triangles plus the edge {0,3}.
            return Graph::from_edges(
                6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}});
        }
        case NamedKind::Sun:
            return sun(id.param, false);
        case NamedKind::CompleteSun:
            return sun(id.param, true);
        case NamedKind::Co2C4:
            return complement(disjoint_union(cycle(4), cycle(4)));
        case NamedKind::Star:
            return star(id.param);
    }
    throw std::invalid_argument("unknown named graph");
}

Graph named_graph(NamedKind kind, int param) { return named_graph(NamedGraphId{kind, param}); }

std::optional<NamedGraphId> parse_graph_name(const std::string& name) {
    auto num_suffix = [](const std::string& s, size_t pos) -> std::optional<int> {
        if (pos >= s.size()) return std::nullopt;
        for (size_t i = pos; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
        return std::stoi(s.substr(pos));
    };
    if (name == "house") return NamedGraphId{NamedKind::House};
    if (name == "gem") return NamedGraphId{NamedKind::Gem};
    if (name == "domino") return NamedGraphId{NamedKind::Domino};
    if (name == "co-K33-e") return NamedGraphId{NamedKind::CoK33MinusE};
    if (name == "co-2C4") return NamedGraphId{NamedKind::Co2C4};
    if (name.rfind("co-C", 0) == 0)
        if (auto k = num_suffix(name, 4); k && *k >= 3)
            return NamedGraphId{NamedKind::CoCycle, *k};
    if (name.rfind("complete-sun", 0) == 0)
        if (auto k = num_suffix(name, 12); k && *k >= 3)
            return NamedGraphId{NamedKind::CompleteSun, *k};
    if (name.rfind("sun", 0) == 0)
        if (auto k = num_suffix(name, 3); k && *k >= 3) return NamedGraphId{NamedKind::Sun, *k};
    if (name.rfind("star", 0) == 0)
        if (auto k = num_suffix(name, 4); k && *k >= 1) return NamedGraphId{NamedKind::Star, *k};
    if (name.size() >= 2 && (name[0] == 'C' || name[0] == 'P' || name[0] == 'K'))
        if (auto k = num_suffix(name, 1)) {
            if (name[0] == 'C' && *k >= 3) return NamedGraphId{NamedKind::Cycle, *k};
            if (name[0] == 'P' && *k >= 1) return NamedGraphId{NamedKind::Path, *k};
            if (name[0] == 'K' && *k >= 1) return NamedGraphId{NamedKind::Clique, *k};
        }
    return std::nullopt;
}

std::string graph_name(const NamedGraphId& id) {
    switch (id.kind) {
        case NamedKind::Cycle:
            return "C" + std::to_string(id.param);
        case NamedKind::CoCycle:
            return "co-C" + std::to_string(id.param);
        case NamedKind::Path:
            return "P" + std::to_string(id.param);
        case NamedKind::Clique:
            return "K" + std::to_string(id.param);
        case NamedKind::House:
            return "house";
        case NamedKind::Gem:
            return "gem";
        case NamedKind::Domino:
            return "domino";
        case NamedKind::CoK33MinusE:
            return "co-K33-e";
        case NamedKind::Sun:
            return "sun" + std::to_string(id.param);
        case NamedKind::CompleteSun:
            return "complete-sun" + std::to_string(id.param);
        case NamedKind::Co2C4:
            return "co-2C4";
        case NamedKind::Star:
            return "star" + std::to_string(id.param);
    }
    return "?";
}

}  // namespace modcom
