#include "modcom/bipartite_dh.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace modcom {

std::optional<std::vector<int>> is_bipartite(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n, -1);
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        queue.assign(1, s);
        for (size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int w : g.neighbors(u)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[u];
                    queue.push_back(w);
                } else if (color[w] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

BfsLevels bfs_levels(const Graph& g, int u) {
    const int n = g.vertex_count();
    if (u < 0 || u >= n) throw std::out_of_range("start vertex out of range");
    BfsLevels out;
    out.start = u;
    out.level_of.assign(n, -1);
    out.level_of[u] = 0;
    out.levels.push_back({u});
    while (true) {
        std::vector<int> next;
        for (int v : out.levels.back())
            for (int w : g.neighbors(v))
                if (out.level_of[w] == -1) {
                    out.level_of[w] = static_cast<int>(out.levels.size());
                    next.push_back(w);
                }
        if (next.empty()) break;
        out.levels.push_back(std::move(next));
    }
    return out;
}

namespace {

// Corollary-5 conditions on one connected component, given its levels.
bool check_bdh_component(const Graph& g, const BfsLevels& lv) {
    const int n = g.vertex_count();
    std::vector<int> group(n, -1);      // up-neighborhood class, previous level
    std::vector<int> covered_by(n, 0);  // laminar bookkeeping, 0 = untouched
    std::vector<int> up;
    for (size_t level = 0; level < lv.levels.size(); ++level) {
        const auto& members = lv.levels[level];
        for (int v : members)
            for (int w : g.neighbors(v))
                if (lv.level_of[w] == static_cast<int>(level)) return false;  // level edge
        if (level == 0) continue;

        std::map<std::vector<int>, int> group_ids;
        std::vector<int> next_group(members.size());
        std::vector<std::vector<int>> up_sets(members.size());
        for (size_t i = 0; i < members.size(); ++i) {
            int v = members[i];
            up.clear();
            for (int w : g.neighbors(v))
                if (lv.level_of[w] == static_cast<int>(level) - 1) up.push_back(w);
            if (level >= 2) {
                // all back-neighbors must agree two levels up
                for (int x : up)
                    if (group[x] != group[up[0]]) return false;
            }
            auto [it, _] = group_ids.try_emplace(up, static_cast<int>(group_ids.size()));
            next_group[i] = it->second;
            up_sets[i] = std::move(up);
        }
        // back-neighborhoods within a level must be disjoint or nested
        std::vector<size_t> order(members.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](size_t a, size_t b) { return up_sets[a].size() > up_sets[b].size(); });
        int set_id = 0;
        for (size_t i : order) {
            const auto& s = up_sets[i];
            ++set_id;
            int owner = covered_by[s[0]];
            for (int x : s)
                if (covered_by[x] != owner) return false;
            for (int x : s) covered_by[x] = set_id;
        }
        for (const auto& s : up_sets)
            for (int x : s) covered_by[x] = 0;
        for (size_t i = 0; i < members.size(); ++i) group[members[i]] = next_group[i];
    }
    return true;
}

}  // namespace

bool check_bdh(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        BfsLevels lv = bfs_levels(g, s);
        for (const auto& level : lv.levels)
            for (int v : level) seen[v] = 1;
        if (!check_bdh_component(g, lv)) return false;
    }
    return true;
}

std::optional<ModuleSequence> independent_module_sequence(const Graph& g) {
    if (!check_bdh(g)) return std::nullopt;
    const int n = g.vertex_count();
    ModuleSequence seq;
    std::vector<char> seen(n, 0);
    std::vector<std::pair<int, int>> keyed;  // (-|up-neighborhood|, vertex)
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        BfsLevels lv = bfs_levels(g, s);
        for (size_t level = 0; level < lv.levels.size(); ++level) {
            const auto& members = lv.levels[level];
            for (int v : members) seen[v] = 1;
            if (level < 2) {
                seq.insert(seq.end(), members.begin(), members.end());
                continue;
            }
            // supersets first: the level's back-neighborhoods are laminar, so
            // decreasing size realizes every inclusion chain
            keyed.clear();
            for (int v : members) {
                int back = 0;
                for (int w : g.neighbors(v))
                    if (lv.level_of[w] == static_cast<int>(level) - 1) ++back;
                keyed.emplace_back(-back, v);
            }
            std::sort(keyed.begin(), keyed.end());
            for (auto [_, v] : keyed) seq.push_back(v);
        }
    }
    return seq;
}

ModuleSequence lex_bfs(const Graph& g, int u, LexBfsTie tie, uint64_t seed) {
    const int n = g.vertex_count();
    if (u < 0 || u >= n) throw std::out_of_range("start vertex out of range");
    std::mt19937_64 rng(seed);
    std::vector<std::vector<int>> label(n);
    std::vector<char> visited(n, 0);
    ModuleSequence order;
    order.reserve(n);
    std::vector<int> best;
    int next = u;
    for (int step = 0; step < n; ++step) {
        int v;
        if (next != -1) {
            v = next;
            next = -1;
        } else {
            best.clear();
            for (int w = 0; w < n; ++w) {
                if (visited[w]) continue;
                if (best.empty() || label[best[0]] < label[w]) {
                    best.assign(1, w);
                } else if (tie == LexBfsTie::Random && label[best[0]] == label[w]) {
                    best.push_back(w);
                }
            }
            v = tie == LexBfsTie::Random ? best[rng() % best.size()] : best[0];
        }
        visited[v] = 1;
        order.push_back(v);
        for (int w : g.neighbors(v))
            if (!visited[w]) label[w].push_back(n - step);  // decreasing, so vector < works
    }
    return order;
}

}  // namespace modcom
