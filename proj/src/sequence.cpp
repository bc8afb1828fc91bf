#include "modcom/sequence.hpp"

namespace modcom {

namespace {

bool verify(const Graph& g, const ModuleSequence& seq, bool need_independent) {
    const int n = g.vertex_count();
    if (static_cast<int>(seq.size()) != n)
        throw std::invalid_argument("sequence length does not match vertex count");
    std::vector<int> pos(n, -1);  // position in the sequence, -1 = not yet seen
    for (int i = 0; i < n; ++i) {
        int v = seq[i];
        if (v < 0 || v >= n || pos[v] != -1)
            throw std::invalid_argument("sequence is not a permutation of the vertices");
        pos[v] = i;
    }
    std::vector<char> in_m(n, 0);
    std::vector<char> refout(n, 0);
    std::vector<int> m;
    for (int i = 1; i < n; ++i) {
        int v = seq[i];
        m.clear();
        for (int w : g.neighbors(v))
            if (pos[w] < i) m.push_back(w);
        if (m.size() <= (need_independent ? 0u : 1u)) continue;
        for (int w : m) in_m[w] = 1;
        bool ok = true;
        if (need_independent) {
            for (int u : m)
                for (int w : g.neighbors(u))
                    if (in_m[w]) {
                        ok = false;
                        break;
                    }
        }
        if (ok && m.size() > 1) {
            // all members must agree, outside M, within the prefix
            int refcount = 0;
            for (int w : g.neighbors(m[0]))
                if (pos[w] < i && !in_m[w]) {
                    refout[w] = 1;
                    ++refcount;
                }
            for (size_t j = 1; j < m.size() && ok; ++j) {
                int count = 0;
                for (int w : g.neighbors(m[j]))
                    if (pos[w] < i && !in_m[w]) {
                        if (!refout[w]) {
                            ok = false;
                            break;
                        }
                        ++count;
                    }
                if (ok && count != refcount) ok = false;
            }
            for (int w : g.neighbors(m[0])) refout[w] = 0;
        }
        for (int w : m) in_m[w] = 0;
        if (!ok) return false;
    }
    return true;
}

}  // namespace

bool verify_module_sequence(const Graph& g, const ModuleSequence& seq) {
    return verify(g, seq, false);
}

bool verify_independent_module_sequence(const Graph& g, const ModuleSequence& seq) {
    return verify(g, seq, true);
}

}  // namespace modcom
