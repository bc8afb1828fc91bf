#include "modcom/census.hpp"

#include <atomic>
#include <optional>
#include <thread>

#include <json.hpp>

#include "modcom/bipartite_dh.hpp"
#include "modcom/generators.hpp"
#include "modcom/named_graphs.hpp"
#include "modcom/recognizer.hpp"
#include "modcom/sequence.hpp"

namespace modcom {

namespace {

constexpr int kBruteForceCap = 12;

int class_guard(ClassId c) {
    switch (c) {
        case ClassId::Cograph:
        case ClassId::Bipartite:
            return 1 << 30;
        case ClassId::Perfect:
            return 9;
        default:
            return 14;
    }
}

struct GraphVerdicts {
    bool mc = false;
    bool seq_ok = true;
    bool bf_known = false, bf = false;
    bool imc_known = false, imc = false;
    bool bdh = false;
    bool domino_free = false;
    std::vector<char> cls;  // indexed like cfg.classes
};

struct Tally {
    long long graph_count = 0;
    long long module_composed = 0;
    long long independent_module_composed = 0;
    long long brute_force_checked = 0;
    long long brute_force_disagreements = 0;
    long long sequence_failures = 0;
    std::vector<long long> class_counts;
    std::vector<ImplicationStat> implications;
};

struct Implication {
    std::string name;
    // returns nullopt when an involved oracle did not run on this graph
    std::optional<bool> (*holds)(const GraphVerdicts&, const std::vector<ClassId>&);
};

std::optional<bool> lookup(const GraphVerdicts& v, const std::vector<ClassId>& classes,
                           ClassId wanted) {
    for (size_t i = 0; i < classes.size(); ++i)
        if (classes[i] == wanted) return static_cast<bool>(v.cls[i]);
    return std::nullopt;
}

#define NEED(var, id)                             \
    auto var = lookup(v, classes, id);            \
    if (!var) return std::nullopt

const Implication kImplications[] = {
    {"module-composed => hhds-free",
     [](const GraphVerdicts& v, const std::vector<ClassId>& classes) -> std::optional<bool> {
         NEED(x, ClassId::HhdsFree);
         return !v.mc || *x;
     }},
    {"module-composed => weakly-chordal",
     [](const GraphVerdicts& v, const std::vector<ClassId>& classes) -> std::optional<bool> {
         NEED(x, ClassId::WeaklyChordal);
         return !v.mc || *x;
     }},
    {"module-composed => perfect",
     [](const GraphVerdicts& v, const std::vector<ClassId>& classes) -> std::optional<bool> {
         NEED(x, ClassId::Perfect);
         return !v.mc || *x;
     }},
    {"trivially-perfect => module-composed",
     [](const GraphVerdicts& v, const std::vector<ClassId>& classes) -> std::optional<bool> {
         NEED(x, ClassId::TriviallyPerfect);
         return !*x || v.mc;
     }},
    {"(co-2C4,P4)-free => module-composed",
     [](const GraphVerdicts& v, const std::vector<ClassId>& classes) -> std::optional<bool> {
         NEED(a, ClassId::Co2C4Free);
         NEED(b, ClassId::P4Free);
         return !(*a && *b) || v.mc;
     }},
    {"cograph: module-composed <=> co-2C4-free",
     [](const GraphVerdicts& v, const std::vector<ClassId>& classes) -> std::optional<bool> {
         NEED(cg, ClassId::Cograph);
         NEED(free, ClassId::Co2C4Free);
         return !*cg || (v.mc == *free);
     }},
    {"independent module-composed => distance-hereditary",
     [](const GraphVerdicts& v, const std::vector<ClassId>& classes) -> std::optional<bool> {
         if (!v.imc_known) return std::nullopt;
         NEED(dh, ClassId::HhdgFree);
         return !v.imc || *dh;
     }},
    {"bipartite: module-composed <=> distance-hereditary",
     [](const GraphVerdicts& v, const std::vector<ClassId>& classes) -> std::optional<bool> {
         NEED(bip, ClassId::Bipartite);
         NEED(dh, ClassId::HhdgFree);
         return !*bip || (v.mc == *dh);
     }},
    {"bipartite: module-composed <=> domino-and-hole-free",
     [](const GraphVerdicts& v, const std::vector<ClassId>& classes) -> std::optional<bool> {
         NEED(bip, ClassId::Bipartite);
         NEED(hf, ClassId::HoleFree);
         return !*bip || (v.mc == (*hf && v.domino_free));
     }},
    {"bipartite: module-composed <=> (6,2)-chordal",
     [](const GraphVerdicts& v, const std::vector<ClassId>& classes) -> std::optional<bool> {
         NEED(bip, ClassId::Bipartite);
         NEED(ch, ClassId::Chordal62);
         return !*bip || (v.mc == *ch);
     }},
    {"bipartite: module-composed <=> BFS-level test",
     [](const GraphVerdicts& v, const std::vector<ClassId>& classes) -> std::optional<bool> {
         NEED(bip, ClassId::Bipartite);
         return !*bip || (v.mc == v.bdh);
     }},
};

#undef NEED

GraphVerdicts classify_graph(const Graph& g, const CensusConfig& cfg, const Graph& domino) {
    GraphVerdicts v;
    auto seq = recognize(g);
    v.mc = seq.has_value();
    if (seq) v.seq_ok = verify_module_sequence(g, *seq);
    if (g.vertex_count() <= kBruteForceCap) {
        v.bf_known = true;
        v.bf = brute_force_recognize(g).has_value();
        v.imc_known = true;
        v.imc = brute_force_recognize_independent(g).has_value();
    }
    v.bdh = check_bdh(g);
    v.domino_free = g.vertex_count() > 14 || !contains_induced(g, domino).has_value();
    v.cls.resize(cfg.classes.size());
    for (size_t i = 0; i < cfg.classes.size(); ++i)
        v.cls[i] = class_membership(g, cfg.classes[i]).member;
    return v;
}

void tally_graph(Tally& t, const Graph& g, const GraphVerdicts& v, const CensusConfig& cfg) {
    ++t.graph_count;
    if (v.mc) ++t.module_composed;
    if (v.imc_known) {
        if (v.imc) ++t.independent_module_composed;
    }
    if (v.bf_known) {
        ++t.brute_force_checked;
        if (v.bf != v.mc) {
            ++t.brute_force_disagreements;
        }
    }
    if (!v.seq_ok) ++t.sequence_failures;
    for (size_t i = 0; i < cfg.classes.size(); ++i)
        if (v.cls[i]) ++t.class_counts[i];
    for (size_t i = 0; i < std::size(kImplications); ++i) {
        auto verdict = kImplications[i].holds(v, cfg.classes);
        if (!verdict) continue;
        auto& stat = t.implications[i];
        ++stat.checked;
        if (!*verdict) {
            ++stat.violations;
            if (static_cast<int>(stat.counterexamples.size()) < cfg.max_counterexamples)
                stat.counterexamples.push_back(to_edge_list(g));
        }
    }
}

Tally make_tally(const CensusConfig& cfg) {
    Tally t;
    t.class_counts.assign(cfg.classes.size(), 0);
    t.implications.resize(std::size(kImplications));
    for (size_t i = 0; i < std::size(kImplications); ++i)
        t.implications[i].name = kImplications[i].name;
    return t;
}

void merge_tally(Tally& into, const Tally& from, const CensusConfig& cfg) {
    into.graph_count += from.graph_count;
    into.module_composed += from.module_composed;
    into.independent_module_composed += from.independent_module_composed;
    into.brute_force_checked += from.brute_force_checked;
    into.brute_force_disagreements += from.brute_force_disagreements;
    into.sequence_failures += from.sequence_failures;
    for (size_t i = 0; i < into.class_counts.size(); ++i)
        into.class_counts[i] += from.class_counts[i];
    for (size_t i = 0; i < into.implications.size(); ++i) {
        auto& a = into.implications[i];
        const auto& b = from.implications[i];
        a.checked += b.checked;
        a.violations += b.violations;
        for (const auto& ce : b.counterexamples)
            if (static_cast<int>(a.counterexamples.size()) < cfg.max_counterexamples)
                a.counterexamples.push_back(ce);
    }
}

Graph graph_from_mask(int n, uint64_t mask) {
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

uint64_t mix(uint64_t a, uint64_t b) {
    uint64_t x = a * 0x9e3779b97f4a7c15ULL + b;
    x ^= x >> 30;
    x *= 0xbf58476d1ce4568bULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

}  // namespace

CensusReport run_census(const CensusConfig& cfg) {
    const bool exhaustive = cfg.mode == CensusConfig::Mode::Exhaustive;
    if (exhaustive && (cfg.exhaustive_n < 1 || cfg.exhaustive_n > 7))
        throw guard_error("census: exhaustive mode supports 1 <= n <= 7");
    if (!exhaustive && (cfg.n_min < 1 || cfg.n_min > cfg.n_max))
        throw guard_error("census: bad vertex range");
    const int max_n = exhaustive ? cfg.exhaustive_n : cfg.n_max;
    for (ClassId c : cfg.classes)
        if (max_n > class_guard(c))
            throw guard_error("census: class " + class_name(c) + " is guarded at " +
                              std::to_string(class_guard(c)) + " vertices, requested n=" +
                              std::to_string(max_n));

    const Graph domino = named_graph(NamedKind::Domino);
    long long total = exhaustive ? (1LL << (cfg.exhaustive_n * (cfg.exhaustive_n - 1) / 2))
                                 : cfg.random_count;
    auto graph_at = [&](long long index) {
        if (exhaustive) return graph_from_mask(cfg.exhaustive_n, static_cast<uint64_t>(index));
        uint64_t s = mix(cfg.seed, static_cast<uint64_t>(index));
        int n = cfg.n_min + static_cast<int>(s % (cfg.n_max - cfg.n_min + 1));
        return random_graph(n, cfg.edge_prob, mix(s, 0x5eed));
    };

    // fixed-size blocks keep the merge order independent of the job count
    const long long block_size = 2048;
    const long long blocks = (total + block_size - 1) / block_size;
    std::vector<Tally> partial(static_cast<size_t>(blocks));
    std::atomic<long long> next_block{0};
    auto worker = [&] {
        for (;;) {
            long long b = next_block.fetch_add(1);
            if (b >= blocks) return;
            Tally t = make_tally(cfg);
            long long lo = b * block_size, hi = std::min(total, lo + block_size);
            for (long long i = lo; i < hi; ++i) {
                Graph g = graph_at(i);
                tally_graph(t, g, classify_graph(g, cfg, domino), cfg);
            }
            partial[static_cast<size_t>(b)] = std::move(t);
        }
    };
    int jobs = std::max(1, cfg.jobs);
    std::vector<std::thread> threads;
    for (int j = 1; j < jobs; ++j) threads.emplace_back(worker);
    worker();
    for (auto& th : threads) th.join();

    Tally t = make_tally(cfg);
    for (const auto& p : partial) merge_tally(t, p, cfg);

    CensusReport report;
    report.mode = exhaustive ? "exhaustive(n=" + std::to_string(cfg.exhaustive_n) + ")"
                             : "random(count=" + std::to_string(cfg.random_count) + ")";
    report.graph_count = t.graph_count;
    report.module_composed = t.module_composed;
    report.independent_module_composed = t.independent_module_composed;
    report.brute_force_checked = t.brute_force_checked;
    report.brute_force_disagreements = t.brute_force_disagreements;
    report.sequence_failures = t.sequence_failures;
    for (size_t i = 0; i < cfg.classes.size(); ++i)
        report.class_counts[class_name(cfg.classes[i])] = t.class_counts[i];
    report.implications = std::move(t.implications);
    return report;
}

std::string census_report_json(const CensusReport& report) {
    nlohmann::ordered_json j;
    j["format_version"] = report.format_version;
    j["mode"] = report.mode;
    j["graph_count"] = report.graph_count;
    j["module_composed"] = report.module_composed;
    j["independent_module_composed"] = report.independent_module_composed;
    j["brute_force_checked"] = report.brute_force_checked;
    j["brute_force_disagreements"] = report.brute_force_disagreements;
    j["sequence_failures"] = report.sequence_failures;
    j["class_counts"] = nlohmann::ordered_json::object();
    for (const auto& [name, count] : report.class_counts) j["class_counts"][name] = count;
    j["implications"] = nlohmann::ordered_json::array();
    for (const auto& imp : report.implications) {
        nlohmann::ordered_json ji;
        ji["name"] = imp.name;
        ji["checked"] = imp.checked;
        ji["violations"] = imp.violations;
        ji["counterexamples"] = imp.counterexamples;
        j["implications"].push_back(ji);
    }
    return j.dump(2) + "\n";
}

}  // namespace modcom
