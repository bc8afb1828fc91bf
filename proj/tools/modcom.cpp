// modcom: recognize module-composed graphs and related classes.
//
// Exit codes: 0 success / positive verdict, 1 negative verdict,
// 2 usage or input error, 3 size-guard violation.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "modcom/bipartite_dh.hpp"
#include "modcom/census.hpp"
#include "modcom/class_oracles.hpp"
#include "modcom/generators.hpp"
#include "modcom/graph.hpp"
#include "modcom/named_graphs.hpp"
#include "modcom/recognizer.hpp"
#include "modcom/sequence.hpp"

namespace {

using namespace modcom;

Graph load_graph(const std::string& path, const std::string& name) {
    if (!name.empty()) {
        auto id = parse_graph_name(name);
        if (!id) throw parse_error("unknown graph name: " + name);
        return named_graph(*id);
    }
    if (path.empty() || path == "-") return parse_edge_list(std::cin);
    return parse_edge_list_file(path);
}

void print_sequence(const ModuleSequence& seq) {
    for (size_t i = 0; i < seq.size(); ++i) std::cout << (i ? " " : "") << seq[i];
    std::cout << "\n";
}

ModuleSequence parse_sequence(const std::string& text, int n) {
    std::istringstream in(text);
    ModuleSequence seq;
    int v;
    while (in >> v) seq.push_back(v);
    if (!in.eof()) throw parse_error("sequence: expected whitespace-separated integers");
    if (static_cast<int>(seq.size()) != n)
        throw parse_error("sequence: expected " + std::to_string(n) + " vertices, got " +
                          std::to_string(seq.size()));
    return seq;
}

int run(int argc, char** argv) {
    CLI::App app{"module-composed graph toolkit"};
    app.require_subcommand(1);

    std::string path, name, seq_text, seq_path, out_path, classes_arg;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("file", path, "edge-list file ('-' or omitted: stdin)");
        cmd->add_option("--name", name, "built-in graph (C5, P4, K3, house, gem, ...)");
    };

    auto* rec = app.add_subcommand("recognize", "test whether the graph is module-composed");
    add_input(rec);
    bool rec_independent = false;
    rec->add_flag("--independent", rec_independent,
                  "require independent neighborhoods (bipartite pipeline)");

    auto* ver = app.add_subcommand("verify", "check a module-sequence against a graph");
    add_input(ver);
    ver->add_option("--sequence", seq_text, "insertion order as space-separated vertices");
    ver->add_option("--sequence-file", seq_path, "file holding the insertion order");
    bool ver_independent = false;
    ver->add_flag("--independent", ver_independent, "also require independent neighborhoods");

    auto* bdh = app.add_subcommand("bdh", "BFS-level test for bipartite distance-hereditary");
    add_input(bdh);

    auto* lbfs = app.add_subcommand("lexbfs", "lexicographic BFS order");
    add_input(lbfs);
    int lbfs_start = 0;
    bool lbfs_random = false;
    uint64_t lbfs_seed = 0;
    lbfs->add_option("--start", lbfs_start, "start vertex (default 0)");
    lbfs->add_flag("--random-ties", lbfs_random, "break ties with the seeded RNG");
    lbfs->add_option("--seed", lbfs_seed, "tie-breaking seed");

    auto* cls = app.add_subcommand("classify", "run class membership oracles");
    add_input(cls);
    cls->add_option("--classes", classes_arg, "comma-separated class names (default: all)");

    auto* gen = app.add_subcommand("generate", "emit a random graph as an edge list");
    int gen_n = 8;
    double gen_p = 0.5;
    uint64_t gen_seed = 0;
    std::string gen_family = "module-composed";
    gen->add_option("--family", gen_family,
                    "module-composed | bipartite-dh | cograph | gnp")
        ->check(CLI::IsMember({"module-composed", "bipartite-dh", "cograph", "gnp"}));
    gen->add_option("--n", gen_n, "vertex count")->check(CLI::PositiveNumber);
    gen->add_option("--p", gen_p, "edge probability (gnp only)");
    gen->add_option("--seed", gen_seed, "RNG seed");

    auto* cen = app.add_subcommand("census", "classify many graphs and tally implications");
    int cen_exhaustive = -1;
    long long cen_random = -1;
    std::string cen_range = "4..8";
    double cen_p = 0.5;
    uint64_t cen_seed = 0;
    int cen_jobs = 1;
    cen->add_option("--exhaustive", cen_exhaustive, "all labeled graphs on exactly N vertices");
    cen->add_option("--random", cen_random, "number of random graphs");
    cen->add_option("--n", cen_range, "vertex range MIN..MAX for random mode");
    cen->add_option("--p", cen_p, "edge probability for random mode");
    cen->add_option("--seed", cen_seed, "RNG seed");
    cen->add_option("--classes", classes_arg, "comma-separated class names (default: all)");
    cen->add_option("--jobs", cen_jobs, "worker threads")->check(CLI::PositiveNumber);
    cen->add_option("--out", out_path, "write the JSON report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    auto parse_classes = [&]() {
        std::vector<ClassId> out;
        if (classes_arg.empty()) {
            out.assign(std::begin(kAllClassIds), std::end(kAllClassIds));
            return out;
        }
        std::istringstream in(classes_arg);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            auto id = parse_class_name(tok);
            if (!id) throw parse_error("unknown class: " + tok);
            out.push_back(*id);
        }
        if (out.empty()) throw parse_error("--classes: empty list");
        return out;
    };

    if (rec->parsed()) {
        Graph g = load_graph(path, name);
        auto seq = rec_independent ? independent_module_sequence(g) : recognize(g);
        if (!seq) {
            std::cout << "NO\n";
            return 1;
        }
        std::cout << "YES\n";
        print_sequence(*seq);
        return 0;
    }

    if (ver->parsed()) {
        Graph g = load_graph(path, name);
        if (!seq_path.empty()) {
            std::ifstream in(seq_path);
            if (!in) throw parse_error("cannot open " + seq_path);
            std::stringstream ss;
            ss << in.rdbuf();
            seq_text = ss.str();
        }
        if (seq_text.empty()) throw parse_error("verify: --sequence or --sequence-file required");
        ModuleSequence seq = parse_sequence(seq_text, g.vertex_count());
        bool ok = ver_independent ? verify_independent_module_sequence(g, seq)
                                  : verify_module_sequence(g, seq);
        std::cout << (ok ? "VALID\n" : "INVALID\n");
        return ok ? 0 : 1;
    }

    if (bdh->parsed()) {
        Graph g = load_graph(path, name);
        if (!is_bipartite(g)) {
            std::cout << "NO (not bipartite)\n";
            return 1;
        }
        bool ok = check_bdh(g);
        std::cout << (ok ? "YES\n" : "NO\n");
        return ok ? 0 : 1;
    }

    if (lbfs->parsed()) {
        Graph g = load_graph(path, name);
        if (lbfs_start < 0 || lbfs_start >= g.vertex_count())
            throw parse_error("lexbfs: start vertex out of range");
        auto order = lex_bfs(g, lbfs_start,
                             lbfs_random ? LexBfsTie::Random : LexBfsTie::MinIndex, lbfs_seed);
        print_sequence(order);
        return 0;
    }

    if (cls->parsed()) {
        Graph g = load_graph(path, name);
        for (ClassId c : parse_classes()) {
            Membership m = class_membership(g, c);
            std::cout << class_name(c) << ": " << (m.member ? "yes" : "no");
            if (m.witness) {
                std::cout << "  witness:";
                for (int v : *m.witness) std::cout << " " << v;
            }
            std::cout << "\n";
        }
        return 0;
    }

    if (gen->parsed()) {
        Graph g;
        if (gen_family == "module-composed")
            g = random_module_composed(gen_n, gen_seed).first;
        else if (gen_family == "bipartite-dh")
            g = random_bipartite_dh(gen_n, gen_seed);
        else if (gen_family == "cograph")
            g = random_cograph(gen_n, gen_seed);
        else
            g = random_graph(gen_n, gen_p, gen_seed);
        std::cout << to_edge_list(g);
        return 0;
    }

    // census
    CensusConfig cfg;
    if ((cen_exhaustive >= 0) == (cen_random >= 0))
        throw parse_error("census: pass exactly one of --exhaustive or --random");
    if (cen_exhaustive >= 0) {
        cfg.mode = CensusConfig::Mode::Exhaustive;
        cfg.exhaustive_n = cen_exhaustive;
    } else {
        cfg.mode = CensusConfig::Mode::Random;
        cfg.random_count = cen_random;
        auto dots = cen_range.find("..");
        try {
            if (dots == std::string::npos) {
                cfg.n_min = cfg.n_max = std::stoi(cen_range);
            } else {
                cfg.n_min = std::stoi(cen_range.substr(0, dots));
                cfg.n_max = std::stoi(cen_range.substr(dots + 2));
            }
        } catch (const std::exception&) {
            throw parse_error("census: --n expects MIN..MAX");
        }
        cfg.edge_prob = cen_p;
        cfg.seed = cen_seed;
    }
    cfg.classes = parse_classes();
    cfg.jobs = cen_jobs;
    CensusReport report = run_census(cfg);
    std::string json = census_report_json(report);
    if (out_path.empty()) {
        std::cout << json;
    } else {
        std::ofstream out(out_path);
        if (!out) throw parse_error("cannot open " + out_path);
        out << json;
    }
    long long bad = report.brute_force_disagreements + report.sequence_failures;
    for (const auto& imp : report.implications) bad += imp.violations;
    std::cerr << "graphs: " << report.graph_count << ", module-composed: "
              << report.module_composed << ", violations: " << bad << "\n";
    return bad == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const modcom::guard_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const modcom::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
