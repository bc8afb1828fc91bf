#ifndef MODCOM_CENSUS_HPP
#define MODCOM_CENSUS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "modcom/class_oracles.hpp"
#include "modcom/graph.hpp"

namespace modcom {

struct CensusConfig {
    enum class Mode { Exhaustive, Random };
    Mode mode = Mode::Exhaustive;
    int exhaustive_n = 4;  // all labeled graphs on exactly this many vertices
    long long random_count = 1000;
    int n_min = 1, n_max = 8;
    double edge_prob = 0.5;
    uint64_t seed = 0;
    std::vector<ClassId> classes;
    int jobs = 1;
    int max_counterexamples = 5;
};

struct ImplicationStat {
    std::string name;
    long long checked = 0;     // graphs where all involved oracles ran
    long long violations = 0;
    std::vector<std::string> counterexamples;  // edge-list texts
};

struct CensusReport {
    int format_version = 1;
    std::string mode;
    long long graph_count = 0;
    long long module_composed = 0;
    long long independent_module_composed = 0;  // where the oracle could run
    long long brute_force_checked = 0;
    long long brute_force_disagreements = 0;
    long long sequence_failures = 0;  // YES outputs rejected by the verifier
    std::map<std::string, long long> class_counts;
    std::vector<ImplicationStat> implications;
};

// Classifies every graph in scope and tallies all implications provable in
// the underlying theory; requested classes whose size guard cannot cover the
// configured graph sizes abort with guard_error.
CensusReport run_census(const CensusConfig& cfg);

std::string census_report_json(const CensusReport& report);

}  // namespace modcom

#endif
