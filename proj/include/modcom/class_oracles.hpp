#ifndef MODCOM_CLASS_ORACLES_HPP
#define MODCOM_CLASS_ORACLES_HPP

#include <optional>
#include <string>

#include "modcom/graph.hpp"
#include "modcom/sequence.hpp"

namespace modcom {

enum class ClassId {
    Cograph,
    TriviallyPerfect,
    Co2C4Free,
    P4Free,
    C4Free,
    HhdFree,
    HhdsFree,
    HhdgFree,  // = distance hereditary
    WeaklyChordal,
    Perfect,
    Chordal62,
    HoleFree,
    SunFree,
    Bipartite,
};

inline constexpr ClassId kAllClassIds[] = {
    ClassId::Cograph,   ClassId::TriviallyPerfect, ClassId::Co2C4Free,
    ClassId::P4Free,    ClassId::C4Free,           ClassId::HhdFree,
    ClassId::HhdsFree,  ClassId::HhdgFree,         ClassId::WeaklyChordal,
    ClassId::Perfect,   ClassId::Chordal62,        ClassId::HoleFree,
    ClassId::SunFree,   ClassId::Bipartite,
};

struct Membership {
    bool member = false;
    // certificate for a negative verdict: the offending vertex set
    std::optional<std::vector<int>> witness;
};

// Vertex set inducing a copy of h in g, or absent.
// Guards: pattern <= 10 vertices, host <= 14.
std::optional<std::vector<int>> contains_induced(const Graph& g, const Graph& h);

// Induced chordless cycle on >= 5 vertices. Guard: n <= 14.
std::optional<std::vector<int>> has_hole(const Graph& g);

// Induced complete k-sun for some k >= 3; by Farber's result this decides
// containment of a sun. Guard: n <= 14.
std::optional<std::vector<int>> contains_sun(const Graph& g);

// Exact membership oracle per class; exponential, with per-class size guards
// (perfect: 9; cograph/bipartite: unguarded; everything else: 14).
Membership class_membership(const Graph& g, ClassId c);

// Lemma-style constructive sequence for cographs: peels, at every join node,
// a side with at most three vertices and at most one edge. Absent iff the
// cograph contains co-2C4. Throws if the input is not a cograph.
std::optional<ModuleSequence> cograph_module_sequence(const Graph& g);

// Exact numbers by exponential search; guard n <= 12.
int chromatic_number(const Graph& g);
int clique_number(const Graph& g);
int independence_number(const Graph& g);
int clique_cover_number(const Graph& g);

std::string class_name(ClassId c);
std::optional<ClassId> parse_class_name(const std::string& name);

}  // namespace modcom

#endif
