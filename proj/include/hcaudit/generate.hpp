#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hcaudit/digraph.hpp"

namespace hcaudit {

enum class Family {
    Gnp,             // each ordered pair (u != v) present independently with prob. p
    DegreeBoundTwo,  // out-degree <= 2 and in-degree <= 2
    SingleCycle,     // one random directed n-cycle
    DisjointCycles,  // vertex-disjoint directed cycles of the given lengths
    Prism,           // fixed 6-vertex candidate stress instance
    FromFile,        // arc-list file
};

const char* family_name(Family f);
Family family_from_name(const std::string& name);

/// Instance recipe. Identical GenSpec values always produce bit-identical
/// digraphs (same n, same arc order).
struct GenSpec {
    Family family = Family::Gnp;
    int n = 0;
    std::uint64_t seed = 0;
    double p = 0.0;                  // Gnp only
    std::vector<int> cycle_lengths;  // DisjointCycles only; must sum to n
    std::string path;                // FromFile only
};

/// Throws Error(InvalidProbability) for p outside [0, 1] and
/// Error(InfeasibleSpec) for unsatisfiable shapes.
Digraph generate(const GenSpec& spec);

/// Two directed triangles 0->1->2->0 and 3->4->5->3 joined by the
/// symmetric rungs 0<->3, 1<->4, 2<->5. Every cycle cover is either the
/// triangle pair or the three rung 2-cycles, so the allowed-edge carrier
/// spans and is connected while no Hamiltonian cycle exists — the standing
/// candidate counterexample for the pipeline.
Digraph prism();

}  // namespace hcaudit
