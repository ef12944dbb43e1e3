#pragma once

#include <vector>

#include "hcaudit/digraph.hpp"

namespace hcaudit {

struct SccResult {
    std::vector<int> component;  // component id per vertex
    int count;
};

/// Strongly connected components of an adjacency-list digraph.
/// Iterative Tarjan; component ids are assigned in completion order.
SccResult tarjan_scc(const std::vector<std::vector<int>>& adj);

SccResult tarjan_scc(const Digraph& d);

/// True iff d has exactly one strongly connected component (n <= 1 counts
/// as strongly connected).
bool strongly_connected(const Digraph& d);

}  // namespace hcaudit
