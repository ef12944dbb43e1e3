#pragma once

#include <utility>
#include <vector>

#include "hcaudit/digraph.hpp"

namespace hcaudit {

/// Directed incidence matrix: column j has +1 at row tail(j) and -1 at
/// row head(j). Stored sparsely as the (tail, head) pair per column; the
/// C+ / C- split views keep the nonnegative / nonpositive parts.
class IncidenceMatrix {
public:
    IncidenceMatrix(int rows, std::vector<Arc> columns)
        : rows_(rows), columns_(std::move(columns)) {}

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return static_cast<int>(columns_.size()); }

    int entry(int i, int j) const {
        const auto [t, h] = columns_[static_cast<std::size_t>(j)];
        if (i == t) return 1;
        if (i == h) return -1;
        return 0;
    }

    int plus_entry(int i, int j) const { return entry(i, j) > 0 ? 1 : 0; }
    int minus_entry(int i, int j) const { return entry(i, j) < 0 ? -1 : 0; }

    /// (row, value) pairs of column j: the +1 at the tail, the -1 at the head.
    std::vector<std::pair<int, int>> column_nonzeros(int j) const {
        const auto [t, h] = columns_[static_cast<std::size_t>(j)];
        return {{t, 1}, {h, -1}};
    }

private:
    int rows_;
    std::vector<Arc> columns_;
};

IncidenceMatrix incidence_matrix(const Digraph& d);

struct RankInfo {
    int rank;        // n - components
    int components;  // weak components of (V, s), isolated vertices included
};

/// Rank of the incidence submatrix restricted to the columns in s,
/// computed by component counting (never elimination).
RankInfo rank_of_arcset(const Digraph& d, const ArcSet& s);

}  // namespace hcaudit
