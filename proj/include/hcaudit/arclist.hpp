#pragma once

#include <string>
#include <string_view>

#include "hcaudit/digraph.hpp"

namespace hcaudit {

/// Parses the arc-list format: header "n m", then m lines "u v" with
/// 1-indexed endpoints; lines beginning '#' are ignored. A DIMACS-like
/// dialect ("c" comments, "p ... n m" header, "a u v" arcs) is detected
/// and accepted as alternate input. Errors carry the offending line.
Digraph parse_arclist(std::string_view text);

/// Inverse of parse_arclist on the canonical dialect: "n m\n" followed by
/// one "u v\n" per arc in arc order, 1-indexed, single spaces, LF endings.
std::string emit_arclist(const Digraph& d);

Digraph read_arclist_file(const std::string& path);
void write_arclist_file(const Digraph& d, const std::string& path);

}  // namespace hcaudit
