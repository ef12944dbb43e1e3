#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace hcaudit {

enum class Errc {
    MalformedHeader,
    VertexOutOfRange,
    SelfLoop,
    DuplicateArc,
    DuplicateEdge,
    NotBalanced,
    InvalidProbability,
    InfeasibleSpec,
    TooSmall,
    TooLarge,
    NotADiscrepancy,
    SoundnessViolation,
    BadReport,
};

/// Library-wide error. `line()` is set for parse errors and names the
/// offending 1-based input line.
class Error : public std::runtime_error {
public:
    Error(Errc code, std::string message, std::optional<int> line = std::nullopt)
        : std::runtime_error(line ? message + " (line " + std::to_string(*line) + ")"
                                  : message),
          code_(code),
          line_(line) {}

    Errc code() const noexcept { return code_; }
    std::optional<int> line() const noexcept { return line_; }

private:
    Errc code_;
    std::optional<int> line_;
};

}  // namespace hcaudit
