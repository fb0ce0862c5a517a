#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wpt {

// Bad configuration or structurally invalid input, rejected before any
// computation runs.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed scenario or config text (JSON syntax, wrong types, ...).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Filesystem trouble: missing file, unreadable path, failed write.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Numeric argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// An iterative solver exhausted its iteration budget.
class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A requested exhaustive grid exceeds the safety cap and no override was
// given.  Carries the offending cell count so callers can report it.
class GridSizeError : public std::runtime_error {
public:
    GridSizeError(std::uint64_t cells, std::uint64_t cap)
        : std::runtime_error("grid of " + std::to_string(cells) +
                             " cells exceeds the cap of " + std::to_string(cap) +
                             "; pass the explicit override to run anyway"),
          cells_(cells) {}

    std::uint64_t cells() const noexcept { return cells_; }

private:
    std::uint64_t cells_;
};

}  // namespace wpt
