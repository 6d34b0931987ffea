#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gitstab/numbers.hpp"

namespace gitstab::linalg {

/// Incremental reduced row echelon form over the rationals. The row span is
/// canonical, so serialized echelon state doubles as a memoization key.
class Echelon {
public:
    explicit Echelon(int cols) : cols_(cols) {}

    int rank() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }

    /// Reduce `row` against the basis; absorb it if independent.
    /// Returns true iff the rank grew.
    bool add(std::vector<Rat> row);

    /// True iff `row` lies in the current row span.
    bool spans(std::vector<Rat> row) const;

    /// Kernel direction when rank == cols - 1 (unique up to scale),
    /// scaled to a primitive integer vector.
    std::optional<std::vector<Int>> kernel_direction() const;

    /// Canonical serialization of the span (RREF is unique).
    std::string signature() const;

private:
    void reduce(std::vector<Rat>& row) const;
    int cols_;
    std::vector<std::vector<Rat>> rows_;  // RREF, sorted by pivot column
    std::vector<int> pivots_;
};

int rank(std::vector<std::vector<Rat>> rows);

/// Scale a rational vector to a primitive integer vector (empty input or zero
/// vector yields an all-zero result).
std::vector<Int> primitive_integer(const std::vector<Rat>& v);

}  // namespace gitstab::linalg
