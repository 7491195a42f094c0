#pragma once

#include "certify/rational.hpp"

#include <cstddef>
#include <vector>

namespace certify {

/// Dense rectangular system A*x = b over Q(i).
class LinearSystem {
public:
    LinearSystem(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols), rhs_(rows) {}

    LinearSystem(std::vector<std::vector<GR>> rows, std::vector<GR> rhs);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    GR& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const GR& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    GR& rhs(std::size_t r) { return rhs_[r]; }
    const GR& rhs(std::size_t r) const { return rhs_[r]; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<GR> a_;
    std::vector<GR> rhs_;
};

/// One particular solution plus a basis of the nullspace, or inconsistency.
struct SolutionSet {
    bool consistent = false;
    std::vector<GR> solution;                // free variables set to zero
    std::vector<std::vector<GR>> nullspace;  // each normalized to 1 at its free column
};

/// Exact Gaussian elimination with first-nonzero pivoting. Every returned
/// solution and nullspace vector is re-checked against the input by
/// back-substitution before return.
SolutionSet solve_linear(const LinearSystem& sys);

}  // namespace certify
