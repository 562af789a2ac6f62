#pragma once

#include <cstddef>
#include <vector>

#include "nilcone/rational.hpp"

namespace nilcone {

/// Dense row-major matrix over Q.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    [[nodiscard]] bool is_upper_triangular() const;
    [[nodiscard]] std::vector<Rational> diagonal() const;

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

/// Basis of {x : A x = 0}. Rows are scaled to integers and reduced by
/// fraction-free elimination; pivots are taken at the lowest column index,
/// first eligible row. Each basis vector has a 1 at its own free column and
/// 0 at every other free column.
[[nodiscard]] std::vector<std::vector<Rational>> nullspace(const RationalMatrix& a);

/// Rank by the same elimination.
[[nodiscard]] std::size_t rank(const RationalMatrix& a);

/// Exact inverse. Throws std::domain_error if the matrix is singular.
[[nodiscard]] RationalMatrix inverse(const RationalMatrix& a);

}  // namespace nilcone
