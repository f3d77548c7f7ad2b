#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ag/rational.hpp"

namespace ag {

/// Dense matrix of exact rationals.
class RatMatrix {
  public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

    void append_row(std::span<const Rational> row);
    std::vector<Rational> row(std::size_t i) const;
    std::vector<Rational> col(std::size_t j) const;

    RatMatrix transposed() const;
    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    std::vector<Rational> apply(std::span<const Rational> v) const;

    bool operator==(const RatMatrix&) const = default;

  private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

/// Reduced row echelon form in place. Pivot selection is deterministic:
/// columns are scanned left to right and the first row with a nonzero entry
/// becomes the pivot. Returns the rank; pivot_cols (if given) receives the
/// pivot column of each echelon row.
std::size_t rref_in_place(RatMatrix& m,
                          std::vector<std::size_t>* pivot_cols = nullptr);

std::size_t rank(RatMatrix m);

/// Basis of the right kernel {x : m x = 0}, one vector per non-pivot
/// column, in increasing column order (deterministic).
std::vector<std::vector<Rational>> kernel_basis(RatMatrix m);

std::optional<RatMatrix> inverse(const RatMatrix& m);

Rational determinant(RatMatrix m);

/// One solution of m x = b, if any.
std::optional<std::vector<Rational>> solve(const RatMatrix& m,
                                           std::span<const Rational> b);

}  // namespace ag
