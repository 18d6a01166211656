#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include <gmpxx.h>

namespace slopekit {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols);
    IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntegerMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntegerMatrix transpose() const;
    bool is_zero() const;

    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
    friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b);

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    // row[dst] += factor * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m);

/// Determinant by fraction-free (Bareiss) elimination. Requires a square matrix.
Integer determinant(const IntegerMatrix& m);

/// Result of smith_normal_form: unimodular U, V with U * M * V == D.
struct SmithForm {
    IntegerMatrix diagonal;
    IntegerMatrix left;
    IntegerMatrix right;
    std::size_t rank = 0;

    /// Nonzero diagonal entries d_1 | d_2 | ... | d_rank, all positive.
    std::vector<Integer> invariant_factors() const;
};

/// Smith normal form over Z with explicit transform accumulation. Pivots are
/// chosen by minimal absolute value in the remaining block.
SmithForm smith_normal_form(const IntegerMatrix& m);

/// Rank over Q.
std::size_t rank(const IntegerMatrix& m);

/// Generators of the integer kernel {x : M x = 0}, as the columns of the
/// returned cols x (cols - rank) matrix.
IntegerMatrix integer_kernel(const IntegerMatrix& m);

} // namespace slopekit
