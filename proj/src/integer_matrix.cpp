#include "slopekit/integer_matrix.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace slopekit {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_)
            throw std::invalid_argument("IntegerMatrix: ragged initializer");
        for (long v : row)
            data_.emplace_back(v);
    }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::transpose() const {
    IntegerMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

bool IntegerMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return v == 0; });
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("IntegerMatrix: dimension mismatch in product");
    IntegerMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Integer& aik = a(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                c(i, j) += aik * b(k, j);
        }
    return c;
}

bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        std::swap((*this)(a, j), (*this)(b, j));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b)
        return;
    for (std::size_t i = 0; i < rows_; ++i)
        std::swap((*this)(i, a), (*this)(i, b));
}

void IntegerMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
    if (factor == 0)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        (*this)(dst, j) += factor * (*this)(src, j);
}

void IntegerMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
    if (factor == 0)
        return;
    for (std::size_t i = 0; i < rows_; ++i)
        (*this)(i, dst) += factor * (*this)(i, src);
}

void IntegerMatrix::negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j)
        (*this)(i, j) = -(*this)(i, j);
}

void IntegerMatrix::negate_col(std::size_t j) {
    for (std::size_t i = 0; i < rows_; ++i)
        (*this)(i, j) = -(*this)(i, j);
}

std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j ? " " : "") << m(i, j);
    }
    return os << ']';
}

Integer determinant(const IntegerMatrix& input) {
    if (input.rows() != input.cols())
        throw std::invalid_argument("determinant: matrix is not square");
    const std::size_t n = input.rows();
    if (n == 0)
        return 1;
    IntegerMatrix a = input;
    Integer previous = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
                a(i, j) = v;
            }
        previous = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::vector<Integer> SmithForm::invariant_factors() const {
    std::vector<Integer> out;
    out.reserve(rank);
    for (std::size_t i = 0; i < rank; ++i)
        out.push_back(diagonal(i, i));
    return out;
}

namespace {

// Position of the entry with the smallest nonzero absolute value in the block
// starting at (t, t); false when the block is zero.
bool find_pivot(const IntegerMatrix& d, std::size_t t, std::size_t& pr, std::size_t& pc) {
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            const Integer& v = d(i, j);
            if (v == 0)
                continue;
            if (!found || abs(v) < best) {
                best = abs(v);
                pr = i;
                pc = j;
                found = true;
                if (best == 1)
                    return true;
            }
        }
    return found;
}

Integer truncated_quotient(const Integer& a, const Integer& b) {
    Integer q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

} // namespace

SmithForm smith_normal_form(const IntegerMatrix& m) {
    SmithForm out{m, IntegerMatrix::identity(m.rows()), IntegerMatrix::identity(m.cols()), 0};
    IntegerMatrix& d = out.diagonal;
    IntegerMatrix& u = out.left;
    IntegerMatrix& v = out.right;
    const std::size_t limit = std::min(m.rows(), m.cols());

    std::size_t t = 0;
    for (; t < limit; ++t) {
        std::size_t pr = 0, pc = 0;
        if (!find_pivot(d, t, pr, pc))
            break;
        for (;;) {
            d.swap_rows(t, pr);
            u.swap_rows(t, pr);
            d.swap_cols(t, pc);
            v.swap_cols(t, pc);

            bool clean = true;
            for (std::size_t i = t + 1; i < d.rows(); ++i) {
                if (d(i, t) == 0)
                    continue;
                Integer q = -truncated_quotient(d(i, t), d(t, t));
                d.add_row_multiple(i, t, q);
                u.add_row_multiple(i, t, q);
                clean = clean && d(i, t) == 0;
            }
            for (std::size_t j = t + 1; j < d.cols(); ++j) {
                if (d(t, j) == 0)
                    continue;
                Integer q = -truncated_quotient(d(t, j), d(t, t));
                d.add_col_multiple(j, t, q);
                v.add_col_multiple(j, t, q);
                clean = clean && d(t, j) == 0;
            }
            if (!clean) {
                // a remainder smaller than the pivot survived; restart with it
                find_pivot(d, t, pr, pc);
                continue;
            }
            // divisibility: fold an offending row into the pivot row
            bool divides = true;
            for (std::size_t i = t + 1; i < d.rows() && divides; ++i)
                for (std::size_t j = t + 1; j < d.cols(); ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        d.add_row_multiple(t, i, 1);
                        u.add_row_multiple(t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides)
                break;
            pr = t;
            pc = t;
            find_pivot(d, t, pr, pc);
        }
        if (d(t, t) < 0) {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    out.rank = t;
    return out;
}

std::size_t rank(const IntegerMatrix& m) { return smith_normal_form(m).rank; }

IntegerMatrix integer_kernel(const IntegerMatrix& m) {
    const SmithForm snf = smith_normal_form(m);
    // M V = U^{-1} D, so columns of V past the rank span ker M.
    IntegerMatrix basis(m.cols(), m.cols() - snf.rank);
    for (std::size_t j = snf.rank; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.cols(); ++i)
            basis(i, j - snf.rank) = snf.right(i, j);
    return basis;
}

} // namespace slopekit
