#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "slopekit/integer_matrix.hpp"

using namespace slopekit;

namespace {

IntegerMatrix from(const oracle::Matrix& m) {
    IntegerMatrix out(m.size(), m.empty() ? 0 : m[0].size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j)
            out(i, j) = m[i][j];
    return out;
}

void check_smith(const IntegerMatrix& m) {
    const SmithForm s = smith_normal_form(m);
    CHECK(s.left * m * s.right == s.diagonal);
    CHECK(abs(determinant(s.left)) == 1);
    CHECK(abs(determinant(s.right)) == 1);
    for (std::size_t i = 0; i < s.diagonal.rows(); ++i)
        for (std::size_t j = 0; j < s.diagonal.cols(); ++j)
            if (i != j)
                CHECK(s.diagonal(i, j) == 0);
    const auto factors = s.invariant_factors();
    for (std::size_t i = 0; i < factors.size(); ++i) {
        CHECK(factors[i] > 0);
        if (i + 1 < factors.size())
            CHECK(factors[i + 1] % factors[i] == 0);
    }
    for (std::size_t i = s.rank; i < std::min(m.rows(), m.cols()); ++i)
        CHECK(s.diagonal(i, i) == 0);
}

} // namespace

TEST_CASE("smith normal form of diag(2, 3) is diag(1, 6)") {
    const IntegerMatrix m{{2, 0}, {0, 3}};
    const SmithForm s = smith_normal_form(m);
    CHECK(s.diagonal == IntegerMatrix{{1, 0}, {0, 6}});
    check_smith(m);
    // determinantal divisors: gcd of entries 1, determinant 6
    CHECK(oracle::invariant_factors({{2, 0}, {0, 3}}) == std::vector<mpz_class>{1, 6});
}

TEST_CASE("smith normal form of trivial shapes") {
    const IntegerMatrix zero(2, 3);
    CHECK(smith_normal_form(zero).diagonal == zero);
    CHECK(smith_normal_form(zero).rank == 0);

    const IntegerMatrix m{{1, 0}, {0, 0}};
    CHECK(smith_normal_form(m).diagonal == m);

    const IntegerMatrix empty(0, 3);
    const SmithForm s = smith_normal_form(empty);
    CHECK(s.rank == 0);
    CHECK(s.right == IntegerMatrix::identity(3));
}

TEST_CASE("smith normal form matches determinantal divisors on random matrices") {
    std::mt19937 rng(20260115);
    std::uniform_int_distribution<long> entry(-9, 9);
    std::uniform_int_distribution<int> dim(1, 4);
    for (int trial = 0; trial < 300; ++trial) {
        oracle::Matrix m(static_cast<std::size_t>(dim(rng)), std::vector<long>(static_cast<std::size_t>(dim(rng))));
        for (auto& row : m)
            for (auto& x : row)
                x = entry(rng);
        const IntegerMatrix im = from(m);
        check_smith(im);
        CHECK(smith_normal_form(im).invariant_factors() == oracle::invariant_factors(m));
    }
}

TEST_CASE("integer kernel columns are annihilated") {
    const IntegerMatrix m{{1, 2, 3}, {2, 4, 6}};
    const IntegerMatrix k = integer_kernel(m);
    CHECK(k.cols() == 2);
    CHECK((m * k).is_zero());
}

TEST_CASE("determinant by Bareiss elimination") {
    CHECK(determinant(IntegerMatrix{{2, 1}, {7, 4}}) == 1);
    CHECK(determinant(IntegerMatrix{{0, 1}, {1, 0}}) == -1);
    CHECK(determinant(IntegerMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 0);
    CHECK(determinant(IntegerMatrix{{2, 0, 1}, {1, 3, 2}, {1, 1, 2}}) == 6);
}
