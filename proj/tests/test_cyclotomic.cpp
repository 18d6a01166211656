#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "slopekit/cyclotomic.hpp"

using namespace slopekit;

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) {
    std::vector<Integer> out;
    for (long x : xs)
        out.emplace_back(x);
    return out;
}

CyclotomicNumber random_element(std::mt19937& rng, int m) {
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 4);
    std::vector<Rational> c(static_cast<std::size_t>(m));
    for (auto& x : c) {
        x = Rational(num(rng), den(rng));
        x.canonicalize();
    }
    return CyclotomicNumber::from_polynomial(m, c);
}

} // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == ints({-1, 1}));
    CHECK(cyclotomic_polynomial(2) == ints({1, 1}));
    CHECK(cyclotomic_polynomial(4) == ints({1, 0, 1}));
    CHECK(cyclotomic_polynomial(6) == ints({1, -1, 1}));
    CHECK(cyclotomic_polynomial(12) == ints({1, 0, -1, 0, 1}));
    CHECK(cyclotomic_polynomial(9) == ints({1, 0, 0, 1, 0, 0, 1}));
    for (int m = 1; m <= 40; ++m)
        CHECK(static_cast<int>(cyclotomic_polynomial(m).size()) == euler_phi(m) + 1);
}

TEST_CASE("zeta_6 is a root of t^2 - t + 1") {
    const CyclotomicNumber z = CyclotomicNumber::root_power(6, 1);
    const CyclotomicNumber value = CyclotomicNumber::from_integer(6, 1) - z + z * z;
    CHECK(value.is_zero());
    CHECK(CyclotomicNumber::root_power(6, 6) == CyclotomicNumber::from_integer(6, 1));
    CHECK(CyclotomicNumber::root_power(2, 1) == CyclotomicNumber::from_integer(2, -1));
    CHECK(CyclotomicNumber::root_power(5, -1) == CyclotomicNumber::root_power(5, 4));
}

TEST_CASE("ring operations agree with complex evaluation") {
    std::mt19937 rng(3);
    for (int m : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15}) {
        for (int trial = 0; trial < 40; ++trial) {
            const CyclotomicNumber a = random_element(rng, m);
            const CyclotomicNumber b = random_element(rng, m);
            const auto za = oracle::evaluate(a.coefficients(), m);
            const auto zb = oracle::evaluate(b.coefficients(), m);
            CHECK(std::abs(oracle::evaluate((a * b).coefficients(), m) - za * zb) < 1e-9);
            CHECK(std::abs(oracle::evaluate((a + b).coefficients(), m) - (za + zb)) < 1e-9);
            CHECK(std::abs(oracle::evaluate(a.conjugate().coefficients(), m) - std::conj(za)) < 1e-9);
            CHECK((a * b - b * a).is_zero());
            CHECK((a - a).is_zero());
        }
    }
}

TEST_CASE("rank over cyclotomic fields") {
    const int m = 3;
    const auto z = CyclotomicNumber::root_power(m, 1);
    const auto one = CyclotomicNumber::from_integer(m, 1);
    const auto zero = CyclotomicNumber(m);
    CHECK(cyclotomic_rank({}) == 0);
    CHECK(cyclotomic_rank({{zero, zero}}) == 0);
    CHECK(cyclotomic_rank({{one, z}, {z, z * z}}) == 1);
    CHECK(cyclotomic_rank({{one, z}, {z, one}}) == 2);
    // 1 + z + z^2 = 0 makes the third row a combination of the first two
    CHECK(cyclotomic_rank({{one, zero, one}, {zero, one, z}, {one, one, -(z * z)}}) == 2);
}
