#pragma once

#include <string>
#include <vector>

#include "slopekit/integer_matrix.hpp"

namespace slopekit {

/// Integer coefficients of the m-th cyclotomic polynomial, lowest degree
/// first. Results are cached; safe to call concurrently.
const std::vector<Integer>& cyclotomic_polynomial(int m);

int euler_phi(int m);

/// Element of Q(zeta_m), stored as the residue of a rational polynomial in
/// zeta = zeta_m modulo Phi_m, so exactly phi(m) coefficients. Equality and
/// zero testing are exact.
class CyclotomicNumber {
public:
    explicit CyclotomicNumber(int modulus = 1);

    static CyclotomicNumber from_integer(int modulus, const Integer& value);
    /// zeta_m^k for any integer k.
    static CyclotomicNumber root_power(int modulus, long k);
    /// Reduces an arbitrary-degree polynomial in zeta.
    static CyclotomicNumber from_polynomial(int modulus, const std::vector<Rational>& coefficients);

    int modulus() const noexcept { return modulus_; }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
    bool is_zero() const;

    CyclotomicNumber& operator+=(const CyclotomicNumber& o);
    CyclotomicNumber& operator-=(const CyclotomicNumber& o);
    CyclotomicNumber& operator*=(const Rational& s);
    CyclotomicNumber operator-() const;
    friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
    friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
    friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

    /// Image under the Galois automorphism zeta -> zeta^{-1}.
    CyclotomicNumber conjugate() const;

    std::string to_string() const;

private:
    void check_compatible(const CyclotomicNumber& o) const;

    int modulus_;
    std::vector<Rational> coeffs_;
};

using CyclotomicMatrix = std::vector<std::vector<CyclotomicNumber>>;

/// Rank over Q(zeta_m) by division-free elimination; each updated row is
/// rescaled by a rational to primitive integral content.
std::size_t cyclotomic_rank(CyclotomicMatrix rows);

} // namespace slopekit
