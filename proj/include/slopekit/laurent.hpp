#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "slopekit/integer_matrix.hpp"

namespace slopekit {

/// Integer Laurent polynomial in a fixed number of variables t_1..t_n.
/// Exponent vectors are dense (length n); zero coefficients are never stored.
class LaurentPolynomial {
public:
    using Exponents = std::vector<long>;

    explicit LaurentPolynomial(std::size_t variable_count = 0) : variables_(variable_count) {}

    static LaurentPolynomial constant(std::size_t variable_count, const Integer& c);
    static LaurentPolynomial monomial(Exponents exponents, const Integer& c = 1);

    std::size_t variable_count() const noexcept { return variables_; }
    const std::map<Exponents, Integer>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Coefficient sum, i.e. the value at t_1 = ... = t_n = 1.
    Integer evaluate_at_one() const;

    void add_term(const Exponents& e, const Integer& c);

    LaurentPolynomial& operator+=(const LaurentPolynomial& o);
    LaurentPolynomial& operator-=(const LaurentPolynomial& o);
    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
    friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

    /// e.g. "1 - t2" or "t1 - 1"; a single variable prints as "t".
    std::string to_string() const;

private:
    void check_compatible(const LaurentPolynomial& o) const;

    std::size_t variables_;
    std::map<Exponents, Integer> terms_;
};

} // namespace slopekit
