#pragma once

#include <vector>

#include "slopekit/group.hpp"
#include "slopekit/laurent.hpp"

namespace slopekit {

/// One summand +-g of a Fox derivative, with g recorded by its image in the
/// free abelianization Z^b.
struct FoxTerm {
    std::vector<long> monomial;
    int sign;
};

/// Expanded Fox derivative of `w` with respect to generator `generator`
/// (1-based): d(uv) = du + u dv, dx_i/dx_i = 1, dx_i^{-1}/dx_i = -x_i^{-1}.
/// Terms are not collected.
std::vector<FoxTerm> fox_terms(const Word& w, int generator, const AbelianizationMap& ab);

/// Fox derivative abelianized to Z[t_1^{+-1}, ..., t_b^{+-1}].
/// Throws Error{"group_core", "unsupported-symbolic-path"} when H_1 has torsion.
LaurentPolynomial fox_derivative(const GroupPresentation& p, const Word& w, int generator);
LaurentPolynomial fox_derivative(const Word& w, int generator, const AbelianizationMap& ab);

/// Monomial t^{ab(u)} of a word.
LaurentPolynomial abelian_monomial(const Word& u, const AbelianizationMap& ab);

/// r x g Alexander matrix; entry (j, i) is the derivative of relator j by
/// generator i.
using AlexanderMatrix = std::vector<std::vector<LaurentPolynomial>>;
AlexanderMatrix alexander_matrix(const GroupPresentation& p);

} // namespace slopekit
