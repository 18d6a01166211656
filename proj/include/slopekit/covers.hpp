#pragma once

#include <cstddef>
#include <vector>

#include "slopekit/group.hpp"

namespace slopekit {

/// Surjection Z^b -> S = Z/n_1 + ... + Z/n_J with n_1 | n_2 | ... .
/// Row j of the matrix gives the j-th coordinate of the images of the
/// standard basis, read mod n_j. Construction verifies surjectivity and
/// throws Error{"covers", "not-an-epimorphism"} otherwise.
class AbelianEpimorphism {
public:
    AbelianEpimorphism(int source_rank, std::vector<long> factors, std::vector<std::vector<long>> matrix);

    /// Z^b -> Z/d, e_i -> weights[i].
    static AbelianEpimorphism cyclic(long d, std::vector<long> weights);

    int source_rank() const noexcept { return source_rank_; }
    const std::vector<long>& factors() const noexcept { return factors_; }
    const std::vector<std::vector<long>>& matrix() const noexcept { return matrix_; }

    /// |S|.
    long order() const noexcept { return order_; }
    /// Exponent of S (lcm of the factors).
    long exponent() const noexcept { return exponent_; }

    /// Image of v in S, coordinates reduced into [0, n_j).
    std::vector<long> image(const std::vector<long>& v) const;

    /// Mixed-radix index of an element of S, first factor most significant.
    std::size_t element_index(const std::vector<long>& s) const;
    std::vector<long> element(std::size_t index) const;

    /// Generators of ker(alpha) as vectors in Z^b.
    const std::vector<std::vector<long>>& kernel_generators() const noexcept { return kernel_; }

private:
    int source_rank_;
    std::vector<long> factors_;
    std::vector<std::vector<long>> matrix_;
    long order_ = 1;
    long exponent_ = 1;
    std::vector<std::vector<long>> kernel_;
};

/// Permutation of the cosets G/ker(alpha), identified with elements of S;
/// entry c is the coset reached from c by right multiplication.
using CosetPermutation = std::vector<std::size_t>;

/// Action of each generator of P on the |S| cosets. The epimorphism's source
/// is the free abelianization of P (source_rank must equal b_1(P)).
std::vector<CosetPermutation> coset_action(const GroupPresentation& p, const AbelianEpimorphism& alpha);

/// Presentation of ker(alpha) produced by Reidemeister-Schreier rewriting.
struct SubgroupPresentation {
    GroupPresentation presentation;
    std::size_t index = 0;
    /// Coset representatives (Schreier transversal) as words in P.
    std::vector<Word> transversal;
    /// (coset, generator) pairs labelling the surviving Schreier generators
    /// t_c x_i t_{c x_i}^{-1}, in generator order.
    std::vector<std::pair<std::size_t, int>> schreier_generators;
    int parent_generators = 0;
    std::size_t parent_relators = 0;

    /// 1 - g' + r' == d (1 - g + r).
    bool euler_relation_holds() const;
};

/// Transversal from a breadth-first search over cosets (generators in
/// declaration order, forward before inverse); tree generators are
/// eliminated. Every relator is rewritten from every coset, so the result
/// has d * r relators (some possibly empty).
SubgroupPresentation reidemeister_schreier(const GroupPresentation& p, const AbelianEpimorphism& alpha);

/// b_1(ker alpha) from the rewritten presentation.
int subgroup_b1(const GroupPresentation& p, const AbelianEpimorphism& alpha);

} // namespace slopekit
