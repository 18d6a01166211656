#include "slopekit/covers.hpp"

#include <deque>
#include <numeric>

#include "slopekit/error.hpp"

namespace slopekit {

namespace {

long mod(long a, long n) {
    long r = a % n;
    return r < 0 ? r + n : r;
}

} // namespace

AbelianEpimorphism::AbelianEpimorphism(int source_rank, std::vector<long> factors,
                                       std::vector<std::vector<long>> matrix)
    : source_rank_(source_rank), factors_(std::move(factors)), matrix_(std::move(matrix)) {
    if (source_rank_ < 0)
        throw Error("covers", "malformed-epimorphism", "negative source rank");
    if (matrix_.size() != factors_.size())
        throw Error("covers", "malformed-epimorphism", "matrix needs one row per target factor");
    for (std::size_t j = 0; j < factors_.size(); ++j) {
        if (factors_[j] < 1)
            throw Error("covers", "malformed-epimorphism", "target factors must be >= 1");
        if (j > 0 && factors_[j] % factors_[j - 1] != 0)
            throw Error("covers", "malformed-epimorphism",
                        "target factors must form a divisibility chain n_1 | n_2 | ...");
        if (matrix_[j].size() != static_cast<std::size_t>(source_rank_))
            throw Error("covers", "malformed-epimorphism",
                        "matrix row " + std::to_string(j) + " must have " + std::to_string(source_rank_) +
                            " entries");
        for (long& a : matrix_[j])
            a = mod(a, factors_[j]);
        order_ *= factors_[j];
        exponent_ = std::lcm(exponent_, factors_[j]);
    }

    // alpha is onto iff coker[A | N] is trivial; ker alpha is the projection
    // of ker[A | -N] onto the first b coordinates.
    const std::size_t rows = factors_.size();
    const std::size_t b = static_cast<std::size_t>(source_rank_);
    IntegerMatrix lifted(rows, b + rows);
    for (std::size_t j = 0; j < rows; ++j) {
        for (std::size_t i = 0; i < b; ++i)
            lifted(j, i) = matrix_[j][i];
        lifted(j, b + j) = -factors_[j];
    }
    const SmithForm snf = smith_normal_form(lifted);
    bool onto = snf.rank == rows;
    for (const Integer& d : snf.invariant_factors())
        onto = onto && d == 1;
    if (!onto)
        throw Error("covers", "not-an-epimorphism", "the map Z^b -> S is not surjective");

    const IntegerMatrix kernel = integer_kernel(lifted);
    for (std::size_t c = 0; c < kernel.cols(); ++c) {
        std::vector<long> v(b);
        bool nonzero = false;
        for (std::size_t i = 0; i < b; ++i) {
            v[i] = kernel(i, c).get_si();
            nonzero = nonzero || v[i] != 0;
        }
        if (nonzero)
            kernel_.push_back(std::move(v));
    }
}

AbelianEpimorphism AbelianEpimorphism::cyclic(long d, std::vector<long> weights) {
    const int rank = static_cast<int>(weights.size());
    return AbelianEpimorphism(rank, {d}, {std::move(weights)});
}

std::vector<long> AbelianEpimorphism::image(const std::vector<long>& v) const {
    if (v.size() != static_cast<std::size_t>(source_rank_))
        throw Error("covers", "malformed-epimorphism", "vector length does not match source rank");
    std::vector<long> s(factors_.size(), 0);
    for (std::size_t j = 0; j < factors_.size(); ++j) {
        long acc = 0;
        for (std::size_t i = 0; i < v.size(); ++i)
            acc = mod(acc + mod(matrix_[j][i] * mod(v[i], factors_[j]), factors_[j]), factors_[j]);
        s[j] = acc;
    }
    return s;
}

std::size_t AbelianEpimorphism::element_index(const std::vector<long>& s) const {
    std::size_t index = 0;
    for (std::size_t j = 0; j < factors_.size(); ++j)
        index = index * static_cast<std::size_t>(factors_[j]) + static_cast<std::size_t>(mod(s[j], factors_[j]));
    return index;
}

std::vector<long> AbelianEpimorphism::element(std::size_t index) const {
    std::vector<long> s(factors_.size());
    for (std::size_t j = factors_.size(); j-- > 0;) {
        const auto n = static_cast<std::size_t>(factors_[j]);
        s[j] = static_cast<long>(index % n);
        index /= n;
    }
    return s;
}

std::vector<CosetPermutation> coset_action(const GroupPresentation& p, const AbelianEpimorphism& alpha) {
    const AbelianizationMap ab = abelianization_map(p);
    if (ab.structure.free_rank != alpha.source_rank())
        throw Error("covers", "incompatible-epimorphism",
                    "epimorphism source rank " + std::to_string(alpha.source_rank()) +
                        " differs from b_1 = " + std::to_string(ab.structure.free_rank));

    const auto order = static_cast<std::size_t>(alpha.order());
    std::vector<CosetPermutation> action;
    action.reserve(static_cast<std::size_t>(p.generator_count()));
    for (int i = 1; i <= p.generator_count(); ++i) {
        const std::vector<long> shift = alpha.image(ab.project(Word{i}));
        CosetPermutation perm(order);
        for (std::size_t c = 0; c < order; ++c) {
            std::vector<long> s = alpha.element(c);
            for (std::size_t j = 0; j < s.size(); ++j)
                s[j] += shift[j];
            perm[c] = alpha.element_index(s);
        }
        action.push_back(std::move(perm));
    }
    return action;
}

SubgroupPresentation reidemeister_schreier(const GroupPresentation& p, const AbelianEpimorphism& alpha) {
    const std::vector<CosetPermutation> forward = coset_action(p, alpha);
    const int g = p.generator_count();
    const auto d = static_cast<std::size_t>(alpha.order());

    std::vector<CosetPermutation> backward(forward.size(), CosetPermutation(d));
    for (std::size_t i = 0; i < forward.size(); ++i)
        for (std::size_t c = 0; c < d; ++c)
            backward[i][forward[i][c]] = c;

    // tree[c * g + (i - 1)]: Schreier generator for (c, x_i) is trivial
    std::vector<char> tree(d * static_cast<std::size_t>(g), 0);
    std::vector<Word> transversal(d);
    std::vector<char> visited(d, 0);
    std::deque<std::size_t> queue{0};
    visited[0] = 1;
    while (!queue.empty()) {
        const std::size_t c = queue.front();
        queue.pop_front();
        for (int i = 1; i <= g; ++i) {
            const std::size_t idx = static_cast<std::size_t>(i - 1);
            if (const std::size_t next = forward[idx][c]; !visited[next]) {
                visited[next] = 1;
                transversal[next] = transversal[c] * Word{i};
                tree[c * g + idx] = 1;
                queue.push_back(next);
            }
            if (const std::size_t prev = backward[idx][c]; !visited[prev]) {
                visited[prev] = 1;
                transversal[prev] = transversal[c] * Word{-i};
                tree[prev * g + idx] = 1;
                queue.push_back(prev);
            }
        }
    }
    for (std::size_t c = 0; c < d; ++c)
        if (!visited[c])
            throw Error("covers", "not-an-epimorphism", "coset action is not transitive");

    SubgroupPresentation out;
    out.index = d;
    out.transversal = std::move(transversal);
    out.parent_generators = g;
    out.parent_relators = p.relator_count();

    std::vector<int> label(d * static_cast<std::size_t>(g), 0);
    std::vector<std::string> names;
    for (std::size_t c = 0; c < d; ++c)
        for (int i = 1; i <= g; ++i) {
            const std::size_t slot = c * g + static_cast<std::size_t>(i - 1);
            if (tree[slot])
                continue;
            out.schreier_generators.emplace_back(c, i);
            label[slot] = static_cast<int>(out.schreier_generators.size());
            names.push_back(p.generator_names()[static_cast<std::size_t>(i - 1)] + "_" + std::to_string(c));
        }

    std::vector<Word> relators;
    relators.reserve(d * p.relator_count());
    for (std::size_t c = 0; c < d; ++c)
        for (const Word& r : p.relators()) {
            Word rewritten;
            std::size_t cur = c;
            for (int letter : r.letters) {
                const auto idx = static_cast<std::size_t>(std::abs(letter) - 1);
                if (letter > 0) {
                    if (int s = label[cur * g + idx])
                        rewritten.letters.push_back(s);
                    cur = forward[idx][cur];
                } else {
                    cur = backward[idx][cur];
                    if (int s = label[cur * g + idx])
                        rewritten.letters.push_back(-s);
                }
            }
            if (cur != c)
                throw Error("covers", "internal", "relator does not lie in ker alpha");
            relators.push_back(std::move(rewritten));
        }

    out.presentation = GroupPresentation(static_cast<int>(out.schreier_generators.size()),
                                         std::move(relators), std::move(names));
    return out;
}

bool SubgroupPresentation::euler_relation_holds() const {
    const long lhs = 1 - presentation.generator_count() + static_cast<long>(presentation.relator_count());
    const long rhs = static_cast<long>(index) * (1 - parent_generators + static_cast<long>(parent_relators));
    return lhs == rhs;
}

int subgroup_b1(const GroupPresentation& p, const AbelianEpimorphism& alpha) {
    return abelianization(reidemeister_schreier(p, alpha).presentation).free_rank;
}

} // namespace slopekit
