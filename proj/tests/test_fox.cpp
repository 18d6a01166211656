#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "slopekit/error.hpp"
#include "slopekit/fox.hpp"

using namespace slopekit;

namespace {

LaurentPolynomial poly(std::initializer_list<std::pair<std::vector<long>, long>> terms, std::size_t vars) {
    LaurentPolynomial p(vars);
    for (const auto& [e, c] : terms)
        p.add_term(e, c);
    return p;
}

} // namespace

TEST_CASE("fox derivatives on the torus relator") {
    const GroupPresentation torus = presentations::torus();
    const Word r = torus.relators().front();
    // d/dx (x y X Y) = 1 - t2, d/dy = t1 - 1
    CHECK(fox_derivative(torus, r, 1) == poly({{{0, 0}, 1}, {{0, 1}, -1}}, 2));
    CHECK(fox_derivative(torus, r, 2) == poly({{{1, 0}, 1}, {{0, 0}, -1}}, 2));
    CHECK(fox_derivative(torus, Word{1}, 1) == LaurentPolynomial::constant(2, 1));
    CHECK(fox_derivative(torus, Word{2}, 1).is_zero());
    CHECK(fox_derivative(torus, Word{-1}, 1) == poly({{{-1, 0}, -1}}, 2));
}

TEST_CASE("trefoil Fox derivative is the Alexander polynomial") {
    const GroupPresentation trefoil = presentations::trefoil();
    const LaurentPolynomial dx = fox_derivative(trefoil, trefoil.relators().front(), 1);
    CHECK(dx == poly({{{0}, 1}, {{1}, -1}, {{2}, 1}}, 1));
    CHECK(dx.to_string() == "1 - t + t^2");
}

TEST_CASE("alexander matrices of oracle groups") {
    const AlexanderMatrix torus = alexander_matrix(presentations::torus());
    REQUIRE(torus.size() == 1);
    REQUIRE(torus[0].size() == 2);
    CHECK(torus[0][0].to_string() == "1 - t2");
    CHECK(torus[0][1] == poly({{{1, 0}, 1}, {{0, 0}, -1}}, 2));

    CHECK(alexander_matrix(presentations::free_group(2)).empty());

    const AlexanderMatrix trefoil = alexander_matrix(presentations::trefoil());
    CHECK(trefoil[0][0] == poly({{{0}, 1}, {{1}, -1}, {{2}, 1}}, 1));
}

TEST_CASE("symbolic path refuses torsion in H1") {
    const GroupPresentation p(2, {Word{1, 1}, Word{1, 2, -1, -2}});
    try {
        alexander_matrix(p);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == "unsupported-symbolic-path");
    }
}

TEST_CASE("fox derivative obeys the product rule on random words") {
    std::mt19937 rng(99);
    for (const GroupPresentation& p : {presentations::torus(), presentations::free_group(3), presentations::trefoil()}) {
        const AbelianizationMap ab = abelianization_map(p);
        const int g = p.generator_count();
        for (int trial = 0; trial < 300; ++trial) {
            const Word u(oracle::random_word(rng, g, 12));
            const Word v(oracle::random_word(rng, g, 12));
            for (int i = 1; i <= g; ++i) {
                const LaurentPolynomial lhs = fox_derivative(u * v, i, ab);
                const LaurentPolynomial rhs =
                    fox_derivative(u, i, ab) + abelian_monomial(u, ab) * fox_derivative(v, i, ab);
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("fox derivative is invariant under free reduction") {
    std::mt19937 rng(5);
    const AbelianizationMap ab = abelianization_map(presentations::free_group(2));
    for (int trial = 0; trial < 200; ++trial) {
        const Word w(oracle::random_word(rng, 2, 16));
        for (int i = 1; i <= 2; ++i)
            CHECK(fox_derivative(w, i, ab) == fox_derivative(free_reduce(w, 2), i, ab));
    }
}

TEST_CASE("alexander matrix at t = 1 is the exponent matrix") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Word> relators;
        for (int j = 0; j < 2; ++j) {
            // commutator-heavy relators keep H1 torsion-free
            const Word a(oracle::random_word(rng, 3, 5));
            const Word b(oracle::random_word(rng, 3, 5));
            relators.push_back(a * b * a.inverse() * b.inverse());
        }
        const GroupPresentation p(3, relators);
        const AlexanderMatrix a = alexander_matrix(p);
        const IntegerMatrix e = exponent_matrix(p);
        for (std::size_t j = 0; j < a.size(); ++j)
            for (std::size_t i = 0; i < a[j].size(); ++i)
                CHECK(a[j][i].evaluate_at_one() == e(j, i));
    }
    const AlexanderMatrix trefoil = alexander_matrix(presentations::trefoil());
    CHECK(trefoil[0][0].evaluate_at_one() == 1);
    CHECK(trefoil[0][1].evaluate_at_one() == -1);
}
