#include <doctest.h>

#include "slopekit/covers.hpp"
#include "slopekit/error.hpp"

using namespace slopekit;

namespace {

bool is_identity(const CosetPermutation& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != i)
            return false;
    return true;
}

bool is_cycle(const CosetPermutation& p) {
    std::size_t c = 0, steps = 0;
    do {
        c = p[c];
        ++steps;
    } while (c != 0 && steps <= p.size());
    return steps == p.size();
}

} // namespace

TEST_CASE("epimorphism validation") {
    CHECK_NOTHROW(AbelianEpimorphism::cyclic(3, {1, 0}));
    CHECK_THROWS_AS(AbelianEpimorphism::cyclic(4, {2, 2}), Error);
    CHECK_THROWS_AS(AbelianEpimorphism(2, {2, 3}, {{1, 0}, {0, 1}}), Error); // not a chain
    CHECK_THROWS_AS(AbelianEpimorphism(2, {2}, {{1, 0, 0}}), Error);
    // Z^1 cannot surject onto Z/2 + Z/2
    try {
        AbelianEpimorphism(1, {2, 2}, {{1}, {1}});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == "not-an-epimorphism");
    }
    const AbelianEpimorphism klein(2, {2, 2}, {{1, 0}, {0, 1}});
    CHECK(klein.order() == 4);
    CHECK(klein.exponent() == 2);
    const AbelianEpimorphism trivial(2, {1}, {{0, 0}});
    CHECK(trivial.order() == 1);
}

TEST_CASE("kernel generators lie in the kernel and have full index") {
    const AbelianEpimorphism alpha(2, {2, 6}, {{1, 1}, {2, 5}});
    for (const auto& v : alpha.kernel_generators())
        for (long s : alpha.image(v))
            CHECK(s == 0);
    IntegerMatrix basis(2, alpha.kernel_generators().size());
    for (std::size_t c = 0; c < basis.cols(); ++c)
        for (std::size_t i = 0; i < 2; ++i)
            basis(i, c) = alpha.kernel_generators()[c][i];
    const auto factors = smith_normal_form(basis).invariant_factors();
    Integer index = 1;
    for (const auto& f : factors)
        index *= f;
    CHECK(index == alpha.order());
}

TEST_CASE("coset action by translation") {
    const auto torus = coset_action(presentations::torus(), AbelianEpimorphism::cyclic(2, {1, 0}));
    CHECK(torus[0] == CosetPermutation{1, 0});
    CHECK(is_identity(torus[1]));

    const auto free = coset_action(presentations::free_group(2), AbelianEpimorphism::cyclic(3, {1, 1}));
    CHECK(free[0] == CosetPermutation{1, 2, 0});
    CHECK(free[1] == CosetPermutation{1, 2, 0});

    const auto genus2 = coset_action(presentations::surface_group(2), AbelianEpimorphism::cyclic(2, {1, 0, 0, 0}));
    CHECK(genus2[0] == CosetPermutation{1, 0});
    for (int i = 1; i < 4; ++i)
        CHECK(is_identity(genus2[static_cast<std::size_t>(i)]));

    CHECK(is_cycle(coset_action(presentations::trefoil(), AbelianEpimorphism::cyclic(5, {1}))[0]));
    CHECK_THROWS_AS(coset_action(presentations::torus(), AbelianEpimorphism::cyclic(2, {1})), Error);
}

TEST_CASE("reidemeister-schreier on oracle groups") {
    const SubgroupPresentation free = reidemeister_schreier(presentations::free_group(2), AbelianEpimorphism::cyclic(2, {1, 0}));
    CHECK(free.presentation.generator_count() == 3);
    CHECK(free.presentation.relator_count() == 0);
    CHECK(abelianization(free.presentation).free_rank == 3);
    CHECK(free.euler_relation_holds());

    const auto torus = reidemeister_schreier(presentations::torus(), AbelianEpimorphism::cyclic(3, {1, 2}));
    CHECK(torus.index == 3);
    CHECK(torus.presentation.relator_count() == 3);
    CHECK(abelianization(torus.presentation).free_rank == 2);
    CHECK(torus.euler_relation_holds());

    const auto genus2 = reidemeister_schreier(presentations::surface_group(2), AbelianEpimorphism::cyclic(2, {1, 0, 0, 0}));
    CHECK(abelianization(genus2.presentation).free_rank == 6);
    CHECK(genus2.euler_relation_holds());
}

TEST_CASE("schreier transversal is breadth-first in declaration order") {
    const auto sub = reidemeister_schreier(presentations::free_group(2), AbelianEpimorphism::cyclic(3, {1, 1}));
    // coset 1 via a, coset 2 via A
    CHECK(sub.transversal[0] == Word{});
    CHECK(sub.transversal[1] == Word{1});
    CHECK(sub.transversal[2] == Word{-1});
    CHECK(sub.presentation.generator_count() == 4);
}

TEST_CASE("subgroup b1 closed forms") {
    for (long d = 2; d <= 8; ++d) {
        CHECK(subgroup_b1(presentations::torus(), AbelianEpimorphism::cyclic(d, {1, 0})) == 2);
        CHECK(subgroup_b1(presentations::free_group(2), AbelianEpimorphism::cyclic(d, {1, 1})) == d + 1);
        CHECK(subgroup_b1(presentations::surface_group(2), AbelianEpimorphism::cyclic(d, {1, 0, 0, 0})) == 2 * d + 2);
    }
    // a Z/2 + Z/2 cover of a genus-2 surface has genus 5
    const AbelianEpimorphism klein(4, {2, 2}, {{1, 0, 0, 0}, {0, 0, 1, 0}});
    CHECK(subgroup_b1(presentations::surface_group(2), klein) == 10);
}

TEST_CASE("index-one cover reproduces the input abelianization") {
    for (const GroupPresentation& p :
         {presentations::torus(), presentations::trefoil(), presentations::surface_group(2)}) {
        const int b = abelianization(p).free_rank;
        const AbelianEpimorphism trivial(b, {1}, {std::vector<long>(static_cast<std::size_t>(b), 0)});
        const SubgroupPresentation sub = reidemeister_schreier(p, trivial);
        CHECK(abelianization(sub.presentation) == abelianization(p));
        CHECK(sub.euler_relation_holds());
    }
}
