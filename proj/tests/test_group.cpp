#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "slopekit/error.hpp"
#include "slopekit/group.hpp"

using namespace slopekit;

TEST_CASE("free_reduce cancels adjacent inverse pairs") {
    CHECK(free_reduce(Word{1, -1, 2}, 2) == Word{2});
    CHECK(free_reduce(Word{}, 0) == Word{});
    CHECK(free_reduce(Word{1, 2, -2, -1, 3}, 3) == Word{3});
    CHECK(free_reduce(Word{1, 2, -1, -2}, 2) == Word{1, 2, -1, -2});
}

TEST_CASE("malformed words are rejected") {
    CHECK_THROWS_AS(free_reduce(Word{1, 3}, 2), Error);
    CHECK_THROWS_AS(free_reduce(Word{0}, 2), Error);
    CHECK_THROWS_AS(abelianized_exponents(Word{-4}, 3), Error);
    try {
        free_reduce(Word{5}, 2);
    } catch (const Error& e) {
        CHECK(e.module() == "group_core");
        CHECK(e.kind() == "malformed-word");
    }
}

TEST_CASE("free_reduce is idempotent, shortening and agrees with naive cancellation") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 1000; ++trial) {
        const Word w(oracle::random_word(rng, 3, 20));
        const Word r = free_reduce(w, 3);
        CHECK(free_reduce(r, 3) == r);
        CHECK(r.size() <= w.size());
        CHECK(r.letters == oracle::naive_reduce(w.letters));
        CHECK(abelianized_exponents(r, 3) == abelianized_exponents(w, 3));
    }
}

TEST_CASE("abelianized exponents") {
    CHECK(abelianized_exponents(Word{1, 2, 1, -2}, 2) == std::vector<long>{2, 0});
    CHECK(abelianized_exponents(Word{1, 2, -1, -2}, 2) == std::vector<long>{0, 0});
    // trefoil relator x y x Y X Y
    CHECK(abelianized_exponents(Word{1, 2, 1, -2, -1, -2}, 2) == std::vector<long>{1, -1});
}

TEST_CASE("relators are stored freely reduced") {
    const GroupPresentation p(2, {Word{1, 2, -2, 1}});
    CHECK(p.relators().front() == Word{1, 1});
    CHECK(p.format_word(Word{1, -2}) == "a B");
}

TEST_CASE("abelianization of oracle groups") {
    const auto torus = abelianization(presentations::torus());
    CHECK(torus.free_rank == 2);
    CHECK(torus.torsion_free());

    const auto trefoil = abelianization(presentations::trefoil());
    CHECK(trefoil.free_rank == 1);
    CHECK(trefoil.torsion_free());

    const auto c5 = abelianization(presentations::cyclic(5));
    CHECK(c5.free_rank == 0);
    CHECK(c5.torsion_coefficients == std::vector<Integer>{5});

    CHECK(abelianization(presentations::free_group(3)).free_rank == 3);
    CHECK(abelianization(presentations::surface_group(2)).free_rank == 4);

    // <a, b | a^2, b^4> -> Z/2 + Z/4
    const GroupPresentation z2z4(2, {Word{1, 1}, Word{2, 2, 2, 2}});
    CHECK(abelianization(z2z4).torsion_coefficients == std::vector<Integer>{2, 4});
    // <a, b | a^2 b^2> -> Z + Z/2
    const auto mixed = abelianization(GroupPresentation(2, {Word{1, 1, 2, 2}}));
    CHECK(mixed.free_rank == 1);
    CHECK(mixed.torsion_coefficients == std::vector<Integer>{2});
}

TEST_CASE("free projection kills relators and is canonical") {
    const auto ab = abelianization_map(presentations::trefoil());
    CHECK(ab.free_projection == IntegerMatrix{{1}, {1}});
    CHECK(ab.project(presentations::trefoil().relators().front()) == std::vector<long>{0});

    const auto torus = abelianization_map(presentations::torus());
    CHECK(torus.free_projection == IntegerMatrix::identity(2));

    const GroupPresentation p(3, {Word{1, 2, 2, -3}, Word{2, 3, 1}});
    const auto map = abelianization_map(p);
    for (const Word& r : p.relators())
        for (long x : map.project(r))
            CHECK(x == 0);
}
