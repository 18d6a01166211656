#include <doctest.h>

#include <random>

#include "slopekit/density.hpp"
#include "slopekit/error.hpp"
#include "slopekit/surface.hpp"

using namespace slopekit;

namespace {

Rational frac(long p, long q) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return "";
}

} // namespace

TEST_CASE("base surface profile") {
    const auto [x, fib] = cartwright_steger_profile();
    CHECK(x == SurfaceInvariants::create(9, 1, 1, 1));
    CHECK(fib.fiber_genus == 19);
    CHECK(fib.base_genus == 1);
    CHECK_FALSE(fib.has_multiple_fibers);
}

TEST_CASE("cyclic covers scale K2 and chi") {
    const SurfaceInvariants x = cartwright_steger_profile().first;
    CHECK(cyclic_cover_invariants(x, 1, 1) == x);
    CHECK(cyclic_cover_invariants(x, 7, 1) == SurfaceInvariants::create(63, 7, 1, 7));
    CHECK(cyclic_cover_invariants(x, 2, 1) == SurfaceInvariants::create(18, 2, 1, 2));
    CHECK(cyclic_cover_invariants(x, 3, 2) == SurfaceInvariants::create(27, 3, 2, 4));
    CHECK(kind_of([&] { cyclic_cover_invariants(x, 0, 1); }) == "domain");
}

TEST_CASE("branched double covers") {
    CHECK(family_member_invariants(FamilyParams::create(1, 1)) == SurfaceInvariants::create(162, 20, 2, 21));
    CHECK(family_member_invariants(FamilyParams::create(2, 1)) == SurfaceInvariants::create(180, 22, 2, 23));
    CHECK(family_member_invariants(FamilyParams::create(1, 3)).q() == 4);
    CHECK(family_member_invariants(FamilyParams::create(7, 1)) == SurfaceInvariants::create(270, 32, 2, 33));
    CHECK(kind_of([] { FamilyParams::create(0, 1); }) == "domain");
    CHECK(kind_of([] { FamilyParams::create(1, 0); }) == "domain");
    const SurfaceInvariants x = cartwright_steger_profile().first;
    CHECK(kind_of([&] { branched_double_cover_invariants(x, 1, 1); }) == "domain");
}

TEST_CASE("slopes and geography") {
    CHECK(slope(family_member_invariants(FamilyParams::create(1, 1))) == frac(81, 10));
    CHECK(slope(cartwright_steger_profile().first) == 9);
    CHECK(slope(SurfaceInvariants::create(2, 1, 0, 0)) == 2);
    CHECK(check_geography(SurfaceInvariants::create(162, 20, 2, 21)));
    CHECK_FALSE(check_geography(SurfaceInvariants::create(20, 2, 1, 2)));
    CHECK(check_geography(SurfaceInvariants::create(2, 1, 0, 0)));
    CHECK_FALSE(check_geography(SurfaceInvariants::create(1, 1, 0, 0)));
    CHECK(kind_of([] { slope(SurfaceInvariants::create(0, 0, 1, 0)); }) == "domain");
}

TEST_CASE("noether consistency is enforced") {
    CHECK(kind_of([] { SurfaceInvariants::create(9, 2, 1, 1); }) == "invariant-breach");
    CHECK(kind_of([] { SurfaceInvariants::create(9, 1, -1, -1); }) == "invariant-breach");
}

TEST_CASE("family members satisfy noether and lie in the open strip") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> dd(1, 100000), kk(1, 100000), qq(0, 50);
    for (int trial = 0; trial < 10000; ++trial) {
        const FamilyParams f = FamilyParams::create(dd(rng), kk(rng));
        const std::int64_t q_cover = qq(rng);
        const SurfaceInvariants s = family_member_invariants(f, q_cover);
        CHECK(s.chi() == 1 - s.q() + s.pg());
        CHECK(s.q() == 2 * q_cover + f.k - 1);
        const Rational r = slope(s);
        CHECK(r == 9 - frac(18 * f.k, 2 * f.d + 18 * f.k));
        CHECK(r == family_slope(f, 19));
        CHECK(r > 8);
        CHECK(r < 9);
        CHECK(check_geography(s));
    }
}

TEST_CASE("overflow is reported") {
    CHECK_THROWS_AS(family_member_invariants(FamilyParams::create(INT64_MAX / 4, 1)), Error);
}
