#include "slopekit/surface.hpp"

#include <string>

#include "slopekit/error.hpp"

namespace slopekit {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw Error("surface_invariants", "overflow", "integer overflow in invariant arithmetic");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw Error("surface_invariants", "overflow", "integer overflow in invariant arithmetic");
    return r;
}

} // namespace

SurfaceInvariants SurfaceInvariants::create(std::int64_t K2, std::int64_t chi, std::int64_t q, std::int64_t pg) {
    if (q < 0 || pg < 0)
        throw Error("surface_invariants", "invariant-breach", "q and p_g must be nonnegative");
    if (chi != 1 - q + pg)
        throw Error("surface_invariants", "invariant-breach",
                    "Noether consistency fails: chi = " + std::to_string(chi) + " but 1 - q + p_g = " +
                        std::to_string(1 - q + pg));
    return SurfaceInvariants(K2, chi, q, pg);
}

FamilyParams FamilyParams::create(std::int64_t d, std::int64_t k) {
    if (d < 1 || k < 1)
        throw Error("surface_invariants", "domain", "family parameters need d >= 1 and k >= 1");
    return FamilyParams{d, k};
}

std::pair<SurfaceInvariants, FibrationProfile> cartwright_steger_profile() {
    return {SurfaceInvariants::create(9, 1, 1, 1), FibrationProfile{19, 1, false}};
}

SurfaceInvariants cyclic_cover_invariants(const SurfaceInvariants& x, std::int64_t d, std::int64_t q_cover) {
    if (d < 1)
        throw Error("surface_invariants", "domain", "cover order must be >= 1");
    if (q_cover < 0)
        throw Error("surface_invariants", "inconsistent-q", "cover irregularity must be >= 0");
    const std::int64_t chi = checked_mul(d, x.chi());
    const std::int64_t pg = checked_add(chi - 1, q_cover);
    if (pg < 0)
        throw Error("surface_invariants", "inconsistent-q",
                    "q = " + std::to_string(q_cover) + " forces p_g = " + std::to_string(pg) + " < 0");
    return SurfaceInvariants::create(checked_mul(d, x.K2()), chi, q_cover, pg);
}

SurfaceInvariants branched_double_cover_invariants(const SurfaceInvariants& x, std::int64_t k, std::int64_t fiber_genus) {
    if (k < 1)
        throw Error("surface_invariants", "domain", "k must be >= 1");
    if (fiber_genus < 2)
        throw Error("surface_invariants", "domain", "fiber genus must be >= 2");
    const std::int64_t chi = checked_add(checked_mul(2, x.chi()), checked_mul(k, fiber_genus - 1));
    const std::int64_t pg = checked_add(checked_mul(2, x.pg()), checked_mul(k, fiber_genus));
    const std::int64_t q = checked_add(checked_mul(2, x.q()), k - 1);
    const std::int64_t K2 = checked_add(checked_mul(2, x.K2()), checked_mul(4, checked_mul(k, 2 * fiber_genus - 2)));
    return SurfaceInvariants::create(K2, chi, q, pg);
}

Rational slope(const SurfaceInvariants& x) {
    if (x.chi() < 1)
        throw Error("surface_invariants", "domain", "slope needs chi >= 1");
    Rational r(Integer(static_cast<long>(x.K2())), Integer(static_cast<long>(x.chi())));
    r.canonicalize();
    return r;
}

bool check_geography(const SurfaceInvariants& x) {
    const Integer K2 = static_cast<long>(x.K2());
    const Integer chi = static_cast<long>(x.chi());
    return 2 * chi <= K2 && K2 <= 9 * chi;
}

SurfaceInvariants family_member_invariants(const FamilyParams& f, std::int64_t q_cover) {
    const auto [cs, fibration] = cartwright_steger_profile();
    return branched_double_cover_invariants(cyclic_cover_invariants(cs, f.d, q_cover), f.k, fibration.fiber_genus);
}

} // namespace slopekit
