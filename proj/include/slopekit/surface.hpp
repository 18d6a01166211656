#pragma once

#include <cstdint>
#include <utility>

#include "slopekit/integer_matrix.hpp"

namespace slopekit {

/// Numerical invariants (K^2, chi, q, p_g) of a surface. Construction
/// enforces chi = 1 - q + p_g and q, p_g >= 0.
class SurfaceInvariants {
public:
    static SurfaceInvariants create(std::int64_t K2, std::int64_t chi, std::int64_t q, std::int64_t pg);

    std::int64_t K2() const noexcept { return K2_; }
    std::int64_t chi() const noexcept { return chi_; }
    std::int64_t q() const noexcept { return q_; }
    std::int64_t pg() const noexcept { return pg_; }

    friend bool operator==(const SurfaceInvariants&, const SurfaceInvariants&) = default;

private:
    SurfaceInvariants(std::int64_t K2, std::int64_t chi, std::int64_t q, std::int64_t pg)
        : K2_(K2), chi_(chi), q_(q), pg_(pg) {}

    std::int64_t K2_, chi_, q_, pg_;
};

struct FibrationProfile {
    std::int64_t fiber_genus = 0;
    std::int64_t base_genus = 0;
    bool has_multiple_fibers = false;
};

/// Index (d, k) of the surfaces S_{d,k}: degree-d cyclic cover, branched
/// double cover along 2k fibers.
struct FamilyParams {
    std::int64_t d = 1;
    std::int64_t k = 1;

    static FamilyParams create(std::int64_t d, std::int64_t k);
    bool satisfies_exponent(std::int64_t e) const noexcept { return e >= 1 && d % e == 1 % e; }
    friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

/// Invariants of the Cartwright-Steger surface and its Albanese fibration:
/// (K^2, chi, q, p_g) = (9, 1, 1, 1), fiber genus 19 over an elliptic curve,
/// no multiple fibers.
std::pair<SurfaceInvariants, FibrationProfile> cartwright_steger_profile();

/// Unramified degree-d cover: K^2 and chi multiply by d, q is supplied by
/// the caller (from the jumping loci), p_g follows from Noether.
SurfaceInvariants cyclic_cover_invariants(const SurfaceInvariants& x, std::int64_t d, std::int64_t q_cover);

/// Double cover branched along 2k general fibers of a fibration with fiber
/// genus g_F, for which F^2 = 0 and K.F = 2 g_F - 2:
///   chi' = 2 chi + k (g_F - 1),  p_g' = 2 p_g + k g_F,
///   q' = 2 q + k - 1,            K^2' = 2 K^2 + 4 k (2 g_F - 2).
SurfaceInvariants branched_double_cover_invariants(const SurfaceInvariants& x, std::int64_t k, std::int64_t fiber_genus);

/// K^2 / chi, reduced. Requires chi >= 1.
Rational slope(const SurfaceInvariants& x);

/// 2 chi <= K^2 <= 9 chi.
bool check_geography(const SurfaceInvariants& x);

/// S_{d,k} built over the Cartwright-Steger surface with q(X_d) = q_cover.
SurfaceInvariants family_member_invariants(const FamilyParams& f, std::int64_t q_cover = 1);

} // namespace slopekit
