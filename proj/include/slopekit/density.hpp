#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "slopekit/integer_matrix.hpp"
#include "slopekit/surface.hpp"

namespace slopekit {

/// Target slope 9 - p/q with 0 < p < q, stored reduced.
class TargetSlope {
public:
    TargetSlope(std::int64_t p, std::int64_t q);

    std::int64_t p() const noexcept { return p_; }
    std::int64_t q() const noexcept { return q_; }
    Rational value() const;

    friend bool operator==(const TargetSlope&, const TargetSlope&) = default;

private:
    std::int64_t p_, q_;
};

/// Parses "p/q".
TargetSlope parse_target(const std::string& text);

/// d_n = n e (q - p)(g_F - 1) + 1,  k_n = 2 n e p.
FamilyParams sequence_params(const TargetSlope& t, std::int64_t e, std::int64_t fiber_genus, std::int64_t n);

/// 9 - k (g_F - 1) / (2 d + k (g_F - 1)), reduced.
Rational family_slope(const FamilyParams& f, std::int64_t fiber_genus);

struct ConvergenceReport {
    TargetSlope target;
    std::int64_t n = 0;
    FamilyParams params;
    Rational achieved;
    Rational gap;
};

/// Smallest n >= 1 whose family slope lies within epsilon of the target.
/// The gap is strictly decreasing in n, which is checked on every probe.
ConvergenceReport convergence_report(const TargetSlope& t, std::int64_t e, std::int64_t fiber_genus, const Rational& epsilon);

/// Reduced p/q with 0 < p < q <= max_denominator, increasing.
std::vector<TargetSlope> farey_targets(std::int64_t max_denominator);

struct DensityCertificate {
    Rational epsilon;
    std::int64_t exponent = 1;
    std::int64_t fiber_genus = 19;
    std::int64_t max_denominator = 0;
    std::vector<ConvergenceReport> entries;
};

/// For every Farey target of order Q, a family member within epsilon/2 of
/// 9 - p/q. Requires the targets to form an epsilon/2-net of [8, 9], so
/// every point of [8, 9] lies within epsilon of an achieved slope; otherwise
/// throws Error{"density", "net-infeasible"} naming the widest uncovered gap.
DensityCertificate density_certificate(const Rational& epsilon, std::int64_t e, std::int64_t fiber_genus,
                                       std::int64_t max_denominator);

/// Checks that the entries are exactly the Farey targets of order Q,
/// re-derives each from its parameters, and checks the covering
/// property exactly. Returns false on any discrepancy.
bool verify_certificate(const DensityCertificate& cert);

/// Largest distance from a point of [8, 9] to the nearest achieved slope.
Rational coverage_radius(const DensityCertificate& cert);

void write_certificate_csv(std::ostream& os, const DensityCertificate& cert);

/// Self-contained SVG scatter of family slope against n for each target,
/// n = 1..max_n.
void write_convergence_svg(std::ostream& os, const std::vector<TargetSlope>& targets, std::int64_t e,
                           std::int64_t fiber_genus, std::int64_t max_n);

} // namespace slopekit
