#include "slopekit/density.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <string>

#include "slopekit/error.hpp"

namespace slopekit {

namespace {

std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw Error("density", "overflow", "family parameters overflow 64-bit integers");
    return r;
}

Rational make_rational(std::int64_t num, std::int64_t den) {
    Rational r(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
    r.canonicalize();
    return r;
}

std::string show(const Rational& r) { return r.get_str(); }

} // namespace

TargetSlope::TargetSlope(std::int64_t p, std::int64_t q) {
    if (!(0 < p && p < q))
        throw Error("density", "invalid-target",
                    "target fraction needs 0 < p < q, got " + std::to_string(p) + "/" + std::to_string(q));
    const std::int64_t g = std::gcd(p, q);
    p_ = p / g;
    q_ = q / g;
}

Rational TargetSlope::value() const { return Rational(9) - make_rational(p_, q_); }

TargetSlope parse_target(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            throw std::invalid_argument("no slash");
        std::size_t a = 0, b = 0;
        const std::string ps = text.substr(0, slash);
        const std::string qs = text.substr(slash + 1);
        const long long p = std::stoll(ps, &a);
        const long long q = std::stoll(qs, &b);
        if (a != ps.size() || b != qs.size())
            throw std::invalid_argument("trailing");
        return TargetSlope(p, q);
    } catch (const std::logic_error&) {
        throw Error("density", "invalid-target", "expected a fraction p/q, got '" + text + "'");
    }
}

FamilyParams sequence_params(const TargetSlope& t, std::int64_t e, std::int64_t fiber_genus, std::int64_t n) {
    if (e < 1 || fiber_genus < 2 || n < 1)
        throw Error("density", "domain", "sequence parameters need e >= 1, g_F >= 2, n >= 1");
    const std::int64_t d = mul(mul(mul(n, e), t.q() - t.p()), fiber_genus - 1);
    if (d == INT64_MAX)
        throw Error("density", "overflow", "family parameters overflow 64-bit integers");
    return FamilyParams::create(d + 1, mul(mul(2, n), mul(e, t.p())));
}

Rational family_slope(const FamilyParams& f, std::int64_t fiber_genus) {
    if (f.d < 1 || f.k < 1)
        throw Error("density", "domain", "family slope needs d, k >= 1");
    const Integer branch = Integer(static_cast<long>(f.k)) * (fiber_genus - 1);
    Rational drop(branch, 2 * Integer(static_cast<long>(f.d)) + branch);
    drop.canonicalize();
    return Rational(9) - drop;
}

ConvergenceReport convergence_report(const TargetSlope& t, std::int64_t e, std::int64_t fiber_genus,
                                     const Rational& epsilon) {
    if (epsilon <= 0)
        throw Error("density", "domain", "epsilon must be positive");
    const Rational target = t.value();
    auto gap_at = [&](std::int64_t n) { return Rational(abs(family_slope(sequence_params(t, e, fiber_genus, n), fiber_genus) - target)); };
    auto require_decrease = [](const Rational& before, const Rational& after) {
        if (!(after < before))
            throw Error("density", "internal", "gap sequence failed to decrease");
    };

    // gallop to a bracket (lo, hi] with gap(lo) > epsilon >= gap(hi), then bisect
    std::int64_t lo = 0, hi = 1;
    Rational previous;
    Rational gap_hi = gap_at(1);
    while (gap_hi > epsilon) {
        previous = gap_hi;
        lo = hi;
        hi = mul(hi, 2);
        gap_hi = gap_at(hi);
        require_decrease(previous, gap_hi);
    }
    while (hi - lo > 1) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        if (gap_at(mid) <= epsilon)
            hi = mid;
        else
            lo = mid;
    }
    const Rational gap = gap_at(hi);
    if (hi > 1)
        require_decrease(gap_at(hi - 1), gap);

    const FamilyParams params = sequence_params(t, e, fiber_genus, hi);
    return ConvergenceReport{t, hi, params, family_slope(params, fiber_genus), gap};
}

std::vector<TargetSlope> farey_targets(std::int64_t max_denominator) {
    std::vector<TargetSlope> out;
    if (max_denominator < 2)
        return out;
    // successive terms of the Farey sequence of order Q
    std::int64_t a = 0, b = 1, c = 1, d = max_denominator;
    while (c < d) {
        out.emplace_back(c, d);
        const std::int64_t k = (max_denominator + b) / d;
        const std::int64_t nc = k * c - a;
        const std::int64_t nd = k * d - b;
        a = c;
        b = d;
        c = nc;
        d = nd;
    }
    return out;
}

DensityCertificate density_certificate(const Rational& epsilon, std::int64_t e, std::int64_t fiber_genus,
                                       std::int64_t max_denominator) {
    if (epsilon <= 0)
        throw Error("density", "domain", "epsilon must be positive");
    const std::vector<TargetSlope> targets = farey_targets(max_denominator);
    if (targets.empty())
        throw Error("density", "net-infeasible",
                    "no admissible p/q with q <= " + std::to_string(max_denominator) +
                        "; largest uncovered gap is [8, 9] (width 1)");

    // In x = 9 - slope coordinates the targets must be an epsilon/2-net of
    // [0, 1]: end gaps <= epsilon/2, interior gaps <= epsilon.
    const Rational half = epsilon / 2;
    Rational worst_radius = 0;
    Rational worst_lo = 0, worst_hi = 0;
    auto consider = [&](const Rational& lo, const Rational& hi, const Rational& radius) {
        if (radius > worst_radius) {
            worst_radius = radius;
            worst_lo = lo;
            worst_hi = hi;
        }
    };
    Rational prev = make_rational(targets.front().p(), targets.front().q());
    consider(0, prev, prev);
    for (std::size_t i = 1; i < targets.size(); ++i) {
        const Rational x = make_rational(targets[i].p(), targets[i].q());
        consider(prev, x, (x - prev) / 2);
        prev = x;
    }
    consider(prev, 1, 1 - prev);
    if (worst_radius > half)
        throw Error("density", "net-infeasible",
                    "targets with q <= " + std::to_string(max_denominator) + " leave slopes in [" +
                        show(9 - worst_hi) + ", " + show(9 - worst_lo) + "] farther than epsilon/2 = " + show(half) +
                        " from every target (distance " + show(worst_radius) + ")");

    DensityCertificate cert;
    cert.epsilon = epsilon;
    cert.exponent = e;
    cert.fiber_genus = fiber_genus;
    cert.max_denominator = max_denominator;
    cert.entries.reserve(targets.size());
    for (const TargetSlope& t : targets)
        cert.entries.push_back(convergence_report(t, e, fiber_genus, half));
    return cert;
}

Rational coverage_radius(const DensityCertificate& cert) {
    if (cert.entries.empty())
        return 1;
    std::vector<Rational> slopes;
    for (const auto& entry : cert.entries)
        slopes.push_back(entry.achieved);
    std::sort(slopes.begin(), slopes.end());
    Rational radius = std::max(Rational(slopes.front() - 8), Rational(9 - slopes.back()));
    for (std::size_t i = 1; i < slopes.size(); ++i)
        radius = std::max(radius, Rational((slopes[i] - slopes[i - 1]) / 2));
    return radius;
}

bool verify_certificate(const DensityCertificate& cert) {
    if (cert.epsilon <= 0 || cert.entries.empty())
        return false;
    const std::vector<TargetSlope> targets = farey_targets(cert.max_denominator);
    if (targets.size() != cert.entries.size())
        return false;
    const Rational half = cert.epsilon / 2;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        const ConvergenceReport& entry = cert.entries[i];
        if (!(entry.target == targets[i]))
            return false;
        const FamilyParams params = sequence_params(entry.target, cert.exponent, cert.fiber_genus, entry.n);
        if (!(params == entry.params) || !params.satisfies_exponent(cert.exponent) || params.k % 2 != 0)
            return false;
        const Rational achieved = family_slope(params, cert.fiber_genus);
        if (achieved != entry.achieved || !(8 < achieved && achieved < 9))
            return false;
        if (entry.gap != abs(achieved - entry.target.value()) || entry.gap > half)
            return false;
    }
    return coverage_radius(cert) <= cert.epsilon;
}

void write_certificate_csv(std::ostream& os, const DensityCertificate& cert) {
    os << "p,q,target_num,target_den,e,n,d,k,slope_num,slope_den,gap_num,gap_den\n";
    for (const auto& entry : cert.entries) {
        const Rational target = entry.target.value();
        os << entry.target.p() << ',' << entry.target.q() << ',' << target.get_num() << ',' << target.get_den()
           << ',' << cert.exponent << ',' << entry.n << ',' << entry.params.d << ',' << entry.params.k << ','
           << entry.achieved.get_num() << ',' << entry.achieved.get_den() << ',' << entry.gap.get_num() << ','
           << entry.gap.get_den() << '\n';
    }
}

void write_convergence_svg(std::ostream& os, const std::vector<TargetSlope>& targets, std::int64_t e,
                           std::int64_t fiber_genus, std::int64_t max_n) {
    constexpr double width = 640, height = 400, margin = 50;
    static const char* const palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
    max_n = std::max<std::int64_t>(max_n, 1);
    auto px = [&](std::int64_t n) {
        return max_n == 1 ? margin : margin + (width - 2 * margin) * static_cast<double>(n - 1) / static_cast<double>(max_n - 1);
    };
    auto py = [&](const Rational& s) { return height - margin - (height - 2 * margin) * (s.get_d() - 8.0); };

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\"" << width - margin << "\" y2=\""
       << height - margin << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\"" << height - margin
       << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << margin - 30 << "\" y=\"" << margin + 4 << "\" font-size=\"12\">9</text>\n";
    os << "<text x=\"" << margin - 30 << "\" y=\"" << height - margin + 4 << "\" font-size=\"12\">8</text>\n";
    os << "<text x=\"" << width / 2 << "\" y=\"" << height - 15 << "\" font-size=\"12\">n</text>\n";
    for (std::size_t i = 0; i < targets.size(); ++i) {
        const char* colour = palette[i % std::size(palette)];
        const double ty = py(targets[i].value());
        os << "<line x1=\"" << margin << "\" y1=\"" << ty << "\" x2=\"" << width - margin << "\" y2=\"" << ty
           << "\" stroke=\"" << colour << "\" stroke-dasharray=\"4 3\"/>\n";
        for (std::int64_t n = 1; n <= max_n; ++n) {
            const Rational s = family_slope(sequence_params(targets[i], e, fiber_genus, n), fiber_genus);
            os << "<circle cx=\"" << px(n) << "\" cy=\"" << py(s) << "\" r=\"3\" fill=\"" << colour << "\"/>\n";
        }
    }
    os << "</svg>\n";
}

} // namespace slopekit
