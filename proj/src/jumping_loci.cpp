#include "slopekit/jumping_loci.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "slopekit/error.hpp"

namespace slopekit {

namespace {

long mod(long a, long n) {
    long r = a % n;
    return r < 0 ? r + n : r;
}

} // namespace

TorsionCharacter::TorsionCharacter(long modulus, std::vector<long> exponents)
    : modulus_(modulus), exponents_(std::move(exponents)) {
    if (modulus_ < 1)
        throw Error("jumping_loci", "malformed-character", "character modulus must be >= 1");
    long g = modulus_;
    for (long& e : exponents_) {
        e = mod(e, modulus_);
        g = std::gcd(g, e);
    }
    modulus_ /= g;
    for (long& e : exponents_)
        e /= g;
}

TorsionCharacter TorsionCharacter::trivial(std::size_t rank) {
    return TorsionCharacter(1, std::vector<long>(rank, 0));
}

long TorsionCharacter::exponent_at(const std::vector<long>& v) const {
    if (v.size() != exponents_.size())
        throw Error("jumping_loci", "malformed-character", "character rank does not match vector length");
    long acc = 0;
    for (std::size_t j = 0; j < v.size(); ++j)
        acc = mod(acc + exponents_[j] * mod(v[j], modulus_), modulus_);
    return acc;
}

TorsionCharacter TorsionCharacter::conjugate() const {
    std::vector<long> e = exponents_;
    for (long& x : e)
        x = -x;
    return TorsionCharacter(modulus_, std::move(e));
}

bool TorsionCharacter::factors_through(const AbelianEpimorphism& alpha) const {
    if (static_cast<int>(rank()) != alpha.source_rank())
        throw Error("jumping_loci", "malformed-character",
                    "character rank " + std::to_string(rank()) + " does not match epimorphism source rank " +
                        std::to_string(alpha.source_rank()));
    for (const auto& v : alpha.kernel_generators())
        if (exponent_at(v) != 0)
            return false;
    return true;
}

std::string TorsionCharacter::to_string() const {
    std::ostringstream os;
    os << modulus_ << ':';
    for (std::size_t j = 0; j < exponents_.size(); ++j)
        os << (j ? "," : "") << exponents_[j];
    return os.str();
}

TorsionCharacter parse_character(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw Error("jumping_loci", "malformed-character", "expected m:k1,k2,... but got '" + text + "'");
    try {
        std::size_t used = 0;
        const long m = std::stol(text.substr(0, colon), &used);
        if (used != colon)
            throw std::invalid_argument("modulus");
        std::vector<long> exps;
        std::string rest = text.substr(colon + 1);
        std::istringstream is(rest);
        std::string item;
        while (std::getline(is, item, ',')) {
            std::size_t n = 0;
            exps.push_back(std::stol(item, &n));
            if (n != item.size())
                throw std::invalid_argument("exponent");
        }
        return TorsionCharacter(m, std::move(exps));
    } catch (const std::logic_error&) {
        throw Error("jumping_loci", "malformed-character", "cannot parse character '" + text + "'");
    }
}

AlexanderEvaluator::AlexanderEvaluator(const GroupPresentation& p)
    : presentation_(p), map_(abelianization_map(p)) {
    terms_.reserve(p.relator_count());
    for (const Word& r : p.relators()) {
        std::vector<std::vector<FoxTerm>> row;
        for (int i = 1; i <= p.generator_count(); ++i)
            row.push_back(fox_terms(r, i, map_));
        terms_.push_back(std::move(row));
    }
}

void AlexanderEvaluator::check_rank(const TorsionCharacter& xi) const {
    if (static_cast<int>(xi.rank()) != b1())
        throw Error("jumping_loci", "malformed-character",
                    "character has " + std::to_string(xi.rank()) + " exponents but b_1 = " + std::to_string(b1()));
}

CyclotomicMatrix AlexanderEvaluator::evaluate(const TorsionCharacter& xi) const {
    check_rank(xi);
    const long m = xi.modulus();
    CyclotomicMatrix out;
    out.reserve(terms_.size());
    for (const auto& row : terms_) {
        std::vector<CyclotomicNumber> values;
        values.reserve(row.size());
        for (const auto& terms : row) {
            std::vector<Rational> poly(static_cast<std::size_t>(m), 0);
            for (const FoxTerm& t : terms)
                poly[static_cast<std::size_t>(xi.exponent_at(t.monomial))] += t.sign;
            values.push_back(CyclotomicNumber::from_polynomial(static_cast<int>(m), poly));
        }
        out.push_back(std::move(values));
    }
    return out;
}

int AlexanderEvaluator::twisted_h1(const TorsionCharacter& xi) const {
    check_rank(xi);
    if (xi.is_trivial())
        return b1();
    // presentation complex: dim C_1 = g, and d_1 has rank 1 for xi != 1
    const auto r = static_cast<int>(cyclotomic_rank(evaluate(xi)));
    return presentation_.generator_count() - 1 - r;
}

CyclotomicMatrix evaluate_alexander_matrix(const GroupPresentation& p, const TorsionCharacter& xi) {
    return AlexanderEvaluator(p).evaluate(xi);
}

int twisted_h1(const GroupPresentation& p, const TorsionCharacter& xi) {
    return AlexanderEvaluator(p).twisted_h1(xi);
}

long exponent_of(const std::vector<LocusEntry>& entries) {
    long e = 1;
    for (const LocusEntry& entry : entries)
        if (!entry.character.is_trivial() && entry.depth >= 1)
            e = std::lcm(e, entry.character.order());
    return e;
}

JumpingLocusReport JumpingLocusReport::from_entries(long scan_bound, int b1, std::vector<LocusEntry> entries) {
    std::set<TorsionCharacter> seen;
    for (const LocusEntry& entry : entries) {
        if (entry.character.is_trivial())
            throw Error("jumping_loci", "malformed-report", "the trivial character is implicit (depth b1)");
        if (entry.depth < 1)
            throw Error("jumping_loci", "malformed-report", "entry depths must be >= 1");
        if (static_cast<int>(entry.character.rank()) != b1)
            throw Error("jumping_loci", "malformed-report", "entry rank does not match b1");
        if (!seen.insert(entry.character).second)
            throw Error("jumping_loci", "malformed-report", "duplicate character " + entry.character.to_string());
    }
    std::sort(entries.begin(), entries.end(), [](const LocusEntry& a, const LocusEntry& b) {
        if (a.character.order() != b.character.order())
            return a.character.order() < b.character.order();
        return a.character.exponents() < b.character.exponents();
    });
    JumpingLocusReport report;
    report.scan_bound = scan_bound;
    report.b1 = b1;
    report.exponent = exponent_of(entries);
    report.entries = std::move(entries);
    return report;
}

std::vector<TorsionCharacter> JumpingLocusReport::locus(int depth) const {
    std::vector<TorsionCharacter> out;
    if (depth <= b1)
        out.push_back(TorsionCharacter::trivial(static_cast<std::size_t>(b1)));
    for (const LocusEntry& e : entries)
        if (e.depth >= depth)
            out.push_back(e.character);
    return out;
}

int JumpingLocusReport::max_depth() const {
    int d = b1;
    for (const LocusEntry& e : entries)
        d = std::max(d, e.depth);
    return d;
}

bool JumpingLocusReport::is_nested() const {
    for (int i = 1; i < max_depth(); ++i) {
        const auto outer = locus(i);
        const std::set<TorsionCharacter> outer_set(outer.begin(), outer.end());
        for (const auto& xi : locus(i + 1))
            if (!outer_set.contains(xi))
                return false;
    }
    return true;
}

std::vector<TorsionCharacter> characters_of_order(std::size_t rank, long m) {
    std::vector<TorsionCharacter> out;
    std::vector<long> e(rank, 0);
    for (;;) {
        long g = m;
        for (long x : e)
            g = std::gcd(g, x);
        if (g == 1)
            out.emplace_back(m, e);
        std::size_t j = rank;
        while (j > 0 && e[j - 1] == m - 1)
            e[--j] = 0;
        if (j == 0)
            break;
        ++e[j - 1];
    }
    return out;
}

JumpingLocusReport scan_jumping_loci(const GroupPresentation& p, long max_order, unsigned threads) {
    if (max_order < 1)
        throw Error("jumping_loci", "invalid-scan-bound", "scan bound must be >= 1");
    const AlexanderEvaluator evaluator(p);
    const auto rank = static_cast<std::size_t>(evaluator.b1());

    std::vector<TorsionCharacter> grid;
    for (long m = 2; m <= max_order; ++m) {
        auto level = characters_of_order(rank, m);
        grid.insert(grid.end(), level.begin(), level.end());
    }

    std::vector<int> depth(grid.size(), 0);
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(grid.size(), 1)));
    auto work = [&](std::size_t start) {
        for (std::size_t k = start; k < grid.size(); k += threads)
            depth[k] = evaluator.twisted_h1(grid[k]);
    };
    if (threads <= 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(work, t);
    }

    std::vector<LocusEntry> entries;
    for (std::size_t k = 0; k < grid.size(); ++k)
        if (depth[k] >= 1)
            entries.push_back({grid[k], depth[k]});
    return JumpingLocusReport::from_entries(max_order, evaluator.b1(), std::move(entries));
}

CoverBetti hironaka_b1(int b1_G, const JumpingLocusReport& w, const AbelianEpimorphism& alpha) {
    CoverBetti out;
    out.b1 = b1_G;
    for (const LocusEntry& entry : w.entries)
        if (!entry.character.is_trivial() && entry.character.factors_through(alpha))
            out.b1 += entry.depth;
    if (w.scan_bound < alpha.exponent())
        out.warning = "incomplete scan: bound " + std::to_string(w.scan_bound) + " is below exp(S) = " +
                      std::to_string(alpha.exponent());
    return out;
}

CoprimeCoverResult coprime_cover_b1(int b1_G, const JumpingLocusReport& w, long d, const std::vector<long>& weights) {
    if (d < 1)
        throw Error("jumping_loci", "invalid-cover-order", "cover order must be >= 1");
    const AbelianEpimorphism alpha = AbelianEpimorphism::cyclic(d, weights);
    if (std::gcd(d, w.exponent) != 1) {
        const CoverBetti fallback = hironaka_b1(b1_G, w, alpha);
        return {fallback.b1, std::nullopt, fallback.warning};
    }

    CoprimeCertificate cert;
    cert.d = d;
    cert.exponent = w.exponent;
    cert.no_entry_factors = true;
    for (const LocusEntry& entry : w.entries) {
        const long order = entry.character.order();
        cert.checked_orders.emplace_back(order, std::gcd(order, d));
        if (w.exponent % order != 0 || std::gcd(order, d) != 1)
            throw Error("jumping_loci", "internal", "entry order does not divide the exponent");
        if (entry.character.factors_through(alpha))
            cert.no_entry_factors = false;
    }
    if (!cert.no_entry_factors)
        throw Error("jumping_loci", "internal", "coprime order argument contradicted by factorization test");

    CoprimeCoverResult out{b1_G, std::move(cert), std::nullopt};
    if (w.scan_bound < d)
        out.warning = "incomplete scan: bound " + std::to_string(w.scan_bound) + " is below the cover order " +
                      std::to_string(d);
    return out;
}

} // namespace slopekit
