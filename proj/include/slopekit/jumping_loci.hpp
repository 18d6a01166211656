#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "slopekit/covers.hpp"
#include "slopekit/cyclotomic.hpp"
#include "slopekit/fox.hpp"
#include "slopekit/group.hpp"

namespace slopekit {

/// Torsion character of Z^b: t_j -> zeta_m^{exponents[j]}. Always held in
/// canonical form, where the modulus equals the character's order and the
/// exponents lie in [0, m). The trivial character is (1, 0...0).
class TorsionCharacter {
public:
    TorsionCharacter(long modulus, std::vector<long> exponents);
    static TorsionCharacter trivial(std::size_t rank);

    long modulus() const noexcept { return modulus_; }
    long order() const noexcept { return modulus_; }
    const std::vector<long>& exponents() const noexcept { return exponents_; }
    std::size_t rank() const noexcept { return exponents_.size(); }
    bool is_trivial() const noexcept { return modulus_ == 1; }

    /// k with xi(v) = zeta_m^k, k in [0, m).
    long exponent_at(const std::vector<long>& v) const;
    TorsionCharacter conjugate() const;

    /// True when xi vanishes on ker(alpha), i.e. xi = chi o alpha for some
    /// character chi of S.
    bool factors_through(const AbelianEpimorphism& alpha) const;

    std::string to_string() const; ///< "m:k1,k2,..."

    friend bool operator==(const TorsionCharacter&, const TorsionCharacter&) = default;
    friend auto operator<=>(const TorsionCharacter&, const TorsionCharacter&) = default;

private:
    long modulus_;
    std::vector<long> exponents_;
};

/// Parses "m:k1,k2,..." (whitespace-free).
TorsionCharacter parse_character(const std::string& text);

/// Evaluates Fox derivatives of a fixed presentation at torsion characters.
/// Works letter by letter through the free abelianization, so H_1 torsion is
/// allowed (characters are trivial on it).
class AlexanderEvaluator {
public:
    explicit AlexanderEvaluator(const GroupPresentation& p);

    const GroupPresentation& presentation() const noexcept { return presentation_; }
    int b1() const noexcept { return map_.structure.free_rank; }
    const AbelianizationMap& abelianization() const noexcept { return map_; }

    CyclotomicMatrix evaluate(const TorsionCharacter& xi) const;
    int twisted_h1(const TorsionCharacter& xi) const;

private:
    void check_rank(const TorsionCharacter& xi) const;

    GroupPresentation presentation_;
    AbelianizationMap map_;
    // terms_[j][i]: Fox terms of relator j by generator i+1
    std::vector<std::vector<std::vector<FoxTerm>>> terms_;
};

CyclotomicMatrix evaluate_alexander_matrix(const GroupPresentation& p, const TorsionCharacter& xi);

/// h^1(G; C_xi): b_1 for trivial xi, otherwise g - 1 - rank A(xi).
int twisted_h1(const GroupPresentation& p, const TorsionCharacter& xi);

struct LocusEntry {
    TorsionCharacter character;
    int depth;
    friend bool operator==(const LocusEntry&, const LocusEntry&) = default;
};

/// Finite description of the jumping loci W_i(G): every nontrivial character
/// with depth >= 1 (the trivial character has depth b1 and is implicit).
struct JumpingLocusReport {
    long scan_bound = 0;
    int b1 = 0;
    std::vector<LocusEntry> entries;
    long exponent = 1;

    /// Validates entries (nontrivial, depth >= 1, no duplicates), sorts them
    /// and computes the exponent.
    static JumpingLocusReport from_entries(long scan_bound, int b1, std::vector<LocusEntry> entries);

    /// Members of W_i, trivial character included when i <= b1.
    std::vector<TorsionCharacter> locus(int depth) const;
    int max_depth() const;
    bool is_nested() const;
};

long exponent_of(const std::vector<LocusEntry>& entries);

/// Every character of order <= max_order, in order of (order, exponents
/// lexicographic). Only nonzero depths are recorded. Runs on up to `threads`
/// workers (0: hardware concurrency); the output does not depend on it.
JumpingLocusReport scan_jumping_loci(const GroupPresentation& p, long max_order, unsigned threads = 1);

/// Enumerates the characters of Z^rank of order exactly m, lexicographically.
std::vector<TorsionCharacter> characters_of_order(std::size_t rank, long m);

struct CoverBetti {
    long b1 = 0;
    std::optional<std::string> warning;
};

/// b1(ker alpha) = b1(G) + sum of depths of the nontrivial characters in W
/// that factor through alpha. Warns when the scan bound is below exp(S).
CoverBetti hironaka_b1(int b1_G, const JumpingLocusReport& w, const AbelianEpimorphism& alpha);

struct CoprimeCertificate {
    long d = 0;
    long exponent = 1;
    /// (order, gcd(order, d)) for every nontrivial character in W.
    std::vector<std::pair<long, long>> checked_orders;
    /// Independent confirmation: no entry passes the factorization test.
    bool no_entry_factors = false;
};

struct CoprimeCoverResult {
    long b1 = 0;
    std::optional<CoprimeCertificate> certificate;
    std::optional<std::string> warning;
};

/// Cyclic cover of order d with the given weights. When gcd(d, e(G)) = 1
/// the only character of W factoring through Z/d is the trivial one, and the
/// result carries a certificate; otherwise falls back to hironaka_b1.
CoprimeCoverResult coprime_cover_b1(int b1_G, const JumpingLocusReport& w, long d, const std::vector<long>& weights);

} // namespace slopekit
