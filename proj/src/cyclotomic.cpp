#include "slopekit/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace slopekit {

namespace {

std::vector<Integer> compute_cyclotomic(int m) {
    // x^m - 1 divided by Phi_d for every proper divisor d of m
    std::vector<Integer> poly(static_cast<std::size_t>(m) + 1, 0);
    poly.front() = -1;
    poly.back() = 1;
    for (int d = 1; d < m; ++d) {
        if (m % d != 0)
            continue;
        const std::vector<Integer>& divisor = cyclotomic_polynomial(d);
        const std::size_t dd = divisor.size() - 1;
        std::vector<Integer> quotient(poly.size() - dd, 0);
        for (std::size_t i = poly.size(); i-- > dd;) {
            const Integer c = poly[i]; // divisor is monic
            quotient[i - dd] = c;
            for (std::size_t j = 0; j <= dd; ++j)
                poly[i - dd + j] -= c * divisor[j];
        }
        poly = std::move(quotient);
    }
    return poly;
}

} // namespace

const std::vector<Integer>& cyclotomic_polynomial(int m) {
    if (m < 1)
        throw std::invalid_argument("cyclotomic_polynomial: modulus must be positive");
    static std::recursive_mutex mutex;
    static std::map<int, std::vector<Integer>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(m);
    if (it == cache.end())
        it = cache.emplace(m, compute_cyclotomic(m)).first;
    return it->second;
}

int euler_phi(int m) {
    int result = m;
    for (int p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            while (m % p == 0)
                m /= p;
            result -= result / p;
        }
    if (m > 1)
        result -= result / m;
    return result;
}

CyclotomicNumber::CyclotomicNumber(int modulus)
    : modulus_(modulus), coeffs_(static_cast<std::size_t>(euler_phi(modulus)), 0) {
    if (modulus < 1)
        throw std::invalid_argument("CyclotomicNumber: modulus must be positive");
}

CyclotomicNumber CyclotomicNumber::from_integer(int modulus, const Integer& value) {
    CyclotomicNumber z(modulus);
    z.coeffs_[0] = value;
    return z;
}

CyclotomicNumber CyclotomicNumber::root_power(int modulus, long k) {
    long r = k % modulus;
    if (r < 0)
        r += modulus;
    std::vector<Rational> poly(static_cast<std::size_t>(r) + 1, 0);
    poly.back() = 1;
    return from_polynomial(modulus, poly);
}

CyclotomicNumber CyclotomicNumber::from_polynomial(int modulus, const std::vector<Rational>& coefficients) {
    CyclotomicNumber z(modulus);
    const std::vector<Integer>& phi = cyclotomic_polynomial(modulus);
    const std::size_t deg = phi.size() - 1;
    std::vector<Rational> work = coefficients;
    for (std::size_t i = work.size(); i-- > deg;) {
        if (work[i] == 0)
            continue;
        const Rational c = work[i];
        for (std::size_t j = 0; j <= deg; ++j)
            work[i - deg + j] -= c * phi[j];
    }
    for (std::size_t i = 0; i < deg && i < work.size(); ++i)
        z.coeffs_[i] = work[i];
    return z;
}

bool CyclotomicNumber::is_zero() const {
    for (const Rational& c : coeffs_)
        if (c != 0)
            return false;
    return true;
}

void CyclotomicNumber::check_compatible(const CyclotomicNumber& o) const {
    if (o.modulus_ != modulus_)
        throw std::invalid_argument("CyclotomicNumber: modulus mismatch");
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const Rational& s) {
    for (Rational& c : coeffs_)
        c *= s;
    return *this;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
    CyclotomicNumber z = *this;
    for (Rational& c : z.coeffs_)
        c = -c;
    return z;
}

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    a.check_compatible(b);
    std::vector<Rational> product(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            product[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return CyclotomicNumber::from_polynomial(a.modulus_, product);
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return a.modulus_ == b.modulus_ && a.coeffs_ == b.coeffs_;
}

CyclotomicNumber CyclotomicNumber::conjugate() const {
    // zeta^i -> zeta^{m - i}
    std::vector<Rational> poly(static_cast<std::size_t>(modulus_), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const std::size_t target = i == 0 ? 0 : static_cast<std::size_t>(modulus_) - i;
        poly[target] += coeffs_[i];
    }
    return from_polynomial(modulus_, poly);
}

std::string CyclotomicNumber::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0)
            continue;
        os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        first = false;
        const Rational mag = abs(c);
        if (i == 0)
            os << mag;
        else {
            if (mag != 1)
                os << mag << '*';
            os << 'z';
            if (i > 1)
                os << '^' << i;
        }
    }
    return first ? "0" : os.str();
}

namespace {

void make_primitive(std::vector<CyclotomicNumber>& row) {
    Integer denominators = 1;
    for (const auto& z : row)
        for (const Rational& c : z.coefficients())
            if (c != 0)
                mpz_lcm(denominators.get_mpz_t(), denominators.get_mpz_t(), c.get_den_mpz_t());
    Integer content = 0;
    for (const auto& z : row)
        for (const Rational& c : z.coefficients())
            if (c != 0) {
                Integer scaled = c.get_num() * (denominators / c.get_den());
                mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
            }
    if (content == 0)
        return;
    Rational scale(denominators, content);
    scale.canonicalize();
    for (auto& z : row)
        z *= scale;
}

} // namespace

std::size_t cyclotomic_rank(CyclotomicMatrix rows) {
    std::size_t r = 0;
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (std::size_t col = 0; col < cols && r < rows.size(); ++col) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][col].is_zero())
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[r], rows[pivot]);
        const CyclotomicNumber head = rows[r][col];
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][col].is_zero())
                continue;
            const CyclotomicNumber factor = rows[i][col];
            for (std::size_t j = col; j < cols; ++j)
                rows[i][j] = head * rows[i][j] - factor * rows[r][j];
            make_primitive(rows[i]);
        }
        ++r;
    }
    return r;
}

} // namespace slopekit
