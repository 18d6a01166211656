#include "slopekit/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace slopekit {

LaurentPolynomial LaurentPolynomial::constant(std::size_t variable_count, const Integer& c) {
    LaurentPolynomial p(variable_count);
    p.add_term(Exponents(variable_count, 0), c);
    return p;
}

LaurentPolynomial LaurentPolynomial::monomial(Exponents exponents, const Integer& c) {
    LaurentPolynomial p(exponents.size());
    p.add_term(exponents, c);
    return p;
}

Integer LaurentPolynomial::evaluate_at_one() const {
    Integer sum = 0;
    for (const auto& [e, c] : terms_)
        sum += c;
    return sum;
}

void LaurentPolynomial::add_term(const Exponents& e, const Integer& c) {
    if (e.size() != variables_)
        throw std::invalid_argument("LaurentPolynomial: exponent length mismatch");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void LaurentPolynomial::check_compatible(const LaurentPolynomial& o) const {
    if (o.variables_ != variables_)
        throw std::invalid_argument("LaurentPolynomial: variable count mismatch");
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    a.check_compatible(b);
    LaurentPolynomial out(a.variables_);
    LaurentPolynomial::Exponents sum(a.variables_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < sum.size(); ++i)
                sum[i] = ea[i] + eb[i];
            out.add_term(sum, ca * cb);
        }
    return out;
}

std::string LaurentPolynomial::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Integer magnitude = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;

        std::ostringstream mono;
        bool any = false;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            mono << (any ? "*" : "") << 't';
            if (variables_ > 1)
                mono << i + 1;
            if (e[i] != 1)
                mono << '^' << e[i];
            any = true;
        }
        if (!any)
            os << magnitude;
        else if (magnitude == 1)
            os << mono.str();
        else
            os << magnitude << '*' << mono.str();
    }
    return os.str();
}

} // namespace slopekit
