#include "slopekit/fox.hpp"

#include <cstdlib>

#include "slopekit/error.hpp"

namespace slopekit {

std::vector<FoxTerm> fox_terms(const Word& w, int generator, const AbelianizationMap& ab) {
    const int g = static_cast<int>(ab.free_projection.rows());
    validate_word(w, g);
    if (generator < 1 || generator > g)
        throw Error("group_core", "malformed-word",
                    "generator " + std::to_string(generator) + " outside 1.." + std::to_string(g));

    const std::size_t b = ab.free_projection.cols();
    std::vector<long> prefix(b, 0);
    std::vector<FoxTerm> terms;
    for (int letter : w.letters) {
        const std::size_t row = static_cast<std::size_t>(std::abs(letter) - 1);
        const long step = letter > 0 ? 1 : -1;
        if (letter == generator)
            terms.push_back({prefix, +1});
        for (std::size_t j = 0; j < b; ++j)
            prefix[j] += step * ab.free_projection(row, j).get_si();
        if (letter == -generator)
            terms.push_back({prefix, -1});
    }
    return terms;
}

namespace {

void require_torsion_free(const AbelianizationMap& ab) {
    if (!ab.structure.torsion_free())
        throw Error("group_core", "unsupported-symbolic-path",
                    "symbolic Fox calculus requires torsion-free H_1; evaluate at characters instead");
}

} // namespace

LaurentPolynomial fox_derivative(const Word& w, int generator, const AbelianizationMap& ab) {
    require_torsion_free(ab);
    LaurentPolynomial out(ab.free_projection.cols());
    for (const FoxTerm& t : fox_terms(w, generator, ab))
        out.add_term(t.monomial, t.sign);
    return out;
}

LaurentPolynomial fox_derivative(const GroupPresentation& p, const Word& w, int generator) {
    return fox_derivative(w, generator, abelianization_map(p));
}

LaurentPolynomial abelian_monomial(const Word& u, const AbelianizationMap& ab) {
    validate_word(u, static_cast<int>(ab.free_projection.rows()));
    return LaurentPolynomial::monomial(ab.project(u));
}

AlexanderMatrix alexander_matrix(const GroupPresentation& p) {
    const AbelianizationMap ab = abelianization_map(p);
    require_torsion_free(ab);
    AlexanderMatrix m;
    m.reserve(p.relator_count());
    for (const Word& r : p.relators()) {
        std::vector<LaurentPolynomial> row;
        row.reserve(static_cast<std::size_t>(p.generator_count()));
        for (int i = 1; i <= p.generator_count(); ++i)
            row.push_back(fox_derivative(r, i, ab));
        m.push_back(std::move(row));
    }
    return m;
}

} // namespace slopekit
