#include "slopekit/group.hpp"

#include <cctype>
#include <sstream>

#include "slopekit/error.hpp"

namespace slopekit {

Word Word::inverse() const {
    Word out;
    out.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        out.letters.push_back(-*it);
    return out;
}

Word operator*(const Word& a, const Word& b) {
    Word out = a;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return out;
}

void validate_word(const Word& w, int generator_count) {
    for (int letter : w.letters)
        if (letter == 0 || letter > generator_count || -letter > generator_count)
            throw Error("group_core", "malformed-word",
                        "letter " + std::to_string(letter) + " outside generator range 1.." +
                            std::to_string(generator_count));
}

Word free_reduce(const Word& w, int generator_count) {
    validate_word(w, generator_count);
    Word out;
    out.letters.reserve(w.size());
    for (int letter : w.letters) {
        if (!out.letters.empty() && out.letters.back() == -letter)
            out.letters.pop_back();
        else
            out.letters.push_back(letter);
    }
    return out;
}

std::vector<long> abelianized_exponents(const Word& w, int generator_count) {
    validate_word(w, generator_count);
    std::vector<long> e(static_cast<std::size_t>(generator_count), 0);
    for (int letter : w.letters) {
        if (letter > 0)
            ++e[letter - 1];
        else
            --e[-letter - 1];
    }
    return e;
}

GroupPresentation::GroupPresentation(int generator_count, std::vector<Word> relators,
                                     std::vector<std::string> generator_names)
    : generator_count_(generator_count), names_(std::move(generator_names)) {
    if (generator_count < 0)
        throw Error("group_core", "malformed-presentation", "negative generator count");
    if (names_.empty()) {
        for (int i = 0; i < generator_count; ++i) {
            if (generator_count <= 26)
                names_.push_back(std::string(1, static_cast<char>('a' + i)));
            else
                names_.push_back("x" + std::to_string(i + 1));
        }
    } else if (static_cast<int>(names_.size()) != generator_count) {
        throw Error("group_core", "malformed-presentation", "generator name count mismatch");
    }
    relators_.reserve(relators.size());
    for (const Word& r : relators)
        relators_.push_back(free_reduce(r, generator_count));
}

std::string GroupPresentation::format_word(const Word& w) const {
    std::ostringstream os;
    bool first = true;
    for (int letter : w.letters) {
        os << (first ? "" : " ");
        first = false;
        std::string name = names_.at(static_cast<std::size_t>(std::abs(letter) - 1));
        if (letter < 0)
            for (char& c : name)
                c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        os << name;
    }
    return os.str();
}

IntegerMatrix exponent_matrix(const GroupPresentation& p) {
    IntegerMatrix m(p.relator_count(), static_cast<std::size_t>(p.generator_count()));
    for (std::size_t j = 0; j < p.relator_count(); ++j) {
        auto e = abelianized_exponents(p.relators()[j], p.generator_count());
        for (std::size_t i = 0; i < e.size(); ++i)
            m(j, i) = e[i];
    }
    return m;
}

AbelianGroupStructure abelianization(const GroupPresentation& p) {
    return abelianization_map(p).structure;
}

namespace {

// Column operations bringing a g x b matrix of full column rank to lower
// column-echelon form with positive pivots and reduced entries left of each
// pivot.
void column_hermite(IntegerMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t col = 0;
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    for (std::size_t r = 0; r < rows && col < cols; ++r) {
        // gcd-combine the entries of row r in columns col.. into column col
        for (;;) {
            std::size_t best = cols;
            for (std::size_t j = col; j < cols; ++j)
                if (m(r, j) != 0 && (best == cols || abs(m(r, j)) < abs(m(r, best))))
                    best = j;
            if (best == cols)
                break;
            m.swap_cols(col, best);
            bool done = true;
            for (std::size_t j = col + 1; j < cols; ++j) {
                if (m(r, j) == 0)
                    continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), m(r, j).get_mpz_t(), m(r, col).get_mpz_t());
                m.add_col_multiple(j, col, -q);
                done = done && m(r, j) == 0;
            }
            if (done)
                break;
        }
        if (m(r, col) == 0)
            continue;
        if (m(r, col) < 0)
            m.negate_col(col);
        for (std::size_t j = 0; j < col; ++j) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), m(r, j).get_mpz_t(), m(r, col).get_mpz_t());
            m.add_col_multiple(j, col, -q);
        }
        ++col;
    }
}

} // namespace

AbelianizationMap abelianization_map(const GroupPresentation& p) {
    const std::size_t g = static_cast<std::size_t>(p.generator_count());
    const SmithForm snf = smith_normal_form(exponent_matrix(p));

    AbelianizationMap out;
    out.structure.free_rank = static_cast<int>(g - snf.rank);
    for (const Integer& d : snf.invariant_factors())
        if (d > 1)
            out.structure.torsion_coefficients.push_back(d);

    // Relation rows map under x -> x V onto the rows of D, so the free part is
    // read off the columns of V past the rank.
    out.free_projection = IntegerMatrix(g, g - snf.rank);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = snf.rank; j < g; ++j)
            out.free_projection(i, j - snf.rank) = snf.right(i, j);
    column_hermite(out.free_projection);
    return out;
}

std::vector<long> AbelianizationMap::project(const Word& w) const {
    const std::size_t b = free_projection.cols();
    std::vector<long> image(b, 0);
    for (int letter : w.letters) {
        const std::size_t row = static_cast<std::size_t>(std::abs(letter) - 1);
        const long sign = letter > 0 ? 1 : -1;
        for (std::size_t j = 0; j < b; ++j)
            image[j] += sign * free_projection(row, j).get_si();
    }
    return image;
}

namespace presentations {

GroupPresentation torus() { return GroupPresentation(2, {Word{1, 2, -1, -2}}); }

GroupPresentation free_group(int rank) { return GroupPresentation(rank, {}); }

GroupPresentation surface_group(int genus) {
    Word relator;
    for (int i = 0; i < genus; ++i) {
        const int a = 2 * i + 1;
        const int b = 2 * i + 2;
        relator = relator * Word{a, b, -a, -b};
    }
    return GroupPresentation(2 * genus, {relator});
}

GroupPresentation trefoil() {
    return GroupPresentation(2, {Word{1, 2, 1, -2, -1, -2}}, {"x", "y"});
}

GroupPresentation cyclic(int order) {
    return GroupPresentation(1, {Word(std::vector<int>(static_cast<std::size_t>(order), 1))});
}

} // namespace presentations

} // namespace slopekit
