#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "slopekit/integer_matrix.hpp"

namespace slopekit {

/// A word in the free group: signed 1-based generator indices, negative for
/// inverses. The empty word is the identity. Words are not reduced
/// implicitly; use free_reduce.
struct Word {
    std::vector<int> letters;

    Word() = default;
    Word(std::initializer_list<int> l) : letters(l) {}
    explicit Word(std::vector<int> l) : letters(std::move(l)) {}

    std::size_t size() const noexcept { return letters.size(); }
    bool empty() const noexcept { return letters.empty(); }

    Word inverse() const;
    friend Word operator*(const Word& a, const Word& b);
    friend bool operator==(const Word&, const Word&) = default;
};

/// Throws Error{"group_core", "malformed-word"} if a letter is 0 or exceeds
/// the generator count.
void validate_word(const Word& w, int generator_count);

Word free_reduce(const Word& w, int generator_count);

std::vector<long> abelianized_exponents(const Word& w, int generator_count);

/// Finitely presented group. Relators are validated and stored freely reduced.
class GroupPresentation {
public:
    GroupPresentation() = default;
    GroupPresentation(int generator_count, std::vector<Word> relators,
                      std::vector<std::string> generator_names = {});

    int generator_count() const noexcept { return generator_count_; }
    std::size_t relator_count() const noexcept { return relators_.size(); }
    const std::vector<Word>& relators() const noexcept { return relators_; }
    const std::vector<std::string>& generator_names() const noexcept { return names_; }

    /// Renders a word with generator names, inverses upper-cased.
    std::string format_word(const Word& w) const;

    friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;

private:
    int generator_count_ = 0;
    std::vector<Word> relators_;
    std::vector<std::string> names_;
};

/// r x g matrix whose row j holds the abelianized exponents of relator j.
IntegerMatrix exponent_matrix(const GroupPresentation& p);

/// H_1 = Z^free_rank + sum Z/torsion_i, with torsion_i | torsion_{i+1}.
struct AbelianGroupStructure {
    int free_rank = 0;
    std::vector<Integer> torsion_coefficients;

    bool torsion_free() const noexcept { return torsion_coefficients.empty(); }
    friend bool operator==(const AbelianGroupStructure&, const AbelianGroupStructure&) = default;
};

AbelianGroupStructure abelianization(const GroupPresentation& p);

/// Abelianization together with the projection of each generator onto the
/// free part Z^b. Row i of `free_projection` is the image of generator i+1.
/// The projection is put in column Hermite form so it does not depend on
/// the particular Smith transforms.
struct AbelianizationMap {
    AbelianGroupStructure structure;
    IntegerMatrix free_projection;

    /// Image in Z^b of a word.
    std::vector<long> project(const Word& w) const;
};

AbelianizationMap abelianization_map(const GroupPresentation& p);

namespace presentations {

GroupPresentation torus();
GroupPresentation free_group(int rank);
/// Closed orientable surface group, relator [a1,b1]...[ag,bg].
GroupPresentation surface_group(int genus);
/// Trefoil knot group <x, y | x y x Y X Y>.
GroupPresentation trefoil();
GroupPresentation cyclic(int order);

} // namespace presentations

} // namespace slopekit
