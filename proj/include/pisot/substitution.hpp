#ifndef PISOT_SUBSTITUTION_HPP
#define PISOT_SUBSTITUTION_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "pisot/core.hpp"
#include "pisot/numberfield.hpp"

namespace pisot {

/// Letters are 0-based indices internally; reports print them 1-based.
using Letter = int;
using Word = std::vector<Letter>;

/// Default cap on the length of any materialised word.
inline constexpr std::size_t kDefaultWordCap = 2'000'000;

/// A substitution on the alphabet {0, ..., m-1}: letter j maps to rule(j).
class Substitution {
public:
    /// Throws PreconditionError on empty rules or out-of-range letters.
    explicit Substitution(std::vector<Word> rules);

    int size() const { return static_cast<int>(rules_.size()); }
    const Word& rule(Letter a) const { return rules_.at(static_cast<std::size_t>(a)); }
    const std::vector<Word>& rules() const { return rules_; }

    /// Image of a word; throws CapExceeded past `cap` letters.
    Word apply(const Word& w, std::size_t cap = kDefaultWordCap) const;

    /// Common rule length, or 0 when the lengths differ.
    std::size_t constant_length() const;

    bool operator==(const Substitution&) const = default;

private:
    std::vector<Word> rules_;
};

/// M(i, j) = number of occurrences of letter i in rule(j).
IntMatrix substitution_matrix(const Substitution& s);

/// Some power M^k with k <= (m-1)^2 + 1 is entrywise positive.
bool is_primitive(const IntMatrix& m);

/// sigma composed n times (n >= 1).
Substitution power(const Substitution& s, int n, std::size_t cap = kDefaultWordCap);

/// Characteristic polynomial of the substitution matrix has no proper factor.
bool is_irreducible(const Substitution& s);

struct PerronData {
    IntPoly char_poly;
    FieldPtr field;  ///< Q(beta) built on the irreducible factor with root beta
    AlgebraicReal beta;
    /// Left Perron eigenvector, l M = beta l, scaled so min_i l_i = 1.
    std::vector<AlgebraicReal> lengths;
    bool pisot = false;
};

/// Perron root and tile lengths. Requires a primitive substitution; the Pisot
/// status is reported in the result rather than enforced here.
PerronData perron_data(const Substitution& s);

/// A legal two-letter seed `left|right` for a two-sided fixed point of
/// sigma^power: rule^power(left) ends with left, rule^power(right) starts
/// with right.
struct FixedPointSeed {
    int power = 0;
    Letter left = 0;
    Letter right = 0;
};

FixedPointSeed fixed_point_seed(const Substitution& s);

/// All two-letter words occurring in some sigma^j(c), j >= 1.
std::vector<std::pair<Letter, Letter>> legal_pairs(const Substitution& s);

/// Coincidence in the sense of column sets for constant-length substitutions:
/// some column of some power of sigma is a single letter. Throws
/// PreconditionError if the rule lengths differ.
bool dekking_column_check(const Substitution& s);

}  // namespace pisot

#endif
