#pragma once

// Crossings of the canonical projection: signs, linking numbers, and the
// crossing change / smoothing used in C(K+) - C(K-) = lk(L0).
//
// Sign convention: strands are oriented downward, and a positive-exponent
// letter is a crossing of sign -1; a negative-exponent letter has sign +1.

#include <array>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "braid3/laurent.hpp"
#include "braid3/word.hpp"

namespace braid3 {

class SiteOutOfRangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

class NotTwoComponentError : public std::invalid_argument {
public:
    NotTwoComponentError(const BraidWord& w, int components);
    int components() const { return components_; }

private:
    int components_;
};

/// Which strand passes over at a crossing. For a negative letter the roles
/// are exchanged.
enum class OverConvention {
    /// On a positive letter s_i the strand at position i passes over.
    LeftOverOnPositive,
    /// On a positive letter s_i the strand at position i + 1 passes over.
    RightOverOnPositive,
};

inline constexpr OverConvention kDefaultOverConvention = OverConvention::LeftOverOnPositive;

/// Crossing sign of one letter.
inline int crossing_sign(const ArtinLetter& l) { return -l.sign; }

struct CrossingSite {
    /// Index into artin_letters(w).
    std::size_t letter_index = 0;
    /// Positions (1-based) of the two strands, {1, 2} or {2, 3}.
    std::pair<int, int> positions{1, 2};
    int exponent_sign = 1;
};

CrossingSite crossing_site(const BraidWord& w, std::size_t letter_index);
std::vector<CrossingSite> crossing_sites(const BraidWord& w);

/// Linking number of a two-component closure: half the signed count of
/// crossings between different components. Throws NotTwoComponentError.
long linking_number(const BraidWord& w);

/// One-sided count over the Artin letters [first, last): for each crossing
/// where an L1 strand passes under an L2 strand, add its sign.
/// top_labels[p] in {1, 2} labels the strand at position p + 1 on entry.
long portion_contribution(std::span<const ArtinLetter> letters, std::size_t first, std::size_t last,
                          std::array<int, 3> top_labels, OverConvention over = kDefaultOverConvention);

/// The same count on a two-component closure; l1_component (0 or 1) selects
/// which closure component plays L1.
long portion_contribution(const BraidWord& w, std::size_t first, std::size_t last, int l1_component,
                          OverConvention over = kDefaultOverConvention);

/// Inverts the sign of one Artin letter. Band syllables are kept where the
/// letter lies inside an a3 block; a flip on the wrapping s1^-1 or s1 of an
/// a3 block writes that block out in Artin letters.
BraidWord flip_crossing(const BraidWord& w, std::size_t letter_index);
/// Deletes one Artin letter, with the same handling of a3 blocks.
BraidWord smooth_crossing(const BraidWord& w, std::size_t letter_index);

struct SkeinTriple {
    BraidWord original;
    BraidWord flipped;
    BraidWord smoothed;
};

SkeinTriple skein_triple(const BraidWord& w, std::size_t letter_index);

struct SkeinCheck {
    Integer c_plus;
    Integer c_minus;
    long lk0 = 0;
    bool holds = false;
};

/// The word carrying the negative letter at the site is K+. Requires a knot
/// closure; the smoothing then has two components.
SkeinCheck skein_check(const BraidWord& w, std::size_t letter_index);

}  // namespace braid3
