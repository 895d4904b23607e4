#pragma once

// Word classes used for positivity arguments on 3-braids:
//
//   P    positive words whose subscripts go 1 -> 2 -> 3 -> 1 (non-decreasing mod 3)
//   N    negative words whose subscripts go 3 -> 2 -> 1 -> 3
//   P*   positive words with both a1 and a2 between any two a3-syllables
//   Pa   a_i^-q delta with q in {0, 1}, delta in P* non-empty and index-3
//        reduced, the whole word cyclically reduced
//   E    twelve five-syllable words of Pa excluded from the positivity result

#include <optional>
#include <span>
#include <stdexcept>
#include <string>

#include "braid3/word.hpp"

namespace braid3 {

struct NormalForm {
    enum class Kind { I, II, III, None };
    Kind kind = Kind::None;
    /// Power of alpha = a2 a1 in forms I (k >= 0) and II (k <= 0); 0 otherwise.
    int k = 0;

    std::string to_string() const;
    friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

struct ClassReport {
    bool in_P = false;
    bool in_N = false;
    bool in_Pstar = false;
    bool is_index3_reduced = false;
    bool in_Pa = false;
    bool in_E = false;
    NormalForm normal_form;
    /// Syllable count s.
    int s_count = 0;
    /// Number of a3-syllables n.
    int n3_count = 0;
};

/// beta = a_i^-q delta, split as in the definition of Pa.
struct PaSplit {
    int q = 0;
    /// Subscript of the leading negative letter; 0 when q == 0.
    int i = 0;
    BraidWord delta;
};

bool in_P(const BraidWord& w);
bool in_N(const BraidWord& w);
bool in_Pstar(const BraidWord& w);
/// In P* and no a3-syllable is immediately preceded by a1 or followed by a2.
bool is_index3_reduced(const BraidWord& w);
std::optional<PaSplit> pa_split(const BraidWord& w);
bool in_Pa(const BraidWord& w);
bool in_E(const BraidWord& w);
/// Recognizes the shapes alpha^k P, alpha^k N and P N. Length minimality is
/// not checked.
NormalForm normal_form(const BraidWord& w);

ClassReport classify(const BraidWord& w);

/// The excluded set E, in the order it is usually listed.
std::span<const BraidWord> excluded_set();

class NotInPstarError : public std::invalid_argument {
public:
    explicit NotInPstarError(const BraidWord& w)
        : std::invalid_argument("word is not in P*: " + format_word(w)) {}
};

/// Eliminates a3-syllables with a1 a3^k = a2^k a1 and a3^k a2 = a2 a1^k until
/// the word is index-3 reduced. Throws NotInPstarError outside P*.
BraidWord index3_reduce(const BraidWord& w);

}  // namespace braid3
