#pragma once

// Words in the band generators a1, a2, a3 of the 3-strand braid group.
//
// Relations: a2 a1 = a3 a2 = a1 a3, with a1 = s1, a2 = s2 and
// a3 = s1^-1 s2 s1 in Artin generators.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace braid3 {

/// A run a_subscript^power of one repeated letter.
struct Syllable {
    int subscript = 1;
    int power = 1;

    int sign() const { return power > 0 ? 1 : -1; }
    int length() const { return power > 0 ? power : -power; }

    friend bool operator==(const Syllable&, const Syllable&) = default;
    friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

/// One crossing of the canonical Artin projection: s_generator^sign.
struct ArtinLetter {
    int generator = 1;  // 1 or 2
    int sign = 1;       // +1 or -1

    friend bool operator==(const ArtinLetter&, const ArtinLetter&) = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// A braid word stored as runs of identical letters.
///
/// Adjacent syllables never carry the same letter (same subscript and same
/// sign); such runs are merged on construction. A letter followed by its
/// inverse is kept until free_reduce is applied, so crossing flips can be
/// undone letter for letter.
class BraidWord {
public:
    BraidWord() = default;
    explicit BraidWord(std::vector<Syllable> syllables);
    BraidWord(std::initializer_list<Syllable> syllables)
        : BraidWord(std::vector<Syllable>(syllables)) {}

    static BraidWord letter(int subscript, int power = 1) {
        return BraidWord(std::vector<Syllable>{Syllable{subscript, power}});
    }

    std::span<const Syllable> syllables() const { return syllables_; }
    const Syllable& operator[](std::size_t i) const { return syllables_[i]; }
    std::size_t syllable_count() const { return syllables_.size(); }
    bool empty() const { return syllables_.empty(); }

    /// Total number of band letters, sum of |power|.
    long letter_count() const;
    long exponent_sum() const;
    /// Number of syllables with subscript 3.
    std::size_t a3_syllable_count() const;

    bool is_positive() const;
    bool is_negative() const;

    BraidWord inverse() const;
    /// Inverts every Artin exponent, so the closure is the mirror image.
    /// Without a3 this inverts every exponent; a3^e becomes a1 a2^-e a1^-1.
    BraidWord mirror() const;
    BraidWord pow(int n) const;

    /// Letter-by-letter expansion, each entry with power +-1.
    std::vector<Syllable> letters() const;
    static BraidWord from_letters(std::span<const Syllable> letters);

    friend BraidWord operator*(const BraidWord& lhs, const BraidWord& rhs);
    friend bool operator==(const BraidWord&, const BraidWord&) = default;
    /// Shortlex: letter count first, then lexicographic on (subscript, power).
    friend std::strong_ordering shortlex_compare(const BraidWord& lhs, const BraidWord& rhs);

private:
    std::vector<Syllable> syllables_;
};

inline bool shortlex_less(const BraidWord& lhs, const BraidWord& rhs) {
    return shortlex_compare(lhs, rhs) < 0;
}

/// Grammar: word := token*; token := ("a1"|"a2"|"a3") ("^" integer)?
BraidWord parse_word(std::string_view text);
std::string format_word(const BraidWord& w);

/// Cancels adjacent inverse letters until none remain.
BraidWord free_reduce(const BraidWord& w);
BraidWord free_reduce(std::span<const Syllable> syllables);
bool is_freely_reduced(const BraidWord& w);

/// Freely reduces, then cancels inverse letters across the ends (a conjugation).
BraidWord cyclic_reduce(const BraidWord& w);
bool is_cyclically_reduced(const BraidWord& w);

/// g^-1 w g, freely reduced.
BraidWord conjugate(const BraidWord& w, const BraidWord& g);
/// Moves the first k letters to the end; negative k moves letters from the end
/// to the front.
BraidWord cyclic_rotate(const BraidWord& w, long k);

/// Canonical projection: each maximal run of a3 letters a3^e1 ... a3^er becomes
/// s1^-1 s2^e1 ... s2^er s1, all other letters map to themselves.
std::vector<ArtinLetter> artin_letters(const BraidWord& w);
BraidWord word_from_artin(std::span<const ArtinLetter> letters);
/// Artin form of w (subscripts 1 and 2 only), freely reduced.
BraidWord to_artin(const BraidWord& w);

}  // namespace braid3
