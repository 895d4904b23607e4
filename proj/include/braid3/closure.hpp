#pragma once

// Strand bookkeeping for braid closures.

#include <array>
#include <string>

#include "braid3/word.hpp"

namespace braid3 {

/// Bijection of {1, 2, 3}.
class Permutation3 {
public:
    Permutation3() = default;
    explicit Permutation3(std::array<int, 3> image);

    static Permutation3 identity() { return {}; }
    /// Transposition exchanging positions a and b.
    static Permutation3 transposition(int a, int b);

    int operator()(int i) const { return image_[static_cast<std::size_t>(i - 1)]; }
    std::array<int, 3> image() const { return image_; }
    Permutation3 inverse() const;
    int cycle_count() const;
    /// Cycle notation, e.g. "(1 2)", "(1 2 3)", "()" for the identity.
    std::string to_string() const;

    friend bool operator==(const Permutation3&, const Permutation3&) = default;

private:
    std::array<int, 3> image_{1, 2, 3};
};

/// Apply first, then second: compose(p, q)(i) == q(p(i)).
Permutation3 compose(const Permutation3& first, const Permutation3& second);

/// The transposition traced by one band letter: a1 (1 2), a2 (2 3), a3 (1 3).
Permutation3 letter_permutation(int subscript);

struct ClosureInfo {
    /// Strand starting at top position i ends at bottom position permutation(i).
    Permutation3 permutation;
    int component_count = 3;
    /// Component label (0-based, numbered by smallest strand) per strand 1..3.
    std::array<int, 3> strand_component{0, 1, 2};

    int component_of(int strand) const { return strand_component[static_cast<std::size_t>(strand - 1)]; }
    bool is_knot() const { return component_count == 1; }
};

/// Word order is top-to-bottom, so letter permutations compose left to right.
ClosureInfo closure_info(const BraidWord& w);
ClosureInfo closure_info(const Permutation3& p);

/// Genus of the canonical Seifert surface: one disk per strand and one twisted
/// band per band letter. For a connected surface this is (c - b - 1) / 2 with c
/// letters and b closure components; disconnected surfaces sum over pieces.
int bennequin_genus(const BraidWord& w);

}  // namespace braid3
