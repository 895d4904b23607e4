#pragma once

// Alexander, Conway and Casson invariants of 3-braid closures via the reduced
// Burau representation.

#include <stdexcept>
#include <string>

#include "braid3/laurent.hpp"
#include "braid3/word.hpp"

namespace braid3 {

class NonKnotError : public std::invalid_argument {
public:
    NonKnotError(const BraidWord& w, int components)
        : std::invalid_argument("closure of '" + format_word(w) + "' has " + std::to_string(components) +
                                " components, expected a knot"),
          components_(components) {}
    int components() const { return components_; }

private:
    int components_;
};

/// Reduced Burau matrices, fixed once:
///   s1 -> [[-t, 1], [0, 1]],   s2 -> [[1, 0], [t, -t]].
/// a3 enters through its canonical Artin expansion.
Mat2 burau(const BraidWord& w);

/// Equality in B3 (the reduced Burau representation of B3 is faithful).
bool same_braid(const BraidWord& u, const BraidWord& v);

struct AlexanderValue {
    LaurentPoly poly;
    int components = 1;
    /// True for knots: poly(1) = 1 and poly(t^-1) = poly(t).
    bool normalized = false;
    /// False when det(I - B) was not divisible by 1 + t + t^2 and poly is the
    /// raw determinant.
    bool divided = true;
};

/// Normalized for knots; for links an explicitly unnormalized
/// det(I - B) / (1 + t + t^2).
AlexanderValue alexander_value(const BraidWord& w);

/// Normalized Alexander polynomial of a knot closure; throws NonKnotError.
LaurentPoly alexander(const BraidWord& w);
ConwayPoly conway(const BraidWord& w);

/// Casson invariant 1/2 Delta''(1), checked against the x^2 coefficient of the
/// Conway polynomial. Throws NonKnotError for links.
Integer casson(const BraidWord& w);
/// Casson invariant of 1/n surgery on the closure: n * casson(w).
Integer surgery_casson(const BraidWord& w, long n);

}  // namespace braid3
