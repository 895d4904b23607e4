#pragma once

// Exact Laurent polynomials in t over the integers, polynomials in x for the
// Conway form, and 2x2 matrices over Z[t, t^-1].

#include <gmpxx.h>

#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace braid3 {

using Integer = mpz_class;

class InexactDivisionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class NormalizationError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// sum_k c_k t^k with finitely many nonzero c_k. Canonical form: the first
/// and last stored coefficients are nonzero; zero has no coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(std::vector<Integer> coefficients, int min_exponent);

    static LaurentPoly constant(const Integer& c) { return monomial(c, 0); }
    static LaurentPoly monomial(const Integer& c, int exponent);
    /// t^exponent
    static LaurentPoly t(int exponent = 1) { return monomial(1, exponent); }

    bool is_zero() const { return coeffs_.empty(); }
    /// Lowest and highest exponents present; both 0 for the zero polynomial.
    int min_exponent() const { return min_exp_; }
    int max_exponent() const { return min_exp_ + static_cast<int>(coeffs_.size()) - 1; }
    Integer coefficient(int exponent) const;
    std::span<const Integer> coefficients() const { return coeffs_; }

    /// Multiplies by t^k.
    LaurentPoly shifted(int k) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const Integer& c);

    friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
    friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
    friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
    friend LaurentPoly operator*(LaurentPoly lhs, const Integer& c) { return lhs *= c; }
    friend bool operator==(const LaurentPoly& lhs, const LaurentPoly& rhs);

    /// Terms in increasing exponent, e.g. "t^-1 - 1 + t" or "2t^2 - 3".
    std::string to_string(char variable = 't') const;

private:
    void trim();

    std::vector<Integer> coeffs_;
    int min_exp_ = 0;
};

/// Inverse of LaurentPoly::to_string. Accepts an optional '*' between
/// coefficient and variable.
LaurentPoly parse_laurent(std::string_view text, char variable = 't');

/// p / q when q divides p exactly in Z[t, t^-1]; throws InexactDivisionError
/// otherwise.
LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& q);

Integer eval_at_one(const LaurentPoly& p);
/// p''(1) = sum_k c_k k (k - 1).
Integer second_derivative_at_one(const LaurentPoly& p);
/// t -> t^-1
LaurentPoly invert_variable(const LaurentPoly& p);
bool is_symmetric(const LaurentPoly& p);

/// Multiplies by the unit +-t^k making the result symmetric under t -> t^-1
/// with value 1 at t = 1. Throws NormalizationError if no such unit exists.
LaurentPoly symmetrize_normalize(const LaurentPoly& p);

/// Polynomial in x with integer coefficients, constant term first.
class ConwayPoly {
public:
    ConwayPoly() = default;
    explicit ConwayPoly(std::vector<Integer> coefficients);

    Integer coefficient(int power) const;
    std::span<const Integer> coefficients() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool has_only_even_powers() const;
    std::string to_string() const;

    friend bool operator==(const ConwayPoly&, const ConwayPoly&) = default;

private:
    std::vector<Integer> coeffs_;
};

ConwayPoly parse_conway(std::string_view text);

/// The polynomial N with N(t^1/2 - t^-1/2) = p(t), i.e. x^2 = t - 2 + t^-1.
/// Throws NormalizationError if p is not symmetric.
ConwayPoly conway_from_alexander(const LaurentPoly& p);
/// Substitutes x^2 = t - 2 + t^-1; requires only even powers of x.
LaurentPoly alexander_from_conway(const ConwayPoly& c);

/// Row-major 2x2 matrix over Z[t, t^-1].
struct Mat2 {
    std::array<LaurentPoly, 4> entries;

    static Mat2 identity();
    const LaurentPoly& at(int row, int col) const { return entries[static_cast<std::size_t>(2 * row + col)]; }
    LaurentPoly& at(int row, int col) { return entries[static_cast<std::size_t>(2 * row + col)]; }
    LaurentPoly det() const;

    friend Mat2 operator*(const Mat2& lhs, const Mat2& rhs);
    friend Mat2 operator-(const Mat2& lhs, const Mat2& rhs);
    friend bool operator==(const Mat2&, const Mat2&) = default;
};

}  // namespace braid3
