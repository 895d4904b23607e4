#pragma once

// Independent reference computations for tests. Nothing here uses the braid3
// library: words are parsed again, a3 is expanded as s2 s1 s2^-1 (the other
// conjugate form), and the Conway polynomial comes from the Hecke algebra
// H3 with g^2 = z g + 1 and the Conway trace on closures, with 64-bit
// coefficients.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Coeffs = std::vector<std::int64_t>;          // index = power
using Laurent = std::map<int, std::int64_t>;       // exponent -> coefficient, no zeros

/// (generator 1..3, sign) for each letter of "a1 a2^-1 a3^2 ...".
std::vector<std::pair<int, int>> parse(const std::string& text);

/// Artin letters (1 or 2, sign) with a3 = s2 s1 s2^-1.
std::vector<std::pair<int, int>> artin(const std::string& text);

int components(const std::string& text);

/// Conway polynomial of the closure, standard convention (s_i is a positive
/// crossing), coefficients of z^0, z^1, ...
Coeffs conway(const std::string& text);

/// Delta(t) = conway(t^1/2 - t^-1/2), for knots.
Laurent alexander(const std::string& text);

/// The coefficient of z^2 of the Conway polynomial.
std::int64_t casson(const std::string& text);

/// Linking number with the convention that a positive letter is a negative
/// crossing: minus the z^1 coefficient of the standard Conway polynomial.
std::int64_t linking_number(const std::string& text);

/// Normalized (t^(3n) - 1)(t - 1) / ((t^3 - 1)(t^n - 1)), 3 not dividing n.
Laurent torus_alexander(int n);

/// True when the positive word's subscript sequence steps by 0 or +1 mod 3.
bool nd_order(const std::string& text);

std::string to_string(const Laurent& p);

}  // namespace oracle
