#include "hecke_oracle.hpp"

#include <array>
#include <cctype>
#include <cstdlib>
#include <iterator>
#include <sstream>
#include <stdexcept>

namespace oracle {

namespace {

using Perm = std::array<int, 3>;

// The six permutations of {0, 1, 2} in one-line notation.
const std::array<Perm, 6> kPerms{{{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

int index_of(const Perm& p) {
    for (int i = 0; i < 6; ++i)
        if (kPerms[static_cast<std::size_t>(i)] == p) return i;
    throw std::logic_error("not a permutation");
}

int inversions(const Perm& p) {
    int n = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)]) ++n;
    return n;
}

Coeffs add(Coeffs a, const Coeffs& b, std::int64_t scale = 1, int shift = 0) {
    if (a.size() < b.size() + static_cast<std::size_t>(shift)) a.resize(b.size() + static_cast<std::size_t>(shift), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i + static_cast<std::size_t>(shift)] += scale * b[i];
    return a;
}

using Element = std::array<Coeffs, 6>;

// x * g_s^sign, s in {1, 2}.
Element multiply(const Element& x, int s, int sign) {
    Element out{};
    for (int w = 0; w < 6; ++w) {
        const Coeffs& c = x[static_cast<std::size_t>(w)];
        if (c.empty()) continue;
        Perm ws = kPerms[static_cast<std::size_t>(w)];
        std::swap(ws[static_cast<std::size_t>(s - 1)], ws[static_cast<std::size_t>(s)]);
        const int target = index_of(ws);
        const bool longer = inversions(ws) > inversions(kPerms[static_cast<std::size_t>(w)]);
        // T_w g = T_ws (longer) or z T_w + T_ws (shorter); g^-1 = g - z.
        out[static_cast<std::size_t>(target)] = add(out[static_cast<std::size_t>(target)], c);
        if (!longer) out[static_cast<std::size_t>(w)] = add(out[static_cast<std::size_t>(w)], c, 1, 1);
        if (sign < 0) out[static_cast<std::size_t>(w)] = add(out[static_cast<std::size_t>(w)], c, -1, 1);
    }
    return out;
}

// Conway polynomial of the closure of the positive permutation braid of w.
Coeffs trace_basis(const Perm& p) {
    switch (inversions(p)) {
        case 0: return {};         // three-component unlink
        case 1: return {};         // two-component unlink
        case 2: return {1};        // unknot
        default: return {0, 1};    // positive Hopf link
    }
}

void trim(Coeffs& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

std::vector<std::pair<int, int>> parse(const std::string& text) {
    std::vector<std::pair<int, int>> out;
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
        if (token.size() < 2 || token[0] != 'a' || token[1] < '1' || token[1] > '3')
            throw std::invalid_argument("bad token " + token);
        const int gen = token[1] - '0';
        int power = 1;
        if (token.size() > 2) {
            if (token[2] != '^') throw std::invalid_argument("bad token " + token);
            power = std::stoi(token.substr(3));
        }
        for (int i = 0; i < std::abs(power); ++i) out.emplace_back(gen, power > 0 ? 1 : -1);
    }
    return out;
}

std::vector<std::pair<int, int>> artin(const std::string& text) {
    std::vector<std::pair<int, int>> out;
    for (const auto& [g, s] : parse(text)) {
        if (g == 3) {
            out.emplace_back(2, 1);
            out.emplace_back(1, s);
            out.emplace_back(2, -1);
        } else {
            out.emplace_back(g, s);
        }
    }
    return out;
}

int components(const std::string& text) {
    Perm at{0, 1, 2};
    for (const auto& [g, s] : artin(text)) std::swap(at[static_cast<std::size_t>(g - 1)], at[static_cast<std::size_t>(g)]);
    // at[pos] = strand ending at pos; count cycles of the map.
    std::array<bool, 3> seen{};
    int cycles = 0;
    for (int i = 0; i < 3; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        ++cycles;
        for (int j = i; !seen[static_cast<std::size_t>(j)]; j = at[static_cast<std::size_t>(j)]) seen[static_cast<std::size_t>(j)] = true;
    }
    return cycles;
}

Coeffs conway(const std::string& text) {
    Element x{};
    x[0] = {1};
    for (const auto& [g, s] : artin(text)) x = multiply(x, g, s);
    Coeffs out;
    for (int w = 0; w < 6; ++w) {
        const Coeffs tr = trace_basis(kPerms[static_cast<std::size_t>(w)]);
        const Coeffs& c = x[static_cast<std::size_t>(w)];
        // c(z) * tr(z)
        Coeffs prod(c.size() + tr.size(), 0);
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = 0; j < tr.size(); ++j) prod[i + j] += c[i] * tr[j];
        out = add(out, prod);
    }
    trim(out);
    return out;
}

Laurent alexander(const std::string& text) {
    const Coeffs c = conway(text);
    for (std::size_t i = 1; i < c.size(); i += 2)
        if (c[i] != 0) throw std::invalid_argument("odd Conway term: not a knot");
    // x^2 -> t - 2 + t^-1, accumulate powers.
    Laurent result;
    Laurent power{{0, 1}};
    for (std::size_t i = 0; i < c.size(); i += 2) {
        for (const auto& [e, v] : power) result[e] += c[i] * v;
        Laurent next;
        for (const auto& [e, v] : power) {
            next[e + 1] += v;
            next[e] -= 2 * v;
            next[e - 1] += v;
        }
        power = next;
    }
    for (auto it = result.begin(); it != result.end();) it = it->second == 0 ? result.erase(it) : std::next(it);
    return result;
}

std::int64_t casson(const std::string& text) {
    const Coeffs c = conway(text);
    return c.size() > 2 ? c[2] : 0;
}

std::int64_t linking_number(const std::string& text) {
    if (components(text) != 2) throw std::invalid_argument("not a two-component link");
    const Coeffs c = conway(text);
    return c.size() > 1 ? -c[1] : 0;
}

Laurent torus_alexander(int n) {
    // Numerator (t^(3n) - 1)(t - 1), divided by (t^3 - 1)(t^n - 1) with
    // ordinary long division on dense coefficient vectors.
    auto mul = [](const Coeffs& a, const Coeffs& b) {
        Coeffs r(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        return r;
    };
    auto binomial = [](int k) {  // t^k - 1
        Coeffs r(static_cast<std::size_t>(k) + 1, 0);
        r[0] = -1;
        r[static_cast<std::size_t>(k)] = 1;
        return r;
    };
    Coeffs num = mul(binomial(3 * n), binomial(1));
    const Coeffs den = mul(binomial(3), binomial(n));
    const int dn = static_cast<int>(den.size()) - 1;
    Coeffs quot(num.size() - den.size() + 1, 0);
    for (int i = static_cast<int>(num.size()) - 1; i >= dn; --i) {
        const std::int64_t lead = num[static_cast<std::size_t>(i)];
        if (lead % den.back() != 0) throw std::logic_error("inexact");
        const std::int64_t q = lead / den.back();
        quot[static_cast<std::size_t>(i - dn)] = q;
        for (int j = 0; j <= dn; ++j) num[static_cast<std::size_t>(i - dn + j)] -= q * den[static_cast<std::size_t>(j)];
    }
    for (std::int64_t v : num)
        if (v != 0) throw std::logic_error("nonzero remainder");
    trim(quot);
    // Centre: degree d polynomial shifted by -d/2; the value at 1 is 1 for
    // these quotients so no sign fix is needed.
    const int degree = static_cast<int>(quot.size()) - 1;
    Laurent out;
    for (int i = 0; i <= degree; ++i)
        if (quot[static_cast<std::size_t>(i)] != 0) out[i - degree / 2] = quot[static_cast<std::size_t>(i)];
    return out;
}

bool nd_order(const std::string& text) {
    const auto letters = parse(text);
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (letters[i].second < 0) return false;
        if (i == 0) continue;
        const int prev = letters[i - 1].first;
        const int cur = letters[i].first;
        if (cur != prev && cur != prev % 3 + 1) return false;
    }
    return true;
}

std::string to_string(const Laurent& p) {
    std::ostringstream out;
    for (const auto& [e, v] : p) out << v << "t^" << e << ' ';
    return out.str();
}

}  // namespace oracle
