#include "braid3/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace braid3 {

namespace {

std::string format_terms(const std::vector<std::pair<int, Integer>>& terms, char variable) {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms) {
        const bool negative = sgn(c) < 0;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        const Integer mag = abs(c);
        if (e == 0) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) out += mag.get_str();
        out += variable;
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

// Parses "c var^e" terms joined by + and -; returns (exponent, coefficient) pairs.
std::vector<std::pair<int, Integer>> parse_terms(std::string_view text, char variable) {
    std::vector<std::pair<int, Integer>> terms;
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto skip = [&] {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("polynomial parse error: " + what + " at position " + std::to_string(i));
    };
    skip();
    if (i < n && text[i] == '0') {
        std::size_t j = i + 1;
        while (j < n && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        if (j == n) return terms;
    }
    bool first = true;
    while (true) {
        skip();
        if (i == n) {
            if (first) fail("empty polynomial");
            break;
        }
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        first = false;
        Integer c = 1;
        bool have_digits = false;
        const std::size_t digits_start = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i > digits_start) {
            c = Integer(std::string(text.substr(digits_start, i - digits_start)));
            have_digits = true;
        }
        skip();
        if (i < n && text[i] == '*') {
            if (!have_digits) fail("'*' without coefficient");
            ++i;
            skip();
            if (i == n || text[i] != variable) fail("expected variable after '*'");
        }
        int e = 0;
        if (i < n && text[i] == variable) {
            ++i;
            e = 1;
            if (i < n && text[i] == '^') {
                ++i;
                auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + n, e);
                if (ec != std::errc()) fail("expected exponent");
                i = static_cast<std::size_t>(ptr - text.data());
            }
        } else if (!have_digits) {
            fail("expected coefficient or variable");
        }
        terms.emplace_back(e, sign * c);
    }
    return terms;
}

}  // namespace

LaurentPoly::LaurentPoly(std::vector<Integer> coefficients, int min_exponent)
    : coeffs_(std::move(coefficients)), min_exp_(min_exponent) {
    trim();
}

LaurentPoly LaurentPoly::monomial(const Integer& c, int exponent) { return LaurentPoly({c}, exponent); }

void LaurentPoly::trim() {
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return sgn(c) != 0; });
    if (first == coeffs_.end()) {
        coeffs_.clear();
        min_exp_ = 0;
        return;
    }
    min_exp_ += static_cast<int>(first - coeffs_.begin());
    coeffs_.erase(coeffs_.begin(), first);
    while (sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Integer LaurentPoly::coefficient(int exponent) const {
    if (is_zero() || exponent < min_exp_ || exponent > max_exponent()) return 0;
    return coeffs_[static_cast<std::size_t>(exponent - min_exp_)];
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r = *this;
    if (!r.is_zero()) r.min_exp_ += k;
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (Integer& c : r.coeffs_) c = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    if (rhs.is_zero()) return *this;
    if (is_zero()) return *this = rhs;
    const int lo = std::min(min_exp_, rhs.min_exp_);
    const int hi = std::max(max_exponent(), rhs.max_exponent());
    if (lo < min_exp_) coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(min_exp_ - lo), Integer(0));
    min_exp_ = lo;
    coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
        coeffs_[static_cast<std::size_t>(rhs.min_exp_ - lo) + j] += rhs.coeffs_[j];
    trim();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this += -rhs; }

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Integer> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    return LaurentPoly(std::move(out), lhs.min_exp_ + rhs.min_exp_);
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

LaurentPoly& LaurentPoly::operator*=(const Integer& c) {
    for (Integer& x : coeffs_) x *= c;
    trim();
    return *this;
}

bool operator==(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    return lhs.min_exp_ == rhs.min_exp_ && lhs.coeffs_ == rhs.coeffs_;
}

std::string LaurentPoly::to_string(char variable) const {
    std::vector<std::pair<int, Integer>> terms;
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
        if (sgn(coeffs_[j]) != 0) terms.emplace_back(min_exp_ + static_cast<int>(j), coeffs_[j]);
    return format_terms(terms, variable);
}

LaurentPoly parse_laurent(std::string_view text, char variable) {
    LaurentPoly p;
    for (const auto& [e, c] : parse_terms(text, variable)) p += LaurentPoly::monomial(c, e);
    return p;
}

LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& q) {
    if (q.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (p.is_zero()) return {};
    // Long division from the top on the coefficient vectors.
    std::vector<Integer> rem(p.coefficients().begin(), p.coefficients().end());
    const auto d = q.coefficients();
    if (rem.size() < d.size())
        throw InexactDivisionError(p.to_string() + " is not divisible by " + q.to_string());
    const std::size_t quotient_len = rem.size() - d.size() + 1;
    std::vector<Integer> quot(quotient_len);
    const Integer& lead = d.back();
    for (std::size_t k = quotient_len; k-- > 0;) {
        Integer& top = rem[k + d.size() - 1];
        if (sgn(top) == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
            throw InexactDivisionError(p.to_string() + " is not divisible by " + q.to_string());
        quot[k] = top / lead;
        for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= quot[k] * d[j];
    }
    if (std::any_of(rem.begin(), rem.end(), [](const Integer& c) { return sgn(c) != 0; }))
        throw InexactDivisionError(p.to_string() + " is not divisible by " + q.to_string());
    return LaurentPoly(std::move(quot), p.min_exponent() - q.min_exponent());
}

Integer eval_at_one(const LaurentPoly& p) {
    Integer sum = 0;
    for (const Integer& c : p.coefficients()) sum += c;
    return sum;
}

Integer second_derivative_at_one(const LaurentPoly& p) {
    Integer sum = 0;
    const auto c = p.coefficients();
    for (std::size_t j = 0; j < c.size(); ++j) {
        const long k = p.min_exponent() + static_cast<long>(j);
        sum += c[j] * (k * (k - 1));
    }
    return sum;
}

LaurentPoly invert_variable(const LaurentPoly& p) {
    std::vector<Integer> c(p.coefficients().rbegin(), p.coefficients().rend());
    return LaurentPoly(std::move(c), -p.max_exponent());
}

bool is_symmetric(const LaurentPoly& p) { return invert_variable(p) == p; }

LaurentPoly symmetrize_normalize(const LaurentPoly& p) {
    if (p.is_zero()) throw NormalizationError("cannot normalize the zero polynomial");
    const int span_sum = p.min_exponent() + p.max_exponent();
    if (span_sum % 2 != 0)
        throw NormalizationError("no unit +-t^k makes " + p.to_string() + " symmetric (odd exponent span)");
    LaurentPoly r = p.shifted(-span_sum / 2);
    const Integer at_one = eval_at_one(r);
    if (at_one == -1)
        r = -r;
    else if (at_one != 1)
        throw NormalizationError("value at t = 1 is " + at_one.get_str() + ", expected +-1: " + p.to_string());
    if (!is_symmetric(r)) throw NormalizationError("not symmetric up to a unit: " + p.to_string());
    return r;
}

ConwayPoly::ConwayPoly(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Integer ConwayPoly::coefficient(int power) const {
    if (power < 0 || power >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(power)];
}

bool ConwayPoly::has_only_even_powers() const {
    for (std::size_t k = 1; k < coeffs_.size(); k += 2)
        if (sgn(coeffs_[k]) != 0) return false;
    return true;
}

std::string ConwayPoly::to_string() const {
    std::vector<std::pair<int, Integer>> terms;
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (sgn(coeffs_[k]) != 0) terms.emplace_back(static_cast<int>(k), coeffs_[k]);
    return format_terms(terms, 'x');
}

ConwayPoly parse_conway(std::string_view text) {
    std::vector<Integer> c;
    for (const auto& [e, v] : parse_terms(text, 'x')) {
        if (e < 0) throw std::invalid_argument("negative power of x in Conway polynomial");
        if (c.size() <= static_cast<std::size_t>(e)) c.resize(static_cast<std::size_t>(e) + 1);
        c[static_cast<std::size_t>(e)] += v;
    }
    return ConwayPoly(std::move(c));
}

namespace {

// (t - 2 + t^-1)^d
LaurentPoly x_squared_power(int d) {
    static const LaurentPoly x2 = LaurentPoly({1, -2, 1}, -1);
    LaurentPoly r = LaurentPoly::constant(1);
    for (int i = 0; i < d; ++i) r *= x2;
    return r;
}

}  // namespace

ConwayPoly conway_from_alexander(const LaurentPoly& p) {
    if (!is_symmetric(p)) throw NormalizationError("not symmetric, no Conway form: " + p.to_string());
    LaurentPoly rest = p;
    std::vector<Integer> c(static_cast<std::size_t>(2 * std::max(p.max_exponent(), 0) + 1));
    // (t - 2 + t^-1)^d has leading term t^d, so peel off the top degree.
    while (!rest.is_zero()) {
        const int d = rest.max_exponent();
        const Integer lead = rest.coefficient(d);
        c[static_cast<std::size_t>(2 * d)] = lead;
        rest -= x_squared_power(d) * lead;
    }
    return ConwayPoly(std::move(c));
}

LaurentPoly alexander_from_conway(const ConwayPoly& c) {
    if (!c.has_only_even_powers())
        throw std::invalid_argument("odd powers of x have no Laurent form in t: " + c.to_string());
    LaurentPoly p;
    for (int k = 0; k <= c.degree(); k += 2) p += x_squared_power(k / 2) * c.coefficient(k);
    return p;
}

Mat2 Mat2::identity() {
    Mat2 m;
    m.at(0, 0) = LaurentPoly::constant(1);
    m.at(1, 1) = LaurentPoly::constant(1);
    return m;
}

LaurentPoly Mat2::det() const { return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0); }

Mat2 operator*(const Mat2& lhs, const Mat2& rhs) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.at(i, j) = lhs.at(i, 0) * rhs.at(0, j) + lhs.at(i, 1) * rhs.at(1, j);
    return r;
}

Mat2 operator-(const Mat2& lhs, const Mat2& rhs) {
    Mat2 r;
    for (std::size_t k = 0; k < 4; ++k) r.entries[k] = lhs.entries[k] - rhs.entries[k];
    return r;
}

}  // namespace braid3
