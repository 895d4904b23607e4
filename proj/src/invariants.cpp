#include "braid3/invariants.hpp"

#include "braid3/closure.hpp"

namespace braid3 {

namespace {

// M <- M * g for each generator matrix g, as column operations.
void apply(Mat2& m, const ArtinLetter& l) {
    for (int row = 0; row < 2; ++row) {
        LaurentPoly& c0 = m.at(row, 0);
        LaurentPoly& c1 = m.at(row, 1);
        if (l.generator == 1) {
            if (l.sign > 0) {  // [[-t, 1], [0, 1]]
                c1 += c0;
                c0 = -c0.shifted(1);
            } else {  // [[-t^-1, t^-1], [0, 1]]
                c1 += c0.shifted(-1);
                c0 = -c0.shifted(-1);
            }
        } else {
            if (l.sign > 0) {  // [[1, 0], [t, -t]]
                c0 += c1.shifted(1);
                c1 = -c1.shifted(1);
            } else {  // [[1, 0], [1, -t^-1]]
                c0 += c1;
                c1 = -c1.shifted(-1);
            }
        }
    }
}

const LaurentPoly& cyclotomic3() {
    static const LaurentPoly p = LaurentPoly({1, 1, 1}, 0);
    return p;
}

}  // namespace

Mat2 burau(const BraidWord& w) {
    Mat2 m = Mat2::identity();
    for (const ArtinLetter& l : artin_letters(w)) apply(m, l);
    return m;
}

bool same_braid(const BraidWord& u, const BraidWord& v) { return burau(u) == burau(v); }

AlexanderValue alexander_value(const BraidWord& w) {
    AlexanderValue out;
    out.components = closure_info(w).component_count;
    const LaurentPoly d = (Mat2::identity() - burau(w)).det();
    if (out.components == 1) {
        out.poly = symmetrize_normalize(divide_exact(d, cyclotomic3()));
        out.normalized = true;
        return out;
    }
    try {
        out.poly = divide_exact(d, cyclotomic3());
    } catch (const InexactDivisionError&) {
        out.poly = d;
        out.divided = false;
    }
    return out;
}

LaurentPoly alexander(const BraidWord& w) {
    const int components = closure_info(w).component_count;
    if (components != 1) throw NonKnotError(w, components);
    return alexander_value(w).poly;
}

ConwayPoly conway(const BraidWord& w) { return conway_from_alexander(alexander(w)); }

Integer casson(const BraidWord& w) {
    const LaurentPoly delta = alexander(w);
    const Integer second = second_derivative_at_one(delta);
    if (!mpz_divisible_ui_p(second.get_mpz_t(), 2))
        throw std::logic_error("odd second derivative for " + format_word(w));
    Integer from_derivative = second / 2;
    const Integer from_conway = conway_from_alexander(delta).coefficient(2);
    if (from_derivative != from_conway)
        throw std::logic_error("Casson routes disagree for " + format_word(w) + ": " + from_derivative.get_str() +
                               " vs " + from_conway.get_str());
    return from_derivative;
}

Integer surgery_casson(const BraidWord& w, long n) { return casson(w) * n; }

}  // namespace braid3
