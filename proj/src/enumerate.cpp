#include "braid3/enumerate.hpp"

#include <array>

#include "braid3/classify.hpp"

namespace braid3 {

namespace {

struct SignPolicy {
    bool positive;
    bool negative;
    /// Only the first syllable may be a^-1 (the Pa prefix).
    bool leading_inverse_letter;
};

SignPolicy sign_policy(ClassFilter f) {
    switch (f) {
        case ClassFilter::All: return {true, true, false};
        case ClassFilter::N: return {false, true, false};
        case ClassFilter::Pa:
        case ClassFilter::PaDelta4: return {true, false, true};
        default: return {true, false, false};
    }
}

class Enumerator {
public:
    Enumerator(ClassFilter filter, const std::function<bool(const BraidWord&)>& visit)
        : filter_(filter), policy_(sign_policy(filter)), visit_(visit) {}

    bool run(int letters) { return extend(letters, 0); }

private:
    bool extend(int remaining, int last_subscript) {
        if (remaining == 0) {
            BraidWord w(current_);
            if (matches(filter_, w) && !visit_(w)) return false;
            return true;
        }
        const int max_subscript = filter_ == ClassFilter::PositiveArtin ? 2 : 3;
        for (int sub = 1; sub <= max_subscript; ++sub) {
            if (sub == last_subscript) continue;
            for (int power = -remaining; power <= remaining; ++power) {
                if (power == 0 || !allowed(power)) continue;
                current_.push_back({sub, power});
                const bool go_on = extend(remaining - (power > 0 ? power : -power), sub);
                current_.pop_back();
                if (!go_on) return false;
            }
        }
        return true;
    }

    bool allowed(int power) const {
        if (power > 0) return policy_.positive;
        if (policy_.negative) return true;
        return policy_.leading_inverse_letter && current_.empty() && power == -1;
    }

    ClassFilter filter_;
    SignPolicy policy_;
    const std::function<bool(const BraidWord&)>& visit_;
    std::vector<Syllable> current_;
};

}  // namespace

std::string_view to_string(ClassFilter f) {
    switch (f) {
        case ClassFilter::All: return "all";
        case ClassFilter::P: return "P";
        case ClassFilter::N: return "N";
        case ClassFilter::Pstar: return "Pstar";
        case ClassFilter::Pa: return "Pa";
        case ClassFilter::PaDelta4: return "Pa-delta4";
        case ClassFilter::PositiveArtin: return "positive-artin";
    }
    return "?";
}

std::optional<ClassFilter> parse_class_filter(std::string_view text) {
    for (ClassFilter f : {ClassFilter::All, ClassFilter::P, ClassFilter::N, ClassFilter::Pstar, ClassFilter::Pa,
                          ClassFilter::PaDelta4, ClassFilter::PositiveArtin})
        if (text == to_string(f)) return f;
    return std::nullopt;
}

bool matches(ClassFilter f, const BraidWord& w) {
    switch (f) {
        case ClassFilter::All: return is_freely_reduced(w);
        case ClassFilter::P: return in_P(w);
        case ClassFilter::N: return in_N(w);
        case ClassFilter::Pstar: return in_Pstar(w);
        case ClassFilter::Pa: return in_Pa(w);
        case ClassFilter::PaDelta4: {
            auto split = pa_split(w);
            return split && split->delta.syllable_count() >= 4;
        }
        case ClassFilter::PositiveArtin: return w.is_positive() && w.a3_syllable_count() == 0;
    }
    return false;
}

void for_each_word(ClassFilter filter, int max_letters, const std::function<bool(const BraidWord&)>& visit) {
    Enumerator e(filter, visit);
    for (int n = 1; n <= max_letters; ++n)
        if (!e.run(n)) return;
}

std::vector<BraidWord> enumerate_words(ClassFilter filter, int max_letters) {
    std::vector<BraidWord> out;
    for_each_word(filter, max_letters, [&](const BraidWord& w) {
        out.push_back(w);
        return true;
    });
    return out;
}

}  // namespace braid3
