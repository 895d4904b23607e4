#include "braid3/classify.hpp"

#include <algorithm>
#include <vector>

namespace braid3 {

namespace {

int next_subscript(int s) { return s % 3 + 1; }
int prev_subscript(int s) { return s == 1 ? 3 : s - 1; }

bool has_both_a1_a2(std::span<const Syllable> s) {
    bool a1 = false, a2 = false;
    for (const Syllable& x : s) {
        a1 = a1 || x.subscript == 1;
        a2 = a2 || x.subscript == 2;
    }
    return a1 && a2;
}

bool tail_in(const std::vector<Syllable>& letters, std::size_t from, bool (*pred)(const BraidWord&)) {
    return pred(BraidWord::from_letters(std::span<const Syllable>(letters).subspan(from)));
}

}  // namespace

std::string NormalForm::to_string() const {
    switch (kind) {
        case Kind::I: return "I(" + std::to_string(k) + ")";
        case Kind::II: return "II(" + std::to_string(k) + ")";
        case Kind::III: return "III";
        case Kind::None: break;
    }
    return "none";
}

bool in_P(const BraidWord& w) {
    if (!w.is_positive()) return false;
    const auto s = w.syllables();
    for (std::size_t j = 1; j < s.size(); ++j)
        if (s[j].subscript != next_subscript(s[j - 1].subscript)) return false;
    return true;
}

bool in_N(const BraidWord& w) {
    if (!w.is_negative()) return false;
    const auto s = w.syllables();
    for (std::size_t j = 1; j < s.size(); ++j)
        if (s[j].subscript != prev_subscript(s[j - 1].subscript)) return false;
    return true;
}

bool in_Pstar(const BraidWord& w) {
    if (!w.is_positive()) return false;
    const auto s = w.syllables();
    std::size_t last_a3 = s.size();
    for (std::size_t j = 0; j < s.size(); ++j) {
        if (s[j].subscript != 3) continue;
        if (last_a3 != s.size() && !has_both_a1_a2(s.subspan(last_a3 + 1, j - last_a3 - 1))) return false;
        last_a3 = j;
    }
    return true;
}

bool is_index3_reduced(const BraidWord& w) {
    if (!in_Pstar(w)) return false;
    const auto s = w.syllables();
    for (std::size_t j = 0; j < s.size(); ++j) {
        if (s[j].subscript != 3) continue;
        if (j > 0 && s[j - 1].subscript == 1) return false;
        if (j + 1 < s.size() && s[j + 1].subscript == 2) return false;
    }
    return true;
}

std::optional<PaSplit> pa_split(const BraidWord& w) {
    if (w.empty()) return std::nullopt;
    PaSplit split;
    const auto s = w.syllables();
    if (w.is_positive()) {
        split.delta = w;
    } else {
        if (s[0].power != -1) return std::nullopt;
        split.q = 1;
        split.i = s[0].subscript;
        split.delta = BraidWord(std::vector<Syllable>(s.begin() + 1, s.end()));
    }
    if (split.delta.empty() || !is_index3_reduced(split.delta) || !is_cyclically_reduced(w)) return std::nullopt;
    return split;
}

bool in_Pa(const BraidWord& w) { return pa_split(w).has_value(); }

bool in_E(const BraidWord& w) {
    const auto e = excluded_set();
    return std::find(e.begin(), e.end(), w) != e.end();
}

NormalForm normal_form(const BraidWord& w) {
    const std::vector<Syllable> letters = w.letters();
    const std::size_t n = letters.size();

    if (w.is_positive()) {
        for (std::size_t k = 0;; ++k) {
            if (tail_in(letters, 2 * k, in_P)) return {NormalForm::Kind::I, static_cast<int>(k)};
            if (2 * k + 2 > n || letters[2 * k] != Syllable{2, 1} || letters[2 * k + 1] != Syllable{1, 1}) break;
        }
    }
    if (w.is_negative()) {
        for (std::size_t k = 0;; ++k) {
            if (tail_in(letters, 2 * k, in_N)) return {NormalForm::Kind::II, -static_cast<int>(k)};
            if (2 * k + 2 > n || letters[2 * k] != Syllable{1, -1} || letters[2 * k + 1] != Syllable{2, -1}) break;
        }
    }
    const auto first_negative =
        std::find_if(letters.begin(), letters.end(), [](const Syllable& l) { return l.power < 0; });
    if (first_negative != letters.begin() && first_negative != letters.end()) {
        const auto split = static_cast<std::size_t>(first_negative - letters.begin());
        const std::span<const Syllable> all(letters);
        if (in_P(BraidWord::from_letters(all.first(split))) && in_N(BraidWord::from_letters(all.subspan(split))))
            return {NormalForm::Kind::III, 0};
    }
    return {};
}

ClassReport classify(const BraidWord& w) {
    ClassReport r;
    r.in_P = in_P(w);
    r.in_N = in_N(w);
    r.in_Pstar = in_Pstar(w);
    r.is_index3_reduced = is_index3_reduced(w);
    r.in_Pa = in_Pa(w);
    r.in_E = in_E(w);
    r.normal_form = normal_form(w);
    r.s_count = static_cast<int>(w.syllable_count());
    r.n3_count = static_cast<int>(w.a3_syllable_count());
    return r;
}

std::span<const BraidWord> excluded_set() {
    static const std::vector<BraidWord> words = [] {
        const char* texts[] = {
            "a1^-1 a2 a3^2 a1 a2", "a1^-1 a3^2 a1 a2 a3", "a1^-1 a3 a1 a2^2 a3", "a1^-1 a2 a3 a1 a2^2",
            "a2^-1 a3 a1 a2 a3^2", "a2^-1 a3 a1^2 a2 a3", "a2^-1 a1 a2 a3^2 a1", "a2^-1 a1^2 a2 a3 a1",
            "a3^-1 a1 a2 a3 a1^2", "a3^-1 a1 a2^2 a3 a1", "a3^-1 a2 a3 a1^2 a2", "a3^-1 a2^2 a3 a1 a2",
        };
        std::vector<BraidWord> out;
        for (const char* t : texts) out.push_back(parse_word(t));
        return out;
    }();
    return words;
}

BraidWord index3_reduce(const BraidWord& w) {
    if (!in_Pstar(w)) throw NotInPstarError(w);
    BraidWord current = w;
    for (;;) {
        const auto s = current.syllables();
        std::vector<Syllable> next;
        bool rewritten = false;
        for (std::size_t j = 0; j < s.size() && !rewritten; ++j) {
            if (s[j].subscript != 3) continue;
            const int k = s[j].power;
            if (j > 0 && s[j - 1].subscript == 1) {
                // a1^m a3^k -> a1^(m-1) a2^k a1
                next.assign(s.begin(), s.begin() + static_cast<long>(j) - 1);
                if (s[j - 1].power > 1) next.push_back({1, s[j - 1].power - 1});
                next.push_back({2, k});
                next.push_back({1, 1});
                next.insert(next.end(), s.begin() + static_cast<long>(j) + 1, s.end());
                rewritten = true;
            } else if (j + 1 < s.size() && s[j + 1].subscript == 2) {
                // a3^k a2^m -> a2 a1^k a2^(m-1)
                next.assign(s.begin(), s.begin() + static_cast<long>(j));
                next.push_back({2, 1});
                next.push_back({1, k});
                if (s[j + 1].power > 1) next.push_back({2, s[j + 1].power - 1});
                next.insert(next.end(), s.begin() + static_cast<long>(j) + 2, s.end());
                rewritten = true;
            }
        }
        if (!rewritten) return current;
        current = BraidWord(std::move(next));
    }
}

}  // namespace braid3
