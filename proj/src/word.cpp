#include "braid3/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>

namespace braid3 {

namespace {

void append_merged(std::vector<Syllable>& out, Syllable s) {
    if (!out.empty() && out.back().subscript == s.subscript && out.back().sign() == s.sign()) {
        out.back().power += s.power;
    } else {
        out.push_back(s);
    }
}

void append_cancelling(std::vector<Syllable>& out, Syllable s) {
    if (out.empty() || out.back().subscript != s.subscript) {
        out.push_back(s);
        return;
    }
    out.back().power += s.power;
    if (out.back().power == 0) out.pop_back();
}

}  // namespace

BraidWord::BraidWord(std::vector<Syllable> syllables) {
    syllables_.reserve(syllables.size());
    for (const Syllable& s : syllables) {
        if (s.subscript < 1 || s.subscript > 3)
            throw std::invalid_argument("syllable subscript must be 1, 2 or 3");
        if (s.power == 0) throw std::invalid_argument("syllable power must be nonzero");
        append_merged(syllables_, s);
    }
}

long BraidWord::letter_count() const {
    long n = 0;
    for (const Syllable& s : syllables_) n += s.length();
    return n;
}

long BraidWord::exponent_sum() const {
    long n = 0;
    for (const Syllable& s : syllables_) n += s.power;
    return n;
}

std::size_t BraidWord::a3_syllable_count() const {
    return static_cast<std::size_t>(std::count_if(syllables_.begin(), syllables_.end(),
                                                  [](const Syllable& s) { return s.subscript == 3; }));
}

bool BraidWord::is_positive() const {
    return std::all_of(syllables_.begin(), syllables_.end(), [](const Syllable& s) { return s.power > 0; });
}

bool BraidWord::is_negative() const {
    return std::all_of(syllables_.begin(), syllables_.end(), [](const Syllable& s) { return s.power < 0; });
}

BraidWord BraidWord::inverse() const {
    std::vector<Syllable> out(syllables_.rbegin(), syllables_.rend());
    for (Syllable& s : out) s.power = -s.power;
    return BraidWord(std::move(out));
}

BraidWord BraidWord::mirror() const {
    // a3 = s1^-1 s2 s1 mirrors to s1 s2^-1 s1^-1 = a1 a2^-1 a1^-1, which is
    // not a band letter.
    std::vector<Syllable> out;
    for (const Syllable& s : syllables_) {
        if (s.subscript == 3) {
            out.push_back({1, 1});
            out.push_back({2, -s.power});
            out.push_back({1, -1});
        } else {
            out.push_back({s.subscript, -s.power});
        }
    }
    return free_reduce(out);
}

BraidWord BraidWord::pow(int n) const {
    const BraidWord base = n >= 0 ? *this : inverse();
    std::vector<Syllable> out;
    for (int i = 0; i < std::abs(n); ++i)
        for (const Syllable& s : base.syllables_) append_merged(out, s);
    return BraidWord(std::move(out));
}

std::vector<Syllable> BraidWord::letters() const {
    std::vector<Syllable> out;
    out.reserve(static_cast<std::size_t>(letter_count()));
    for (const Syllable& s : syllables_)
        for (int i = 0; i < s.length(); ++i) out.push_back({s.subscript, s.sign()});
    return out;
}

BraidWord BraidWord::from_letters(std::span<const Syllable> letters) {
    return BraidWord(std::vector<Syllable>(letters.begin(), letters.end()));
}

BraidWord operator*(const BraidWord& lhs, const BraidWord& rhs) {
    std::vector<Syllable> out = lhs.syllables_;
    for (const Syllable& s : rhs.syllables_) append_merged(out, s);
    return BraidWord(std::move(out));
}

std::strong_ordering shortlex_compare(const BraidWord& lhs, const BraidWord& rhs) {
    if (auto c = lhs.letter_count() <=> rhs.letter_count(); c != 0) return c;
    return std::lexicographical_compare_three_way(lhs.syllables_.begin(), lhs.syllables_.end(),
                                                  rhs.syllables_.begin(), rhs.syllables_.end());
}

BraidWord parse_word(std::string_view text) {
    std::vector<Syllable> out;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (text[i] != 'a') throw ParseError("expected generator 'a1', 'a2' or 'a3'", i);
        ++i;
        if (i >= n || text[i] < '1' || text[i] > '3')
            throw ParseError("generator subscript must be 1, 2 or 3", i);
        const int subscript = text[i] - '0';
        ++i;
        int power = 1;
        if (i < n && text[i] == '^') {
            ++i;
            const char* first = text.data() + i;
            const char* last = text.data() + n;
            if (first != last && *first == '+') ++first;
            auto [ptr, ec] = std::from_chars(first, last, power);
            if (ec == std::errc::result_out_of_range) throw ParseError("power out of range", i);
            if (ec != std::errc() || ptr == first) throw ParseError("expected integer power", i);
            i = static_cast<std::size_t>(ptr - text.data());
            if (power == 0) throw ParseError("power must be nonzero", start);
        }
        if (i < n && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != 'a')
            throw ParseError("unexpected character", i);
        append_merged(out, {subscript, power});
    }
    return BraidWord(std::move(out));
}

std::string format_word(const BraidWord& w) {
    std::string out;
    for (const Syllable& s : w.syllables()) {
        if (!out.empty()) out += ' ';
        out += 'a';
        out += static_cast<char>('0' + s.subscript);
        if (s.power != 1) {
            out += '^';
            out += std::to_string(s.power);
        }
    }
    return out;
}

BraidWord free_reduce(std::span<const Syllable> syllables) {
    std::vector<Syllable> out;
    out.reserve(syllables.size());
    for (const Syllable& s : syllables) append_cancelling(out, s);
    return BraidWord(std::move(out));
}

BraidWord free_reduce(const BraidWord& w) { return free_reduce(w.syllables()); }

bool is_freely_reduced(const BraidWord& w) {
    const auto s = w.syllables();
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i].subscript == s[i - 1].subscript) return false;
    return true;
}

BraidWord cyclic_reduce(const BraidWord& w) {
    BraidWord reduced = free_reduce(w);
    std::vector<Syllable> s(reduced.syllables().begin(), reduced.syllables().end());
    while (s.size() >= 2 && s.front().subscript == s.back().subscript && s.front().sign() != s.back().sign()) {
        s.front().power += s.back().power;
        s.pop_back();
        if (s.front().power == 0) s.erase(s.begin());
    }
    return BraidWord(std::move(s));
}

bool is_cyclically_reduced(const BraidWord& w) {
    if (!is_freely_reduced(w)) return false;
    const auto s = w.syllables();
    if (s.size() < 2) return true;
    return !(s.front().subscript == s.back().subscript && s.front().sign() != s.back().sign());
}

BraidWord conjugate(const BraidWord& w, const BraidWord& g) { return free_reduce(g.inverse() * w * g); }

BraidWord cyclic_rotate(const BraidWord& w, long k) {
    std::vector<Syllable> letters = w.letters();
    const long n = static_cast<long>(letters.size());
    if (n == 0) return w;
    const long shift = ((k % n) + n) % n;
    std::rotate(letters.begin(), letters.begin() + shift, letters.end());
    return BraidWord::from_letters(letters);
}

std::vector<ArtinLetter> artin_letters(const BraidWord& w) {
    std::vector<ArtinLetter> out;
    out.reserve(static_cast<std::size_t>(w.letter_count()) + 2 * w.a3_syllable_count());
    const auto s = w.syllables();
    for (std::size_t i = 0; i < s.size();) {
        if (s[i].subscript != 3) {
            for (int j = 0; j < s[i].length(); ++j) out.push_back({s[i].subscript, s[i].sign()});
            ++i;
            continue;
        }
        out.push_back({1, -1});
        for (; i < s.size() && s[i].subscript == 3; ++i)
            for (int j = 0; j < s[i].length(); ++j) out.push_back({2, s[i].sign()});
        out.push_back({1, 1});
    }
    return out;
}

BraidWord word_from_artin(std::span<const ArtinLetter> letters) {
    std::vector<Syllable> out;
    out.reserve(letters.size());
    for (const ArtinLetter& l : letters) append_merged(out, {l.generator, l.sign});
    return BraidWord(std::move(out));
}

BraidWord to_artin(const BraidWord& w) { return free_reduce(word_from_artin(artin_letters(w)).syllables()); }

}  // namespace braid3
