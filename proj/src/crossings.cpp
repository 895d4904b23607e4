#include "braid3/crossings.hpp"

#include <string>

#include "braid3/closure.hpp"
#include "braid3/invariants.hpp"

namespace braid3 {

NotTwoComponentError::NotTwoComponentError(const BraidWord& w, int components)
    : std::invalid_argument("closure of '" + format_word(w) + "' has " + std::to_string(components) +
                            " components, expected 2"),
      components_(components) {}

namespace {

// Where an Artin letter of the canonical projection comes from.
struct Origin {
    enum class Kind { Plain, A3Middle, A3Open, A3Close } kind = Kind::Plain;
    std::size_t syllable = 0;  // Plain and A3Middle
    int offset = 0;            // letter offset inside that syllable
    std::size_t block_begin = 0, block_end = 0;  // a3 block, syllable range
};

std::vector<Origin> origins(const BraidWord& w) {
    std::vector<Origin> out;
    const auto s = w.syllables();
    for (std::size_t i = 0; i < s.size();) {
        if (s[i].subscript != 3) {
            for (int j = 0; j < s[i].length(); ++j) out.push_back({Origin::Kind::Plain, i, j, 0, 0});
            ++i;
            continue;
        }
        std::size_t end = i;
        while (end < s.size() && s[end].subscript == 3) ++end;
        out.push_back({Origin::Kind::A3Open, 0, 0, i, end});
        for (std::size_t k = i; k < end; ++k)
            for (int j = 0; j < s[k].length(); ++j) out.push_back({Origin::Kind::A3Middle, k, j, i, end});
        out.push_back({Origin::Kind::A3Close, 0, 0, i, end});
        i = end;
    }
    return out;
}

// Syllable (sub, power) with letter `offset` replaced by `replacement`
// (nullptr deletes it).
void split_syllable(std::vector<Syllable>& out, const Syllable& s, int offset, const Syllable* replacement) {
    const int sign = s.sign();
    if (offset > 0) out.push_back({s.subscript, sign * offset});
    if (replacement) out.push_back(*replacement);
    const int after = s.length() - offset - 1;
    if (after > 0) out.push_back({s.subscript, sign * after});
}

// Block [begin, end) of a3-syllables written as Artin letters; the wrapping
// letter at `edit` (0 open, 1 close) is flipped or deleted.
void expand_block(std::vector<Syllable>& out, std::span<const Syllable> s, std::size_t begin, std::size_t end,
                  int edit, bool flip) {
    if (edit != 0 || flip) out.push_back({1, edit == 0 ? 1 : -1});
    for (std::size_t k = begin; k < end; ++k) out.push_back({2, s[k].power});
    if (edit != 1 || flip) out.push_back({1, edit == 1 ? -1 : 1});
}

BraidWord edit_crossing(const BraidWord& w, std::size_t letter_index, bool flip) {
    const std::vector<Origin> where = origins(w);
    if (letter_index >= where.size())
        throw SiteOutOfRangeError("crossing index " + std::to_string(letter_index) + " out of range for '" +
                                  format_word(w) + "' (" + std::to_string(where.size()) + " Artin letters)");
    const Origin& o = where[letter_index];
    const auto s = w.syllables();

    std::vector<ArtinLetter> target = artin_letters(w);
    if (flip)
        target[letter_index].sign = -target[letter_index].sign;
    else
        target.erase(target.begin() + static_cast<long>(letter_index));

    std::vector<Syllable> out;
    if (o.kind == Origin::Kind::Plain || o.kind == Origin::Kind::A3Middle) {
        const Syllable& syl = s[o.syllable];
        const Syllable flipped{syl.subscript, -syl.sign()};
        std::size_t prefix_end = o.syllable;
        const bool lone_a3 = o.kind == Origin::Kind::A3Middle && !flip && o.block_end - o.block_begin == 1 &&
                             syl.length() == 1;
        const bool joins_blocks = o.kind == Origin::Kind::Plain && !flip && syl.length() == 1 && o.syllable > 0 &&
                                  o.syllable + 1 < s.size() && s[o.syllable - 1].subscript == 3 &&
                                  s[o.syllable + 1].subscript == 3;
        if (joins_blocks) {
            // Write the block on the left out in Artin letters so the two
            // a3 blocks do not fuse.
            std::size_t begin = o.syllable;
            while (begin > 0 && s[begin - 1].subscript == 3) --begin;
            out.assign(s.begin(), s.begin() + static_cast<long>(begin));
            expand_block(out, s, begin, o.syllable, -1, false);
        } else {
            out.assign(s.begin(), s.begin() + static_cast<long>(prefix_end));
        }
        if (lone_a3) {
            out.push_back({1, -1});
            out.push_back({1, 1});
        } else {
            split_syllable(out, syl, o.offset, flip ? &flipped : nullptr);
        }
        out.insert(out.end(), s.begin() + static_cast<long>(o.syllable) + 1, s.end());
    } else {
        out.assign(s.begin(), s.begin() + static_cast<long>(o.block_begin));
        expand_block(out, s, o.block_begin, o.block_end, o.kind == Origin::Kind::A3Open ? 0 : 1, flip);
        out.insert(out.end(), s.begin() + static_cast<long>(o.block_end), s.end());
    }

    BraidWord candidate(std::move(out));
    if (artin_letters(candidate) != target) return word_from_artin(target);
    return candidate;
}

}  // namespace

CrossingSite crossing_site(const BraidWord& w, std::size_t letter_index) {
    const std::vector<ArtinLetter> letters = artin_letters(w);
    if (letter_index >= letters.size())
        throw SiteOutOfRangeError("crossing index " + std::to_string(letter_index) + " out of range");
    const ArtinLetter& l = letters[letter_index];
    return {letter_index, {l.generator, l.generator + 1}, l.sign};
}

std::vector<CrossingSite> crossing_sites(const BraidWord& w) {
    std::vector<CrossingSite> out;
    const std::vector<ArtinLetter> letters = artin_letters(w);
    for (std::size_t i = 0; i < letters.size(); ++i)
        out.push_back({i, {letters[i].generator, letters[i].generator + 1}, letters[i].sign});
    return out;
}

long linking_number(const BraidWord& w) {
    const ClosureInfo info = closure_info(w);
    if (info.component_count != 2) throw NotTwoComponentError(w, info.component_count);
    std::array<int, 3> at{1, 2, 3};  // strand at each position
    long twice = 0;
    for (const ArtinLetter& l : artin_letters(w)) {
        auto& left = at[static_cast<std::size_t>(l.generator - 1)];
        auto& right = at[static_cast<std::size_t>(l.generator)];
        if (info.component_of(left) != info.component_of(right)) twice += crossing_sign(l);
        std::swap(left, right);
    }
    if (twice % 2 != 0) throw std::logic_error("odd inter-component crossing count for " + format_word(w));
    return twice / 2;
}

long portion_contribution(std::span<const ArtinLetter> letters, std::size_t first, std::size_t last,
                          std::array<int, 3> top_labels, OverConvention over) {
    if (first > last || last > letters.size()) throw SiteOutOfRangeError("portion range out of bounds");
    long sum = 0;
    for (std::size_t i = 0; i < last; ++i) {
        const ArtinLetter& l = letters[i];
        int& left = top_labels[static_cast<std::size_t>(l.generator - 1)];
        int& right = top_labels[static_cast<std::size_t>(l.generator)];
        if (i >= first) {
            const bool left_over = (l.sign > 0) == (over == OverConvention::LeftOverOnPositive);
            const int over_label = left_over ? left : right;
            const int under_label = left_over ? right : left;
            if (under_label == 1 && over_label == 2) sum += crossing_sign(l);
        }
        std::swap(left, right);
    }
    return sum;
}

long portion_contribution(const BraidWord& w, std::size_t first, std::size_t last, int l1_component,
                          OverConvention over) {
    const ClosureInfo info = closure_info(w);
    if (info.component_count != 2) throw NotTwoComponentError(w, info.component_count);
    if (l1_component != 0 && l1_component != 1) throw std::invalid_argument("l1_component must be 0 or 1");
    std::array<int, 3> labels{};
    for (int strand = 1; strand <= 3; ++strand)
        labels[static_cast<std::size_t>(strand - 1)] = info.component_of(strand) == l1_component ? 1 : 2;
    return portion_contribution(artin_letters(w), first, last, labels, over);
}

BraidWord flip_crossing(const BraidWord& w, std::size_t letter_index) { return edit_crossing(w, letter_index, true); }

BraidWord smooth_crossing(const BraidWord& w, std::size_t letter_index) {
    return edit_crossing(w, letter_index, false);
}

SkeinTriple skein_triple(const BraidWord& w, std::size_t letter_index) {
    return {w, flip_crossing(w, letter_index), smooth_crossing(w, letter_index)};
}

SkeinCheck skein_check(const BraidWord& w, std::size_t letter_index) {
    const SkeinTriple triple = skein_triple(w, letter_index);
    const bool original_negative = crossing_site(w, letter_index).exponent_sign < 0;
    SkeinCheck r;
    const Integer c_original = casson(triple.original);
    const Integer c_flipped = casson(triple.flipped);
    r.c_plus = original_negative ? c_original : c_flipped;
    r.c_minus = original_negative ? c_flipped : c_original;
    r.lk0 = linking_number(triple.smoothed);
    r.holds = r.c_plus - r.c_minus == r.lk0;
    return r;
}

}  // namespace braid3
