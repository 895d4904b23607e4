#include "braid3/closure.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace braid3 {

Permutation3::Permutation3(std::array<int, 3> image) : image_(image) {
    std::array<int, 3> sorted = image;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::array<int, 3>{1, 2, 3}) throw std::invalid_argument("not a permutation of {1,2,3}");
}

Permutation3 Permutation3::transposition(int a, int b) {
    std::array<int, 3> image{1, 2, 3};
    std::swap(image[static_cast<std::size_t>(a - 1)], image[static_cast<std::size_t>(b - 1)]);
    return Permutation3(image);
}

Permutation3 Permutation3::inverse() const {
    std::array<int, 3> image{};
    for (int i = 1; i <= 3; ++i) image[static_cast<std::size_t>((*this)(i) - 1)] = i;
    return Permutation3(image);
}

int Permutation3::cycle_count() const {
    std::array<bool, 3> seen{};
    int cycles = 0;
    for (int i = 1; i <= 3; ++i) {
        if (seen[static_cast<std::size_t>(i - 1)]) continue;
        ++cycles;
        for (int j = i; !seen[static_cast<std::size_t>(j - 1)]; j = (*this)(j)) seen[static_cast<std::size_t>(j - 1)] = true;
    }
    return cycles;
}

std::string Permutation3::to_string() const {
    std::string out;
    std::array<bool, 3> seen{};
    for (int i = 1; i <= 3; ++i) {
        if (seen[static_cast<std::size_t>(i - 1)] || (*this)(i) == i) continue;
        out += '(';
        for (int j = i; !seen[static_cast<std::size_t>(j - 1)]; j = (*this)(j)) {
            if (j != i) out += ' ';
            out += std::to_string(j);
            seen[static_cast<std::size_t>(j - 1)] = true;
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

Permutation3 compose(const Permutation3& first, const Permutation3& second) {
    std::array<int, 3> image{};
    for (int i = 1; i <= 3; ++i) image[static_cast<std::size_t>(i - 1)] = second(first(i));
    return Permutation3(image);
}

Permutation3 letter_permutation(int subscript) {
    switch (subscript) {
        case 1: return Permutation3::transposition(1, 2);
        case 2: return Permutation3::transposition(2, 3);
        case 3: return Permutation3::transposition(1, 3);
    }
    throw std::invalid_argument("subscript must be 1, 2 or 3");
}

ClosureInfo closure_info(const Permutation3& p) {
    ClosureInfo info;
    info.permutation = p;
    std::array<int, 3> label{-1, -1, -1};
    int next = 0;
    for (int i = 1; i <= 3; ++i) {
        if (label[static_cast<std::size_t>(i - 1)] >= 0) continue;
        for (int j = i; label[static_cast<std::size_t>(j - 1)] < 0; j = p(j)) label[static_cast<std::size_t>(j - 1)] = next;
        ++next;
    }
    info.component_count = next;
    info.strand_component = label;
    return info;
}

ClosureInfo closure_info(const BraidWord& w) {
    Permutation3 p;
    for (const Syllable& s : w.syllables())
        if (s.length() % 2 == 1) p = compose(p, letter_permutation(s.subscript));
    return closure_info(p);
}

int bennequin_genus(const BraidWord& w) {
    // Union-find over the three disks; a1 joins 1-2, a2 joins 2-3, a3 joins 1-3.
    std::array<int, 3> parent{0, 1, 2};
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
        return x;
    };
    for (const Syllable& s : w.syllables()) {
        const int a = s.subscript == 2 ? 1 : 0;
        const int b = s.subscript == 1 ? 1 : 2;
        parent[static_cast<std::size_t>(find(a))] = find(b);
    }
    int pieces = 0;
    for (int i = 0; i < 3; ++i) pieces += find(i) == i ? 1 : 0;

    const long twice_genus = w.letter_count() - closure_info(w).component_count - 3 + 2L * pieces;
    if (twice_genus % 2 != 0 || twice_genus < 0)
        throw std::logic_error("Euler characteristic parity violated for " + format_word(w));
    return static_cast<int>(twice_genus / 2);
}

}  // namespace braid3
