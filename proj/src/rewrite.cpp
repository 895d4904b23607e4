#include "braid3/rewrite.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace braid3 {

namespace {

// A letter a_g^s is encoded as the char 2g + (s > 0); its inverse is code ^ 1.
// The encoding orders letters like (subscript, power).
using Cyclic = std::string;

char encode(int subscript, int sign) { return static_cast<char>(2 * subscript + (sign > 0 ? 1 : 0)); }
char inv(char c) { return static_cast<char>(c ^ 1); }

using Pair = std::pair<char, char>;

const std::map<Pair, std::vector<Pair>>& substitutions() {
    static const std::map<Pair, std::vector<Pair>> table = [] {
        const std::array<Pair, 3> equal = {Pair{encode(2, 1), encode(1, 1)}, Pair{encode(3, 1), encode(2, 1)},
                                           Pair{encode(1, 1), encode(3, 1)}};
        std::map<Pair, std::vector<Pair>> t;
        auto add = [&](Pair a, Pair b) {
            auto& v = t[a];
            if (std::find(v.begin(), v.end(), b) == v.end()) v.push_back(b);
        };
        for (const Pair& l : equal) {
            for (const Pair& r : equal) {
                if (l == r) continue;
                const auto [x, y] = l;
                const auto [u, v] = r;
                // Splittings of the cyclic relator x y v^-1 u^-1.
                add({x, y}, {u, v});
                add({y, inv(v)}, {inv(x), u});
                add({inv(v), inv(u)}, {inv(y), inv(x)});
                add({inv(u), x}, {v, inv(y)});
            }
        }
        return t;
    }();
    return table;
}

Cyclic cyclic_free_reduce(const Cyclic& s) {
    Cyclic out;
    for (char c : s) {
        if (!out.empty() && out.back() == inv(c))
            out.pop_back();
        else
            out.push_back(c);
    }
    std::size_t lo = 0, hi = out.size();
    while (hi - lo >= 2 && out[lo] == inv(out[hi - 1])) {
        ++lo;
        --hi;
    }
    return out.substr(lo, hi - lo);
}

Cyclic canonical_rotation(const Cyclic& s) {
    Cyclic best = s;
    Cyclic r = s;
    for (std::size_t i = 1; i < s.size(); ++i) {
        std::rotate(r.begin(), r.begin() + 1, r.end());
        if (r < best) best = r;
    }
    return best;
}

Cyclic to_cyclic(const BraidWord& w) {
    Cyclic out;
    for (const Syllable& l : w.letters()) out.push_back(encode(l.subscript, l.sign()));
    return canonical_rotation(cyclic_free_reduce(out));
}

BraidWord from_cyclic(const Cyclic& s) {
    std::vector<Syllable> letters;
    for (char c : s) letters.push_back({c / 2, (c & 1) ? 1 : -1});
    return BraidWord::from_letters(letters);
}

template <typename Visit>
std::pair<bool, std::size_t> breadth_first(const Cyclic& start, std::size_t budget, Visit&& visit) {
    std::unordered_set<Cyclic> seen{start};
    std::deque<Cyclic> queue{start};
    std::size_t explored = 0;
    while (!queue.empty()) {
        if (explored >= budget) return {true, explored};
        Cyclic s = std::move(queue.front());
        queue.pop_front();
        ++explored;
        if (!visit(s)) return {false, explored};
        const std::size_t n = s.size();
        if (n < 2) continue;
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t j = (i + 1) % n;
            auto it = substitutions().find({s[i], s[j]});
            if (it == substitutions().end()) continue;
            for (const Pair& rep : it->second) {
                Cyclic t = s;
                t[i] = rep.first;
                t[j] = rep.second;
                Cyclic c = canonical_rotation(cyclic_free_reduce(t));
                if (seen.insert(c).second) queue.push_back(std::move(c));
            }
        }
    }
    return {false, explored};
}

}  // namespace

RepresentativeResult shortest_cyclic_representative(const BraidWord& w, std::size_t budget) {
    if (budget == 0) throw std::invalid_argument("search budget must be positive");
    const Cyclic start = to_cyclic(w);
    Cyclic best = start;
    auto [exhausted, explored] = breadth_first(start, budget, [&](const Cyclic& s) {
        if (s.size() < best.size() || (s.size() == best.size() && s.size() < start.size() && s < best)) best = s;
        return true;
    });
    RepresentativeResult result;
    result.word = best.size() < start.size() ? from_cyclic(best) : cyclic_reduce(w);
    result.budget_exhausted = exhausted;
    result.nodes_explored = explored;
    return result;
}

ConjugacySearch search_conjugate(const BraidWord& source, const BraidWord& target, std::size_t budget) {
    if (budget == 0) throw std::invalid_argument("search budget must be positive");
    // Moves never lengthen a word, so search from the longer end.
    Cyclic from = to_cyclic(source);
    Cyclic goal = to_cyclic(target);
    if (goal.size() > from.size()) std::swap(from, goal);
    ConjugacySearch result;
    auto [exhausted, explored] = breadth_first(from, budget, [&](const Cyclic& s) {
        if (s == goal) result.found = true;
        return !result.found;
    });
    result.budget_exhausted = exhausted && !result.found;
    result.nodes_explored = explored;
    return result;
}

}  // namespace braid3
