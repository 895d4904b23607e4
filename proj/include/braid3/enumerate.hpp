#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "braid3/word.hpp"

namespace braid3 {

enum class ClassFilter {
    All,
    P,
    N,
    Pstar,
    Pa,
    /// Pa words whose delta part has at least four syllables.
    PaDelta4,
    /// Positive words in a1 and a2 only.
    PositiveArtin,
};

std::string_view to_string(ClassFilter f);
std::optional<ClassFilter> parse_class_filter(std::string_view text);
bool matches(ClassFilter f, const BraidWord& w);

/// Visits every freely reduced word with 1..max_letters letters that satisfies
/// the filter. Order: by letter count, then lexicographic on the
/// (subscript, power) syllable sequence. Returning false from the visitor stops
/// the enumeration.
void for_each_word(ClassFilter filter, int max_letters, const std::function<bool(const BraidWord&)>& visit);

std::vector<BraidWord> enumerate_words(ClassFilter filter, int max_letters);

}  // namespace braid3
