#pragma once

// Invariant report for one word, as a JSON record with fixed keys:
//   word, components, delta, nabla, casson, genus, classes
// plus delta_normalized, linking_number and surgery_casson.
// Integers that do not fit in 64 bits are written as decimal strings.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "braid3/classify.hpp"
#include "braid3/laurent.hpp"
#include "braid3/word.hpp"

namespace braid3 {

using Json = nlohmann::ordered_json;

struct InvariantReport {
    std::string word;
    int components = 0;
    LaurentPoly delta;
    bool delta_normalized = false;
    /// Knots only.
    std::optional<ConwayPoly> nabla;
    std::optional<Integer> casson;
    /// (n, n * casson) for n = -5..5; knots only.
    std::vector<std::pair<long, Integer>> surgery_casson;
    int genus = 0;
    /// Two-component closures only.
    std::optional<long> linking_number;
    ClassReport classes;
};

InvariantReport make_invariant_report(const BraidWord& w);

Json integer_to_json(const Integer& v);
Json to_json(const ClassReport& c);
Json to_json(const InvariantReport& r);
/// Multi-line human-readable rendering.
std::string to_text(const InvariantReport& r);

/// Problems found when checking a report record against the fixed schema;
/// empty when valid.
std::vector<std::string> validate_report_json(const Json& j);

}  // namespace braid3
