#pragma once

// Campaigns that recompute the numeric claims about 3-braid closures:
// torus knot Casson values, the linking numbers and Casson steps of the
// a1^-1 a2 (a3 a1 a2)^m chain, sign lemmas for linking numbers, Casson
// positivity on Pa and on positive Artin braids, and rewrite spot checks.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "braid3/report.hpp"
#include "braid3/word.hpp"

namespace braid3 {

struct CampaignFailure {
    std::string word;
    std::string expected;
    std::string got;

    friend bool operator==(const CampaignFailure&, const CampaignFailure&) = default;
};

struct CampaignResult {
    std::string claim_id;
    std::size_t instances_checked = 0;
    /// Shortlex order of the failing word, smallest first.
    std::vector<CampaignFailure> failures;
    std::chrono::duration<double> elapsed{};
    /// Filled only when CampaignOptions::record_instances is set.
    std::vector<std::string> instances;

    bool passed() const { return failures.empty(); }
};

struct CampaignOptions {
    /// 0 picks std::thread::hardware_concurrency().
    unsigned workers = 0;
    bool record_instances = false;
};

/// JSON without the elapsed time, so equal runs give identical output.
Json to_json(const CampaignResult& r);
/// One line: id, PASS/FAIL, instance and failure counts, elapsed, first failure.
std::string summary_line(const CampaignResult& r);

inline constexpr int kDefaultPaMaxLetters = 12;
inline constexpr int kDefaultPositiveMaxLetters = 14;
inline constexpr int kDefaultTorusNMax = 10;
inline constexpr int kDefaultChainPMax = 4;
inline constexpr std::size_t kDefaultConjugacyBudget = 200000;

/// casson((a1 a2)^n) = (n^2 - 1) / 3 for 2 <= n <= n_max, 3 not dividing n.
CampaignResult verify_torus_formula(int n_max);

/// The chain beta -> beta1 -> ... -> beta6 for m = 2p, p = 1..p_max: linking
/// numbers of the smoothings, Artin-level flip and smoothing identities, the
/// five Casson steps, the telescoped gap 9p - 2, and C(beta) = C(beta1) - m/2.
CampaignResult verify_claim_d4(int p_max);

/// Positive a1/a2 words containing both letters with two-component closure:
/// lk < 0.
CampaignResult verify_lemma_lk0(int max_letters, const CampaignOptions& opts = {});
/// Pa words a_i^-1 delta, delta without a3 and with >= 4 syllables,
/// two-component closure: lk < 0.
CampaignResult verify_lemma_lk(int max_letters, const CampaignOptions& opts = {});
/// Pa words with delta of >= 4 syllables, two-component closure: lk <= 0.
CampaignResult verify_lemma_lk1(int max_letters, const CampaignOptions& opts = {});
/// The three lemma campaigns merged into one result.
CampaignResult verify_linking_lemmas(int max_letters, const CampaignOptions& opts = {});

/// Pa words with delta of >= 4 syllables, knot closure, not in E: casson > 0.
CampaignResult verify_prop3(int max_letters, const CampaignOptions& opts = {});
/// Positive a1/a2 words with knot closure and nontrivial Alexander
/// polynomial: casson > 0.
CampaignResult verify_positive_knots(int max_letters, const CampaignOptions& opts = {});

struct ExcludedReport {
    std::vector<InvariantReport> entries;
    bool all_knots = false;
    bool all_in_Pa = false;
    bool all_in_E = false;
};

/// Invariants of the twelve excluded words. No sign is asserted.
ExcludedReport report_excluded_E();
Json to_json(const ExcludedReport& r);

struct RewritePair {
    BraidWord source;
    BraidWord target;
};

/// The conjugacy spot identities checked by verify_e_set_conjugacy_checks.
std::vector<RewritePair> rewrite_pairs();
/// Each pair: equal Alexander polynomial and Casson invariant, and the target
/// is reached from the source by the bounded conjugacy search.
CampaignResult verify_e_set_conjugacy_checks(std::size_t budget = kDefaultConjugacyBudget);

/// Random word with 1..max_letters band letters (uniform subscript and sign).
BraidWord random_word(std::mt19937_64& rng, int max_letters);
/// Random word whose closure is a knot.
BraidWord random_knot_word(std::mt19937_64& rng, int max_letters);

/// Random knot words and crossing sites: C(K+) - C(K-) = lk(L0).
CampaignResult verify_skein_random(int samples, std::uint64_t seed, int max_letters = 10);
/// Random words, conjugators and rotations: Alexander, Conway, Casson and
/// linking number unchanged, also under free, cyclic and index-3 reduction.
CampaignResult verify_invariance_random(int samples, std::uint64_t seed, int max_letters = 10);
/// Every freely reduced knot word with <= max_letters letters: Delta(1) = 1,
/// Delta symmetric, and the two Casson computations agree.
CampaignResult verify_normalization(int max_letters, const CampaignOptions& opts = {});

}  // namespace braid3
