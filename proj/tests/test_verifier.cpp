#include <gtest/gtest.h>

#include <set>

#include "braid3/classify.hpp"
#include "braid3/closure.hpp"
#include "braid3/crossings.hpp"
#include "braid3/invariants.hpp"
#include "braid3/verifier.hpp"

namespace braid3 {
namespace {

TEST(Verifier, Torus) {
    const CampaignResult r = verify_torus_formula(10);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.instances_checked, 6u);
    EXPECT_EQ(verify_torus_formula(3).instances_checked, 1u);
    EXPECT_THROW(verify_torus_formula(1), std::invalid_argument);
}

TEST(Verifier, Chain) {
    const CampaignResult r = verify_claim_d4(2);
    EXPECT_TRUE(r.passed()) << summary_line(r);
    EXPECT_GT(r.instances_checked, 0u);
    EXPECT_THROW(verify_claim_d4(0), std::invalid_argument);
}

TEST(Verifier, LemmaCampaignsSmall) {
    EXPECT_TRUE(verify_lemma_lk0(10).passed());
    EXPECT_TRUE(verify_lemma_lk1(10).passed());
    EXPECT_TRUE(verify_prop3(10).passed());
    EXPECT_TRUE(verify_positive_knots(10).passed());
    EXPECT_GT(verify_lemma_lk0(10).instances_checked, 0u);
    EXPECT_THROW(verify_prop3(4), std::invalid_argument);
}

TEST(Verifier, LemmaLkCounterexampleFamily) {
    // Pa words a3^-1 a1^x a2 a1 a2^y: delta has four syllables and no a3, the
    // closure has two components, but a3^-1 a1^x a2 = a2^(x+1) a1^-1 collapses
    // the word to a2^(x+y+1), a split link with lk = 0.
    const BraidWord w = parse_word("a3^-1 a1 a2 a1 a2");
    const auto split = pa_split(w);
    ASSERT_TRUE(split.has_value());
    EXPECT_EQ(split->q, 1);
    EXPECT_EQ(split->delta.syllable_count(), 4u);
    EXPECT_EQ(split->delta.a3_syllable_count(), 0u);
    EXPECT_EQ(closure_info(w).component_count, 2);
    EXPECT_EQ(linking_number(w), 0);
    EXPECT_TRUE(same_braid(w, parse_word("a2 a1^-1 a2^-1 a1 a2 a1 a2")));
    EXPECT_TRUE(same_braid(parse_word("a3^-1 a1 a2"), parse_word("a2^2 a1^-1")));

    const CampaignResult r = verify_lemma_lk(9);
    ASSERT_FALSE(r.passed());
    EXPECT_EQ(r.failures.front().word, "a3^-1 a1 a2 a1 a2");
    for (const CampaignFailure& f : r.failures) {
        EXPECT_EQ(f.got, "0");
        EXPECT_EQ(f.word.rfind("a3^-1 a1", 0), 0u) << f.word;
    }
}

TEST(Verifier, FailuresAreShortlexSorted) {
    const CampaignResult r = verify_linking_lemmas(10);
    ASSERT_GE(r.failures.size(), 2u);
    for (std::size_t i = 1; i < r.failures.size(); ++i)
        EXPECT_FALSE(shortlex_less(parse_word(r.failures[i].word), parse_word(r.failures[i - 1].word)));
}

TEST(Verifier, Deterministic) {
    CampaignOptions one{1, true};
    CampaignOptions four{4, true};
    const CampaignResult a = verify_prop3(9, one);
    const CampaignResult b = verify_prop3(9, four);
    EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
    EXPECT_EQ(a.instances, b.instances);
    EXPECT_EQ(to_json(verify_skein_random(50, 5)).dump(), to_json(verify_skein_random(50, 5)).dump());
    EXPECT_EQ(to_json(a).contains("elapsed"), false);
    EXPECT_NE(summary_line(a).find("prop3: PASS"), std::string::npos);
}

TEST(Verifier, Monotone) {
    const CampaignOptions rec{0, true};
    for (int L = 7; L <= 10; ++L) {
        for (auto campaign : {&verify_linking_lemmas, &verify_prop3}) {
            const CampaignResult small = campaign(L - 1, rec);
            const CampaignResult big = campaign(L, rec);
            const std::set<std::string> big_set(big.instances.begin(), big.instances.end());
            for (const std::string& s : small.instances) EXPECT_TRUE(big_set.count(s)) << s;
            EXPECT_GE(big.instances_checked, small.instances_checked);
            EXPECT_GT(small.instances_checked, 0u);
        }
    }
}

TEST(Verifier, ExcludedReport) {
    const ExcludedReport r = report_excluded_E();
    ASSERT_EQ(r.entries.size(), 12u);
    EXPECT_TRUE(r.all_knots);
    EXPECT_TRUE(r.all_in_Pa);
    EXPECT_TRUE(r.all_in_E);
    const Json j = to_json(r);
    for (const Json& e : j["entries"]) EXPECT_TRUE(validate_report_json(e).empty()) << e.dump();
    EXPECT_EQ(r.entries.front().word, "a1^-1 a2 a3^2 a1 a2");
    EXPECT_TRUE(r.entries.front().casson.has_value());
}

TEST(Verifier, RewritePairs) {
    const CampaignResult r = verify_e_set_conjugacy_checks();
    EXPECT_TRUE(r.passed()) << summary_line(r);
    EXPECT_EQ(r.instances_checked, rewrite_pairs().size());
    const CampaignResult tight = verify_e_set_conjugacy_checks(1);
    EXPECT_FALSE(tight.passed());
    EXPECT_NE(tight.failures.front().got.find("budget exhausted"), std::string::npos);
}

TEST(Verifier, RandomSuites) {
    EXPECT_TRUE(verify_skein_random(100, 3).passed());
    EXPECT_TRUE(verify_invariance_random(100, 3).passed());
    const CampaignResult n = verify_normalization(6);
    EXPECT_TRUE(n.passed());
    EXPECT_GT(n.instances_checked, 0u);
}

TEST(Report, SchemaValidation) {
    const Json good = to_json(make_invariant_report(parse_word("a1 a2 a1 a2")));
    EXPECT_TRUE(validate_report_json(good).empty());
    for (const char* key : {"word", "delta", "nabla", "casson", "genus", "components", "classes"}) {
        Json bad = good;
        bad.erase(key);
        EXPECT_FALSE(validate_report_json(bad).empty()) << key;
    }
    Json bad = good;
    bad["delta"] = "t^";
    EXPECT_FALSE(validate_report_json(bad).empty());
    const Json link = to_json(make_invariant_report(parse_word("a1^2 a2")));
    EXPECT_TRUE(validate_report_json(link).empty()) << link.dump();
    EXPECT_TRUE(link["casson"].is_null());
    EXPECT_EQ(link["linking_number"], -1);
}

}  // namespace
}  // namespace braid3
