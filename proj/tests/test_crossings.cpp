#include <gtest/gtest.h>

#include <random>

#include "braid3/closure.hpp"
#include "braid3/crossings.hpp"
#include "braid3/enumerate.hpp"
#include "braid3/invariants.hpp"
#include "braid3/verifier.hpp"
#include "hecke_oracle.hpp"

namespace braid3 {
namespace {

BraidWord W(const std::string& text) { return parse_word(text); }

std::string chain(int m) {
    std::string s;
    for (int i = 0; i < m; ++i) s += "a3 a1 a2 ";
    return s;
}

BraidWord random_two_component(std::mt19937_64& rng, int max_letters) {
    for (;;) {
        BraidWord w = random_word(rng, max_letters);
        if (closure_info(w).component_count == 2) return w;
    }
}

TEST(Linking, Examples) {
    EXPECT_EQ(linking_number(W("a2 " + chain(2))), -1);
    EXPECT_EQ(linking_number(W("a1^2 a2 " + chain(2))), -2);
    EXPECT_EQ(linking_number(W("a1")), 0);
    EXPECT_EQ(linking_number(W("a1^2 a2")), -1);
    EXPECT_EQ(linking_number(W("a1^-2 a2")), 1);
    EXPECT_THROW(linking_number(W("a1 a2")), NotTwoComponentError);
    EXPECT_THROW(linking_number(BraidWord{}), NotTwoComponentError);
}

TEST(Linking, MatchesHeckeOracleOnAllShortWords) {
    std::size_t links = 0;
    for_each_word(ClassFilter::All, 7, [&](const BraidWord& w) {
        if (closure_info(w).component_count != 2) return true;
        ++links;
        EXPECT_EQ(linking_number(w), oracle::linking_number(format_word(w))) << format_word(w);
        return true;
    });
    EXPECT_GT(links, 10000u);
}

TEST(Linking, ConjugationInvariant) {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 200; ++i) {
        const BraidWord w = random_two_component(rng, 10);
        EXPECT_EQ(linking_number(conjugate(w, random_word(rng, 4))), linking_number(w));
        EXPECT_EQ(linking_number(cyclic_rotate(w, static_cast<long>(rng() % 11))), linking_number(w));
    }
}

TEST(Portion, FullRangeAndEmpty) {
    const BraidWord w = W("a2 " + chain(2));
    const std::size_t n = artin_letters(w).size();
    EXPECT_EQ(portion_contribution(w, 0, n, 0), -1);
    EXPECT_EQ(portion_contribution(w, 0, n, 1), -1);
    EXPECT_EQ(portion_contribution(w, 3, 3, 0), 0);
    EXPECT_THROW(portion_contribution(w, 2, n + 1, 0), SiteOutOfRangeError);
    EXPECT_THROW(portion_contribution(W("a1 a2"), 0, 1, 0), NotTwoComponentError);
}

TEST(Portion, PartitionsAddUpToLinkingNumber) {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 50; ++i) {
        const BraidWord w = random_two_component(rng, 10);
        const std::size_t n = artin_letters(w).size();
        const std::size_t cut = static_cast<std::size_t>(rng() % (n + 1));
        for (int label : {0, 1})
            for (OverConvention over : {OverConvention::LeftOverOnPositive, OverConvention::RightOverOnPositive})
                EXPECT_EQ(portion_contribution(w, 0, cut, label, over) + portion_contribution(w, cut, n, label, over),
                          linking_number(w))
                    << format_word(w);
    }
}

// A syllable a3^k = s1^-1 s2^k s1 contributes at most 1, and exactly 1 only
// when its strand 1 is in L1, strands 2 and 3 in L2, and k = 1. This pins the
// over-strand convention.
long max_violations(OverConvention over) {
    long violations = 0;
    for (int k = 1; k <= 6; ++k) {
        const std::vector<ArtinLetter> letters = artin_letters(BraidWord::letter(3, k));
        for (int mask = 1; mask < 7; ++mask) {
            const std::array<int, 3> labels{(mask & 1) ? 2 : 1, (mask & 2) ? 2 : 1, (mask & 4) ? 2 : 1};
            const long l = portion_contribution(letters, 0, letters.size(), labels, over);
            const bool claimed_shape = labels == std::array<int, 3>{1, 2, 2} && k == 1;
            if (l > 1 || (l == 1 && !claimed_shape) || (claimed_shape && l != 1)) ++violations;
        }
    }
    return violations;
}

TEST(Portion, DefaultOverConventionMatchesA3Claim) {
    EXPECT_EQ(kDefaultOverConvention, OverConvention::LeftOverOnPositive);
    EXPECT_EQ(max_violations(OverConvention::LeftOverOnPositive), 0);
    EXPECT_GT(max_violations(OverConvention::RightOverOnPositive), 0);
}

TEST(Crossings, Sites) {
    const std::vector<CrossingSite> sites = crossing_sites(W("a3 a1^-1"));
    ASSERT_EQ(sites.size(), 4u);
    EXPECT_EQ(sites[1].positions, (std::pair<int, int>{2, 3}));
    EXPECT_EQ(sites[3].exponent_sign, -1);
    EXPECT_EQ(crossing_site(W("a3 a1^-1"), 0).exponent_sign, -1);
    EXPECT_THROW(crossing_site(W("a1"), 1), SiteOutOfRangeError);
    EXPECT_EQ(crossing_sign(ArtinLetter{1, 1}), -1);
}

TEST(FlipSmooth, ChainExamples) {
    for (int m : {2, 4}) {
        const BraidWord beta = W("a1^-1 a2 " + chain(m));
        EXPECT_EQ(smooth_crossing(beta, 0), W("a2 " + chain(m)));
        EXPECT_EQ(flip_crossing(beta, 0), W("a1 a2 " + chain(m)));
    }
}

TEST(FlipSmooth, FlipTwiceRestoresWord) {
    std::mt19937_64 rng(47);
    for (int i = 0; i < 300; ++i) {
        const BraidWord w = random_word(rng, 10);
        const std::size_t n = artin_letters(w).size();
        for (std::size_t site = 0; site < n; ++site) {
            const BraidWord back = flip_crossing(flip_crossing(w, site), site);
            EXPECT_EQ(artin_letters(back), artin_letters(w)) << format_word(w) << " @" << site;
        }
    }
    // Away from the wrapping letters of an a3 block the band word itself comes back.
    const BraidWord w = W("a1 a3^2 a2^-1");
    for (std::size_t site : {0, 2, 3, 5}) EXPECT_EQ(flip_crossing(flip_crossing(w, site), site), w) << site;
    for (std::size_t site : {1, 4})
        EXPECT_EQ(artin_letters(flip_crossing(flip_crossing(w, site), site)), artin_letters(w)) << site;
}

TEST(FlipSmooth, TripleShape) {
    std::mt19937_64 rng(53);
    for (int i = 0; i < 300; ++i) {
        const BraidWord w = random_word(rng, 10);
        const std::vector<ArtinLetter> letters = artin_letters(w);
        const std::size_t site = static_cast<std::size_t>(rng() % letters.size());
        const SkeinTriple triple = skein_triple(w, site);
        std::vector<ArtinLetter> flipped = letters;
        flipped[site].sign = -flipped[site].sign;
        std::vector<ArtinLetter> smoothed = letters;
        smoothed.erase(smoothed.begin() + static_cast<long>(site));
        EXPECT_EQ(artin_letters(triple.flipped), flipped) << format_word(w);
        EXPECT_EQ(artin_letters(triple.smoothed), smoothed) << format_word(w);
        EXPECT_EQ(closure_info(triple.flipped).permutation, closure_info(w).permutation);
        if (closure_info(w).is_knot()) EXPECT_EQ(closure_info(triple.smoothed).component_count, 2);
    }
    EXPECT_THROW(flip_crossing(W("a1"), 1), SiteOutOfRangeError);
    EXPECT_THROW(smooth_crossing(BraidWord{}, 0), SiteOutOfRangeError);
}

TEST(FlipSmooth, KeepsA3BlocksInsideAndExpandsWrappers) {
    const BraidWord w = W("a2 a3^2 a1");
    // Middle letters of the a3 block.
    EXPECT_EQ(flip_crossing(w, 2), W("a2 a3^-1 a3 a1"));
    EXPECT_EQ(smooth_crossing(w, 2), W("a2 a3 a1"));
    // Wrapping letters.
    EXPECT_EQ(flip_crossing(w, 1), W("a2 a1 a2^2 a1^2"));
    EXPECT_EQ(smooth_crossing(w, 4), W("a2 a1^-1 a2^2 a1"));
}

TEST(Skein, Examples) {
    const SkeinCheck c = skein_check(W("a1^-1 a2 " + chain(2)), 0);
    EXPECT_EQ(c.c_plus - c.c_minus, -1);
    EXPECT_EQ(c.lk0, -1);
    EXPECT_TRUE(c.holds);
    const BraidWord trefoil = W("a1 a2 a1 a2");
    for (std::size_t site = 0; site < 4; ++site) {
        const SkeinCheck s = skein_check(trefoil, site);
        EXPECT_TRUE(s.holds) << site;
        EXPECT_EQ(s.c_minus, 1);
        EXPECT_EQ(s.c_plus, 0);
        EXPECT_EQ(s.lk0, -1);
    }
    EXPECT_THROW(skein_check(W("a1"), 0), NonKnotError);
}

TEST(Skein, RandomTrials) {
    std::mt19937_64 rng(59);
    for (int i = 0; i < 300; ++i) {
        const BraidWord w = random_knot_word(rng, 12);
        const std::size_t site = static_cast<std::size_t>(rng() % artin_letters(w).size());
        EXPECT_TRUE(skein_check(w, site).holds) << format_word(w) << " @" << site;
    }
}

}  // namespace
}  // namespace braid3
