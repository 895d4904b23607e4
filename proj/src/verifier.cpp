#include "braid3/verifier.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>

#include "braid3/classify.hpp"
#include "braid3/closure.hpp"
#include "braid3/crossings.hpp"
#include "braid3/enumerate.hpp"
#include "braid3/invariants.hpp"
#include "braid3/rewrite.hpp"

namespace braid3 {

namespace {

using Clock = std::chrono::steady_clock;

// Result of checking one enumerated word. Words outside the claim's
// hypotheses are not counted.
struct Outcome {
    bool counted = false;
    std::optional<CampaignFailure> failure;
};

using Check = std::function<Outcome(const BraidWord&)>;

Outcome pass() { return {true, std::nullopt}; }
Outcome skip() { return {}; }
Outcome fail(const BraidWord& w, std::string expected, std::string got) {
    return {true, CampaignFailure{format_word(w), std::move(expected), std::move(got)}};
}

unsigned worker_count(const CampaignOptions& opts) {
    if (opts.workers != 0) return opts.workers;
    return std::max(1u, std::thread::hardware_concurrency());
}

void check_batch(const std::vector<BraidWord>& batch, const Check& check, unsigned workers,
                 std::vector<Outcome>& outcomes) {
    outcomes.assign(batch.size(), Outcome{});
    if (workers <= 1 || batch.size() < 2 * workers) {
        for (std::size_t i = 0; i < batch.size(); ++i) outcomes[i] = check(batch[i]);
        return;
    }
    std::vector<std::jthread> threads;
    const std::size_t chunk = (batch.size() + workers - 1) / workers;
    for (unsigned t = 0; t < workers; ++t) {
        const std::size_t begin = t * chunk;
        const std::size_t end = std::min(batch.size(), begin + chunk);
        if (begin >= end) break;
        threads.emplace_back([&, begin, end] {
            for (std::size_t i = begin; i < end; ++i) outcomes[i] = check(batch[i]);
        });
    }
}

// Streams the enumeration in batches; each batch is split across workers and
// merged back in enumeration order, which is shortlex order.
CampaignResult run_campaign(std::string claim_id, ClassFilter filter, int max_letters, const Check& check,
                            const CampaignOptions& opts) {
    const auto start = Clock::now();
    CampaignResult result;
    result.claim_id = std::move(claim_id);
    const unsigned workers = worker_count(opts);
    constexpr std::size_t kBatch = 1 << 15;
    std::vector<BraidWord> batch;
    std::vector<Outcome> outcomes;
    auto flush = [&] {
        check_batch(batch, check, workers, outcomes);
        for (std::size_t i = 0; i < batch.size(); ++i) {
            if (!outcomes[i].counted) continue;
            ++result.instances_checked;
            if (opts.record_instances) result.instances.push_back(format_word(batch[i]));
            if (outcomes[i].failure) result.failures.push_back(std::move(*outcomes[i].failure));
        }
        batch.clear();
    };
    for_each_word(filter, max_letters, [&](const BraidWord& w) {
        batch.push_back(w);
        if (batch.size() == kBatch) flush();
        return true;
    });
    flush();
    result.elapsed = Clock::now() - start;
    return result;
}

CampaignResult merge(std::string claim_id, std::vector<CampaignResult> parts) {
    CampaignResult out;
    out.claim_id = std::move(claim_id);
    std::vector<std::pair<BraidWord, CampaignFailure>> failures;
    for (CampaignResult& p : parts) {
        out.instances_checked += p.instances_checked;
        out.elapsed += p.elapsed;
        for (CampaignFailure& f : p.failures) failures.emplace_back(parse_word(f.word), std::move(f));
        for (std::string& s : p.instances) out.instances.push_back(p.claim_id + ":" + std::move(s));
    }
    std::stable_sort(failures.begin(), failures.end(),
                     [](const auto& a, const auto& b) { return shortlex_less(a.first, b.first); });
    for (auto& f : failures) out.failures.push_back(std::move(f.second));
    return out;
}

std::string str(const Integer& v) { return v.get_str(); }
std::string str(long v) { return std::to_string(v); }

std::string repeat(const std::string& text, int times) {
    std::string out;
    for (int i = 0; i < times; ++i) out += text + " ";
    return out;
}

// Records an exact comparison as one instance.
template <typename T>
void expect_equal(CampaignResult& r, const std::string& label, const T& expected, const T& got) {
    ++r.instances_checked;
    if (!(expected == got)) r.failures.push_back({label, str(expected), str(got)});
}

void expect_true(CampaignResult& r, const std::string& label, bool ok, const std::string& expected,
                 const std::string& got) {
    ++r.instances_checked;
    if (!ok) r.failures.push_back({label, expected, got});
}

}  // namespace

Json to_json(const CampaignResult& r) {
    Json j;
    j["claim_id"] = r.claim_id;
    j["instances_checked"] = r.instances_checked;
    j["passed"] = r.passed();
    Json failures = Json::array();
    for (const CampaignFailure& f : r.failures)
        failures.push_back({{"word", f.word}, {"expected", f.expected}, {"got", f.got}});
    j["failures"] = std::move(failures);
    return j;
}

std::string summary_line(const CampaignResult& r) {
    std::ostringstream out;
    out << r.claim_id << ": " << (r.passed() ? "PASS" : "FAIL") << ", " << r.instances_checked << " instances, "
        << r.failures.size() << " failures, " << r.elapsed.count() << " s";
    if (!r.failures.empty()) {
        const CampaignFailure& f = r.failures.front();
        out << "; first failure " << f.word << " (expected " << f.expected << ", got " << f.got << ")";
    }
    return out.str();
}

CampaignResult verify_torus_formula(int n_max) {
    if (n_max < 2) throw std::invalid_argument("n_max must be at least 2");
    const auto start = Clock::now();
    CampaignResult r;
    r.claim_id = "torus";
    const BraidWord a1a2 = parse_word("a1 a2");
    for (int n = 2; n <= n_max; ++n) {
        if (n % 3 == 0) continue;
        const BraidWord w = a1a2.pow(n);
        const Integer expected = Integer((n * n - 1) / 3);
        ++r.instances_checked;
        const Integer got = casson(w);
        if (got != expected) r.failures.push_back({format_word(w), str(expected), str(got)});
    }
    r.elapsed = Clock::now() - start;
    return r;
}

CampaignResult verify_claim_d4(int p_max) {
    if (p_max < 1) throw std::invalid_argument("p_max must be at least 1");
    const auto start = Clock::now();
    CampaignResult r;
    r.claim_id = "chain";
    const std::string unit = "a3 a1 a2";
    for (int p = 1; p <= p_max; ++p) {
        const int m = 2 * p;
        const std::string X = repeat(unit, m - 2);
        const std::string Xm = repeat(unit, m);
        const std::string tag = "p=" + std::to_string(p) + " ";

        const BraidWord beta = parse_word("a1^-1 a2 " + Xm);
        const BraidWord beta1_band = parse_word("a1 a2 " + Xm);
        const std::vector<BraidWord> betas{
            beta,
            parse_word("a1 a2 a1^-1 a2 a1^2 a2 a1^-1 a2 a1^2 a2 " + X),
            parse_word("a1 a2 a1^-1 a2^2 a1^-1 a2 a1^2 a2 " + X),
            parse_word("a1 a2 a1^-2 a2 a1^2 a2 " + X),
            parse_word("a1 a2^2 a1^2 a2 " + X),
            parse_word("a1^3 a2 " + X),
            parse_word("a1 a2 " + X),
        };
        const std::vector<BraidWord> lambdas{
            parse_word("a2 " + Xm),
            parse_word("a1 a2 a1^-1 a2 a1 a2 a1^-1 a2 a1^2 a2 " + X),
            parse_word("a1 a2 a1^-1 a2 a1^-1 a2 a1^2 a2 " + X),
            parse_word("a1 a2 a1^-1 a2 a1^2 a2 " + X),
            parse_word("a1 a2 a1^2 a2 " + X),
            parse_word("a1^2 a2 " + X),
        };
        const std::vector<long> lk_expected{-m / 2, -4L * p + 1, -p - 1L, -p, -4L * (p - 1) - 2, -p};
        // Flip/smooth site in each beta_i, i = 0..5 (beta_0 = beta).
        const std::vector<std::size_t> sites{0, 4, 3, 2, 1, 0};
        // C(beta_i) - C(beta_{i+1}); for i = 0 this is C(beta) - C(beta1).
        const std::vector<long> steps{-m / 2, 4L * p - 1, p + 1L, -p, 4L * (p - 1) + 2, p};

        expect_true(r, tag + "beta1 expansion", same_braid(beta1_band, betas[1]), "same braid",
                    format_word(betas[1]));

        std::vector<Integer> c;
        for (const BraidWord& b : betas) c.push_back(casson(b));

        for (std::size_t i = 0; i < 6; ++i) {
            const std::string step = tag + "step " + std::to_string(i);
            expect_equal(r, tag + "lk(lambda" + std::to_string(i + 1) + ") " + format_word(lambdas[i]),
                         lk_expected[i], linking_number(lambdas[i]));
            // beta carries its band form a1 a2 (a3 a1 a2)^m as beta1 at this step.
            const BraidWord& next = i == 0 ? beta1_band : betas[i + 1];
            const BraidWord flipped = flip_crossing(betas[i], sites[i]);
            const BraidWord smoothed = smooth_crossing(betas[i], sites[i]);
            expect_true(r, step + " flip", to_artin(flipped) == to_artin(next), format_word(next),
                        format_word(free_reduce(flipped)));
            expect_true(r, step + " smooth", to_artin(smoothed) == to_artin(lambdas[i]), format_word(lambdas[i]),
                        format_word(free_reduce(smoothed)));
            const SkeinCheck sk = skein_check(betas[i], sites[i]);
            expect_true(r, step + " skein", sk.holds, str(sk.lk0), str(Integer(sk.c_plus - sk.c_minus)));
            expect_equal(r, step + " casson step", Integer(steps[i]), Integer(c[i] - c[i + 1]));
        }
        expect_equal(r, tag + "C(beta1) - C(beta6)", Integer(9L * p - 2), Integer(c[1] - c[6]));
        expect_equal(r, tag + "C(beta) - C(beta1)", Integer(-m / 2), Integer(c[0] - casson(beta1_band)));
    }
    r.elapsed = Clock::now() - start;
    return r;
}

CampaignResult verify_lemma_lk0(int max_letters, const CampaignOptions& opts) {
    return run_campaign("lk0", ClassFilter::PositiveArtin, max_letters,
                        [](const BraidWord& w) {
                            bool has1 = false, has2 = false;
                            for (const Syllable& s : w.syllables()) (s.subscript == 1 ? has1 : has2) = true;
                            if (!has1 || !has2 || closure_info(w).component_count != 2) return skip();
                            const long lk = linking_number(w);
                            return lk < 0 ? pass() : fail(w, "lk < 0", str(lk));
                        },
                        opts);
}

CampaignResult verify_lemma_lk(int max_letters, const CampaignOptions& opts) {
    return run_campaign("lk", ClassFilter::PaDelta4, max_letters,
                        [](const BraidWord& w) {
                            const auto split = pa_split(w);
                            if (!split || split->q != 1 || split->delta.a3_syllable_count() != 0 ||
                                closure_info(w).component_count != 2)
                                return skip();
                            const long lk = linking_number(w);
                            return lk < 0 ? pass() : fail(w, "lk < 0", str(lk));
                        },
                        opts);
}

CampaignResult verify_lemma_lk1(int max_letters, const CampaignOptions& opts) {
    return run_campaign("lk1", ClassFilter::PaDelta4, max_letters,
                        [](const BraidWord& w) {
                            if (closure_info(w).component_count != 2) return skip();
                            const long lk = linking_number(w);
                            return lk <= 0 ? pass() : fail(w, "lk <= 0", str(lk));
                        },
                        opts);
}

CampaignResult verify_linking_lemmas(int max_letters, const CampaignOptions& opts) {
    if (max_letters < 5) throw std::invalid_argument("max_letters must be at least 5");
    return merge("linking-lemmas", {verify_lemma_lk0(max_letters, opts), verify_lemma_lk(max_letters, opts),
                                    verify_lemma_lk1(max_letters, opts)});
}

CampaignResult verify_prop3(int max_letters, const CampaignOptions& opts) {
    if (max_letters < 5) throw std::invalid_argument("max_letters must be at least 5");
    return run_campaign("prop3", ClassFilter::PaDelta4, max_letters,
                        [](const BraidWord& w) {
                            if (!closure_info(w).is_knot() || in_E(w)) return skip();
                            const Integer c = casson(w);
                            return c > 0 ? pass() : fail(w, "casson > 0", str(c));
                        },
                        opts);
}

CampaignResult verify_positive_knots(int max_letters, const CampaignOptions& opts) {
    return run_campaign("positive-knots", ClassFilter::PositiveArtin, max_letters,
                        [](const BraidWord& w) {
                            if (!closure_info(w).is_knot()) return skip();
                            const LaurentPoly delta = alexander(w);
                            if (delta == LaurentPoly::constant(1)) return skip();
                            const Integer c = casson(w);
                            return c > 0 ? pass() : fail(w, "casson > 0", str(c));
                        },
                        opts);
}

ExcludedReport report_excluded_E() {
    ExcludedReport r;
    r.all_knots = r.all_in_Pa = r.all_in_E = true;
    for (const BraidWord& w : excluded_set()) {
        r.entries.push_back(make_invariant_report(w));
        const InvariantReport& e = r.entries.back();
        r.all_knots = r.all_knots && e.components == 1;
        r.all_in_Pa = r.all_in_Pa && e.classes.in_Pa;
        r.all_in_E = r.all_in_E && e.classes.in_E;
    }
    return r;
}

Json to_json(const ExcludedReport& r) {
    Json j;
    j["count"] = r.entries.size();
    j["all_knots"] = r.all_knots;
    j["all_in_Pa"] = r.all_in_Pa;
    j["all_in_E"] = r.all_in_E;
    Json entries = Json::array();
    for (const InvariantReport& e : r.entries) entries.push_back(to_json(e));
    j["entries"] = std::move(entries);
    return j;
}

std::vector<RewritePair> rewrite_pairs() {
    std::vector<RewritePair> out;
    auto add = [&](const std::string& source, const std::string& target) {
        out.push_back({parse_word(source), parse_word(target)});
    };
    auto pw = [](int sub, int power) { return "a" + std::to_string(sub) + "^" + std::to_string(power) + " "; };

    // a3^2 a1^-1 = a1^-1 a2^2, moved around the closure.
    for (int j = 1; j <= 2; ++j)
        for (int k = 1; k <= 2; ++k)
            for (int m = 1; m <= 2; ++m)
                add("a1^-1 " + pw(2, j) + pw(1, k) + pw(2, m) + "a3^2", "a1^-1 " + pw(2, j + 2) + pw(1, k) + pw(2, m));
    // a1^-1 ... a3^j is conjugate to a1^-1 a2^(k+j) ...
    for (int k = 1; k <= 2; ++k)
        for (int j = 1; j <= 3; ++j) add("a1^-1 " + pw(2, k) + "a1^2 a2 " + pw(3, j), "a1^-1 " + pw(2, k + j) + "a1^2 a2");
    // a3^-1 a2^k ... = a2 a1^-1 a2^(k-1) ...
    for (int k = 2; k <= 3; ++k)
        for (int m = 1; m <= 2; ++m)
            for (int n = 1; n <= 2; ++n)
                add("a3^-1 " + pw(2, k) + pw(1, m) + pw(2, n), "a1^-1 " + pw(2, k - 1) + pw(1, m) + pw(2, n + 1));
    // Rotations of the excluded words.
    for (const BraidWord& w : excluded_set()) out.push_back({w, cyclic_rotate(w, 1)});
    // The band form of beta1 against a2 (a3 a1 a2)^(m-1) a3 a1 a2 rotated.
    for (int m = 2; m <= 3; ++m)
        add(repeat("a3 a1 a2", m) + "a3 a1", "a2 a1^3 a2 " + repeat("a3 a1 a2", m - 1));
    return out;
}

CampaignResult verify_e_set_conjugacy_checks(std::size_t budget) {
    const auto start = Clock::now();
    CampaignResult r;
    r.claim_id = "rewrite-pairs";
    for (const RewritePair& pair : rewrite_pairs()) {
        ++r.instances_checked;
        const std::string label = format_word(pair.source) + " ~ " + format_word(pair.target);
        const AlexanderValue a = alexander_value(pair.source);
        const AlexanderValue b = alexander_value(pair.target);
        if (!(a.poly == b.poly)) {
            r.failures.push_back({label, "delta " + a.poly.to_string(), "delta " + b.poly.to_string()});
            continue;
        }
        if (a.components == 1 && casson(pair.source) != casson(pair.target)) {
            r.failures.push_back({label, "casson " + str(casson(pair.source)), "casson " + str(casson(pair.target))});
            continue;
        }
        const ConjugacySearch s = search_conjugate(pair.source, pair.target, budget);
        if (!s.found)
            r.failures.push_back({label, "conjugate within budget",
                                  s.budget_exhausted ? "budget exhausted after " + std::to_string(s.nodes_explored) +
                                                           " nodes"
                                                     : "not found, search space exhausted"});
    }
    r.elapsed = Clock::now() - start;
    return r;
}

BraidWord random_word(std::mt19937_64& rng, int max_letters) {
    const int length = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_letters));
    std::vector<Syllable> letters;
    for (int i = 0; i < length; ++i) {
        const int sub = 1 + static_cast<int>(rng() % 3);
        const int sign = rng() % 2 == 0 ? 1 : -1;
        letters.push_back({sub, sign});
    }
    return BraidWord::from_letters(letters);
}

BraidWord random_knot_word(std::mt19937_64& rng, int max_letters) {
    for (;;) {
        BraidWord w = random_word(rng, max_letters);
        if (closure_info(w).is_knot()) return w;
    }
}

CampaignResult verify_skein_random(int samples, std::uint64_t seed, int max_letters) {
    const auto start = Clock::now();
    CampaignResult r;
    r.claim_id = "skein";
    std::mt19937_64 rng(seed);
    for (int i = 0; i < samples; ++i) {
        const BraidWord w = random_knot_word(rng, max_letters);
        const std::size_t n = artin_letters(w).size();
        const std::size_t site = static_cast<std::size_t>(rng() % n);
        ++r.instances_checked;
        const SkeinCheck sk = skein_check(w, site);
        if (!sk.holds)
            r.failures.push_back({format_word(w) + " @" + std::to_string(site), "lk0 = " + str(sk.lk0),
                                  "C+ - C- = " + str(Integer(sk.c_plus - sk.c_minus))});
    }
    r.elapsed = Clock::now() - start;
    return r;
}

namespace {

// Everything compared between a word and a rewritten or conjugated copy.
struct Fingerprint {
    int components = 0;
    LaurentPoly delta;
    std::optional<ConwayPoly> nabla;
    std::optional<Integer> casson;
    std::optional<long> lk;

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;

    std::string to_string() const {
        std::string s = "components " + std::to_string(components) + ", delta " + delta.to_string();
        if (nabla) s += ", nabla " + nabla->to_string();
        if (casson) s += ", casson " + casson->get_str();
        if (lk) s += ", lk " + std::to_string(*lk);
        return s;
    }
};

Fingerprint fingerprint(const BraidWord& w) {
    Fingerprint f;
    const AlexanderValue a = alexander_value(w);
    f.components = a.components;
    f.delta = a.poly;
    if (a.components == 1) {
        f.nabla = conway(w);
        f.casson = casson(w);
    }
    if (a.components == 2) f.lk = linking_number(w);
    return f;
}

}  // namespace

CampaignResult verify_invariance_random(int samples, std::uint64_t seed, int max_letters) {
    const auto start = Clock::now();
    CampaignResult r;
    r.claim_id = "invariance";
    std::mt19937_64 rng(seed);
    for (int i = 0; i < samples; ++i) {
        const BraidWord w = random_word(rng, max_letters);
        const BraidWord g = random_word(rng, 4);
        const long len = w.letter_count();
        const long k = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * len + 1)) - len;
        const Fingerprint base = fingerprint(w);
        std::vector<std::pair<std::string, BraidWord>> variants{
            {"conjugate by " + format_word(g), conjugate(w, g)},
            {"rotate " + std::to_string(k), cyclic_rotate(w, k)},
            {"free_reduce", free_reduce(w)},
            {"cyclic_reduce", cyclic_reduce(w)},
            {"to_artin", to_artin(w)},
            {"shortest representative", shortest_cyclic_representative(w, 2000).word},
        };
        if (in_Pstar(free_reduce(w))) variants.emplace_back("index3_reduce", index3_reduce(free_reduce(w)));
        ++r.instances_checked;
        for (const auto& [name, v] : variants) {
            const Fingerprint f = fingerprint(v);
            if (!(f == base)) {
                r.failures.push_back({format_word(w) + " [" + name + "]", base.to_string(), f.to_string()});
                break;
            }
        }
        if (base.casson && casson(w.mirror()) != *base.casson)
            r.failures.push_back({format_word(w) + " [mirror]", "casson " + str(*base.casson),
                                  "casson " + str(casson(w.mirror()))});
    }
    r.elapsed = Clock::now() - start;
    return r;
}

CampaignResult verify_normalization(int max_letters, const CampaignOptions& opts) {
    return run_campaign("normalization", ClassFilter::All, max_letters,
                        [](const BraidWord& w) {
                            if (!closure_info(w).is_knot()) return skip();
                            const AlexanderValue a = alexander_value(w);
                            const Integer at_one = eval_at_one(a.poly);
                            if (!a.normalized || at_one != 1 || !is_symmetric(a.poly))
                                return fail(w, "delta(1) = 1 and symmetric", a.poly.to_string());
                            const Integer twice = second_derivative_at_one(a.poly);
                            const Integer via_nabla = conway_from_alexander(a.poly).coefficient(2);
                            if (twice != 2 * via_nabla)
                                return fail(w, "delta''(1) / 2 = " + str(Integer(twice / 2)),
                                            "nabla x^2 coefficient " + str(via_nabla));
                            return pass();
                        },
                        opts);
}

}  // namespace braid3
