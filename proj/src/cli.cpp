#include "braid3/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "braid3/closure.hpp"
#include "braid3/crossings.hpp"
#include "braid3/enumerate.hpp"
#include "braid3/invariants.hpp"
#include "braid3/report.hpp"
#include "braid3/verifier.hpp"

namespace braid3 {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void emit_campaigns(const std::vector<CampaignResult>& results, const ExcludedReport* excluded,
                    OutputFormat format, std::ostream& out, std::ostream& err) {
    for (const CampaignResult& r : results) err << summary_line(r) << '\n';
    switch (format) {
        case OutputFormat::Json: {
            Json j;
            Json list = Json::array();
            bool passed = true;
            for (const CampaignResult& r : results) {
                list.push_back(to_json(r));
                passed = passed && r.passed();
            }
            j["campaigns"] = std::move(list);
            if (excluded) j["excluded"] = to_json(*excluded);
            j["passed"] = passed;
            out << j.dump(2) << '\n';
            break;
        }
        case OutputFormat::Csv:
            out << "claim_id,instances_checked,failures,passed,first_failure\n";
            for (const CampaignResult& r : results)
                out << csv_field(r.claim_id) << ',' << r.instances_checked << ',' << r.failures.size() << ','
                    << (r.passed() ? "true" : "false") << ','
                    << (r.failures.empty() ? "" : csv_field(r.failures.front().word)) << '\n';
            break;
        case OutputFormat::Text:
            for (const CampaignResult& r : results) {
                out << r.claim_id << ": " << (r.passed() ? "PASS" : "FAIL") << ", " << r.instances_checked
                    << " instances, " << r.failures.size() << " failures\n";
                for (const CampaignFailure& f : r.failures)
                    out << "  " << f.word << ": expected " << f.expected << ", got " << f.got << '\n';
            }
            if (excluded) {
                out << "excluded words: " << excluded->entries.size() << '\n';
                for (const InvariantReport& e : excluded->entries)
                    out << "  " << e.word << ": delta " << e.delta.to_string() << ", casson "
                        << (e.casson ? e.casson->get_str() : "-") << ", genus " << e.genus << '\n';
            }
            break;
    }
}

bool all_passed(const std::vector<CampaignResult>& results) {
    for (const CampaignResult& r : results)
        if (!r.passed()) return false;
    return true;
}

int run_invariants(const CliConfig& c, std::ostream& out) {
    if (!c.word_text) throw UsageError("invariants requires a word");
    const BraidWord w = parse_word(*c.word_text);
    const InvariantReport r = make_invariant_report(w);
    switch (c.output_format) {
        case OutputFormat::Json: out << to_json(r).dump(2) << '\n'; break;
        case OutputFormat::Csv:
            out << "word,components,delta,nabla,casson,genus,linking_number\n";
            out << csv_field(r.word) << ',' << r.components << ',' << csv_field(r.delta.to_string()) << ','
                << csv_field(r.nabla ? r.nabla->to_string() : "") << ',' << (r.casson ? r.casson->get_str() : "")
                << ',' << r.genus << ',' << (r.linking_number ? std::to_string(*r.linking_number) : "") << '\n';
            break;
        case OutputFormat::Text: out << to_text(r); break;
    }
    return kExitOk;
}

int run_verify_paper(const CliConfig& c, std::ostream& out, std::ostream& err) {
    const CampaignOptions opts{c.workers, false};
    std::vector<CampaignResult> results;
    results.push_back(verify_torus_formula(c.n_max));
    results.push_back(verify_claim_d4(c.p_max));
    results.push_back(verify_lemma_lk0(c.max_letters, opts));
    results.push_back(verify_lemma_lk(c.max_letters, opts));
    results.push_back(verify_lemma_lk1(c.max_letters, opts));
    results.push_back(verify_prop3(c.max_letters, opts));
    results.push_back(verify_positive_knots(c.positive_max_letters, opts));
    results.push_back(verify_e_set_conjugacy_checks());
    results.push_back(verify_skein_random(c.samples, c.seed));
    results.push_back(verify_invariance_random(c.samples, c.seed));
    results.push_back(verify_normalization(c.normalization_max_letters, opts));
    const ExcludedReport excluded = report_excluded_E();
    emit_campaigns(results, &excluded, c.output_format, out, err);
    const bool excluded_ok = excluded.entries.size() == 12 && excluded.all_knots && excluded.all_in_Pa;
    return all_passed(results) && excluded_ok ? kExitOk : kExitFailure;
}

int run_enumerate(const CliConfig& c, std::ostream& out, std::ostream& err) {
    const auto filter = parse_class_filter(c.class_name);
    if (!filter) throw UsageError("unknown class '" + c.class_name + "'");
    const bool casson_check = c.check == "casson-positive";
    if (!casson_check && c.check != "lk-nonpositive") throw UsageError("unknown check '" + c.check + "'");

    CampaignResult r;
    r.claim_id = std::string(to_string(*filter)) + "/" + c.check;
    Json rows = Json::array();
    if (c.output_format == OutputFormat::Csv) out << "word,value,ok\n";
    for_each_word(*filter, c.max_letters, [&](const BraidWord& w) {
        const int components = closure_info(w).component_count;
        std::string value;
        bool ok = true;
        if (casson_check) {
            if (components != 1) return true;
            const Integer v = casson(w);
            value = v.get_str();
            ok = v > 0;
        } else {
            if (components != 2) return true;
            const long v = linking_number(w);
            value = std::to_string(v);
            ok = v <= 0;
        }
        ++r.instances_checked;
        const std::string word = format_word(w);
        if (!ok) r.failures.push_back({word, casson_check ? "casson > 0" : "lk <= 0", value});
        switch (c.output_format) {
            case OutputFormat::Json: rows.push_back({{"word", word}, {"value", value}, {"ok", ok}}); break;
            case OutputFormat::Csv: out << csv_field(word) << ',' << value << ',' << (ok ? "true" : "false") << '\n'; break;
            case OutputFormat::Text: out << word << '\t' << value << (ok ? "" : "\tFAIL") << '\n'; break;
        }
        return true;
    });
    err << summary_line(r) << '\n';
    if (c.output_format == OutputFormat::Json) {
        Json j = to_json(r);
        j["rows"] = std::move(rows);
        out << j.dump(2) << '\n';
    } else if (c.output_format == OutputFormat::Text) {
        out << r.claim_id << ": " << (r.passed() ? "PASS" : "FAIL") << ", " << r.instances_checked << " instances, "
            << r.failures.size() << " failures\n";
    }
    return r.passed() ? kExitOk : kExitFailure;
}

int run_skein(const CliConfig& c, std::ostream& out, std::ostream& err) {
    const CampaignResult r = verify_skein_random(c.samples, c.seed, c.skein_max_letters);
    emit_campaigns({r}, nullptr, c.output_format, out, err);
    return r.passed() ? kExitOk : kExitFailure;
}

void validate(const CliConfig& c) {
    auto positive = [](int v, const char* name) {
        if (v < 1) throw UsageError(std::string(name) + " must be positive");
    };
    positive(c.max_letters, "max-letters");
    positive(c.positive_max_letters, "positive-max-letters");
    positive(c.normalization_max_letters, "normalization-max-letters");
    positive(c.n_max, "n-max");
    positive(c.p_max, "p-max");
    positive(c.samples, "samples");
    positive(c.skein_max_letters, "skein max-letters");
    if (c.subcommand == "verify-paper") {
        if (c.n_max < 2) throw UsageError("n-max must be at least 2");
        if (c.max_letters < 5) throw UsageError("max-letters must be at least 5");
    }
}

}  // namespace

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
    try {
        validate(config);
        if (config.subcommand == "invariants") return run_invariants(config, out);
        if (config.subcommand == "verify-paper") return run_verify_paper(config, out, err);
        if (config.subcommand == "enumerate") return run_enumerate(config, out, err);
        if (config.subcommand == "skein-check") return run_skein(config, out, err);
        throw UsageError("unknown subcommand '" + config.subcommand + "'");
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CliConfig config;
    CLI::App app{"Invariants of closed 3-braids in band generators"};
    app.require_subcommand(1);

    std::string format = "text";
    const std::map<std::string, OutputFormat> formats{
        {"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}, {"text", OutputFormat::Text}};
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "json, csv or text")
            ->check(CLI::IsMember({"json", "csv", "text"}))
            ->envname("BRAID3_FORMAT");
    };

    auto* inv = app.add_subcommand("invariants", "Invariant report for one word");
    std::string word;
    inv->add_option("word", word, "word such as \"a1 a2^-1 a3^2\"")->required();
    add_format(inv);

    auto* verify = app.add_subcommand("verify-paper", "Run every verification campaign");
    verify->add_option("--max-letters", config.max_letters, "letter bound for Pa and lemma campaigns")
        ->envname("BRAID3_MAX_LETTERS");
    verify->add_option("--positive-max-letters", config.positive_max_letters, "letter bound for positive braids")
        ->envname("BRAID3_POSITIVE_MAX_LETTERS");
    verify->add_option("--normalization-max-letters", config.normalization_max_letters,
                       "letter bound for the normalization sweep over all words")
        ->envname("BRAID3_NORMALIZATION_MAX_LETTERS");
    verify->add_option("--n-max", config.n_max, "torus knots T(3, n) up to n")->envname("BRAID3_N_MAX");
    verify->add_option("--p-max", config.p_max, "chain parameter p up to p-max")->envname("BRAID3_P_MAX");
    verify->add_option("--samples", config.samples, "random trials")->envname("BRAID3_SAMPLES");
    verify->add_option("--seed", config.seed, "seed for random trials")->envname("BRAID3_SEED");
    verify->add_option("--workers", config.workers, "worker threads, 0 for all cores")->envname("BRAID3_WORKERS");
    add_format(verify);

    auto* en = app.add_subcommand("enumerate", "Check every word of a class");
    en->add_option("--class", config.class_name, "all, P, N, Pstar, Pa, Pa-delta4 or positive-artin")->required();
    en->add_option("--max-len", config.max_letters, "letter bound")->envname("BRAID3_MAX_LETTERS");
    en->add_option("--check", config.check, "casson-positive or lk-nonpositive")
        ->check(CLI::IsMember({"casson-positive", "lk-nonpositive"}))
        ->required();
    add_format(en);

    auto* sk = app.add_subcommand("skein-check", "Random crossing-change trials");
    sk->add_option("--samples", config.samples, "number of trials")->envname("BRAID3_SAMPLES");
    sk->add_option("--seed", config.seed, "random seed")->envname("BRAID3_SEED");
    sk->add_option("--max-letters", config.skein_max_letters, "letter bound for random words")
        ->envname("BRAID3_SKEIN_MAX_LETTERS");
    add_format(sk);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }
    config.subcommand = app.get_subcommands().front()->get_name();
    if (config.subcommand == "invariants") config.word_text = word;
    config.output_format = formats.at(format);
    return run(config, out, err);
}

}  // namespace braid3
