#pragma once

// Command-line front end:
//
//   braid3 invariants <word>
//   braid3 verify-paper [--max-letters L] [--positive-max-letters L] [--n-max N] [--p-max P]
//   braid3 enumerate --class <c> --max-len L --check <casson-positive|lk-nonpositive>
//   braid3 skein-check --samples N --seed S
//
// Every subcommand takes --format json|csv|text. Bounds can also be set with
// BRAID3_* environment variables; flags win. Exit status: 0 success,
// 1 campaign failure, 2 usage or parse error.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace braid3 {

enum class OutputFormat { Json, Csv, Text };

struct CliConfig {
    std::string subcommand;
    std::optional<std::string> word_text;
    int max_letters = 12;
    int positive_max_letters = 14;
    int normalization_max_letters = 8;
    int n_max = 10;
    int p_max = 4;
    int samples = 200;
    int skein_max_letters = 10;
    std::uint64_t seed = 1;
    std::string class_name = "Pa-delta4";
    std::string check = "casson-positive";
    OutputFormat output_format = OutputFormat::Text;
    /// 0: one worker per hardware thread.
    unsigned workers = 0;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs a parsed configuration; reports go to out, diagnostics to err.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Parses arguments (and BRAID3_* environment overrides), then runs.
int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace braid3
