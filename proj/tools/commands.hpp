#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace slicecliff::cli {

enum class Command { ReproExamples, Apply, Verify, Coeffs, Identities };
enum class Format { Text, Json };

struct CliConfig {
    Command command = Command::ReproExamples;
    int m = 0;
    int k = 0;
    std::string poly;
    bool unital = false;
    Format format = Format::Text;
    std::uint64_t seed = 0;
    int trials = 50;
    std::optional<int> deg_max;
    int h_max = 12;
};

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

/// Parses argv and runs the selected subcommand; returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Runs an already validated configuration.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

}  // namespace slicecliff::cli
