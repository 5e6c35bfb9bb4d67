#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bh::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2 };

struct Range {
    int lo = 0;
    int hi = 0;
    std::vector<int> values() const;
};

/// "A..B" or a single integer; throws std::invalid_argument.
Range parse_range(const std::string& text);
/// "M/K" (zeta_M^K) or "M" (zeta_M); M must be positive.
std::pair<int, int> parse_zeta(const std::string& text);

struct RunConfig {
    std::string command;
    Range q{3, 3};
    Range n{3, 3};
    Range d{2, 2};
    bool d_given = false;
    int max_moment = 4;
    std::optional<std::pair<int, int>> zeta;
    std::string format = "json";
    unsigned jobs = 0;
    std::string out;
    std::string fixtures = "tests/fixtures";
    bool force = false;
    std::string group = "braid";
    std::string system;
    std::string word;
    bool dump = false;
    bool cover = false;
};

struct ParseResult {
    /// Set when the process should exit without running (help or usage error).
    std::optional<int> exit_code;
    RunConfig config;
};

/// Parses the command line. BH_JOBS and BH_FIXTURES supply defaults for --jobs and --fixtures.
ParseResult parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Executes a parsed configuration; returns an ExitCode.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Canonical fixture files, by file name.
std::map<std::string, std::string> fixture_contents(unsigned jobs);
/// Writes fixture_contents into config.fixtures; refuses to overwrite unless config.force.
int freeze_fixtures(const RunConfig& config, std::ostream& out, std::ostream& err);

int main(int argc, char** argv);

}  // namespace bh::cli
