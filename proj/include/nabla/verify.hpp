#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nabla {

struct VerifyOptions {
    std::size_t trials = 100;
    std::uint64_t seed = 42;
    unsigned degree = 4;
    /// Records the first comparison of the suite as failed. Exercises failure
    /// reporting and the CLI exit status.
    bool inject_fault = false;
};

struct CheckResult {
    std::string name;
    std::size_t passed = 0;
    std::size_t total = 0;
    /// Description of the first failing input, if any.
    std::optional<std::string> counterexample;

    bool ok() const noexcept { return passed == total; }
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;  // sorted by name

    bool ok() const noexcept;
};

/// The oracle suite clamps the corpus degree to this bound.
inline constexpr unsigned kOracleMaxDegree = 3;

inline constexpr std::string_view kSuiteNames[] = {"associativity", "examples", "identities",
                                                   "oracle"};

/// Runs one named corpus suite. Throws std::invalid_argument for an unknown
/// suite name or zero trials.
SuiteReport run_suite(std::string_view suite, const VerifyOptions& options);

/// One line per check, then a summary line. Deterministic for fixed options.
std::string format_report(const SuiteReport& report);

}  // namespace nabla
