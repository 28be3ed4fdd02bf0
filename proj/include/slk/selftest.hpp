#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace slk {

struct CriterionResult {
    int id = 0;
    std::string label;
    bool pass = false;
    double seconds = 0.0;
    std::vector<std::string> details; // failure evidence / skip notes
};

struct SelftestSummary {
    std::vector<CriterionResult> results;
    int passed = 0, failed = 0;
    bool all_passed() const { return failed == 0; }
};

/// Built-in acceptance suite: exact regression values on the standard
/// embedding, identity/congruence/bound/parity suites over fixed seeded
/// embeddings, oracle cross-checks and robustness properties, plus (when a
/// CLI binary path is supplied) byte-level output determinism of that binary.
/// Prints one pass/fail line per criterion to `out`.
SelftestSummary run_selftest(std::ostream& out, int jobs,
                             const std::optional<std::string>& cli_path = std::nullopt);

} // namespace slk
