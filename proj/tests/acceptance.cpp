// Acceptance suite: runs every acceptance criterion at its stated tolerance
// (everything is exact-integer here) and prints one pass/fail line per
// criterion. Pass the CLI binary path as argv[1] to include the output
// determinism criterion. Exit code 0 iff all criteria pass.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "slk/parallel.hpp"
#include "slk/selftest.hpp"

int main(int argc, char** argv) {
    std::optional<std::string> cli_path;
    if (argc > 1) cli_path = argv[1];
    int jobs = slk::default_jobs();
    if (jobs == 1) jobs = 4; // the suite itself is deterministic at any job count
    slk::SelftestSummary summary = slk::run_selftest(std::cout, jobs, cli_path);
    if (!cli_path) {
        std::cout << "note: no CLI path given, output-determinism criterion not run\n";
        return EXIT_FAILURE;
    }
    return summary.all_passed() ? EXIT_SUCCESS : EXIT_FAILURE;
}
