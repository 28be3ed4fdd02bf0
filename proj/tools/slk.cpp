// slk: generate spatial embeddings of complete graphs, tabulate exact
// linking-number / Conway-coefficient statistics over their cycle classes,
// and verify the identity, congruence, parity, and bound suites.
//
// Exit codes: 0 success (verify: nothing violated), 1 violations or failed
// selftest, 2 usage or input errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "slk/aggregate.hpp"
#include "slk/embedding_io.hpp"
#include "slk/errors.hpp"
#include "slk/generators.hpp"
#include "slk/parallel.hpp"
#include "slk/report_io.hpp"
#include "slk/selftest.hpp"

namespace {

using namespace slk;

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    long long num = std::stoll(s.substr(0, slash));
    long long den = (slash == std::string::npos) ? 1 : std::stoll(s.substr(slash + 1));
    return make_rational(num, den);
}

Direction parse_direction(const std::string& s) {
    std::istringstream ss(s);
    std::string part;
    std::vector<Rational> comps;
    while (std::getline(ss, part, ',')) comps.push_back(parse_rational(part));
    if (comps.size() != 3) throw ParseError("--direction needs dx,dy,dz (rationals as a/b)");
    Direction d;
    d.v = Vec3{comps[0], comps[1], comps[2]};
    if (d.v.is_zero()) throw ParseError("--direction must be nonzero");
    return d;
}

std::pair<int, int> parse_pq(const std::string& s) {
    auto comma = s.find(',');
    int p = std::stoi(s.substr(0, comma));
    int q = (comma == std::string::npos) ? 0 : std::stoi(s.substr(comma + 1));
    return {p, q};
}

void emit(const std::string& out_path, const std::function<void(std::ostream&)>& writer) {
    if (out_path.empty() || out_path == "-") {
        writer(std::cout);
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw ParseError(out_path + ": cannot open for writing");
    writer(f);
}

struct CommonArgs {
    std::string input, output;
    std::string direction;
    std::string format = "csv";
    int jobs = default_jobs();
    bool deterministic = true;

    AnalyzerOptions analyzer_options() const {
        AnalyzerOptions opt;
        if (!direction.empty()) opt.direction = parse_direction(direction);
        opt.jobs = jobs;
        return opt;
    }
    ReportOptions report_options() const {
        ReportOptions opt;
        opt.format = (format == "json") ? OutputFormat::Json : OutputFormat::Csv;
        opt.deterministic = deterministic;
        return opt;
    }
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_input) {
    if (with_input) cmd->add_option("-i,--input", args.input, "embedding file")->required();
    cmd->add_option("-o,--output", args.output, "output path (default stdout)");
    cmd->add_option("--direction", args.direction, "projection direction dx,dy,dz (rationals a/b)");
    cmd->add_option("--format", args.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--jobs", args.jobs, "worker threads (env SPATIAL_LINKING_JOBS)");
    cmd->add_flag("--deterministic,!--no-deterministic", args.deterministic,
                  "suppress timestamps in outputs (default on)");
}

PLEmbedding load_validated(const std::string& path) {
    PLEmbedding e = read_embedding_file(path);
    ValidationVerdict verdict = validate_embedding(e);
    if (!verdict.valid()) {
        std::ostringstream msg;
        msg << path << ": not an embedding:";
        for (const auto& v : verdict.violations) msg << "\n  " << v.kind << ": " << v.detail;
        throw ParseError(msg.str());
    }
    return e;
}

int cmd_gen(int n, bool use_moment, const std::string& params, uint64_t seed, long long bound,
            const std::string& output) {
    PLEmbedding e;
    if (use_moment) {
        if (params.empty()) {
            e = moment_curve(n);
        } else {
            std::vector<long long> t;
            std::istringstream ss(params);
            std::string part;
            while (std::getline(ss, part, ',')) t.push_back(std::stoll(part));
            e = moment_curve(n, t);
        }
    } else {
        e = random_embedding(n, seed, bound);
    }
    emit(output, [&](std::ostream& os) { write_embedding(os, e); });
    return 0;
}

int cmd_sums(const CommonArgs& args, const std::string& stat_name, const std::string& pq) {
    auto stat = statistic_from_name(stat_name);
    if (!stat) throw ParseError("unknown statistic '" + stat_name + "'");
    PLEmbedding e = load_validated(args.input);
    Analyzer a(e, args.analyzer_options());

    std::vector<std::pair<int, int>> classes;
    if (!pq.empty()) {
        classes.push_back(parse_pq(pq));
    } else if (*stat == Statistic::SumA2) {
        for (int p = 3; p <= e.n; ++p) classes.emplace_back(p, 0);
    } else {
        for (int p = 3; 2 * p <= e.n; ++p) {
            for (int q = p; p + q <= e.n; ++q) classes.emplace_back(p, q);
        }
    }

    std::vector<ClassSum> rows;
    for (auto [p, q] : classes) {
        ClassSum row;
        row.n = e.n;
        row.p = p;
        row.q = q;
        row.stat = *stat;
        if (q == 0) {
            if (*stat != Statistic::SumA2)
                throw InvalidClassError("knot classes take the a2 statistic");
            row.value = a.knot_sum_a2(p);
        } else {
            row.value = a.pair_stat(p, q, *stat);
        }
        rows.push_back(row);
    }
    emit(args.output, [&](std::ostream& os) { write_class_sums(os, rows, args.report_options()); });
    return 0;
}

int cmd_verify(const CommonArgs& args) {
    PLEmbedding e = load_validated(args.input);
    Analyzer a(e, args.analyzer_options());
    std::vector<VerificationReport> reports = verify_all(a);
    emit(args.output, [&](std::ostream& os) { write_reports(os, reports, args.report_options()); });
    for (const auto& r : reports) {
        if (r.status == VerificationReport::Status::Violated) return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact linking statistics of spatial complete graphs"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate an embedding file");
    int gen_n = 0;
    bool gen_moment = false, gen_random = false;
    std::string gen_params, gen_output;
    uint64_t gen_seed = 0;
    long long gen_bound = 100;
    gen->add_option("-n", gen_n, "number of vertices")->required();
    gen->add_flag("--moment", gen_moment, "standard embedding on the moment curve");
    gen->add_flag("--random", gen_random, "seeded random rectilinear embedding");
    gen->add_option("-t,--params", gen_params, "moment parameters t1,t2,... (default 1..n)");
    gen->add_option("--seed", gen_seed, "random generator seed");
    gen->add_option("--bound", gen_bound, "random coordinate bound B (coords in [-B,B])");
    gen->add_option("-o,--output", gen_output, "output path (default stdout)");

    // sums
    auto* sums = app.add_subcommand("sums", "exact class statistics table");
    CommonArgs sums_args;
    std::string sums_stat = "lk2", sums_pq;
    add_common(sums, sums_args, true);
    sums->add_option("--stat", sums_stat, "lk, lk2, maxlk, or a2")
        ->check(CLI::IsMember({"lk", "lk2", "maxlk", "a2"}));
    sums->add_option("--pq", sums_pq, "restrict to one class: P,Q for pairs, P for knots");

    // verify
    auto* verify = app.add_subcommand("verify", "run every verification suite");
    CommonArgs verify_args;
    add_common(verify, verify_args, true);

    // selftest
    auto* selftest = app.add_subcommand("selftest", "built-in acceptance suite");
    int selftest_jobs = default_jobs();
    selftest->add_option("--jobs", selftest_jobs, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            if (gen_moment == gen_random)
                throw ParseError("gen needs exactly one of --moment / --random");
            return cmd_gen(gen_n, gen_moment, gen_params, gen_seed, gen_bound, gen_output);
        }
        if (sums->parsed()) return cmd_sums(sums_args, sums_stat, sums_pq);
        if (verify->parsed()) return cmd_verify(verify_args);
        if (selftest->parsed()) {
            SelftestSummary summary =
                run_selftest(std::cout, selftest_jobs, std::string(argv[0]));
            return summary.all_passed() ? 0 : 1;
        }
    } catch (const GenericityError& e) {
        std::cerr << "error: projection not generic, condition " << e.condition << ": "
                  << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
