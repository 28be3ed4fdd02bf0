#include "slk/selftest.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>
#include <unistd.h>

#include "slk/aggregate.hpp"
#include "slk/diagram.hpp"
#include "slk/generators.hpp"
#include "slk/invariants.hpp"
#include "slk/numeric.hpp"

namespace slk {

namespace {

constexpr long long kBound = 100;
constexpr std::size_t kMaxDetails = 12;

// Shared analyzers so the congruence/bound suites reuse the sums the identity
// suites already computed.
struct Pool {
    int jobs = 1;
    std::map<int, std::unique_ptr<Analyzer>> moments;
    std::map<std::pair<int, uint64_t>, std::unique_ptr<Analyzer>> randoms;

    Analyzer& moment(int n) {
        auto& slot = moments[n];
        if (!slot) slot = std::make_unique<Analyzer>(moment_curve(n), AnalyzerOptions{{}, jobs});
        return *slot;
    }
    Analyzer& random(int n, uint64_t seed) {
        auto& slot = randoms[{n, seed}];
        if (!slot)
            slot = std::make_unique<Analyzer>(random_embedding(n, seed, kBound),
                                              AnalyzerOptions{{}, jobs});
        return *slot;
    }
};

struct Checker {
    bool pass = true;
    std::size_t total = 0, bad = 0;
    std::vector<std::string> details;

    void expect(bool ok, const std::string& what) {
        ++total;
        if (ok) return;
        pass = false;
        ++bad;
        if (details.size() < kMaxDetails) details.push_back(what);
        else if (details.size() == kMaxDetails) details.push_back("...");
    }

    void expect_reports(const std::vector<VerificationReport>& reports, const std::string& ctx) {
        for (const auto& r : reports) {
            if (r.status == VerificationReport::Status::Skipped) continue;
            expect(r.status == VerificationReport::Status::Holds,
                   ctx + " " + r.claim_id + " p=" + std::to_string(r.p) +
                       " q=" + std::to_string(r.q) + ": lhs=" + std::to_string(r.lhs) +
                       " rhs=" + std::to_string(r.rhs));
        }
    }
};

// Embeddings the regression and identity criteria run on; the congruence and
// bound criteria quantify over the same set.
void for_each_base_embedding(Pool& pool, const std::function<void(Analyzer&, std::string)>& fn) {
    for (int n = 6; n <= 9; ++n) fn(pool.moment(n), "moment K" + std::to_string(n));
    for (int n = 6; n <= 8; ++n) {
        for (uint64_t seed = 1; seed <= 20; ++seed)
            fn(pool.random(n, seed),
               "random K" + std::to_string(n) + " seed " + std::to_string(seed));
    }
    for (uint64_t seed = 1; seed <= 3; ++seed)
        fn(pool.random(9, seed), "random K9 seed " + std::to_string(seed));
}

LinkDiagram hand_diagram(const std::vector<std::pair<int, bool>>& seq,
                         const std::vector<int>& signs) {
    LinkDiagram ld;
    ld.components = {Cycle{{1, 2, 3}}};
    for (int s : signs) ld.crossings.push_back({s, 0, 0});
    ld.passages.resize(1);
    for (auto [c, over] : seq) ld.passages[0].push_back({c, over, signs[c]});
    return ld;
}

void criterion1(Pool& pool, Checker& ck) {
    for (int n = 6; n <= 9; ++n) {
        long long got = pool.moment(n).pair_stat(3, 3, Statistic::SumLk2);
        long long want = binomial64(n, 6);
        ck.expect(got == want, "moment K" + std::to_string(n) + " triangle-pair lk2 sum " +
                                   std::to_string(got) + " != " + std::to_string(want));
    }
}

void criterion2(Pool& pool, Checker& ck) {
    Analyzer& a = pool.moment(8);
    long long s35 = a.pair_stat(3, 5, Statistic::SumLk2);
    long long s44 = a.pair_stat(4, 4, Statistic::SumLk2);
    long long total = a.hamiltonian_total(Statistic::SumLk2);
    ck.expect(s35 == 112, "moment K8 (3,5) lk2 sum " + std::to_string(s35) + " != 112");
    ck.expect(s44 == 56, "moment K8 (4,4) lk2 sum " + std::to_string(s44) + " != 56");
    ck.expect(total == 168, "moment K8 split total " + std::to_string(total) + " != 168");
    ck.expect(total == factorial64(3) * a.pair_stat(3, 3, Statistic::SumLk2),
              "moment K8 split total != 3! * triangle-pair sum");
}

void criterion3(Pool& pool, Checker& ck) {
    auto run = [&](int n, uint64_t seed) {
        Analyzer& a = pool.random(n, seed);
        auto reports = verify_identities(a);
        for (const auto& r : reports) {
            if (r.claim_id != "lk2-hamiltonian-split-identity" &&
                r.claim_id != "lk2-hamiltonian-total-identity")
                continue;
            ck.expect(r.status == VerificationReport::Status::Holds,
                      "random K" + std::to_string(n) + " seed " + std::to_string(seed) + " " +
                          r.claim_id + " (" + std::to_string(r.p) + "," + std::to_string(r.q) +
                          "): " + std::to_string(r.lhs) + " != " + std::to_string(r.rhs));
        }
    };
    for (int n = 6; n <= 8; ++n)
        for (uint64_t seed = 1; seed <= 20; ++seed) run(n, seed);
    for (uint64_t seed = 1; seed <= 3; ++seed) run(9, seed);
}

void criterion4(Pool& pool, Checker& ck) {
    auto check_doubled = [&](Analyzer& a, const std::string& label) {
        for (const auto& r : verify_identities(a)) {
            if (r.claim_id != "a2-lk2-doubled-identity") continue;
            ck.expect(r.status == VerificationReport::Status::Holds,
                      label + " doubled identity: " + std::to_string(r.lhs) +
                          " != " + std::to_string(r.rhs));
        }
    };
    for (int n = 6; n <= 8; ++n) {
        check_doubled(pool.moment(n), "moment K" + std::to_string(n));
        for (uint64_t seed = 1; seed <= 10; ++seed)
            check_doubled(pool.random(n, seed),
                          "random K" + std::to_string(n) + " seed " + std::to_string(seed));
    }
    long long k7a2 = pool.moment(7).knot_sum_a2(7);
    ck.expect(k7a2 == 1, "moment K7 Hamiltonian a2 sum " + std::to_string(k7a2) + " != 1");
}

void criterion5(Pool& pool, Checker& ck) {
    for (uint64_t seed = 1; seed <= 50; ++seed) {
        // Standalone analyzers: the 50-seed sweep is only needed here.
        Analyzer a(random_embedding(6, seed, kBound), AnalyzerOptions{{}, pool.jobs});
        long long s = a.pair_stat(3, 3, Statistic::SumLk);
        ck.expect(s % 2 != 0, "K6 seed " + std::to_string(seed) + " triangle lk sum " +
                                  std::to_string(s) + " is even");
    }
    for (uint64_t seed = 1; seed <= 10; ++seed) {
        long long s = pool.random(7, seed).knot_sum_a2(7);
        ck.expect(s % 2 != 0, "K7 seed " + std::to_string(seed) + " Hamiltonian a2 sum " +
                                  std::to_string(s) + " is even");
    }
    for (int n = 7; n <= 8; ++n) {
        for (uint64_t seed = 1; seed <= 10; ++seed) {
            Analyzer& a = pool.random(n, seed);
            std::string label = "K" + std::to_string(n) + " seed " + std::to_string(seed);
            long long total = a.hamiltonian_total(Statistic::SumLk);
            ck.expect(total % 2 == 0,
                      label + " Hamiltonian lk total " + std::to_string(total) + " is odd");
            auto witness = a.find_odd_lk_hamiltonian_pair();
            ck.expect(witness.has_value(), label + " has no odd-lk Hamiltonian pair");
            if (witness) {
                // Re-evaluate the witness in isolation through the diagram path.
                LinkDiagram ld = extract_link_diagram(
                    a.scene(), {witness->first.first, witness->first.second});
                int lk = linking_number(ld);
                ck.expect(lk == witness->second && lk % 2 != 0,
                          label + " witness pair re-evaluates to lk=" + std::to_string(lk));
            }
        }
    }
}

void criterion6(Pool& pool, Checker& ck) {
    for_each_base_embedding(pool, [&](Analyzer& a, std::string label) {
        bool with_a2 = (a.n() == 7 || a.n() == 8);
        ck.expect_reports(verify_congruences(a, with_a2), label);
    });
}

void criterion7(Pool& pool, Checker& ck) {
    for_each_base_embedding(pool, [&](Analyzer& a, std::string label) {
        ck.expect_reports(verify_bounds_and_parities(a), label);
        if (a.n() == 6) {
            long long s = a.pair_stat(3, 3, Statistic::SumLk2);
            ck.expect(s == 1 || s == 3,
                      label + " triangle Hopf count " + std::to_string(s) + " not in {1,3}");
        }
    });
}

void criterion8(Pool& pool, Checker& ck) {
    // Calibration set on hand-built diagrams, both trefoil chiralities.
    {
        LinkDiagram unknot;
        unknot.components = {Cycle{{1, 2, 3}}};
        unknot.passages.resize(1);
        ck.expect(a2(gauss_diagram(unknot)) == 0, "calibration: unknot a2 != 0");
        auto nabla = conway_skein_oracle(unknot);
        ck.expect(nabla && nabla->coeffs == std::vector<long long>{1},
                  "calibration: unknot Conway polynomial != 1");

        LinkDiagram trefoil = hand_diagram(
            {{0, true}, {1, false}, {2, true}, {0, false}, {1, true}, {2, false}}, {1, 1, 1});
        LinkDiagram trefoil_m = hand_diagram(
            {{0, false}, {1, true}, {2, false}, {0, true}, {1, false}, {2, true}}, {-1, -1, -1});
        LinkDiagram fig8 = hand_diagram({{0, true},
                                         {1, false},
                                         {2, true},
                                         {3, false},
                                         {1, true},
                                         {0, false},
                                         {3, true},
                                         {2, false}},
                                        {1, 1, -1, -1});
        struct Cal {
            const LinkDiagram* ld;
            long long want;
            const char* name;
        };
        const Cal cals[] = {
            {&trefoil, 1, "trefoil"}, {&trefoil_m, 1, "mirror trefoil"}, {&fig8, -1, "figure-eight"}};
        for (const Cal& cal : cals) {
            long long got = a2(gauss_diagram(*cal.ld));
            ck.expect(got == cal.want, std::string("calibration: ") + cal.name + " a2 " +
                                           std::to_string(got) + " != " +
                                           std::to_string(cal.want));
            auto poly = conway_skein_oracle(*cal.ld);
            ck.expect(poly && poly->coeff(2) == cal.want,
                      std::string("calibration: ") + cal.name + " skein z^2 coefficient mismatch");
        }
    }

    for (uint64_t seed = 1; seed <= 5; ++seed) {
        Analyzer& a = pool.random(7, seed);
        std::string label = "K7 seed " + std::to_string(seed);
        std::size_t oracle_skips = 0;
        for_each_cycle(7, 7, [&](std::span<const VertexId> s) {
            Cycle c{std::vector<VertexId>(s.begin(), s.end())};
            LinkDiagram ld = extract_link_diagram(a.scene(), {c});
            auto poly = conway_skein_oracle(ld);
            if (!poly) {
                ++oracle_skips;
                return;
            }
            long long main_path = a2(gauss_diagram(ld));
            ck.expect(main_path == poly->coeff(2),
                      label + " cycle " + c.to_string() + " a2 " + std::to_string(main_path) +
                          " != skein z^2 " + std::to_string(poly->coeff(2)));
        });
        ck.expect(oracle_skips == 0, label + ": " + std::to_string(oracle_skips) +
                                         " Hamiltonian diagrams above the oracle cutoff");
        for_each_disjoint_pair(7, 3, 4, [&](std::span<const VertexId> x, std::span<const VertexId> y) {
            Cycle cx{std::vector<VertexId>(x.begin(), x.end())};
            Cycle cy{std::vector<VertexId>(y.begin(), y.end())};
            LinkDiagram ld = extract_link_diagram(a.scene(), {cx, cy});
            int lk = linking_number(ld);
            auto poly = conway_skein_oracle(ld);
            if (!poly) return; // oracle-unavailable never fails the main path
            ck.expect(poly->coeff(1) == lk, label + " pair " + cx.to_string() + "|" +
                                                cy.to_string() + " lk " + std::to_string(lk) +
                                                " != skein z^1 " +
                                                std::to_string(poly->coeff(1)));
        });
    }
}

void criterion9(Pool& pool, Checker& ck) {
    struct Pick {
        bool is_moment;
        int n;
        uint64_t seed;
    };
    const Pick picks[] = {{true, 6, 0}, {true, 7, 0}, {false, 6, 1}, {false, 7, 1}, {false, 7, 2}};
    for (const Pick& pk : picks) {
        Analyzer& a1 = pk.is_moment ? pool.moment(pk.n) : pool.random(pk.n, pk.seed);
        std::string label = (pk.is_moment ? "moment K" + std::to_string(pk.n)
                                          : "random K" + std::to_string(pk.n) + " seed " +
                                                std::to_string(pk.seed));
        Direction d2 = find_generic_direction(a1.embedding(), 1);
        ck.expect(!(d2 == a1.direction()), label + ": second direction equals the first");
        Analyzer a2nd(a1.embedding(), AnalyzerOptions{d2, pool.jobs});
        for (int p = 3; p <= pk.n; ++p) {
            for (int q = p; p + q <= pk.n; ++q) {
                std::vector<int> lk1, lk2v;
                a1.for_each_pair_lk(p, q, [&](const Cycle&, const Cycle&, int lk) {
                    lk1.push_back(lk);
                });
                a2nd.for_each_pair_lk(p, q, [&](const Cycle&, const Cycle&, int lk) {
                    lk2v.push_back(lk);
                });
                ck.expect(lk1 == lk2v, label + " (" + std::to_string(p) + "," +
                                           std::to_string(q) +
                                           ") lk values differ between directions");
            }
            std::vector<long long> a2a, a2b;
            a1.for_each_cycle_a2(p, [&](const Cycle&, long long v) { a2a.push_back(v); });
            a2nd.for_each_cycle_a2(p, [&](const Cycle&, long long v) { a2b.push_back(v); });
            ck.expect(a2a == a2b, label + " length-" + std::to_string(p) +
                                      " a2 values differ between directions");
        }
    }

    // Basepoint independence of a2 over every Hamiltonian diagram of one scene.
    {
        Analyzer& a = pool.random(7, 1);
        for_each_cycle(7, 7, [&](std::span<const VertexId> s) {
            Cycle c{std::vector<VertexId>(s.begin(), s.end())};
            GaussDiagram gd = gauss_diagram(extract_link_diagram(a.scene(), {c}));
            long long base = a2(gd);
            bool ok = true;
            for (int shift = 1; shift < 2 * gd.crossings && ok; ++shift) {
                ok = (a2(rotate_base(gd, shift)) == base);
            }
            ck.expect(ok, "basepoint dependence on cycle " + c.to_string());
        });
    }

    for_each_base_embedding(pool, [&](Analyzer& a, std::string label) {
        a.for_each_pair_lk(3, 3, [&](const Cycle& x, const Cycle& y, int lk) {
            ck.expect(lk >= -1 && lk <= 1, label + " six-stick pair " + x.to_string() + "|" +
                                               y.to_string() + " lk=" + std::to_string(lk));
        });
        for (int p = 3; p <= 5 && p <= a.n(); ++p) {
            a.for_each_cycle_a2(p, [&](const Cycle& c, long long v) {
                ck.expect(v == 0, label + " five-stick cycle " + c.to_string() +
                                      " a2=" + std::to_string(v));
            });
        }
    });
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void criterion10(const std::string& cli, Checker& ck) {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / ("slk-selftest-" + std::to_string(::getpid()));
    fs::create_directories(dir);
    auto run = [&](const std::string& args) {
        std::string cmd = "\"" + cli + "\" " + args + " > /dev/null 2>&1";
        return std::system(cmd.c_str());
    };
    auto path = [&](const char* name) { return (dir / name).string(); };

    ck.expect(run("gen --moment -n 7 -o " + path("k7.json")) == 0, "gen k7 failed");
    ck.expect(run("gen --moment -n 7 -o " + path("k7b.json")) == 0, "gen k7 rerun failed");
    ck.expect(read_file(path("k7.json")) == read_file(path("k7b.json")),
              "gen output differs between runs");

    ck.expect(run("verify -i " + path("k7.json") + " -o " + path("v1.csv") + " --jobs 1") == 0,
              "verify --jobs 1 failed");
    ck.expect(run("verify -i " + path("k7.json") + " -o " + path("v8.csv") + " --jobs 8") == 0,
              "verify --jobs 8 failed");
    ck.expect(run("verify -i " + path("k7.json") + " -o " + path("v1b.csv") + " --jobs 1") == 0,
              "verify rerun failed");
    std::string v1 = read_file(path("v1.csv"));
    ck.expect(!v1.empty() && v1 == read_file(path("v8.csv")),
              "verify output differs between --jobs 1 and --jobs 8");
    ck.expect(v1 == read_file(path("v1b.csv")), "verify output differs between runs");

    ck.expect(run("sums -i " + path("k7.json") + " --stat lk2 -o " + path("s1.csv") +
                  " --jobs 1") == 0,
              "sums --jobs 1 failed");
    ck.expect(run("sums -i " + path("k7.json") + " --stat lk2 -o " + path("s8.csv") +
                  " --jobs 8") == 0,
              "sums --jobs 8 failed");
    std::string s1 = read_file(path("s1.csv"));
    ck.expect(!s1.empty() && s1 == read_file(path("s8.csv")),
              "sums output differs between --jobs 1 and --jobs 8");

    ck.expect(run("sums -i " + path("k7.json") + " --stat lk2 --format json -o " +
                  path("s1.json") + " --jobs 1") == 0,
              "sums json failed");
    ck.expect(run("sums -i " + path("k7.json") + " --stat lk2 --format json -o " +
                  path("s8.json") + " --jobs 8") == 0,
              "sums json rerun failed");
    ck.expect(read_file(path("s1.json")) == read_file(path("s8.json")),
              "sums json output differs between job counts");

    fs::remove_all(dir);
}

} // namespace

SelftestSummary run_selftest(std::ostream& out, int jobs,
                             const std::optional<std::string>& cli_path) {
    Pool pool;
    pool.jobs = jobs;
    SelftestSummary summary;

    struct Entry {
        int id;
        const char* label;
        std::function<void(Checker&)> fn;
    };
    std::vector<Entry> entries = {
        {1, "moment curve: triangle-pair lk2 sums equal C(n,6) for n=6..9",
         [&](Checker& ck) { criterion1(pool, ck); }},
        {2, "moment K8 regression: (3,5)=112, (4,4)=56, split total=168",
         [&](Checker& ck) { criterion2(pool, ck); }},
        {3, "Hamiltonian lk2 split/total identities on seeded random embeddings",
         [&](Checker& ck) { criterion3(pool, ck); }},
        {4, "doubled a2/lk2 identity on moment and random embeddings",
         [&](Checker& ck) { criterion4(pool, ck); }},
        {5, "parities: odd K6 lk sum, odd K7 a2 sum, even totals, odd-lk witness",
         [&](Checker& ck) { criterion5(pool, ck); }},
        {6, "congruence residues on every base embedding",
         [&](Checker& ck) { criterion6(pool, ck); }},
        {7, "bounds: lower/upper, max-lk squared, K6 Hopf count",
         [&](Checker& ck) { criterion7(pool, ck); }},
        {8, "oracle equivalence: Gauss-diagram a2 and lk versus skein polynomial",
         [&](Checker& ck) { criterion8(pool, ck); }},
        {9, "robustness: direction/basepoint independence, stick dichotomies",
         [&](Checker& ck) { criterion9(pool, ck); }},
    };
    if (cli_path) {
        entries.push_back({10, "CLI byte determinism across runs and job counts",
                           [&](Checker& ck) { criterion10(*cli_path, ck); }});
    }

    for (auto& e : entries) {
        Checker ck;
        auto t0 = std::chrono::steady_clock::now();
        try {
            e.fn(ck);
        } catch (const std::exception& ex) {
            ck.expect(false, std::string("exception: ") + ex.what());
        }
        auto t1 = std::chrono::steady_clock::now();
        CriterionResult res;
        res.id = e.id;
        res.label = e.label;
        res.pass = ck.pass;
        res.seconds = std::chrono::duration<double>(t1 - t0).count();
        res.details = ck.details;
        out << (res.pass ? "[PASS]" : "[FAIL]") << " criterion " << res.id << ": " << res.label
            << " (" << ck.total << " checks, " << static_cast<int>(res.seconds * 1000) / 1000.0
            << "s)\n";
        for (const auto& d : res.details) out << "       " << d << "\n";
        (res.pass ? summary.passed : summary.failed) += 1;
        summary.results.push_back(std::move(res));
    }
    out << summary.passed << "/" << summary.results.size() << " criteria passed\n";
    return summary;
}

} // namespace slk
