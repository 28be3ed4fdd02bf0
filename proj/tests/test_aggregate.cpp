#include <doctest.h>

#include <map>

#include "slk/aggregate.hpp"
#include "slk/diagram.hpp"
#include "slk/errors.hpp"
#include "slk/generators.hpp"
#include "slk/invariants.hpp"

using namespace slk;

namespace {

std::map<std::string, std::vector<VerificationReport>> by_claim(
    const std::vector<VerificationReport>& reports) {
    std::map<std::string, std::vector<VerificationReport>> out;
    for (const auto& r : reports) out[r.claim_id].push_back(r);
    return out;
}

const VerificationReport& find_row(const std::vector<VerificationReport>& reports,
                                   const std::string& claim, int p, int q) {
    for (const auto& r : reports) {
        if (r.claim_id == claim && r.p == p && r.q == q) return r;
    }
    REQUIRE(false);
    static VerificationReport dummy;
    return dummy;
}

} // namespace

TEST_CASE("class sums on the standard K8 embedding") {
    PLEmbedding e = moment_curve(8);
    AnalyzerOptions opt;
    Analyzer a(e, opt);
    CHECK(a.pair_stat(3, 3, Statistic::SumLk2) == 28);
    CHECK(a.pair_stat(3, 5, Statistic::SumLk2) == 112);
    CHECK(a.pair_stat(4, 4, Statistic::SumLk2) == 56);
    CHECK(a.pair_stat(3, 4, Statistic::SumLk2) == 112); // 2(n-6) * 28
    CHECK(a.hamiltonian_total(Statistic::SumLk2) == 168);
    CHECK(class_sum(e, 3, 5, Statistic::SumLk2).value == 112);
}

TEST_CASE("class sums: knot classes and statistic validation") {
    PLEmbedding e = moment_curve(7);
    CHECK(class_sum(e, 7, 0, Statistic::SumA2).value == 1);
    CHECK(class_sum(e, 5, 0, Statistic::SumA2).value == 0);
    CHECK_THROWS_AS(class_sum(e, 7, 0, Statistic::SumLk), InvalidClassError);
    CHECK_THROWS_AS(class_sum(e, 3, 4, Statistic::SumA2), InvalidClassError);
    CHECK_THROWS_AS(class_sum(e, 3, 5, Statistic::SumLk2), InvalidClassError); // p+q > n
}

TEST_CASE("K6: triangle-pair linking sum is odd for any embedding") {
    Analyzer a(random_embedding(6, 9, 100));
    CHECK(a.pair_stat(3, 3, Statistic::SumLk) % 2 != 0);
}

TEST_CASE("identity suite holds on the standard K8 embedding") {
    auto reports = verify_identities(moment_curve(8));
    CHECK(reports.size() == 6); // (3,5),(4,4),total,(3,4),(3,5) small, doubled
    for (const auto& r : reports) {
        CHECK(r.status == VerificationReport::Status::Holds);
    }
    CHECK(find_row(reports, "lk2-hamiltonian-split-identity", 3, 5).lhs == 112);
    CHECK(find_row(reports, "lk2-hamiltonian-split-identity", 4, 4).lhs == 56);
    CHECK(find_row(reports, "lk2-hamiltonian-total-identity", 0, 0).lhs == 168);
}

TEST_CASE("identity suite holds on a seeded random K7") {
    Analyzer a(random_embedding(7, 5, 100));
    auto reports = verify_identities(a);
    for (const auto& r : reports) {
        CHECK(r.status == VerificationReport::Status::Holds);
    }
    auto groups = by_claim(reports);
    CHECK(groups.count("lk2-hamiltonian-split-identity"));
    CHECK(groups.count("lk2-hamiltonian-total-identity"));
    CHECK(groups.count("lk2-small-class-identity"));
    CHECK(groups.count("a2-lk2-doubled-identity"));
}

TEST_CASE("a corrupted sum yields a violated report with evidence") {
    VerificationReport r =
        make_identity_report("lk2-hamiltonian-split-identity", 8, 3, 5, "lk2", 113, 112);
    CHECK(r.status == VerificationReport::Status::Violated);
    CHECK(r.lhs == 113);
    CHECK(r.rhs == 112);
}

TEST_CASE("congruence residues on K7 and K8") {
    {
        Analyzer a(random_embedding(7, 2, 100));
        auto reports = verify_congruences(a);
        const auto& r34 = find_row(reports, "lk2-split-congruence", 3, 4);
        CHECK(r34.status == VerificationReport::Status::Holds);
        CHECK(r34.lhs == 2);
        CHECK(r34.witness == "mod=4");
        const auto& ra2 = find_row(reports, "a2-hamiltonian-congruence", 7, 0);
        CHECK(ra2.status == VerificationReport::Status::Holds);
        CHECK(ra2.lhs == 1); // odd
    }
    {
        Analyzer a(random_embedding(8, 2, 100));
        auto reports = verify_congruences(a);
        const auto& r35 = find_row(reports, "lk2-split-congruence", 3, 5);
        CHECK(r35.status == VerificationReport::Status::Holds);
        CHECK(r35.lhs == 0);
        CHECK(r35.witness == "mod=8"); // 4 * (8-6)!
        CHECK(a.pair_stat(3, 5, Statistic::SumLk2) % 8 == 0);
        CHECK(a.pair_stat(4, 4, Statistic::SumLk2) % 4 == 0);
        const auto& ra2 = find_row(reports, "a2-hamiltonian-congruence", 8, 0);
        CHECK(ra2.status == VerificationReport::Status::Holds);
        CHECK(ra2.lhs == 3); // (8-5)!/2 mod (8-5)!
    }
}

TEST_CASE("bound suite: sharp values on standard embeddings") {
    {
        auto reports = verify_bounds_and_parities(moment_curve(8));
        const auto& low44 = find_row(reports, "lk2-split-lower-bound", 4, 4);
        CHECK(low44.lhs == 56);
        CHECK(low44.rhs == 56); // met with equality
        CHECK(low44.status == VerificationReport::Status::Holds);
        const auto& up44 = find_row(reports, "lk2-split-upper-bound-rectilinear", 4, 4);
        CHECK(up44.rhs == 168);
        for (const auto& r : reports) {
            CHECK(r.status != VerificationReport::Status::Violated);
        }
    }
    {
        auto reports = verify_bounds_and_parities(moment_curve(7));
        const auto& a2low = find_row(reports, "a2-total-lower-bound-rectilinear", 7, 0);
        CHECK(a2low.lhs == a2low.rhs); // equality: 1440*1 = 2*1*720
        const auto& witness = find_row(reports, "odd-lk-hamiltonian-pair", 0, 0);
        CHECK(witness.status == VerificationReport::Status::Holds);
        CHECK(!witness.witness.empty());
    }
}

TEST_CASE("bent embeddings skip rectilinear-only claims but keep identities") {
    PLEmbedding e = moment_curve(6);
    e.bends[{1, 2}] = {Point3{make_rational(3, 2), make_rational(5, 2), make_rational(5)}};
    REQUIRE(validate_embedding(e).valid());
    CHECK_FALSE(e.rectilinear());

    auto bounds = verify_bounds_and_parities(e);
    bool saw_skip = false;
    for (const auto& r : bounds) {
        if (r.claim_id == "lk2-split-upper-bound-rectilinear" ||
            r.claim_id == "a2-total-lower-bound-rectilinear" ||
            r.claim_id == "a2-max-lower-bound-rectilinear" ||
            r.claim_id == "k6-triangle-hopf-count-range") {
            CHECK(r.status == VerificationReport::Status::Skipped);
            CHECK(r.witness == "not rectilinear");
            saw_skip = true;
        }
    }
    CHECK(saw_skip);

    for (const auto& r : verify_identities(e)) {
        CHECK(r.status == VerificationReport::Status::Holds);
    }
}

TEST_CASE("verification suites reject n < 6") {
    CHECK_THROWS_AS(verify_identities(moment_curve(5)), std::invalid_argument);
}

TEST_CASE("sums are independent of the job count and the direction") {
    PLEmbedding e = random_embedding(7, 6, 100);
    Analyzer serial(e, AnalyzerOptions{{}, 1});
    Analyzer parallel(e, AnalyzerOptions{{}, 7});
    for (auto [p, q] : serial.hamiltonian_splits()) {
        CHECK(serial.pair_stat(p, q, Statistic::SumLk2) ==
              parallel.pair_stat(p, q, Statistic::SumLk2));
        CHECK(serial.pair_stat(p, q, Statistic::MaxAbsLk) ==
              parallel.pair_stat(p, q, Statistic::MaxAbsLk));
    }
    CHECK(serial.knot_sum_a2(7) == parallel.knot_sum_a2(7));

    Direction alt = find_generic_direction(e, 1);
    Analyzer other(e, AnalyzerOptions{alt, 1});
    CHECK(serial.pair_stat(3, 4, Statistic::SumLk2) == other.pair_stat(3, 4, Statistic::SumLk2));
    CHECK(serial.knot_sum_a2(7) == other.knot_sum_a2(7));
}

TEST_CASE("analyzer lk matches the extracted-diagram linking number") {
    PLEmbedding e = random_embedding(7, 8, 100);
    Analyzer a(e);
    a.for_each_pair_lk(3, 4, [&](const Cycle& x, const Cycle& y, int lk) {
        LinkDiagram ld = extract_link_diagram(a.scene(), {x, y});
        CHECK(lk == linking_number(ld));
    });
}

TEST_CASE("odd-lk witness re-evaluates to an odd value") {
    Analyzer a(random_embedding(8, 3, 100));
    auto witness = a.find_odd_lk_hamiltonian_pair();
    REQUIRE(witness.has_value());
    CHECK(witness->second % 2 != 0);
    CHECK(a.lk_of_pair(witness->first.first, witness->first.second) == witness->second);
}

TEST_CASE("analyzer rejects invalid embeddings") {
    PLEmbedding e;
    e.n = 3;
    Point3 p{make_rational(0), make_rational(0), make_rational(0)};
    e.vertex_positions = {p, p, p};
    CHECK_THROWS_AS(Analyzer{e}, std::invalid_argument);
}
