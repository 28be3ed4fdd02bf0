#include <doctest.h>

#include "slk/aggregate.hpp"
#include "slk/errors.hpp"
#include "slk/generators.hpp"

using namespace slk;

TEST_CASE("moment curve: vertices on (t, t^2, t^3), straight edges") {
    PLEmbedding e = moment_curve(5, {2, 3, 5, 7, 11});
    CHECK(e.rectilinear());
    CHECK(e.position(3).x == 5);
    CHECK(e.position(3).y == 25);
    CHECK(e.position(3).z == 125);
    CHECK(validate_embedding(e).valid());
}

TEST_CASE("moment curve parameter checks") {
    CHECK_THROWS_AS(moment_curve(4, {1, 2, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(moment_curve(4, {1, 3, 2, 4}), std::invalid_argument);
    CHECK_THROWS_AS(moment_curve(2), std::invalid_argument);
    CHECK_THROWS_AS(moment_curve(4, {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("moment K6 carries exactly one linked triangle pair") {
    Analyzer a(moment_curve(6));
    CHECK(a.pair_stat(3, 3, Statistic::SumLk2) == 1);
    CHECK(a.pair_stat(3, 3, Statistic::MaxAbsLk) == 1);
}

TEST_CASE("single triangle: no links, a2 zero") {
    PLEmbedding e = moment_curve(3, {4, 9, 17});
    CHECK(class_sum(e, 3, 0, Statistic::SumA2).value == 0);
    CHECK_THROWS_AS(class_sum(e, 3, 3, Statistic::SumLk2), InvalidClassError);
}

TEST_CASE("random embeddings are deterministic per (n, seed, bound)") {
    PLEmbedding a = random_embedding(6, 1, 100);
    PLEmbedding b = random_embedding(6, 1, 100);
    REQUIRE(a.n == b.n);
    for (int i = 0; i < a.n; ++i) {
        CHECK(a.vertex_positions[i] == b.vertex_positions[i]);
    }
    PLEmbedding c = random_embedding(6, 2, 100);
    bool all_equal = true;
    for (int i = 0; i < a.n; ++i) {
        if (!(a.vertex_positions[i] == c.vertex_positions[i])) all_equal = false;
    }
    CHECK_FALSE(all_equal);
}

TEST_CASE("random embeddings are valid, rectilinear, within bounds") {
    for (uint64_t seed = 1; seed <= 5; ++seed) {
        PLEmbedding e = random_embedding(7, seed, 25);
        CHECK(e.rectilinear());
        CHECK(validate_embedding(e).valid());
        for (const auto& p : e.vertex_positions) {
            for (const Rational* c : {&p.x, &p.y, &p.z}) {
                CHECK(c->get_den() == 1);
                CHECK(abs(c->get_num()) <= 25);
            }
        }
    }
}

TEST_CASE("random generator parameter and budget errors") {
    CHECK_THROWS_AS(random_embedding(8, 1, 5), std::invalid_argument); // bound < n
    CHECK_THROWS_AS(random_embedding(6, 1, 100, 0), GenerationFailureError);
}

TEST_CASE("seeded random K6: triangle-pair linking sum is odd") {
    for (uint64_t seed : {3u, 4u, 5u}) {
        Analyzer a(random_embedding(6, seed, 100));
        CHECK(a.pair_stat(3, 3, Statistic::SumLk) % 2 != 0);
    }
}

TEST_CASE("seeded random K7: Hamiltonian linking total is even") {
    for (uint64_t seed : {3u, 4u}) {
        Analyzer a(random_embedding(7, seed, 100));
        CHECK(a.hamiltonian_total(Statistic::SumLk) % 2 == 0);
    }
}

TEST_CASE("splitmix bounded draw stays in range and covers residues") {
    SplitMix64 rng(42);
    std::vector<int> hits(7, 0);
    for (int i = 0; i < 2000; ++i) {
        uint64_t v = rng.bounded(7);
        REQUIRE(v < 7);
        ++hits[v];
    }
    for (int h : hits) CHECK(h > 0);
}
