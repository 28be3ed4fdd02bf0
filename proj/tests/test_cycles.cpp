#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "slk/cycles.hpp"
#include "slk/errors.hpp"
#include "slk/numeric.hpp"

using namespace slk;

namespace {

// Brute-force oracle: a p-cycle is a set of p edges forming one closed walk.
// Enumerate all injective vertex sequences and dedupe by edge set; completely
// independent of the canonical-form machinery under test.
std::set<std::set<std::pair<int, int>>> brute_force_cycles(int n, int p) {
    std::set<std::set<std::pair<int, int>>> out;
    std::vector<int> perm;
    std::vector<char> used(n + 1, 0);
    std::function<void()> rec = [&]() {
        if (static_cast<int>(perm.size()) == p) {
            std::set<std::pair<int, int>> edges;
            for (int i = 0; i < p; ++i) {
                int a = perm[i], b = perm[(i + 1) % p];
                edges.insert({std::min(a, b), std::max(a, b)});
            }
            if (static_cast<int>(edges.size()) == p) out.insert(edges);
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if (used[v]) continue;
            used[v] = 1;
            perm.push_back(v);
            rec();
            perm.pop_back();
            used[v] = 0;
        }
    };
    rec();
    return out;
}

std::set<std::pair<int, int>> edge_set(const Cycle& c) {
    std::set<std::pair<int, int>> edges;
    for (auto [a, b] : c.directed_edges()) edges.insert({std::min(a, b), std::max(a, b)});
    return edges;
}

} // namespace

TEST_CASE("enumerate_cycles matches the brute-force edge-set oracle") {
    for (int n = 3; n <= 7; ++n) {
        for (int p = 3; p <= n; ++p) {
            auto cycles = enumerate_cycles(n, p);
            auto oracle = brute_force_cycles(n, p);
            REQUIRE(cycles.size() == oracle.size());
            std::set<std::set<std::pair<int, int>>> seen;
            for (const auto& c : cycles) {
                auto es = edge_set(c);
                CHECK(oracle.count(es) == 1);
                CHECK(seen.insert(es).second); // no duplicates
            }
        }
    }
}

TEST_CASE("cycle counts: fixed values") {
    CHECK(enumerate_cycles(6, 3).size() == 20);  // one cycle per 3-subset
    CHECK(enumerate_cycles(7, 7).size() == 360); // (7-1)!/2
    CHECK(enumerate_cycles(6, 6).size() == 60);  // (6-1)!/2
}

TEST_CASE("pair counts: fixed values and closed forms") {
    CHECK(enumerate_disjoint_pairs(6, 3, 3).size() == 10);  // C(6,3)/2
    CHECK(enumerate_disjoint_pairs(8, 4, 4).size() == 315); // 8!/(8*16)
    CHECK(enumerate_disjoint_pairs(8, 3, 5).size() == 672); // 8!/(4*15)
    CHECK(enumerate_disjoint_pairs(7, 3, 4).size() == 105); // 7!/48

    for (int n = 6; n <= 9; ++n) {
        for (int p = 3; 2 * p <= n; ++p) {
            int q = n - p;
            unsigned long long nf = static_cast<unsigned long long>(factorial64(n));
            unsigned long long closed = (p == q) ? nf / (8ull * p * p) : nf / (4ull * p * q);
            CHECK(pair_class_size(n, p, q) == closed);
            auto counts = class_counts(n, p, q);
            CHECK(counts.pair_count == closed);
        }
    }
    CHECK(class_counts(7, 7).cycle_count == 360);
}

TEST_CASE("enumeration sizes match closed forms for all classes up to n=9") {
    for (int n = 3; n <= 9; ++n) {
        for (int p = 3; p <= n; ++p) {
            std::size_t count = 0;
            for_each_cycle(n, p, [&](std::span<const VertexId>) { ++count; });
            CHECK(count == cycle_class_size(n, p));
            for (int q = p; p + q <= n; ++q) {
                std::size_t pairs = 0;
                for_each_disjoint_pair(
                    n, p, q,
                    [&](std::span<const VertexId>, std::span<const VertexId>) { ++pairs; });
                CHECK(pairs == pair_class_size(n, p, q));
            }
        }
    }
}

TEST_CASE("canonicalize: examples") {
    CHECK(canonicalize(std::vector<VertexId>{3, 1, 2}).verts == std::vector<VertexId>{1, 2, 3});
    CHECK(canonicalize(std::vector<VertexId>{1, 3, 2}).verts == std::vector<VertexId>{1, 2, 3});
    // neighbors of the minimum decide the direction: min 2 has neighbors 5 and 7
    CHECK(canonicalize(std::vector<VertexId>{2, 5, 4, 7}).verts ==
          std::vector<VertexId>{2, 5, 4, 7});
    CHECK(canonicalize(std::vector<VertexId>{7, 4, 5, 2}).verts ==
          std::vector<VertexId>{2, 5, 4, 7});
}

TEST_CASE("canonicalize: idempotent and invariant under the dihedral action") {
    std::vector<VertexId> base{4, 9, 2, 7, 5};
    Cycle canon = canonicalize(base);
    CHECK(canonicalize(canon.verts).verts == canon.verts);
    const int p = static_cast<int>(base.size());
    for (int rot = 0; rot < p; ++rot) {
        for (int refl = 0; refl < 2; ++refl) {
            std::vector<VertexId> variant;
            for (int i = 0; i < p; ++i) {
                int idx = refl ? ((rot - i) % p + p) % p : (rot + i) % p;
                variant.push_back(base[idx]);
            }
            CHECK(canonicalize(variant).verts == canon.verts);
        }
    }
}

TEST_CASE("canonicalize: malformed input") {
    CHECK_THROWS_AS(canonicalize(std::vector<VertexId>{1, 2}), MalformedCycleError);
    CHECK_THROWS_AS(canonicalize(std::vector<VertexId>{1, 2, 2}), MalformedCycleError);
    CHECK_THROWS_AS(canonicalize(std::vector<VertexId>{1, 2, 1, 3}), MalformedCycleError);
}

TEST_CASE("invalid class parameters") {
    CHECK_THROWS_AS(enumerate_cycles(5, 2), InvalidClassError);
    CHECK_THROWS_AS(enumerate_cycles(5, 6), InvalidClassError);
    CHECK_THROWS_AS(enumerate_disjoint_pairs(6, 3, 4), InvalidClassError); // p+q > n
    CHECK_THROWS_AS(enumerate_disjoint_pairs(8, 4, 3), InvalidClassError); // not normalized
    CHECK_THROWS_AS(pair_class_size(6, 2, 3), InvalidClassError);
}

TEST_CASE("output is canonical, deterministic, and lexicographically sorted") {
    auto cycles = enumerate_cycles(7, 4);
    CHECK(std::is_sorted(cycles.begin(), cycles.end()));
    for (const auto& c : cycles) {
        CHECK(c.verts == canonicalize(c.verts).verts);
    }
    CHECK(cycles == enumerate_cycles(7, 4));

    auto pairs = enumerate_disjoint_pairs(8, 3, 5);
    CHECK(std::is_sorted(pairs.begin(), pairs.end()));
    std::set<CyclePair> unique(pairs.begin(), pairs.end());
    CHECK(unique.size() == pairs.size());
    for (const auto& pr : pairs) {
        CHECK_FALSE(pr.first.shares_vertex_with(pr.second));
        CHECK(pr.first.length() <= pr.second.length());
    }
    // equal lengths: normalized order, each unordered pair exactly once
    auto eq = enumerate_disjoint_pairs(8, 4, 4);
    for (const auto& pr : eq) CHECK(pr.first < pr.second);
}

TEST_CASE("edge_index is a bijection onto 0..C(n,2)-1") {
    for (int n : {4, 6, 9, 11}) {
        std::set<int> seen;
        for (int a = 1; a <= n; ++a) {
            for (int b = a + 1; b <= n; ++b) {
                int idx = edge_index(n, a, b);
                CHECK(idx >= 0);
                CHECK(idx < edge_count(n));
                CHECK(seen.insert(idx).second);
                CHECK(edge_index(n, b, a) == idx);
            }
        }
        CHECK(static_cast<int>(seen.size()) == edge_count(n));
    }
}
