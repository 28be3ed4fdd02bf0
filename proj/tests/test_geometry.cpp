#include <doctest.h>

#include "slk/errors.hpp"
#include "slk/generators.hpp"
#include "slk/geometry.hpp"

using namespace slk;

namespace {

Point3 pt(long long x, long long y, long long z) {
    return Point3{make_rational(x), make_rational(y), make_rational(z)};
}

Direction dir(long long x, long long y, long long z) {
    Direction d;
    d.v = Vec3{make_rational(x), make_rational(y), make_rational(z)};
    return d;
}

bool has_violation(const ValidationVerdict& v, const std::string& kind) {
    for (const auto& viol : v.violations) {
        if (viol.kind == kind) return true;
    }
    return false;
}

bool same_scene(const SceneDiagram& a, const SceneDiagram& b) {
    if (a.crossings.size() != b.crossings.size()) return false;
    for (std::size_t i = 0; i < a.crossings.size(); ++i) {
        const Crossing &x = a.crossings[i], &y = b.crossings[i];
        if (x.over.edge != y.over.edge || x.over.seg_index != y.over.seg_index ||
            x.over.param != y.over.param || x.under.edge != y.under.edge ||
            x.under.seg_index != y.under.seg_index || x.under.param != y.under.param ||
            x.sign != y.sign)
            return false;
    }
    return true;
}

} // namespace

TEST_CASE("moment-curve embeddings validate exactly") {
    for (int n = 3; n <= 11; ++n) {
        CHECK(validate_embedding(moment_curve(n)).valid());
    }
}

TEST_CASE("coincident vertices are reported") {
    PLEmbedding e;
    e.n = 3;
    e.vertex_positions = {pt(0, 0, 0), pt(0, 0, 0), pt(1, 2, 3)};
    auto v = validate_embedding(e);
    CHECK_FALSE(v.valid());
    CHECK(has_violation(v, "coincident-points"));
}

TEST_CASE("vertex interior to an edge is reported") {
    PLEmbedding e;
    e.n = 4;
    // vertex 4 sits at the midpoint of edge 1-2
    e.vertex_positions = {pt(0, 0, 0), pt(2, 0, 0), pt(0, 5, 1), pt(1, 0, 0)};
    auto v = validate_embedding(e);
    CHECK_FALSE(v.valid());
    CHECK(has_violation(v, "point-on-segment"));
}

TEST_CASE("crossing edges are reported with an exact witness") {
    PLEmbedding e;
    e.n = 4;
    // edges 1-2 and 3-4 meet at (1,1,0)
    e.vertex_positions = {pt(0, 0, 0), pt(2, 2, 0), pt(0, 2, 0), pt(2, 0, 0)};
    auto v = validate_embedding(e);
    CHECK_FALSE(v.valid());
    CHECK(has_violation(v, "segment-intersection"));
}

TEST_CASE("bend points participate in validation") {
    PLEmbedding e;
    e.n = 3;
    e.vertex_positions = {pt(0, 0, 0), pt(10, 0, 0), pt(5, 10, 0)};
    e.bends[{1, 2}] = {pt(5, -3, 1)};
    CHECK(validate_embedding(e).valid());
    // bend placed on top of vertex 3
    e.bends[{1, 2}] = {pt(5, 10, 0)};
    auto v = validate_embedding(e);
    CHECK(has_violation(v, "coincident-points"));
}

TEST_CASE("generic direction search is deterministic and verified") {
    PLEmbedding e = moment_curve(6);
    Direction d1 = find_generic_direction(e);
    Direction d2 = find_generic_direction(e);
    CHECK(d1 == d2);
    CHECK_FALSE(genericity_failure(e, d1).has_value());
    Direction alt = find_generic_direction(e, 1);
    CHECK_FALSE(alt == d1);
    CHECK_FALSE(genericity_failure(e, alt).has_value());
}

TEST_CASE("vertical edge rejects (0,0,1) by the parallel-segment condition") {
    PLEmbedding e;
    e.n = 3;
    e.vertex_positions = {pt(0, 0, 0), pt(0, 0, 5), pt(1, 7, 2)};
    CHECK(validate_embedding(e).valid());
    auto fail = genericity_failure(e, dir(0, 0, 1));
    REQUIRE(fail.has_value());
    CHECK(fail->kind == "parallel-segment");
    Direction found = find_generic_direction(e);
    CHECK_FALSE(found == dir(0, 0, 1));
    CHECK(found == dir(1, 1, 1)); // first (1,t,t^2) candidate
}

TEST_CASE("planar triangle accepts (0,0,1) with zero crossings") {
    PLEmbedding e;
    e.n = 3;
    e.vertex_positions = {pt(0, 0, 0), pt(4, 0, 0), pt(1, 3, 0)};
    Direction d = find_generic_direction(e);
    CHECK(d == dir(0, 0, 1));
    SceneDiagram sc = build_scene_diagram(e, d);
    CHECK(sc.crossings.empty());
}

TEST_CASE("skew segments: over strand and frame sign") {
    PLEmbedding e;
    e.n = 4;
    e.vertex_positions = {pt(0, 0, 0), pt(2, 2, 0), pt(0, 2, -1), pt(2, 0, -1)};
    REQUIRE(validate_embedding(e).valid());
    SceneDiagram sc = build_scene_diagram(e, dir(0, 0, 1));
    REQUIRE(sc.crossings.size() == 1);
    const Crossing& c = sc.crossings[0];
    CHECK(c.over.edge == edge_index(4, 1, 2)); // higher along the direction
    CHECK(c.under.edge == edge_index(4, 3, 4));
    CHECK(c.over.param == make_rational(1, 2));
    CHECK(c.under.param == make_rational(1, 2));
    // (over, under) projected directions ((1,1),(1,-1)) form a negative frame
    CHECK(c.sign == -1);
}

TEST_CASE("exhausted candidate budget raises NoGenericDirectionError") {
    PLEmbedding e;
    e.n = 3;
    e.vertex_positions = {pt(0, 0, 0), pt(0, 0, 5), pt(1, 7, 2)};
    // budget of one only admits (0,0,1), which the vertical edge rejects
    CHECK_THROWS_AS(find_generic_direction(e, 0, 1), NoGenericDirectionError);
    try {
        find_generic_direction(e, 0, 1);
    } catch (const NoGenericDirectionError& err) {
        CHECK(std::string(err.what()).find("parallel-segment") != std::string::npos);
    }
}

TEST_CASE("non-generic direction raises GenericityError naming the condition") {
    PLEmbedding e;
    e.n = 3;
    e.vertex_positions = {pt(0, 0, 0), pt(0, 0, 5), pt(1, 7, 2)};
    CHECK_THROWS_AS(build_scene_diagram(e, dir(0, 0, 1)), GenericityError);
    try {
        build_scene_diagram(e, dir(0, 0, 1));
    } catch (const GenericityError& err) {
        CHECK(err.condition == "parallel-segment");
    }
}

TEST_CASE("scene construction is reproducible and scale-invariant") {
    PLEmbedding e = moment_curve(7);
    Direction d = find_generic_direction(e);
    SceneDiagram s1 = build_scene_diagram(e, d);
    SceneDiagram s2 = build_scene_diagram(e, d);
    CHECK(same_scene(s1, s2));

    PLEmbedding scaled = e;
    for (auto& p : scaled.vertex_positions) p = make_rational(3, 2) * p;
    SceneDiagram s3 = build_scene_diagram(scaled, d);
    CHECK(same_scene(s1, s3));
}

TEST_CASE("every crossing appears in exactly two per-edge lists") {
    PLEmbedding e = moment_curve(8);
    SceneDiagram sc = build_scene_diagram(e, find_generic_direction(e));
    std::vector<int> uses(sc.crossings.size(), 0);
    std::vector<int> overs(sc.crossings.size(), 0);
    for (const auto& lst : sc.edge_passages) {
        for (const auto& p : lst) {
            ++uses[p.crossing];
            if (p.is_over) ++overs[p.crossing];
        }
    }
    for (std::size_t i = 0; i < uses.size(); ++i) {
        CHECK(uses[i] == 2);
        CHECK(overs[i] == 1);
        CHECK(sc.crossings[i].sign * sc.crossings[i].sign == 1);
        CHECK(sc.crossings[i].over.param > 0);
        CHECK(sc.crossings[i].over.param < 1);
        CHECK(sc.crossings[i].under.param > 0);
        CHECK(sc.crossings[i].under.param < 1);
    }
}
