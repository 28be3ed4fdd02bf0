#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "slk/cycles.hpp"
#include "slk/numeric.hpp"

namespace slk {

/// Projection direction; only the ray class matters.
struct Direction {
    Vec3 v;
    bool operator==(const Direction& o) const { return v == o.v; }
    std::string to_string() const;
};

/// Piecewise-linear embedding of K_n: exact vertex coordinates plus optional
/// bend points per edge. An edge with no bends is a straight segment.
struct PLEmbedding {
    int n = 0;
    std::vector<Point3> vertex_positions;              // index i-1 holds vertex i
    std::map<std::pair<int, int>, std::vector<Point3>> bends; // key (i,j), i<j

    const Point3& position(VertexId v) const { return vertex_positions[v - 1]; }
    bool rectilinear() const { return bends.empty(); }
};

/// One straight piece of an edge polyline, oriented from the smaller endpoint
/// vertex toward the larger.
struct SceneSegment {
    int edge = 0;      // dense edge index
    int seg_index = 0; // position along the edge polyline
    Point3 a, b;
};

/// Where a crossing sits on an edge: which polyline piece and how far along it.
struct CrossingLocator {
    int edge = 0;
    int seg_index = 0;
    Rational param; // strictly inside (0,1)
};

struct Crossing {
    CrossingLocator over, under;
    int sign = 0; // +1 iff (over direction, under direction) is a positive 2D frame
};

/// Passage of an edge through a crossing, ordered along the edge.
struct EdgePassage {
    int crossing = 0;
    bool is_over = false;
};

/// All crossings of the whole projected spatial graph under one direction.
struct SceneDiagram {
    int n = 0;
    Direction dir;
    std::vector<Crossing> crossings;
    std::vector<std::vector<EdgePassage>> edge_passages; // indexed by dense edge id
};

struct Violation {
    std::string kind;    // "coincident-points", "point-on-segment", "segment-intersection", ...
    std::string detail;  // exact witness description
};

struct ValidationVerdict {
    std::vector<Violation> violations;
    bool valid() const { return violations.empty(); }
};

/// Exhaustive exact check that the data describes a genuine embedding:
/// distinct points, no point interior to a segment, no two independent
/// segments meeting. Violations are data, not errors.
ValidationVerdict validate_embedding(const PLEmbedding& e);

/// Edge polylines of the embedding as oriented straight segments, in dense
/// edge order. The shared low-level view used by validation, projection and
/// the scene builder.
std::vector<SceneSegment> scene_segments(const PLEmbedding& e);

/// Nothing wrong, or the name + witness of the first genericity condition the
/// direction violates. Conditions, in test order:
///   "parallel-segment"            segment parallel to the direction
///   "coincident-projected-points" two vertices/bends project together
///   "point-on-segment"            a projected endpoint hits another segment
///   "degenerate-crossing"         non-transverse or endpoint contact
///   "coincident-crossings"        two crossings share a projected point
std::optional<Violation> genericity_failure(const PLEmbedding& e, const Direction& d);

/// First direction passing all genericity conditions from the fixed candidate
/// sequence (0,0,1), (1,t,t^2) for t = 1,2,...  `skip` passing candidates are
/// discarded first (used to obtain a second independent direction).
/// Throws NoGenericDirectionError after `budget` candidates.
Direction find_generic_direction(const PLEmbedding& e, int skip = 0, int budget = 64);

/// Exact crossing data of the whole scene under a generic direction.
/// Deterministic: crossings sorted by (over locator, under locator).
/// Throws GenericityError naming the condition if d is not generic for e.
SceneDiagram build_scene_diagram(const PLEmbedding& e, const Direction& d);

} // namespace slk
