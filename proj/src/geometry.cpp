#include "slk/geometry.hpp"

#include <algorithm>
#include <sstream>

#include "slk/errors.hpp"

namespace slk {

namespace {

std::string rat_str(const Rational& q) { return q.get_str(); }

std::string point_str(const Point3& p) {
    return "(" + rat_str(p.x) + ", " + rat_str(p.y) + ", " + rat_str(p.z) + ")";
}

std::pair<int, int> edge_verts_from_index(int n, int idx) {
    for (int a = 1; a < n; ++a) {
        int row = n - a;
        if (idx < row) return {a, a + idx + 1};
        idx -= row;
    }
    throw std::out_of_range("edge index out of range");
}

std::string edge_str(int n, int edge) {
    auto [a, b] = edge_verts_from_index(n, edge);
    std::ostringstream os;
    os << a << "-" << b;
    return os.str();
}

// P on the closed segment [A,B], all collinearity handled exactly.
bool on_segment_3d(const Point3& p, const Point3& a, const Point3& b) {
    Vec3 u = b - a;
    Vec3 w = p - a;
    if (!cross(u, w).is_zero()) return false;
    Rational t = dot(w, u);
    return sgn(t) >= 0 && t <= dot(u, u);
}

struct SegmentHit {
    bool hit = false;
    std::string how;
};

// Exact intersection test for 3D segments that share no endpoint.
SegmentHit segments_intersect_3d(const Point3& a1, const Point3& b1, const Point3& a2,
                                 const Point3& b2) {
    Vec3 u = b1 - a1, v = b2 - a2, w = a2 - a1;
    Vec3 n = cross(u, v);
    if (!n.is_zero()) {
        if (sgn(dot(w, n)) != 0) return {}; // skew lines
        Rational den = dot(n, n);
        Rational s = dot(cross(w, v), n) / den;
        Rational t = dot(cross(w, u), n) / den;
        if (sgn(s) >= 0 && s <= 1 && sgn(t) >= 0 && t <= 1) {
            return {true, "transversal at parameters " + rat_str(s) + ", " + rat_str(t)};
        }
        return {};
    }
    // Parallel. Distinct lines cannot meet.
    if (!cross(w, u).is_zero()) return {};
    // Collinear: compare 1D parameter intervals along u.
    Rational len2 = dot(u, u);
    Rational t0 = dot(w, u) / len2;
    Rational t1 = dot(b2 - a1, u) / len2;
    if (t0 > t1) std::swap(t0, t1);
    if (t1 < 0 || t0 > 1) return {};
    return {true, "collinear overlap"};
}

struct Frame {
    Vec3 u, v, d; // (u, v, d) positively oriented; u, v span the image plane
};

Frame make_frame(const Direction& dir) {
    const Vec3& d = dir.v;
    if (d.is_zero()) throw std::invalid_argument("zero projection direction");
    Vec3 ex{Rational(1), Rational(0), Rational(0)};
    Vec3 ey{Rational(0), Rational(1), Rational(0)};
    Vec3 ez{Rational(0), Rational(0), Rational(1)};
    Vec3 u = cross(d, ex);
    if (u.is_zero()) u = cross(d, ey);
    if (u.is_zero()) u = cross(d, ez);
    return {u, cross(d, u), d};
}

struct P2 {
    Rational x, y;
    bool operator==(const P2& o) const { return x == o.x && y == o.y; }
};

bool p2_less(const P2& a, const P2& b) {
    int c = cmp(a.x, b.x);
    if (c != 0) return c < 0;
    return a.y < b.y;
}

P2 project(const Frame& f, const Point3& p) { return {dot(f.u, p), dot(f.v, p)}; }

Rational cross2(const P2& a, const P2& b) { return a.x * b.y - a.y * b.x; }

P2 sub2(const P2& a, const P2& b) { return {a.x - b.x, a.y - b.y}; }

int orient2(const P2& a, const P2& b, const P2& c) { return sgn(cross2(sub2(b, a), sub2(c, a))); }

bool on_segment_2d(const P2& p, const P2& a, const P2& b) {
    P2 u = sub2(b, a), w = sub2(p, a);
    if (sgn(cross2(u, w)) != 0) return false;
    Rational t = u.x * w.x + u.y * w.y;
    return sgn(t) >= 0 && t <= u.x * u.x + u.y * u.y;
}

struct NamedPoint {
    Point3 pos;
    std::string label;
};

std::vector<NamedPoint> embedding_points(const PLEmbedding& e) {
    std::vector<NamedPoint> pts;
    for (int v = 1; v <= e.n; ++v) {
        pts.push_back({e.position(v), "vertex " + std::to_string(v)});
    }
    for (const auto& [key, bend_list] : e.bends) {
        for (std::size_t k = 0; k < bend_list.size(); ++k) {
            pts.push_back({bend_list[k], "bend " + std::to_string(k + 1) + " of edge " +
                                             std::to_string(key.first) + "-" +
                                             std::to_string(key.second)});
        }
    }
    return pts;
}

void require_structure(const PLEmbedding& e) {
    if (e.n < 1 || static_cast<int>(e.vertex_positions.size()) != e.n)
        throw std::invalid_argument("embedding must carry positions for all n vertices");
    for (const auto& [key, bend_list] : e.bends) {
        (void)bend_list;
        if (key.first < 1 || key.second <= key.first || key.second > e.n)
            throw std::invalid_argument("bend key is not an edge (i,j) with i < j <= n");
    }
}

// Full scene construction; stops at the first genericity failure.
struct SceneBuild {
    std::optional<Violation> failure;
    SceneDiagram scene;
};

struct RawCrossing {
    int seg_a, seg_b; // indices into the segment soup, a < b
    Rational pa, pb;  // parameters along each segment
    P2 point;
};

SceneBuild build_internal(const PLEmbedding& e, const Direction& d) {
    require_structure(e);
    SceneBuild out;
    Frame frame = make_frame(d);

    std::vector<SceneSegment> segs = scene_segments(e);
    std::vector<P2> seg_a(segs.size()), seg_b(segs.size());
    for (std::size_t i = 0; i < segs.size(); ++i) {
        seg_a[i] = project(frame, segs[i].a);
        seg_b[i] = project(frame, segs[i].b);
    }

    // (a) no segment parallel to the direction
    for (std::size_t i = 0; i < segs.size(); ++i) {
        if (seg_a[i] == seg_b[i]) {
            out.failure = Violation{"parallel-segment",
                                    "edge " + edge_str(e.n, segs[i].edge) + " segment " +
                                        std::to_string(segs[i].seg_index) +
                                        " projects to a point"};
            return out;
        }
    }

    // (b) projected vertices/bends pairwise distinct
    auto pts = embedding_points(e);
    std::vector<std::pair<P2, const NamedPoint*>> proj_pts;
    proj_pts.reserve(pts.size());
    for (const auto& np : pts) proj_pts.emplace_back(project(frame, np.pos), &np);
    std::sort(proj_pts.begin(), proj_pts.end(),
              [](const auto& l, const auto& r) { return p2_less(l.first, r.first); });
    for (std::size_t i = 1; i < proj_pts.size(); ++i) {
        if (proj_pts[i].first == proj_pts[i - 1].first) {
            out.failure = Violation{"coincident-projected-points",
                                    proj_pts[i - 1].second->label + " and " +
                                        proj_pts[i].second->label};
            return out;
        }
    }

    // (c) no projected endpoint on another projected segment
    for (const auto& np : pts) {
        P2 p = project(frame, np.pos);
        for (std::size_t i = 0; i < segs.size(); ++i) {
            if (np.pos == segs[i].a || np.pos == segs[i].b) continue;
            if (on_segment_2d(p, seg_a[i], seg_b[i])) {
                out.failure = Violation{"point-on-segment",
                                        np.label + " projects onto edge " +
                                            edge_str(e.n, segs[i].edge) + " segment " +
                                            std::to_string(segs[i].seg_index)};
                return out;
            }
        }
    }

    // (d)+(e) pairwise crossings: transversal, interior, and pairwise distinct.
    // With (c) holding, an orientation-test zero can only occur off-segment,
    // so proper crossings are exactly the sign-alternation cases.
    std::vector<RawCrossing> raw;
    for (std::size_t i = 0; i < segs.size(); ++i) {
        for (std::size_t j = i + 1; j < segs.size(); ++j) {
            if (segs[i].a == segs[j].a || segs[i].a == segs[j].b || segs[i].b == segs[j].a ||
                segs[i].b == segs[j].b)
                continue; // polyline/vertex-adjacent segments meet only at the shared point
            int o1 = orient2(seg_a[i], seg_b[i], seg_a[j]);
            int o2 = orient2(seg_a[i], seg_b[i], seg_b[j]);
            if (o1 * o2 >= 0) continue;
            int o3 = orient2(seg_a[j], seg_b[j], seg_a[i]);
            int o4 = orient2(seg_a[j], seg_b[j], seg_b[i]);
            if (o3 * o4 >= 0) continue;
            P2 u = sub2(seg_b[i], seg_a[i]);
            P2 v = sub2(seg_b[j], seg_a[j]);
            P2 w = sub2(seg_a[j], seg_a[i]);
            Rational den = cross2(u, v);
            Rational s = cross2(w, v) / den;
            Rational t = cross2(w, u) / den;
            P2 at{seg_a[i].x + s * u.x, seg_a[i].y + s * u.y};
            raw.push_back({static_cast<int>(i), static_cast<int>(j), s, t, at});
        }
    }
    {
        std::vector<const RawCrossing*> by_point;
        by_point.reserve(raw.size());
        for (const auto& rc : raw) by_point.push_back(&rc);
        std::sort(by_point.begin(), by_point.end(),
                  [](const RawCrossing* l, const RawCrossing* r) { return p2_less(l->point, r->point); });
        for (std::size_t i = 1; i < by_point.size(); ++i) {
            if (by_point[i]->point == by_point[i - 1]->point) {
                const auto& l = *by_point[i - 1];
                const auto& r = *by_point[i];
                out.failure = Violation{
                    "coincident-crossings",
                    "crossings of segment pairs (" + std::to_string(l.seg_a) + "," +
                        std::to_string(l.seg_b) + ") and (" + std::to_string(r.seg_a) + "," +
                        std::to_string(r.seg_b) + ") share a projected point"};
                return out;
            }
        }
    }

    // Assemble: decide over/under by exact height along d, sign by the 2D frame.
    SceneDiagram& scene = out.scene;
    scene.n = e.n;
    scene.dir = d;
    scene.edge_passages.assign(edge_count(e.n), {});
    for (const auto& rc : raw) {
        const SceneSegment& sa = segs[rc.seg_a];
        const SceneSegment& sb = segs[rc.seg_b];
        Rational ha = dot(d.v, sa.a) + rc.pa * dot(d.v, sa.b - sa.a);
        Rational hb = dot(d.v, sb.a) + rc.pb * dot(d.v, sb.b - sb.a);
        int hc = cmp(ha, hb);
        if (hc == 0)
            throw InternalInconsistencyError(
                "projected crossing with equal heights: segments intersect in space");
        const SceneSegment& over_seg = hc > 0 ? sa : sb;
        const SceneSegment& under_seg = hc > 0 ? sb : sa;
        const Rational& over_par = hc > 0 ? rc.pa : rc.pb;
        const Rational& under_par = hc > 0 ? rc.pb : rc.pa;
        P2 over_dir = sub2(project(frame, over_seg.b), project(frame, over_seg.a));
        P2 under_dir = sub2(project(frame, under_seg.b), project(frame, under_seg.a));
        Crossing c;
        c.over = {over_seg.edge, over_seg.seg_index, over_par};
        c.under = {under_seg.edge, under_seg.seg_index, under_par};
        c.sign = sgn(cross2(over_dir, under_dir));
        scene.crossings.push_back(std::move(c));
    }
    auto loc_less = [](const CrossingLocator& l, const CrossingLocator& r) {
        if (l.edge != r.edge) return l.edge < r.edge;
        if (l.seg_index != r.seg_index) return l.seg_index < r.seg_index;
        return l.param < r.param;
    };
    std::sort(scene.crossings.begin(), scene.crossings.end(),
              [&](const Crossing& l, const Crossing& r) {
                  if (l.over.edge != r.over.edge || l.over.seg_index != r.over.seg_index ||
                      l.over.param != r.over.param)
                      return loc_less(l.over, r.over);
                  return loc_less(l.under, r.under);
              });
    for (std::size_t id = 0; id < scene.crossings.size(); ++id) {
        const Crossing& c = scene.crossings[id];
        scene.edge_passages[c.over.edge].push_back({static_cast<int>(id), true});
        scene.edge_passages[c.under.edge].push_back({static_cast<int>(id), false});
    }
    for (std::size_t eidx = 0; eidx < scene.edge_passages.size(); ++eidx) {
        auto& lst = scene.edge_passages[eidx];
        std::sort(lst.begin(), lst.end(), [&](const EdgePassage& l, const EdgePassage& r) {
            const CrossingLocator& ll =
                l.is_over ? scene.crossings[l.crossing].over : scene.crossings[l.crossing].under;
            const CrossingLocator& rl =
                r.is_over ? scene.crossings[r.crossing].over : scene.crossings[r.crossing].under;
            return loc_less(ll, rl);
        });
    }
    return out;
}

} // namespace

std::string Direction::to_string() const {
    return "(" + rat_str(v.x) + ", " + rat_str(v.y) + ", " + rat_str(v.z) + ")";
}

std::vector<SceneSegment> scene_segments(const PLEmbedding& e) {
    require_structure(e);
    std::vector<SceneSegment> segs;
    for (int i = 1; i <= e.n; ++i) {
        for (int j = i + 1; j <= e.n; ++j) {
            int idx = edge_index(e.n, i, j);
            std::vector<Point3> chain;
            chain.push_back(e.position(i));
            auto it = e.bends.find({i, j});
            if (it != e.bends.end())
                chain.insert(chain.end(), it->second.begin(), it->second.end());
            chain.push_back(e.position(j));
            for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
                segs.push_back({idx, static_cast<int>(k), chain[k], chain[k + 1]});
            }
        }
    }
    return segs;
}

ValidationVerdict validate_embedding(const PLEmbedding& e) {
    require_structure(e);
    ValidationVerdict verdict;
    auto add = [&](std::string kind, std::string detail) {
        verdict.violations.push_back({std::move(kind), std::move(detail)});
    };

    auto pts = embedding_points(e);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (pts[i].pos == pts[j].pos)
                add("coincident-points",
                    pts[i].label + " and " + pts[j].label + " at " + point_str(pts[i].pos));
        }
    }

    auto segs = scene_segments(e);
    for (const auto& s : segs) {
        if (s.a == s.b)
            add("degenerate-segment", "edge " + edge_str(e.n, s.edge) + " segment " +
                                          std::to_string(s.seg_index) + " has zero length");
    }

    for (const auto& np : pts) {
        for (const auto& s : segs) {
            if (np.pos == s.a || np.pos == s.b) continue;
            if (s.a == s.b) continue;
            if (on_segment_3d(np.pos, s.a, s.b))
                add("point-on-segment", np.label + " lies on edge " + edge_str(e.n, s.edge) +
                                            " segment " + std::to_string(s.seg_index));
        }
    }

    for (std::size_t i = 0; i < segs.size(); ++i) {
        for (std::size_t j = i + 1; j < segs.size(); ++j) {
            const auto& s = segs[i];
            const auto& t = segs[j];
            if (s.a == t.a || s.a == t.b || s.b == t.a || s.b == t.b) continue;
            if (s.a == s.b || t.a == t.b) continue;
            SegmentHit hit = segments_intersect_3d(s.a, s.b, t.a, t.b);
            if (hit.hit)
                add("segment-intersection",
                    "edge " + edge_str(e.n, s.edge) + " segment " + std::to_string(s.seg_index) +
                        " meets edge " + edge_str(e.n, t.edge) + " segment " +
                        std::to_string(t.seg_index) + " (" + hit.how + ")");
        }
    }
    return verdict;
}

std::optional<Violation> genericity_failure(const PLEmbedding& e, const Direction& d) {
    return build_internal(e, d).failure;
}

Direction find_generic_direction(const PLEmbedding& e, int skip, int budget) {
    std::optional<Violation> last;
    int passed = 0;
    for (int k = 0; k < budget; ++k) {
        Direction cand;
        if (k == 0) {
            cand.v = Vec3{Rational(0), Rational(0), Rational(1)};
        } else {
            Rational t(k);
            cand.v = Vec3{Rational(1), t, t * t};
        }
        auto fail = genericity_failure(e, cand);
        if (!fail) {
            if (passed == skip) return cand;
            ++passed;
            continue;
        }
        last = fail;
    }
    std::string why = last ? (" (last candidate failed " + last->kind + ": " + last->detail + ")")
                           : " (all candidates were skipped)";
    throw NoGenericDirectionError("no generic direction within candidate budget" + why);
}

SceneDiagram build_scene_diagram(const PLEmbedding& e, const Direction& d) {
    SceneBuild b = build_internal(e, d);
    if (b.failure) throw GenericityError(b.failure->kind, b.failure->detail);
    return std::move(b.scene);
}

} // namespace slk
