#include "slk/invariants.hpp"

#include <algorithm>
#include <stdexcept>

#include "slk/errors.hpp"

namespace slk {

int linking_number(const LinkDiagram& ld) {
    if (ld.components.size() != 2)
        throw std::invalid_argument("linking_number needs a two-component diagram");
    long long total = 0;
    for (const auto& c : ld.crossings) {
        if (c.over_comp != c.under_comp) total += c.sign;
    }
    if (total % 2 != 0)
        throw InternalInconsistencyError("odd signed inter-component crossing sum");
    return static_cast<int>(total / 2);
}

long long a2(const GaussDiagram& gd) {
    // Pairs of interleaved arrows where the crossing met first passes over
    // first and the other passes under first; summed with the product of
    // signs. The role pattern is the one that reproduces the Conway z^2
    // coefficient (see the oracle-agreement tests).
    const auto& arrows = gd.arrows;
    long long total = 0;
    for (std::size_t i = 0; i < arrows.size(); ++i) {
        for (std::size_t j = 0; j < arrows.size(); ++j) {
            if (i == j) continue;
            const GaussArrow& a = arrows[i];
            const GaussArrow& b = arrows[j];
            if (!(a.first_pos < b.first_pos && b.first_pos < a.second_pos &&
                  a.second_pos < b.second_pos))
                continue;
            if (a.over_first && !b.over_first) total += static_cast<long long>(a.sign) * b.sign;
        }
    }
    return total;
}

namespace {

using Poly = std::vector<long long>;

// dst += sign * z * src
void poly_add_shifted(Poly& dst, const Poly& src, int sign) {
    if (src.empty()) return;
    if (src.size() + 1 > dst.size()) dst.resize(src.size() + 1, 0);
    for (std::size_t i = 0; i < src.size(); ++i) dst[i + 1] += sign * src[i];
}

struct SkeinPassage {
    int crossing;
    bool over;
};

struct SkeinDiagram {
    std::vector<std::vector<SkeinPassage>> comps;
    std::vector<int> sign;

    std::size_t total_passages() const {
        std::size_t t = 0;
        for (const auto& c : comps) t += c.size();
        return t;
    }
};

// Remove kinks: crossings whose two passages are cyclically adjacent on one
// component. Strictly reduces the crossing count, repeats to a fixed point.
void prune_kinks(SkeinDiagram& d) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& comp : d.comps) {
            const std::size_t m = comp.size();
            if (m < 2) continue;
            for (std::size_t i = 0; i < m; ++i) {
                std::size_t j = (i + 1) % m;
                if (i != j && comp[i].crossing == comp[j].crossing) {
                    if (j > i) {
                        comp.erase(comp.begin() + j);
                        comp.erase(comp.begin() + i);
                    } else { // wrapped: j == 0, i == m-1
                        comp.erase(comp.begin() + i);
                        comp.erase(comp.begin());
                    }
                    changed = true;
                    break;
                }
            }
            if (changed) break;
        }
    }
}

struct PassageSite {
    int comp;
    int pos;
};

std::pair<PassageSite, PassageSite> find_sites(const SkeinDiagram& d, int crossing) {
    PassageSite sites[2];
    int found = 0;
    for (std::size_t c = 0; c < d.comps.size(); ++c) {
        for (std::size_t p = 0; p < d.comps[c].size(); ++p) {
            if (d.comps[c][p].crossing == crossing) {
                sites[found++] = {static_cast<int>(c), static_cast<int>(p)};
                if (found == 2) return {sites[0], sites[1]};
            }
        }
    }
    throw InternalInconsistencyError("crossing without two passages in skein diagram");
}

void switch_crossing(SkeinDiagram& d, int crossing) {
    auto [s1, s2] = find_sites(d, crossing);
    d.comps[s1.comp][s1.pos].over = !d.comps[s1.comp][s1.pos].over;
    d.comps[s2.comp][s2.pos].over = !d.comps[s2.comp][s2.pos].over;
    d.sign[crossing] = -d.sign[crossing];
}

// Oriented smoothing: merges two components or splits one in two. Empty
// components are kept; they still count for split detection.
void smooth_crossing(SkeinDiagram& d, int crossing) {
    auto [s1, s2] = find_sites(d, crossing);
    if (s1.comp == s2.comp) {
        auto& comp = d.comps[s1.comp];
        int i = s1.pos, j = s2.pos; // i < j by scan order
        std::vector<SkeinPassage> inner(comp.begin() + i + 1, comp.begin() + j);
        std::vector<SkeinPassage> outer;
        outer.insert(outer.end(), comp.begin() + j + 1, comp.end());
        outer.insert(outer.end(), comp.begin(), comp.begin() + i);
        comp = std::move(inner);
        d.comps.insert(d.comps.begin() + s1.comp + 1, std::move(outer));
    } else {
        auto& a = d.comps[s1.comp];
        auto& b = d.comps[s2.comp];
        std::vector<SkeinPassage> merged;
        merged.insert(merged.end(), a.begin(), a.begin() + s1.pos);
        merged.insert(merged.end(), b.begin() + s2.pos + 1, b.end());
        merged.insert(merged.end(), b.begin(), b.begin() + s2.pos);
        merged.insert(merged.end(), a.begin() + s1.pos + 1, a.end());
        a = std::move(merged);
        d.comps.erase(d.comps.begin() + s2.comp); // s2.comp > s1.comp by scan order
    }
}

// First crossing met on its under strand before its over strand, scanning
// components in order from their basepoints. A diagram without one is
// descending: a stack of unknots, so an unknot or a split link.
int first_deviation(const SkeinDiagram& d) {
    std::vector<char> seen(d.sign.size(), 0);
    for (const auto& comp : d.comps) {
        for (const auto& p : comp) {
            if (seen[p.crossing]) continue;
            seen[p.crossing] = 1;
            if (!p.over) return p.crossing;
        }
    }
    return -1;
}

Poly conway_eval(SkeinDiagram d) {
    prune_kinks(d);
    if (d.total_passages() == 0) return d.comps.size() == 1 ? Poly{1} : Poly{};
    int c = first_deviation(d);
    if (c < 0) return d.comps.size() == 1 ? Poly{1} : Poly{};
    int eps = d.sign[c];
    SkeinDiagram smoothed = d;
    switch_crossing(d, c);
    smooth_crossing(smoothed, c);
    Poly result = conway_eval(std::move(d));
    Poly zpart = conway_eval(std::move(smoothed));
    poly_add_shifted(result, zpart, eps);
    return result;
}

} // namespace

std::optional<ConwayPolynomial> conway_skein_oracle(const LinkDiagram& ld, int crossing_cutoff) {
    if (ld.crossing_count() > crossing_cutoff) return std::nullopt;
    SkeinDiagram d;
    d.sign.resize(ld.crossing_count());
    for (int i = 0; i < ld.crossing_count(); ++i) d.sign[i] = ld.crossings[i].sign;
    for (const auto& comp : ld.passages) {
        std::vector<SkeinPassage> c;
        c.reserve(comp.size());
        for (const auto& p : comp) c.push_back({p.crossing, p.over});
        d.comps.push_back(std::move(c));
    }
    Poly p = conway_eval(std::move(d));
    while (!p.empty() && p.back() == 0) p.pop_back();
    return ConwayPolynomial{std::move(p)};
}

int triangle_disk_lk_oracle(const PLEmbedding& e, const CyclePair& pair) {
    if (pair.first.length() != 3 || pair.second.length() != 3)
        throw std::invalid_argument("triangle-disk oracle needs two 3-cycles");
    if (pair.first.shares_vertex_with(pair.second))
        throw std::invalid_argument("triangle-disk oracle needs disjoint cycles");
    for (const Cycle* c : {&pair.first, &pair.second}) {
        for (auto [a, b] : c->directed_edges()) {
            auto key = std::minmax(a, b);
            auto it = e.bends.find({key.first, key.second});
            if (it != e.bends.end() && !it->second.empty())
                throw std::invalid_argument("triangle-disk oracle needs straight edges");
        }
    }

    const Point3& a1 = e.position(pair.first.verts[0]);
    const Point3& a2 = e.position(pair.first.verts[1]);
    const Point3& a3 = e.position(pair.first.verts[2]);
    Vec3 normal = cross(a2 - a1, a3 - a1);

    int lk = 0;
    for (auto [u, w] : pair.second.directed_edges()) {
        const Point3& pu = e.position(u);
        const Point3& pw = e.position(w);
        Rational d1 = dot(normal, pu - a1);
        Rational d2 = dot(normal, pw - a1);
        int s1 = sgn(d1), s2 = sgn(d2);
        if (s1 == 0 && s2 == 0)
            throw DegenerateContactError("segment lies in the plane of the disk");
        if (s1 == 0 || s2 == 0) {
            // Endpoint exactly on the plane: degenerate only if it touches the disk.
            const Point3& p = (s1 == 0) ? pu : pw;
            int b1 = sgn(dot(cross(a2 - a1, p - a1), normal));
            int b2 = sgn(dot(cross(a3 - a2, p - a2), normal));
            int b3 = sgn(dot(cross(a1 - a3, p - a3), normal));
            if (b1 >= 0 && b2 >= 0 && b3 >= 0)
                throw DegenerateContactError("segment endpoint on the disk");
            continue;
        }
        if (s1 * s2 > 0) continue;
        Rational t = d1 / (d1 - d2);
        Point3 p = pu + t * (pw - pu);
        int b1 = sgn(dot(cross(a2 - a1, p - a1), normal));
        int b2 = sgn(dot(cross(a3 - a2, p - a2), normal));
        int b3 = sgn(dot(cross(a1 - a3, p - a3), normal));
        if (b1 > 0 && b2 > 0 && b3 > 0) {
            lk += (s1 < 0) ? 1 : -1; // negative-to-positive side follows the disk normal
        } else if (b1 == 0 || b2 == 0 || b3 == 0) {
            // On the boundary line: degenerate only if actually on the triangle rim.
            if ((b1 >= 0 && b2 >= 0 && b3 >= 0))
                throw DegenerateContactError("segment passes through the disk boundary");
        }
    }
    return lk;
}

} // namespace slk
