#include "slk/diagram.hpp"

#include <algorithm>
#include <stdexcept>

#include "slk/errors.hpp"

namespace slk {

LinkDiagram extract_link_diagram(const SceneDiagram& scene, const std::vector<Cycle>& cycles) {
    if (cycles.empty() || cycles.size() > 2)
        throw std::invalid_argument("extract_link_diagram takes 1 or 2 cycles");
    if (cycles.size() == 2 && cycles[0].shares_vertex_with(cycles[1]))
        throw std::invalid_argument("cycles of a link diagram must be vertex-disjoint");

    const int n = scene.n;
    // Per selected edge: owning component and whether the cycle traverses it
    // against the stored min->max orientation.
    std::vector<int8_t> comp_of(edge_count(n), -1);
    std::vector<int8_t> reversed(edge_count(n), 0);
    for (std::size_t c = 0; c < cycles.size(); ++c) {
        for (auto [a, b] : cycles[c].directed_edges()) {
            int e = edge_index(n, a, b);
            comp_of[e] = static_cast<int8_t>(c);
            reversed[e] = static_cast<int8_t>(a > b);
        }
    }

    // Retained crossings keep their scene order.
    std::vector<int> local_id(scene.crossings.size(), -1);
    LinkDiagram ld;
    ld.components = cycles;
    for (std::size_t id = 0; id < scene.crossings.size(); ++id) {
        const Crossing& c = scene.crossings[id];
        if (comp_of[c.over.edge] < 0 || comp_of[c.under.edge] < 0) continue;
        local_id[id] = static_cast<int>(ld.crossings.size());
        int s = c.sign;
        if (reversed[c.over.edge]) s = -s;
        if (reversed[c.under.edge]) s = -s;
        ld.crossings.push_back(
            {s, comp_of[c.over.edge], comp_of[c.under.edge]});
    }

    ld.passages.resize(cycles.size());
    for (std::size_t c = 0; c < cycles.size(); ++c) {
        for (auto [a, b] : cycles[c].directed_edges()) {
            int e = edge_index(n, a, b);
            const auto& lst = scene.edge_passages[e];
            auto emit = [&](const EdgePassage& p) {
                if (local_id[p.crossing] < 0) return;
                int lid = local_id[p.crossing];
                ld.passages[c].push_back({lid, p.is_over, ld.crossings[lid].sign});
            };
            if (a < b) {
                for (const auto& p : lst) emit(p);
            } else {
                for (auto it = lst.rbegin(); it != lst.rend(); ++it) emit(*it);
            }
        }
    }
    return ld;
}

GaussDiagram gauss_diagram(const LinkDiagram& ld) {
    if (ld.components.size() != 1)
        throw std::invalid_argument("gauss_diagram needs a one-component diagram");
    const auto& seq = ld.passages[0];
    GaussDiagram gd;
    gd.crossings = ld.crossing_count();
    std::vector<int> first_seen(ld.crossing_count(), -1);
    gd.arrows.resize(ld.crossing_count());
    for (int pos = 0; pos < static_cast<int>(seq.size()); ++pos) {
        const Passage& p = seq[pos];
        if (first_seen[p.crossing] < 0) {
            first_seen[p.crossing] = pos;
            gd.arrows[p.crossing] = {pos, -1, p.over, p.sign};
        } else {
            gd.arrows[p.crossing].second_pos = pos;
        }
    }
    for (const auto& a : gd.arrows) {
        if (a.second_pos < 0)
            throw InternalInconsistencyError("crossing with a single passage in a knot diagram");
    }
    return gd;
}

GaussDiagram rotate_base(const GaussDiagram& gd, int shift) {
    const int m = 2 * gd.crossings;
    if (m == 0) return gd;
    shift = ((shift % m) + m) % m;
    GaussDiagram out;
    out.crossings = gd.crossings;
    for (const auto& a : gd.arrows) {
        int f = (a.first_pos - shift + m) % m;
        int s = (a.second_pos - shift + m) % m;
        if (f < s) {
            out.arrows.push_back({f, s, a.over_first, a.sign});
        } else {
            out.arrows.push_back({s, f, !a.over_first, a.sign});
        }
    }
    std::sort(out.arrows.begin(), out.arrows.end(),
              [](const GaussArrow& l, const GaussArrow& r) { return l.first_pos < r.first_pos; });
    return out;
}

} // namespace slk
