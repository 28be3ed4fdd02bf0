#pragma once

#include <vector>

#include "slk/cycles.hpp"
#include "slk/geometry.hpp"

namespace slk {

/// One traversal of a component through a crossing. The sign is the crossing
/// sign relative to the traversal orientations of the two strands in this
/// diagram (edge reversals folded in).
struct Passage {
    int crossing = 0; // diagram-local crossing id
    bool over = false;
    int sign = 0;
};

/// Crossing bookkeeping local to a restricted diagram.
struct DiagramCrossing {
    int sign = 0;       // relative to component traversal orientations
    int over_comp = 0;  // component carrying the over strand
    int under_comp = 0;
};

/// A scene restricted to one or two cycles: the knot or link diagram of the
/// constituent knot/link. Passages follow each cycle from its canonical start
/// in its canonical direction. Self-crossings of a component are retained.
struct LinkDiagram {
    std::vector<Cycle> components; // 1 or 2
    std::vector<std::vector<Passage>> passages;
    std::vector<DiagramCrossing> crossings;

    int crossing_count() const { return static_cast<int>(crossings.size()); }
};

/// Based chord diagram of a knot component: each crossing becomes an arrow
/// pairing its two passage positions (0-based from the basepoint).
struct GaussArrow {
    int first_pos = 0;
    int second_pos = 0;
    bool over_first = false; // role of the passage met first
    int sign = 0;
};

struct GaussDiagram {
    int crossings = 0; // positions run 0 .. 2*crossings-1
    std::vector<GaussArrow> arrows;
};

/// Restrict the scene to the given cycles. Exactly the crossings with both
/// strands on selected cycles are kept, renumbered deterministically.
/// Throws std::invalid_argument if two cycles overlap or the count is not 1 or 2.
LinkDiagram extract_link_diagram(const SceneDiagram& scene, const std::vector<Cycle>& cycles);

/// Gauss diagram of a one-component LinkDiagram, based at the passage
/// following the canonical cycle start. Throws std::invalid_argument on
/// two-component input.
GaussDiagram gauss_diagram(const LinkDiagram& ld);

/// The same diagram based `shift` passages later. Used to test basepoint
/// independence of downstream invariants.
GaussDiagram rotate_base(const GaussDiagram& gd, int shift);

} // namespace slk
