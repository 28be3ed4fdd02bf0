#pragma once

#include <optional>
#include <vector>

#include "slk/diagram.hpp"
#include "slk/geometry.hpp"

namespace slk {

/// Conway polynomial with integer coefficients; coeffs[k] multiplies z^k.
struct ConwayPolynomial {
    std::vector<long long> coeffs;

    long long coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(coeffs.size())) ? coeffs[k] : 0;
    }
    bool operator==(const ConwayPolynomial&) const = default;
};

/// Half the signed sum over inter-component crossings; self-crossings ignored.
/// Throws on one-component input. An odd signed sum is impossible for a real
/// diagram and raises InternalInconsistencyError.
int linking_number(const LinkDiagram& ld);

/// Second Conway coefficient of the knot behind a based Gauss diagram,
/// via the degree-2 interleaved-arrow count. Calibrated so that the unknot
/// gives 0 and both trefoils give 1 (checked against the skein oracle).
long long a2(const GaussDiagram& gd);

/// Conway polynomial by full skein resolution, usable as an independent
/// cross-check for small diagrams. Returns nullopt (never fails the caller)
/// when the diagram exceeds `crossing_cutoff`.
std::optional<ConwayPolynomial> conway_skein_oracle(const LinkDiagram& ld,
                                                    int crossing_cutoff = 14);

/// Linking number of two straight-edge triangles as the signed count of
/// passages of the second triangle through the flat disk spanned by the
/// first. Fully independent of the projection pipeline.
/// Throws DegenerateContactError on non-transverse contact and
/// std::invalid_argument unless both cycles are bend-free triangles.
int triangle_disk_lk_oracle(const PLEmbedding& e, const CyclePair& pair);

} // namespace slk
