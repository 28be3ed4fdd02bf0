#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace slk {

/// Vertices of K_n are 1..n.
using VertexId = int;

/// A cycle of K_n in canonical form: the minimum vertex comes first, and the
/// second entry is the smaller of the two neighbors of the minimum. This fixes
/// both the rotation and the reflection, so equality of cycles is plain
/// sequence equality.
struct Cycle {
    std::vector<VertexId> verts;

    int length() const { return static_cast<int>(verts.size()); }

    auto operator<=>(const Cycle&) const = default;
    bool operator==(const Cycle&) const = default;

    /// Directed edges following the stored orientation, closing back to the start.
    std::vector<std::pair<VertexId, VertexId>> directed_edges() const;

    bool shares_vertex_with(const Cycle& other) const;

    std::string to_string() const; // "[1 2 3]"
};

/// Unordered pair of vertex-disjoint cycles, normalized so the shorter cycle
/// comes first, ties broken lexicographically.
struct CyclePair {
    Cycle first, second;

    auto operator<=>(const CyclePair&) const = default;
    bool operator==(const CyclePair&) const = default;

    std::string to_string() const; // "[1 2 3]|[4 5 6]"
};

/// Closed-form sizes of the cycle classes, used as enumeration self-checks.
struct CycleClassCounts {
    int n = 0, p = 0, q = 0; // q == 0 for a knot class
    unsigned long long cycle_count = 0;
    unsigned long long pair_count = 0;
};

/// C(n,p) * (p-1)!/2
unsigned long long cycle_class_size(int n, int p);
/// Number of unordered disjoint (p,q) cycle pairs of K_n. For Hamiltonian
/// classes (p + q == n) this reduces to n!/(8p^2) when p == q and n!/(4pq)
/// when p != q.
unsigned long long pair_class_size(int n, int p, int q);
CycleClassCounts class_counts(int n, int p, int q = 0);

/// Canonical form of a closed walk given as a vertex sequence. Idempotent and
/// invariant under rotation and reflection of the input.
/// Throws MalformedCycleError on repeats or fewer than three vertices.
Cycle canonicalize(std::span<const VertexId> raw);

/// Visit every canonical p-cycle of K_n exactly once, in lexicographic order
/// of the canonical sequences. Throws InvalidClassError unless 3 <= p <= n.
void for_each_cycle(int n, int p, const std::function<void(std::span<const VertexId>)>& fn);

/// Visit every normalized disjoint (p,q) pair exactly once, ordered by
/// (first, second) lexicographically. Requires p <= q (callers pass the
/// normalized class). Throws InvalidClassError unless 3 <= p <= q, p + q <= n.
void for_each_disjoint_pair(
    int n, int p, int q,
    const std::function<void(std::span<const VertexId>, std::span<const VertexId>)>& fn);

std::vector<Cycle> enumerate_cycles(int n, int p);
std::vector<CyclePair> enumerate_disjoint_pairs(int n, int p, int q);

/// Dense index of the undirected edge {a,b} of K_n, 0-based, ordered
/// (1,2),(1,3),...,(1,n),(2,3),...
int edge_index(int n, VertexId a, VertexId b);
int edge_count(int n);

} // namespace slk
