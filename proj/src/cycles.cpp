#include "slk/cycles.hpp"

#include <algorithm>
#include <sstream>

#include "slk/errors.hpp"
#include "slk/numeric.hpp"

namespace slk {

std::vector<std::pair<VertexId, VertexId>> Cycle::directed_edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) {
        out.emplace_back(verts[i], verts[(i + 1) % verts.size()]);
    }
    return out;
}

bool Cycle::shares_vertex_with(const Cycle& other) const {
    for (VertexId v : verts) {
        if (std::find(other.verts.begin(), other.verts.end(), v) != other.verts.end())
            return true;
    }
    return false;
}

std::string Cycle::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (i) os << ' ';
        os << verts[i];
    }
    os << ']';
    return os.str();
}

std::string CyclePair::to_string() const { return first.to_string() + "|" + second.to_string(); }

unsigned long long cycle_class_size(int n, int p) {
    if (p < 3 || p > n) throw InvalidClassError("cycle class requires 3 <= p <= n");
    unsigned long long r = static_cast<unsigned long long>(binomial64(n, p));
    return r * static_cast<unsigned long long>(factorial64(p - 1)) / 2;
}

unsigned long long pair_class_size(int n, int p, int q) {
    if (p < 3 || q < 3 || p + q > n) throw InvalidClassError("pair class requires p,q >= 3 and p+q <= n");
    unsigned long long a = cycle_class_size(n, p);
    unsigned long long b = cycle_class_size(n - p, q); // disjoint complement
    unsigned long long total = a * b;
    return (p == q) ? total / 2 : total;
}

CycleClassCounts class_counts(int n, int p, int q) {
    CycleClassCounts c;
    c.n = n;
    c.p = p;
    c.q = q;
    c.cycle_count = cycle_class_size(n, p);
    c.pair_count = (q == 0) ? 0 : pair_class_size(n, p, q);
    return c;
}

Cycle canonicalize(std::span<const VertexId> raw) {
    const int p = static_cast<int>(raw.size());
    if (p < 3) throw MalformedCycleError("cycle needs at least 3 vertices");
    for (int i = 0; i < p; ++i) {
        if (raw[i] < 1) throw MalformedCycleError("vertex ids must be positive");
        for (int j = i + 1; j < p; ++j) {
            if (raw[i] == raw[j]) throw MalformedCycleError("repeated vertex in cycle");
        }
    }
    int min_pos = 0;
    for (int i = 1; i < p; ++i) {
        if (raw[i] < raw[min_pos]) min_pos = i;
    }
    Cycle c;
    c.verts.resize(p);
    // Two neighbors of the minimum; walk toward the smaller one.
    VertexId fwd = raw[(min_pos + 1) % p];
    VertexId bwd = raw[(min_pos + p - 1) % p];
    const int step = (fwd < bwd) ? 1 : -1;
    for (int i = 0; i < p; ++i) {
        c.verts[i] = raw[((min_pos + step * i) % p + p) % p];
    }
    return c;
}

namespace {

// DFS over canonical sequences directly: position 0 carries the minimum, every
// later vertex exceeds it, and the last vertex exceeds the second. Choosing
// candidates in ascending order yields global lexicographic output.
struct CycleDfs {
    int n, p;
    std::vector<VertexId> seq;
    std::vector<char> used; // 1-based
    const std::function<void(std::span<const VertexId>)>* fn;
    VertexId lo = 1; // candidates restricted to (lo, n] after position 0

    void run() {
        seq.resize(p);
        for (VertexId first = lo; first + p - 1 <= n; ++first) {
            if (used[first]) continue;
            seq[0] = first;
            used[first] = 1;
            extend(1);
            used[first] = 0;
        }
    }

    void extend(int k) {
        if (k == p) {
            (*fn)(std::span<const VertexId>(seq.data(), seq.size()));
            return;
        }
        const bool last = (k == p - 1);
        for (VertexId v = seq[0] + 1; v <= n; ++v) {
            if (used[v]) continue;
            if (last && v < seq[1]) continue; // reflection representative
            seq[k] = v;
            used[v] = 1;
            extend(k + 1);
            used[v] = 0;
        }
    }
};

} // namespace

void for_each_cycle(int n, int p, const std::function<void(std::span<const VertexId>)>& fn) {
    if (p < 3 || p > n) throw InvalidClassError("cycle class requires 3 <= p <= n");
    CycleDfs dfs;
    dfs.n = n;
    dfs.p = p;
    dfs.used.assign(n + 1, 0);
    dfs.fn = &fn;
    dfs.run();
}

void for_each_disjoint_pair(
    int n, int p, int q,
    const std::function<void(std::span<const VertexId>, std::span<const VertexId>)>& fn) {
    if (p < 3 || q < 3) throw InvalidClassError("pair class requires p,q >= 3");
    if (p > q) throw InvalidClassError("pair class must be normalized: p <= q");
    if (p + q > n) throw InvalidClassError("pair class requires p + q <= n");

    CycleDfs outer;
    outer.n = n;
    outer.p = p;
    outer.used.assign(n + 1, 0);
    std::function<void(std::span<const VertexId>)> outer_fn =
        [&](std::span<const VertexId> a) {
            CycleDfs inner;
            inner.n = n;
            inner.p = q;
            inner.used = outer.used; // vertices of the first cycle are taken
            // For equal lengths the first cycle holds the overall minimum, so
            // the second draws from vertices above it; each unordered pair
            // then shows up exactly once.
            inner.lo = (p == q) ? a[0] + 1 : 1;
            std::function<void(std::span<const VertexId>)> inner_fn =
                [&](std::span<const VertexId> b) { fn(a, b); };
            inner.fn = &inner_fn;
            inner.run();
        };
    outer.fn = &outer_fn;
    outer.run();
}

std::vector<Cycle> enumerate_cycles(int n, int p) {
    std::vector<Cycle> out;
    for_each_cycle(n, p, [&](std::span<const VertexId> s) {
        out.push_back(Cycle{std::vector<VertexId>(s.begin(), s.end())});
    });
    return out;
}

std::vector<CyclePair> enumerate_disjoint_pairs(int n, int p, int q) {
    std::vector<CyclePair> out;
    for_each_disjoint_pair(n, p, q,
                           [&](std::span<const VertexId> a, std::span<const VertexId> b) {
                               out.push_back(CyclePair{
                                   Cycle{std::vector<VertexId>(a.begin(), a.end())},
                                   Cycle{std::vector<VertexId>(b.begin(), b.end())}});
                           });
    return out;
}

int edge_index(int n, VertexId a, VertexId b) {
    if (a > b) std::swap(a, b);
    // edges (a,*) with * > a start after all edges with smaller first vertex
    return (a - 1) * n - (a * (a - 1)) / 2 + (b - a - 1);
}

int edge_count(int n) { return n * (n - 1) / 2; }

} // namespace slk
