#include "slk/aggregate.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <stdexcept>

#include "slk/errors.hpp"
#include "slk/invariants.hpp"
#include "slk/numeric.hpp"
#include "slk/parallel.hpp"

namespace slk {

std::string statistic_name(Statistic s) {
    switch (s) {
        case Statistic::SumLk: return "lk";
        case Statistic::SumLk2: return "lk2";
        case Statistic::MaxAbsLk: return "maxlk";
        case Statistic::SumA2: return "a2";
    }
    return "?";
}

std::optional<Statistic> statistic_from_name(const std::string& name) {
    if (name == "lk") return Statistic::SumLk;
    if (name == "lk2") return Statistic::SumLk2;
    if (name == "maxlk") return Statistic::MaxAbsLk;
    if (name == "a2") return Statistic::SumA2;
    return std::nullopt;
}

std::string status_name(VerificationReport::Status s) {
    switch (s) {
        case VerificationReport::Status::Holds: return "holds";
        case VerificationReport::Status::Violated: return "violated";
        case VerificationReport::Status::Skipped: return "skipped";
    }
    return "?";
}

VerificationReport make_identity_report(std::string claim_id, int n, int p, int q,
                                        std::string statistic, long long lhs, long long rhs) {
    VerificationReport r;
    r.claim_id = std::move(claim_id);
    r.n = n;
    r.p = p;
    r.q = q;
    r.statistic = std::move(statistic);
    r.lhs = lhs;
    r.rhs = rhs;
    r.status = (lhs == rhs) ? VerificationReport::Status::Holds
                            : VerificationReport::Status::Violated;
    return r;
}

namespace {

constexpr int kMaxPackedVerts = 16;

struct PackedCycle {
    uint8_t len = 0;
    std::array<uint8_t, kMaxPackedVerts> v{};
};

struct PackedPair {
    PackedCycle a, b;
};

PackedCycle pack(std::span<const VertexId> s) {
    PackedCycle c;
    c.len = static_cast<uint8_t>(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) c.v[i] = static_cast<uint8_t>(s[i]);
    return c;
}

Cycle unpack(const PackedCycle& c) {
    Cycle out;
    out.verts.assign(c.v.begin(), c.v.begin() + c.len);
    return out;
}

// Directed edges of a packed cycle as (dense edge id, traversal sign).
struct EdgeList {
    int count = 0;
    std::array<std::pair<int, int>, kMaxPackedVerts> e{};
};

EdgeList edges_of(int n, const PackedCycle& c) {
    EdgeList l;
    l.count = c.len;
    for (int i = 0; i < c.len; ++i) {
        int a = c.v[i], b = c.v[(i + 1) % c.len];
        l.e[i] = {edge_index(n, a, b), a < b ? 1 : -1};
    }
    return l;
}

} // namespace

Analyzer::Analyzer(const PLEmbedding& e, AnalyzerOptions opt) : emb_(e) {
    if (e.n > kMaxPackedVerts)
        throw std::invalid_argument("analyzer supports n <= 16 (desk scale)");
    ValidationVerdict verdict = validate_embedding(e);
    if (!verdict.valid())
        throw std::invalid_argument("not an embedding: " + verdict.violations.front().kind +
                                    " (" + verdict.violations.front().detail + ")");
    Direction d = opt.direction ? *opt.direction : find_generic_direction(e);
    scene_ = build_scene_diagram(e, d);
    jobs_ = std::max(1, opt.jobs);
    ecount_ = edge_count(e.n);
    edge_weight_.assign(static_cast<std::size_t>(ecount_) * ecount_, 0);
    for (const auto& c : scene_.crossings) {
        edge_weight_[static_cast<std::size_t>(c.over.edge) * ecount_ + c.under.edge] += c.sign;
        edge_weight_[static_cast<std::size_t>(c.under.edge) * ecount_ + c.over.edge] += c.sign;
    }
}

namespace {

long long lk_between(const std::vector<long long>& w, int ecount, const EdgeList& a,
                     const EdgeList& b) {
    long long total = 0;
    for (int i = 0; i < a.count; ++i) {
        const long long* row = &w[static_cast<std::size_t>(a.e[i].first) * ecount];
        const int sa = a.e[i].second;
        for (int j = 0; j < b.count; ++j) {
            total += sa * b.e[j].second * row[b.e[j].first];
        }
    }
    if (total % 2 != 0)
        throw InternalInconsistencyError("odd signed crossing sum between disjoint cycles");
    return total / 2;
}

} // namespace

long long Analyzer::pair_stat(int p, int q, Statistic stat) {
    if (stat == Statistic::SumA2)
        throw InvalidClassError("a2 is a knot statistic; pair classes take lk statistics");
    if (p > q) std::swap(p, q);
    auto key = std::make_tuple(p, q, static_cast<int>(stat));
    if (auto it = pair_cache_.find(key); it != pair_cache_.end()) return it->second;

    std::vector<PackedPair> pairs;
    pairs.reserve(pair_class_size(emb_.n, p, q));
    for_each_disjoint_pair(emb_.n, p, q,
                           [&](std::span<const VertexId> a, std::span<const VertexId> b) {
                               pairs.push_back({pack(a), pack(b)});
                           });

    int chunks = std::max(1, jobs_);
    std::vector<long long> sum_lk(chunks, 0), sum_lk2(chunks, 0), max_abs(chunks, 0);
    run_chunked(pairs.size(), jobs_, [&](int chunk, std::size_t begin, std::size_t end) {
        long long s1 = 0, s2 = 0, mx = 0;
        for (std::size_t i = begin; i < end; ++i) {
            EdgeList ea = edges_of(emb_.n, pairs[i].a);
            EdgeList eb = edges_of(emb_.n, pairs[i].b);
            long long lk = lk_between(edge_weight_, ecount_, ea, eb);
            s1 += lk;
            s2 += lk * lk;
            mx = std::max(mx, lk < 0 ? -lk : lk);
        }
        sum_lk[chunk] = s1;
        sum_lk2[chunk] = s2;
        max_abs[chunk] = mx;
    });
    long long total_lk = 0, total_lk2 = 0, total_max = 0;
    for (int c = 0; c < chunks; ++c) {
        total_lk += sum_lk[c];
        total_lk2 += sum_lk2[c];
        total_max = std::max(total_max, max_abs[c]);
    }
    pair_cache_[std::make_tuple(p, q, static_cast<int>(Statistic::SumLk))] = total_lk;
    pair_cache_[std::make_tuple(p, q, static_cast<int>(Statistic::SumLk2))] = total_lk2;
    pair_cache_[std::make_tuple(p, q, static_cast<int>(Statistic::MaxAbsLk))] = total_max;
    return pair_cache_[key];
}

long long Analyzer::knot_sum_a2(int p) {
    if (auto it = a2_sum_cache_.find(p); it != a2_sum_cache_.end()) return it->second;

    std::vector<PackedCycle> cycles;
    cycles.reserve(cycle_class_size(emb_.n, p));
    for_each_cycle(emb_.n, p, [&](std::span<const VertexId> s) { cycles.push_back(pack(s)); });

    int chunks = std::max(1, jobs_);
    std::vector<long long> sums(chunks, 0), maxs(chunks, LLONG_MIN);
    run_chunked(cycles.size(), jobs_, [&](int chunk, std::size_t begin, std::size_t end) {
        long long s = 0, mx = LLONG_MIN;
        for (std::size_t i = begin; i < end; ++i) {
            long long v = a2_of_cycle(unpack(cycles[i]));
            s += v;
            mx = std::max(mx, v);
        }
        sums[chunk] = s;
        maxs[chunk] = mx;
    });
    long long total = 0, mx = LLONG_MIN;
    for (int c = 0; c < chunks; ++c) {
        total += sums[c];
        mx = std::max(mx, maxs[c]);
    }
    a2_sum_cache_[p] = total;
    a2_max_cache_[p] = mx;
    return total;
}

long long Analyzer::knot_max_a2(int p) {
    if (auto it = a2_max_cache_.find(p); it != a2_max_cache_.end()) return it->second;
    knot_sum_a2(p);
    return a2_max_cache_.at(p);
}

std::vector<std::pair<int, int>> Analyzer::hamiltonian_splits() const {
    std::vector<std::pair<int, int>> out;
    for (int p = 3; p <= emb_.n - p; ++p) out.emplace_back(p, emb_.n - p);
    return out;
}

long long Analyzer::hamiltonian_total(Statistic stat) {
    long long total = 0;
    for (auto [p, q] : hamiltonian_splits()) total += pair_stat(p, q, stat);
    return total;
}

int Analyzer::lk_of_pair(const Cycle& a, const Cycle& b) const {
    EdgeList ea = edges_of(emb_.n, pack(std::span<const VertexId>(a.verts)));
    EdgeList eb = edges_of(emb_.n, pack(std::span<const VertexId>(b.verts)));
    return static_cast<int>(lk_between(edge_weight_, ecount_, ea, eb));
}

long long Analyzer::a2_of_cycle(const Cycle& c) const {
    LinkDiagram ld = extract_link_diagram(scene_, {c});
    return a2(gauss_diagram(ld));
}

void Analyzer::for_each_pair_lk(
    int p, int q, const std::function<void(const Cycle&, const Cycle&, int)>& fn) const {
    for_each_disjoint_pair(emb_.n, p, q,
                           [&](std::span<const VertexId> a, std::span<const VertexId> b) {
                               Cycle ca{std::vector<VertexId>(a.begin(), a.end())};
                               Cycle cb{std::vector<VertexId>(b.begin(), b.end())};
                               fn(ca, cb, lk_of_pair(ca, cb));
                           });
}

void Analyzer::for_each_cycle_a2(
    int p, const std::function<void(const Cycle&, long long)>& fn) const {
    for_each_cycle(emb_.n, p, [&](std::span<const VertexId> s) {
        Cycle c{std::vector<VertexId>(s.begin(), s.end())};
        fn(c, a2_of_cycle(c));
    });
}

std::optional<std::pair<CyclePair, int>> Analyzer::find_odd_lk_hamiltonian_pair() {
    for (auto [p, q] : hamiltonian_splits()) {
        std::optional<std::pair<CyclePair, int>> found;
        for_each_disjoint_pair(
            emb_.n, p, q, [&](std::span<const VertexId> a, std::span<const VertexId> b) {
                if (found) return;
                EdgeList ea = edges_of(emb_.n, pack(a));
                EdgeList eb = edges_of(emb_.n, pack(b));
                long long lk = lk_between(edge_weight_, ecount_, ea, eb);
                if (lk % 2 != 0) {
                    found = {CyclePair{Cycle{std::vector<VertexId>(a.begin(), a.end())},
                                       Cycle{std::vector<VertexId>(b.begin(), b.end())}},
                             static_cast<int>(lk)};
                }
            });
        if (found) return found;
    }
    return std::nullopt;
}

ClassSum class_sum(const PLEmbedding& e, int p, int q, Statistic stat, AnalyzerOptions opt) {
    Analyzer a(e, opt);
    ClassSum out;
    out.n = e.n;
    out.p = p;
    out.q = q;
    out.stat = stat;
    if (q == 0) {
        if (stat != Statistic::SumA2)
            throw InvalidClassError("knot classes take the a2 statistic");
        if (p < 3 || p > e.n) throw InvalidClassError("knot class requires 3 <= p <= n");
        out.value = a.knot_sum_a2(p);
    } else {
        out.value = a.pair_stat(p, q, stat);
    }
    return out;
}

namespace {

void require_n(const Analyzer& a, int min_n, const char* what) {
    if (a.n() < min_n)
        throw std::invalid_argument(std::string(what) + " requires n >= " +
                                    std::to_string(min_n));
}

long long nonneg_mod(long long v, long long m) { return ((v % m) + m) % m; }

VerificationReport bound_report(std::string claim_id, int n, int p, int q, std::string stat,
                                long long lhs, long long rhs, bool ok, std::string witness = "") {
    VerificationReport r;
    r.claim_id = std::move(claim_id);
    r.n = n;
    r.p = p;
    r.q = q;
    r.statistic = std::move(stat);
    r.lhs = lhs;
    r.rhs = rhs;
    r.status = ok ? VerificationReport::Status::Holds : VerificationReport::Status::Violated;
    r.witness = std::move(witness);
    return r;
}

VerificationReport skipped_report(std::string claim_id, int n, int p, int q, std::string stat,
                                  std::string reason) {
    VerificationReport r;
    r.claim_id = std::move(claim_id);
    r.n = n;
    r.p = p;
    r.q = q;
    r.statistic = std::move(stat);
    r.status = VerificationReport::Status::Skipped;
    r.witness = std::move(reason);
    return r;
}

} // namespace

std::vector<VerificationReport> verify_identities(Analyzer& a) {
    require_n(a, 6, "identity suite");
    const int n = a.n();
    std::vector<VerificationReport> out;
    const long long s33 = a.pair_stat(3, 3, Statistic::SumLk2);

    for (auto [p, q] : a.hamiltonian_splits()) {
        long long factor = (p == q) ? factorial64(n - 6) : 2 * factorial64(n - 6);
        out.push_back(make_identity_report("lk2-hamiltonian-split-identity", n, p, q, "lk2",
                                           a.pair_stat(p, q, Statistic::SumLk2), factor * s33));
    }
    out.push_back(make_identity_report("lk2-hamiltonian-total-identity", n, 0, 0, "lk2",
                                       a.hamiltonian_total(Statistic::SumLk2),
                                       factorial64(n - 5) * s33));
    if (n >= 7) {
        out.push_back(make_identity_report("lk2-small-class-identity", n, 3, 4, "lk2",
                                           a.pair_stat(3, 4, Statistic::SumLk2),
                                           2 * (n - 6) * s33));
    }
    if (n >= 8) {
        out.push_back(make_identity_report("lk2-small-class-identity", n, 3, 5, "lk2",
                                           a.pair_stat(3, 5, Statistic::SumLk2),
                                           2 * (n - 6) * (n - 7) * s33));
    }
    // Doubled form: both sides carry the factor 2 so n = 6 stays integral.
    long long lhs = 2 * (a.knot_sum_a2(n) - factorial64(n - 5) * a.knot_sum_a2(5));
    long long rhs = factorial64(n - 5) * (s33 - binomial64(n - 1, 5));
    out.push_back(make_identity_report("a2-lk2-doubled-identity", n, 0, 0, "a2", lhs, rhs));
    return out;
}

std::vector<VerificationReport> verify_congruences(Analyzer& a, bool include_a2) {
    require_n(a, 6, "congruence suite");
    const int n = a.n();
    const bool high = (n % 8 == 6) || (n % 8 == 7);
    std::vector<VerificationReport> out;

    for (auto [p, q] : a.hamiltonian_splits()) {
        long long m = (p == q) ? 2 * factorial64(n - 6) : 4 * factorial64(n - 6);
        long long expect = high ? m / 2 : 0;
        VerificationReport r = make_identity_report(
            "lk2-split-congruence", n, p, q, "lk2",
            nonneg_mod(a.pair_stat(p, q, Statistic::SumLk2), m), expect);
        r.witness = "mod=" + std::to_string(m);
        out.push_back(std::move(r));
    }
    {
        long long m = 2 * factorial64(n - 5);
        long long expect = high ? factorial64(n - 5) : 0;
        VerificationReport r =
            make_identity_report("lk2-total-congruence", n, 0, 0, "lk2",
                                 nonneg_mod(a.hamiltonian_total(Statistic::SumLk2), m), expect);
        r.witness = "mod=" + std::to_string(m);
        out.push_back(std::move(r));
    }
    if (n >= 7 && include_a2) {
        long long m = factorial64(n - 5);
        long long expect = (n % 8 == 0 || n % 8 == 7) ? m / 2 : 0;
        VerificationReport r = make_identity_report("a2-hamiltonian-congruence", n, n, 0, "a2",
                                                    nonneg_mod(a.knot_sum_a2(n), m), expect);
        r.witness = "mod=" + std::to_string(m);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<VerificationReport> verify_bounds_and_parities(Analyzer& a) {
    require_n(a, 6, "bound suite");
    const int n = a.n();
    const bool rect = a.rectilinear();
    const long long base = factorial64(n) / factorial64(6); // n!/6!
    std::vector<VerificationReport> out;

    for (auto [p, q] : a.hamiltonian_splits()) {
        long long sum = a.pair_stat(p, q, Statistic::SumLk2);
        long long lower = (p == q) ? base : 2 * base;
        out.push_back(bound_report("lk2-split-lower-bound", n, p, q, "lk2", sum, lower,
                                   sum >= lower));
        if (rect) {
            out.push_back(bound_report("lk2-split-upper-bound-rectilinear", n, p, q, "lk2", sum,
                                       3 * lower, sum <= 3 * lower));
        } else {
            out.push_back(skipped_report("lk2-split-upper-bound-rectilinear", n, p, q, "lk2",
                                         "not rectilinear"));
        }
        long long mx = a.pair_stat(p, q, Statistic::MaxAbsLk);
        out.push_back(bound_report("max-lk-squared-bound", n, p, q, "maxlk", 90 * mx * mx,
                                   static_cast<long long>(p) * q, 90 * mx * mx >= p * q,
                                   "max|lk|=" + std::to_string(mx)));
    }
    {
        long long total = a.hamiltonian_total(Statistic::SumLk2);
        long long lower = (n - 5) * base;
        out.push_back(
            bound_report("lk2-total-lower-bound", n, 0, 0, "lk2", total, lower, total >= lower));
        if (rect) {
            out.push_back(bound_report("lk2-total-upper-bound-rectilinear", n, 0, 0, "lk2", total,
                                       3 * lower, total <= 3 * lower));
        } else {
            out.push_back(skipped_report("lk2-total-upper-bound-rectilinear", n, 0, 0, "lk2",
                                         "not rectilinear"));
        }
    }
    if (n == 6) {
        long long s = a.pair_stat(3, 3, Statistic::SumLk);
        out.push_back(bound_report("triangle-lk-sum-parity", n, 3, 3, "lk", nonneg_mod(s, 2), 1,
                                   nonneg_mod(s, 2) == 1, "sum=" + std::to_string(s)));
    }
    if (n >= 7) {
        long long s = a.hamiltonian_total(Statistic::SumLk);
        out.push_back(bound_report("hamiltonian-lk-sum-parity", n, 0, 0, "lk", nonneg_mod(s, 2),
                                   0, nonneg_mod(s, 2) == 0, "sum=" + std::to_string(s)));
        auto witness = a.find_odd_lk_hamiltonian_pair();
        out.push_back(bound_report(
            "odd-lk-hamiltonian-pair", n, 0, 0, "lk", witness ? 1 : 0, 1, witness.has_value(),
            witness ? witness->first.to_string() + " lk=" + std::to_string(witness->second)
                    : "no odd pair found"));
    }
    if (rect) {
        long long total_a2 = a.knot_sum_a2(n);
        long long rhs = static_cast<long long>(n - 5) * (n - 6) * factorial64(n - 1);
        out.push_back(bound_report("a2-total-lower-bound-rectilinear", n, n, 0, "a2",
                                   1440 * total_a2, rhs, 1440 * total_a2 >= rhs));
        long long mx = a.knot_max_a2(n);
        out.push_back(bound_report("a2-max-lower-bound-rectilinear", n, n, 0, "a2", 720 * mx,
                                   static_cast<long long>(n - 5) * (n - 6),
                                   720 * mx >= static_cast<long long>(n - 5) * (n - 6),
                                   "max a2=" + std::to_string(mx)));
    } else {
        out.push_back(
            skipped_report("a2-total-lower-bound-rectilinear", n, n, 0, "a2", "not rectilinear"));
        out.push_back(
            skipped_report("a2-max-lower-bound-rectilinear", n, n, 0, "a2", "not rectilinear"));
    }
    if (n == 6) {
        if (rect) {
            long long s33 = a.pair_stat(3, 3, Statistic::SumLk2);
            out.push_back(bound_report("k6-triangle-hopf-count-range", n, 3, 3, "lk2", s33, 3,
                                       s33 >= 1 && s33 <= 3, "range=[1,3]"));
        } else {
            out.push_back(skipped_report("k6-triangle-hopf-count-range", n, 3, 3, "lk2",
                                         "not rectilinear"));
        }
    }
    return out;
}

std::vector<VerificationReport> verify_all(Analyzer& a) {
    std::vector<VerificationReport> out = verify_identities(a);
    auto c = verify_congruences(a);
    out.insert(out.end(), c.begin(), c.end());
    auto b = verify_bounds_and_parities(a);
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

std::vector<VerificationReport> verify_identities(const PLEmbedding& e, AnalyzerOptions opt) {
    Analyzer a(e, opt);
    return verify_identities(a);
}
std::vector<VerificationReport> verify_congruences(const PLEmbedding& e, AnalyzerOptions opt) {
    Analyzer a(e, opt);
    return verify_congruences(a);
}
std::vector<VerificationReport> verify_bounds_and_parities(const PLEmbedding& e,
                                                           AnalyzerOptions opt) {
    Analyzer a(e, opt);
    return verify_bounds_and_parities(a);
}
std::vector<VerificationReport> verify_all(const PLEmbedding& e, AnalyzerOptions opt) {
    Analyzer a(e, opt);
    return verify_all(a);
}

} // namespace slk
