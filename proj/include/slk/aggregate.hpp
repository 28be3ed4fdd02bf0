#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "slk/cycles.hpp"
#include "slk/diagram.hpp"
#include "slk/geometry.hpp"

namespace slk {

enum class Statistic { SumLk, SumLk2, MaxAbsLk, SumA2 };

/// CLI/file spelling: lk, lk2, maxlk, a2.
std::string statistic_name(Statistic s);
std::optional<Statistic> statistic_from_name(const std::string& name);

/// Exact aggregate of one statistic over one cycle class.
struct ClassSum {
    int n = 0, p = 0, q = 0; // q == 0 marks a knot class
    Statistic stat = Statistic::SumLk2;
    long long value = 0;
};

struct VerificationReport {
    enum class Status { Holds, Violated, Skipped };

    std::string claim_id;
    int n = 0, p = 0, q = 0; // 0 where not applicable
    std::string statistic;
    Status status = Status::Skipped;
    long long lhs = 0, rhs = 0;
    std::string witness; // existence witness, modulus, or skip reason
};

std::string status_name(VerificationReport::Status s);

/// Equality claim, recorded exactly; a mismatch carries both sides as evidence.
VerificationReport make_identity_report(std::string claim_id, int n, int p, int q,
                                        std::string statistic, long long lhs, long long rhs);

struct AnalyzerOptions {
    std::optional<Direction> direction; // fixed direction instead of the search
    int jobs = 1;
};

/// One embedding, one shared generic projection, cached exact class sums.
/// All statistics are computed from the same SceneDiagram, so every report
/// row of one run refers to one diagram of the spatial graph.
class Analyzer {
  public:
    explicit Analyzer(const PLEmbedding& e, AnalyzerOptions opt = {});

    int n() const { return emb_.n; }
    bool rectilinear() const { return emb_.rectilinear(); }
    const PLEmbedding& embedding() const { return emb_; }
    const SceneDiagram& scene() const { return scene_; }
    const Direction& direction() const { return scene_.dir; }

    /// Cached exact statistic over the (p,q) pair class.
    long long pair_stat(int p, int q, Statistic stat);
    /// Cached exact sum of a2 over the p-cycle class.
    long long knot_sum_a2(int p);
    /// Max of a2 over the p-cycle class (plain max, for the rectilinear bound).
    long long knot_max_a2(int p);

    /// Hamiltonian splits (p, n-p) with p <= n-p, both >= 3, ascending p.
    std::vector<std::pair<int, int>> hamiltonian_splits() const;
    long long hamiltonian_total(Statistic stat);

    /// Per-element access for property checks.
    int lk_of_pair(const Cycle& a, const Cycle& b) const;
    long long a2_of_cycle(const Cycle& c) const;
    void for_each_pair_lk(int p, int q,
                          const std::function<void(const Cycle&, const Cycle&, int)>& fn) const;
    void for_each_cycle_a2(int p,
                           const std::function<void(const Cycle&, long long)>& fn) const;

    /// First Hamiltonian pair with odd linking number in deterministic class
    /// order, if any.
    std::optional<std::pair<CyclePair, int>> find_odd_lk_hamiltonian_pair();

  private:
    PLEmbedding emb_;
    SceneDiagram scene_;
    int jobs_ = 1;
    int ecount_ = 0;
    std::vector<long long> edge_weight_; // signed crossing weight per edge pair
    std::map<std::tuple<int, int, int>, long long> pair_cache_;
    std::map<int, long long> a2_sum_cache_;
    std::map<int, long long> a2_max_cache_;
};

/// One-shot class aggregate. q == 0 selects the knot class Gamma_p (a2 only);
/// pair classes take lk statistics only.
ClassSum class_sum(const PLEmbedding& e, int p, int q, Statistic stat, AnalyzerOptions opt = {});

/// Exact-equality identity suite relating every Hamiltonian split, the small
/// (3,4)/(3,5) classes, and the a2/lk2 doubled identity. Requires n >= 6.
std::vector<VerificationReport> verify_identities(Analyzer& a);
/// Residue checks modulo 2(n-6)!, 4(n-6)!, 2(n-5)! and (n-5)! with the
/// n mod 8 case split. Requires n >= 6. `include_a2` drops the Hamiltonian
/// a2 residue row (used where only the lk rows are wanted).
std::vector<VerificationReport> verify_congruences(Analyzer& a, bool include_a2 = true);
/// Lower/upper bounds, max-|lk| bound in squared form, parity and existence
/// claims. Rectilinear-only rows are skipped (not passed) on bent embeddings.
std::vector<VerificationReport> verify_bounds_and_parities(Analyzer& a);

std::vector<VerificationReport> verify_all(Analyzer& a);

std::vector<VerificationReport> verify_identities(const PLEmbedding& e, AnalyzerOptions opt = {});
std::vector<VerificationReport> verify_congruences(const PLEmbedding& e, AnalyzerOptions opt = {});
std::vector<VerificationReport> verify_bounds_and_parities(const PLEmbedding& e,
                                                           AnalyzerOptions opt = {});
std::vector<VerificationReport> verify_all(const PLEmbedding& e, AnalyzerOptions opt = {});

} // namespace slk
