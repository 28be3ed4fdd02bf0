#include "slk/generators.hpp"

#include <stdexcept>

#include "slk/errors.hpp"

namespace slk {

PLEmbedding moment_curve(int n, const std::vector<long long>& t) {
    if (n < 3) throw std::invalid_argument("moment curve embedding needs n >= 3");
    if (static_cast<int>(t.size()) != n)
        throw std::invalid_argument("moment curve needs exactly n parameters");
    for (int i = 1; i < n; ++i) {
        if (t[i] <= t[i - 1])
            throw std::invalid_argument("moment curve parameters must be strictly increasing");
    }
    PLEmbedding e;
    e.n = n;
    for (long long ti : t) {
        Rational x = make_rational(ti);
        e.vertex_positions.push_back({x, x * x, x * x * x});
    }
    return e;
}

PLEmbedding moment_curve(int n) {
    std::vector<long long> t(n);
    for (int i = 0; i < n; ++i) t[i] = i + 1;
    return moment_curve(n, t);
}

PLEmbedding random_embedding(int n, uint64_t seed, long long bound, int budget) {
    if (n < 1) throw std::invalid_argument("random embedding needs n >= 1");
    if (bound < n) throw std::invalid_argument("coordinate bound must be at least n");
    SplitMix64 rng(seed);
    const uint64_t m = 2 * static_cast<uint64_t>(bound) + 1;
    for (int attempt = 0; attempt < budget; ++attempt) {
        PLEmbedding e;
        e.n = n;
        for (int i = 0; i < n; ++i) {
            long long c[3];
            for (auto& v : c) v = static_cast<long long>(rng.bounded(m)) - bound;
            e.vertex_positions.push_back(
                {make_rational(c[0]), make_rational(c[1]), make_rational(c[2])});
        }
        if (validate_embedding(e).valid()) return e;
    }
    throw GenerationFailureError("random embedding: resample budget exhausted");
}

} // namespace slk
