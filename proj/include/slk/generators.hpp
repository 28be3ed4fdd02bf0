#pragma once

#include <cstdint>
#include <vector>

#include "slk/geometry.hpp"

namespace slk {

/// SplitMix64 stream; the fixed algorithm behind random_embedding, spelled
/// out here so generated embeddings are bit-identical everywhere.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Unbiased draw from [0, m): reject the low remainder band of the 64-bit
    /// range, then reduce. 2^64 = q*m + s with s = 2^64 mod m; draws below s
    /// are discarded so every residue appears exactly q times.
    uint64_t bounded(uint64_t m) {
        const uint64_t s = (0 - m) % m;
        for (;;) {
            uint64_t r = next();
            if (r >= s) return (r - s) % m;
        }
    }
};

/// Vertex i at (t_i, t_i^2, t_i^3) on the moment curve, straight edges.
/// The points are in general position, which makes this the standard
/// rectilinear embedding; validity is verified, not assumed.
/// Throws std::invalid_argument unless n >= 3 and t is strictly increasing
/// with exactly n entries.
PLEmbedding moment_curve(int n, const std::vector<long long>& t);
PLEmbedding moment_curve(int n); // t = 1..n

/// Rectilinear embedding with integer vertex coordinates drawn uniformly from
/// [-bound, bound]^3 by SplitMix64(seed), x,y,z per vertex in vertex order.
/// Invalid draws are rejected and the stream continues; identical
/// (n, seed, bound) give bit-identical output. Requires bound >= n.
/// Throws GenerationFailureError once `budget` resamples are exhausted.
PLEmbedding random_embedding(int n, uint64_t seed, long long bound, int budget = 1000);

} // namespace slk
