#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace dqasrl {

// All stochastic code in this project draws from a caller-supplied engine so
// that a (config, seed) pair fully determines every result. Distribution
// helpers are hand-rolled on top of the raw 64-bit stream; the standard
// library distributions are implementation-defined and would not give
// byte-stable outputs across toolchains.
using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

/// Uniform double in [0, 1) with 53 bits of precision.
inline double uniform_double(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform double in [lo, hi).
inline double uniform_double(Rng& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform_double(rng);
}

/// Uniform integer in [0, bound). bound must be >= 1.
inline int uniform_int(Rng& rng, int bound) {
    return static_cast<int>(uniform_double(rng) * static_cast<double>(bound));
}

/// Index drawn from an unnormalized nonnegative weight vector.
/// Falls back to the last positive-weight index on rounding spill.
inline int sample_categorical(Rng& rng, std::span<const double> weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    double u = uniform_double(rng) * total;
    double acc = 0.0;
    int last = 0;
    for (int i = 0; i < static_cast<int>(weights.size()); ++i) {
        if (weights[i] <= 0.0) continue;
        acc += weights[i];
        last = i;
        if (u < acc) return i;
    }
    return last;
}

}  // namespace dqasrl
