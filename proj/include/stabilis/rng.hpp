#pragma once

#include <cstdint>
#include <vector>

#include "stabilis/rational.hpp"

namespace stabilis {

// Deterministic 64-bit generator: xoshiro256** seeded through splitmix64.
// The algorithm is fixed here (not delegated to the standard library) so
// that every reported frequency is reproducible bit-for-bit across
// platforms. Independent streams for parallel trials come from
// derive(stream_index).
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next();

    // Uniform integer in [0, n), n >= 1, by rejection sampling.
    std::uint64_t uniform(std::uint64_t n);

    // Statistically independent generator for (this seed, stream index);
    // used for per-trial and per-repetition streams.
    Rng derive(std::uint64_t stream) const;

    // Exact inverse-CDF sampling: cum is a strictly increasing sequence of
    // cumulative probabilities ending at 1. Returns the index selected by a
    // lazily-refined uniform real in [0,1); the marginal of index i is
    // exactly cum[i] - cum[i-1].
    std::size_t sample_cdf(const std::vector<Rational>& cum);

    // Exact Bernoulli(p), p in [0,1].
    bool bernoulli(const Rational& p);

private:
    std::uint64_t s_[4];
    std::uint64_t seed_;
};

}  // namespace stabilis
