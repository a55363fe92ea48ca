#ifndef LAWSON_RNG_HPP
#define LAWSON_RNG_HPP

#include <array>
#include <cstdint>

namespace lawson::rng {

/// Philox 4x32-10 block: a pure function of (counter, key). Any draw is
/// addressable without streaming state, so paths can be generated in any
/// order (or in parallel) with identical results.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

/// Uniform double strictly inside (0,1) with 53-bit resolution, keyed by
/// (seed, stream, index).
double uniform01(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

/// Inverse of the standard normal CDF (Wichura's AS 241 rational
/// approximations, double precision). p must lie in (0,1).
double inverse_normal_cdf(double p);

/// N(0,1) draw keyed by (seed, stream, index): inverse CDF applied to the
/// keyed uniform.
double standard_normal(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

/// Derives a statistically independent sub-seed, e.g. one per Monte Carlo
/// path. Stable across platforms and runs.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt);

}  // namespace lawson::rng

#endif  // LAWSON_RNG_HPP
