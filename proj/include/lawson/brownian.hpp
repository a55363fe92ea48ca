#ifndef LAWSON_BROWNIAN_HPP
#define LAWSON_BROWNIAN_HPP

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <vector>

namespace lawson {

/// Constant-step Brownian increments for channels 1..M over n_steps steps.
/// Channel 0 is the deterministic time channel, so its increment is always
/// the step size and is not stored.
struct NoisePath {
  double t0 = 0.0;
  double step = 0.0;
  std::vector<std::vector<double>> increments;  // [channel-1][step]

  std::size_t steps() const { return increments.empty() ? 0 : increments[0].size(); }
  std::size_t channels() const { return increments.size(); }

  /// Draws n_steps i.i.d. N(0, step) increments per channel, keyed by
  /// (seed, channel, index).
  static NoisePath sample(double t0, double step, std::size_t n_steps, std::size_t channels,
                          std::uint64_t seed);
};

/// Sums consecutive groups of `factor` increments (left to right), producing
/// the same path on a grid `factor` times coarser.
NoisePath coarsen(const NoisePath& path, std::size_t factor);

/// Brownian increments for M channels on a dyadic grid of 2^levels uniform
/// steps over [t0, T]. The finest-level increments are the single source of
/// randomness; coarsening only moves a view level, so block sums are always
/// taken over the same finest data and coarsening is transitive bit for bit.
class WienerGrid {
 public:
  /// Deterministic for fixed (seed, levels, M); each fine increment is
  /// i.i.d. N(0, (T-t0)/2^levels). Throws std::invalid_argument for a bad
  /// interval or negative levels and std::length_error when the grid would
  /// exceed max_bytes.
  static WienerGrid generate(double t0, double tend, int levels, int channels,
                             std::uint64_t seed, std::size_t max_bytes = std::size_t{1} << 30);

  /// View of the same path at a coarser level. target_level > levels() throws.
  WienerGrid coarsened(int target_level) const;

  double t0() const { return t0_; }
  double tend() const { return tend_; }
  int levels() const { return view_levels_; }
  int fine_levels() const { return fine_levels_; }
  int channels() const { return channels_; }
  std::uint64_t seed() const { return seed_; }
  std::size_t steps() const { return std::size_t{1} << view_levels_; }
  double step_size() const;

  /// Increment of channel m (1 <= m <= M) over view step n.
  double increment(int channel, std::size_t n) const;
  /// All view-level increments of channel m, materialized.
  std::vector<double> increments(int channel) const;

  /// Flattens to constant-step increments at the given level.
  NoisePath to_path(int level) const;

  /// Binary dump of the view: header t0, T, levels, M, seed; payload
  /// little-endian 64-bit floats, channels in order.
  void dump(std::ostream& out) const;
  static WienerGrid load(std::istream& in);

 private:
  WienerGrid() = default;

  double t0_ = 0.0;
  double tend_ = 1.0;
  int fine_levels_ = 0;
  int view_levels_ = 0;
  int channels_ = 0;
  std::uint64_t seed_ = 0;
  std::shared_ptr<const std::vector<std::vector<double>>> fine_;
};

}  // namespace lawson

#endif  // LAWSON_BROWNIAN_HPP
