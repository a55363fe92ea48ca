#include "lawson/brownian.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "lawson/rng.hpp"

namespace lawson {

namespace {

void write_u64(std::ostream& out, std::uint64_t v) {
  unsigned char buf[8];
  for (int i = 0; i < 8; ++i) buf[i] = static_cast<unsigned char>(v >> (8 * i));
  out.write(reinterpret_cast<const char*>(buf), 8);
}

void write_u32(std::ostream& out, std::uint32_t v) {
  unsigned char buf[4];
  for (int i = 0; i < 4; ++i) buf[i] = static_cast<unsigned char>(v >> (8 * i));
  out.write(reinterpret_cast<const char*>(buf), 4);
}

void write_f64(std::ostream& out, double v) { write_u64(out, std::bit_cast<std::uint64_t>(v)); }

std::uint64_t read_u64(std::istream& in) {
  unsigned char buf[8];
  in.read(reinterpret_cast<char*>(buf), 8);
  if (!in) throw std::runtime_error("truncated WienerGrid stream");
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(buf[i]) << (8 * i);
  return v;
}

std::uint32_t read_u32(std::istream& in) {
  unsigned char buf[4];
  in.read(reinterpret_cast<char*>(buf), 4);
  if (!in) throw std::runtime_error("truncated WienerGrid stream");
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(buf[i]) << (8 * i);
  return v;
}

double read_f64(std::istream& in) { return std::bit_cast<double>(read_u64(in)); }

}  // namespace

NoisePath NoisePath::sample(double t0, double step, std::size_t n_steps, std::size_t channels,
                            std::uint64_t seed) {
  if (!(step > 0.0)) throw std::invalid_argument("NoisePath: step must be positive");
  NoisePath path;
  path.t0 = t0;
  path.step = step;
  path.increments.resize(channels);
  const double scale = std::sqrt(step);
  for (std::size_t m = 0; m < channels; ++m) {
    auto& inc = path.increments[m];
    inc.resize(n_steps);
    for (std::size_t i = 0; i < n_steps; ++i)
      inc[i] = scale * rng::standard_normal(seed, m + 1, i);
  }
  return path;
}

NoisePath coarsen(const NoisePath& path, std::size_t factor) {
  if (factor == 0 || path.steps() % factor != 0)
    throw std::invalid_argument("coarsen: factor must divide the step count");
  NoisePath out;
  out.t0 = path.t0;
  out.step = path.step * static_cast<double>(factor);
  out.increments.resize(path.channels());
  for (std::size_t m = 0; m < path.channels(); ++m) {
    const auto& fine = path.increments[m];
    auto& coarse = out.increments[m];
    coarse.resize(fine.size() / factor);
    for (std::size_t n = 0; n < coarse.size(); ++n) {
      double s = 0.0;
      for (std::size_t k = 0; k < factor; ++k) s += fine[n * factor + k];
      coarse[n] = s;
    }
  }
  return out;
}

WienerGrid WienerGrid::generate(double t0, double tend, int levels, int channels,
                                std::uint64_t seed, std::size_t max_bytes) {
  if (!(tend > t0)) throw std::invalid_argument("WienerGrid: T must exceed t0");
  if (levels < 0 || channels < 0) throw std::invalid_argument("WienerGrid: negative levels or M");
  if (levels >= 48) throw std::length_error("WienerGrid: level out of range");
  const std::size_t n = std::size_t{1} << levels;
  if (channels > 0 && n > max_bytes / (sizeof(double) * static_cast<std::size_t>(channels)))
    throw std::length_error("WienerGrid: grid exceeds the memory budget");

  auto fine = std::make_shared<std::vector<std::vector<double>>>();
  fine->resize(static_cast<std::size_t>(channels));
  const double h_fine = (tend - t0) / static_cast<double>(n);
  const double scale = std::sqrt(h_fine);
  for (int m = 0; m < channels; ++m) {
    auto& inc = (*fine)[static_cast<std::size_t>(m)];
    inc.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      inc[i] = scale * rng::standard_normal(seed, static_cast<std::uint64_t>(m) + 1, i);
  }

  WienerGrid g;
  g.t0_ = t0;
  g.tend_ = tend;
  g.fine_levels_ = levels;
  g.view_levels_ = levels;
  g.channels_ = channels;
  g.seed_ = seed;
  g.fine_ = std::move(fine);
  return g;
}

WienerGrid WienerGrid::coarsened(int target_level) const {
  if (target_level < 0 || target_level > view_levels_)
    throw std::invalid_argument("coarsened: target level must be in [0, levels]");
  WienerGrid g = *this;
  g.view_levels_ = target_level;
  return g;
}

double WienerGrid::step_size() const {
  return (tend_ - t0_) / static_cast<double>(std::size_t{1} << view_levels_);
}

double WienerGrid::increment(int channel, std::size_t n) const {
  if (channel == 0) return step_size();
  if (channel < 1 || channel > channels_) throw std::invalid_argument("bad channel index");
  const auto& fine = (*fine_)[static_cast<std::size_t>(channel - 1)];
  const std::size_t factor = std::size_t{1} << (fine_levels_ - view_levels_);
  double s = 0.0;
  for (std::size_t k = 0; k < factor; ++k) s += fine[n * factor + k];
  return s;
}

std::vector<double> WienerGrid::increments(int channel) const {
  std::vector<double> out(steps());
  for (std::size_t n = 0; n < out.size(); ++n) out[n] = increment(channel, n);
  return out;
}

NoisePath WienerGrid::to_path(int level) const {
  const WienerGrid view = coarsened(level);
  NoisePath path;
  path.t0 = view.t0();
  path.step = view.step_size();
  path.increments.resize(static_cast<std::size_t>(view.channels()));
  for (int m = 1; m <= view.channels(); ++m)
    path.increments[static_cast<std::size_t>(m - 1)] = view.increments(m);
  return path;
}

void WienerGrid::dump(std::ostream& out) const {
  write_f64(out, t0_);
  write_f64(out, tend_);
  write_u32(out, static_cast<std::uint32_t>(view_levels_));
  write_u32(out, static_cast<std::uint32_t>(channels_));
  write_u64(out, seed_);
  for (int m = 1; m <= channels_; ++m) {
    for (double v : increments(m)) write_f64(out, v);
  }
  if (!out) throw std::runtime_error("WienerGrid dump failed");
}

WienerGrid WienerGrid::load(std::istream& in) {
  WienerGrid g;
  g.t0_ = read_f64(in);
  g.tend_ = read_f64(in);
  const auto levels = read_u32(in);
  const auto channels = read_u32(in);
  g.seed_ = read_u64(in);
  if (levels >= 48) throw std::runtime_error("WienerGrid load: level out of range");
  g.fine_levels_ = static_cast<int>(levels);
  g.view_levels_ = static_cast<int>(levels);
  g.channels_ = static_cast<int>(channels);
  auto fine = std::make_shared<std::vector<std::vector<double>>>();
  fine->resize(channels);
  const std::size_t n = std::size_t{1} << levels;
  for (auto& inc : *fine) {
    inc.resize(n);
    for (auto& v : inc) v = read_f64(in);
  }
  g.fine_ = std::move(fine);
  return g;
}

}  // namespace lawson
