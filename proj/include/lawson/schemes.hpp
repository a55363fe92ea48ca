#ifndef LAWSON_SCHEMES_HPP
#define LAWSON_SCHEMES_HPP

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lawson/brownian.hpp"
#include "lawson/model.hpp"

namespace lawson {

/// The one-step methods. TDSL/MDSL are the Lawson rules applied after
/// resplit(DriftOnly); Midpoint/Trapezoidal are the same rules after
/// resplit(None), i.e. the underlying implicit schemes on the full field.
enum class SchemeId {
  Midpoint,
  Trapezoidal,
  TDSL,
  TFSL,
  MDSL,
  MFSL,
  ExpEulerFwd,
  ExpEulerBwd,
};

std::string_view scheme_name(SchemeId id);
std::optional<SchemeId> parse_scheme(std::string_view name);
SplittingMode scheme_splitting(SchemeId id);

struct StepperConfig {
  double fp_tol = 1e-12;  // implicit-equation residual tolerance, max-norm
  int fp_max_iters = 100;
  SchemeId scheme = SchemeId::MFSL;
};

/// The fixed-point iteration failed to reach fp_tol. Signals that the step
/// size is too large for contraction; never silently accepted.
class NonConvergence : public std::runtime_error {
 public:
  NonConvergence(int iterations, double residual);
  NonConvergence(int iterations, double residual, std::size_t step_index);

  int iterations() const { return iterations_; }
  double residual() const { return residual_; }
  std::optional<std::size_t> step_index() const { return step_index_; }

 private:
  int iterations_;
  double residual_;
  std::optional<std::size_t> step_index_;
};

struct Trajectory {
  std::vector<double> times;             // N+1 entries, strictly increasing
  std::vector<Vector> states;            // N+1 entries, states[0] = x0
  std::vector<int> solver_iterations;    // N entries, 0 for explicit steps

  std::size_t steps() const { return solver_iterations.size(); }
  const Vector& final_state() const { return states.back(); }
};

// One-step operations. dW carries M+1 increments with dW[0] = h. The Lawson
// steps use the problem's splitting as given; the Midpoint/Trapezoidal
// wrappers apply resplit(None) first, so they act on the full field
// f_m(x) = A_m x + g_m(x) without any exponential.

Vector step_midpoint(const SplitSde& p, const Vector& y, std::span<const double> dW,
                     const StepperConfig& cfg);
Vector step_trapezoidal(const SplitSde& p, const Vector& y, std::span<const double> dW,
                        const StepperConfig& cfg);
Vector step_lawson_trapezoidal(const SplitSde& p, const Vector& y, std::span<const double> dW,
                               const StepperConfig& cfg);
Vector step_lawson_midpoint(const SplitSde& p, const Vector& y, std::span<const double> dW,
                            const StepperConfig& cfg);
Vector step_exp_euler_fwd(const SplitSde& p, const Vector& y, std::span<const double> dW,
                          const StepperConfig& cfg);
Vector step_exp_euler_bwd(const SplitSde& p, const Vector& y, std::span<const double> dW,
                          const StepperConfig& cfg);

/// One step of cfg.scheme, including the scheme's resplit. Returns the new
/// state and the solver iteration count.
struct StepOutcome {
  Vector state;
  int solver_iterations = 0;
};
StepOutcome step(const SplitSde& p, const Vector& y, std::span<const double> dW,
                 const StepperConfig& cfg);

/// Drives cfg.scheme over the whole path. The scheme's resplit is applied
/// once up front. NonConvergence is rethrown with the failing step index.
Trajectory integrate(const SplitSde& p, const NoisePath& path, const StepperConfig& cfg);
Trajectory integrate(const SplitSde& p, const WienerGrid& grid, int level,
                     const StepperConfig& cfg);

}  // namespace lawson

#endif  // LAWSON_SCHEMES_HPP
