#ifndef LAWSON_MODEL_HPP
#define LAWSON_MODEL_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "lawson/linalg.hpp"

namespace lawson {

/// State map R^d -> R^d. An empty std::function stands for the identically
/// zero map, which lets the steppers skip work and detect purely linear
/// channels structurally.
using StateMap = std::function<Vector(const Vector&)>;

/// Stratonovich SDE with each channel split into a linear part A_m x and a
/// nonlinear part g_m(x):
///
///   dX = sum_{m=0}^{M} (A_m X + g_m(X)) o dW_m,   W_0(t) = t.
///
/// Channel m = 0 is the drift. A missing linear part (nullopt) means A_m = 0.
/// Pairwise commutativity of the A_m is required by the exponential schemes
/// but is not enforced on construction; validate_commutativity reports it.
struct SplitSde {
  std::size_t dimension = 0;
  std::vector<std::optional<Matrix>> linear;  // size M+1, index m
  std::vector<StateMap> nonlinear;            // size M+1, index m
  Vector x0;
  double t0 = 0.0;
  double tend = 1.0;

  std::size_t noise_channels() const { return linear.empty() ? 0 : linear.size() - 1; }
  std::size_t total_channels() const { return linear.size(); }

  /// Structural consistency: sizes match, matrices are d x d. Throws
  /// std::invalid_argument on violation.
  void check() const;
};

/// How much of the linear structure stays in the exponential operator.
///  - Full:      keep every A_m (full stochastic Lawson).
///  - DriftOnly: fold the diffusion A_m (m >= 1) into g_m (drift stochastic
///               Lawson).
///  - None:      fold everything; restores the underlying one-step scheme.
enum class SplittingMode { Full, DriftOnly, None };

/// Rewrites the splitting without changing the vector field: folded channels
/// get A_m := 0 and g_m(x) := A_m x + g_m(x).
SplitSde resplit(const SplitSde& p, SplittingMode mode);

/// A_m x + g_m(x).
Vector eval_field(const SplitSde& p, std::size_t channel, const Vector& x);
/// g_m(x), zero vector if the channel has no nonlinear part.
Vector eval_nonlinear(const SplitSde& p, std::size_t channel, const Vector& x);

/// Quadratic invariant x^T D x with symmetric weight D.
struct QuadraticInvariant {
  explicit QuadraticInvariant(Matrix d);  // throws if D is not symmetric
  Matrix weight;
};

/// Linear invariant r^T x.
struct LinearInvariant {
  Vector weight;
};

using InvariantSpec = std::variant<QuadraticInvariant, LinearInvariant>;

double evaluate_invariant(const InvariantSpec& spec, const Vector& x);

// ---------------------------------------------------------------------------
// Assumption validators. These report rather than throw so deliberately
// "unsafe" configurations can still be run.

struct CommutatorCheck {
  std::size_t lhs_channel = 0;
  std::size_t rhs_channel = 0;
  double residual = 0.0;
  bool pass = true;
};

struct CommutativityReport {
  std::vector<CommutatorCheck> pairs;
  double max_residual = 0.0;
  bool pass = true;
};

/// Checks [A_l, A_k] = 0 within tol for every pair. Missing linear parts are
/// zero matrices and commute with everything.
CommutativityReport validate_commutativity(const SplitSde& p, double tol = 1e-12);

struct QuadraticAssumptionsReport {
  // (a) every A_m skew-symmetric, (b) every A_m commutes with D,
  // (c) x^T D g_m(x) = 0 at sampled states.
  std::vector<double> skew_residuals;      // per channel
  std::vector<double> commute_residuals;   // per channel
  std::vector<double> tangency_residuals;  // per channel, max over samples
  double max_skew_residual = 0.0;
  double max_commute_residual = 0.0;
  double max_tangency_residual = 0.0;
  bool skew_pass = true;
  bool commute_pass = true;
  bool tangency_pass = true;
  bool pass = true;
};

/// Check (c) is a pointwise identity over R^d, so it is validated
/// probabilistically at sample_count states drawn uniformly from [-2,2]^d.
QuadraticAssumptionsReport validate_quadratic_assumptions(const SplitSde& p, const Matrix& d,
                                                          double tol = 1e-12,
                                                          std::size_t sample_count = 256,
                                                          std::uint64_t seed = 0);

struct LinearAssumptionsReport {
  std::vector<double> matrix_residuals;  // max|r^T A_m| per channel
  std::vector<double> map_residuals;     // max|r^T g_m(x)| per channel over samples
  double max_matrix_residual = 0.0;
  double max_map_residual = 0.0;
  bool matrix_pass = true;
  bool map_pass = true;
  bool pass = true;
};

LinearAssumptionsReport validate_linear_assumptions(const SplitSde& p, const Vector& r,
                                                    double tol = 1e-12,
                                                    std::size_t sample_count = 256,
                                                    std::uint64_t seed = 0);

}  // namespace lawson

#endif  // LAWSON_MODEL_HPP
