#include "lawson/model.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "lawson/rng.hpp"

namespace lawson {

namespace {

// Stream offset separating validator sampling from Wiener increment streams.
constexpr std::uint64_t kSampleStreamBase = 0x56414C0000000000ull;

Vector sample_box_state(std::size_t dimension, std::uint64_t seed, std::size_t sample) {
  Vector x(dimension);
  for (std::size_t c = 0; c < dimension; ++c)
    x[c] = -2.0 + 4.0 * rng::uniform01(seed, kSampleStreamBase + c, sample);
  return x;
}

StateMap fold_channel(const Matrix& a, StateMap g) {
  return [a, g = std::move(g)](const Vector& x) {
    Vector v = a * x;
    if (g) {
      const Vector w = g(x);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += w[i];
    }
    return v;
  };
}

}  // namespace

void SplitSde::check() const {
  if (linear.size() != nonlinear.size())
    throw std::invalid_argument("SplitSde: linear/nonlinear channel counts differ");
  if (linear.empty()) throw std::invalid_argument("SplitSde: needs at least the drift channel");
  if (x0.size() != dimension) throw std::invalid_argument("SplitSde: x0 dimension mismatch");
  for (const auto& a : linear) {
    if (a && (a->rows() != dimension || a->cols() != dimension))
      throw std::invalid_argument("SplitSde: linear part is not d x d");
  }
  if (!(tend > t0)) throw std::invalid_argument("SplitSde: T must exceed t0");
}

SplitSde resplit(const SplitSde& p, SplittingMode mode) {
  if (mode == SplittingMode::Full) return p;
  SplitSde q = p;
  const std::size_t first = (mode == SplittingMode::None) ? 0 : 1;
  for (std::size_t m = first; m < q.linear.size(); ++m) {
    if (!q.linear[m]) continue;  // nothing to fold
    q.nonlinear[m] = fold_channel(*q.linear[m], std::move(q.nonlinear[m]));
    q.linear[m].reset();
  }
  return q;
}

Vector eval_field(const SplitSde& p, std::size_t channel, const Vector& x) {
  const auto& a = p.linear[channel];
  const auto& g = p.nonlinear[channel];
  if (a) {
    Vector v = (*a) * x;
    if (g) {
      const Vector w = g(x);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += w[i];
    }
    return v;
  }
  if (g) return g(x);
  return Vector(p.dimension, 0.0);
}

Vector eval_nonlinear(const SplitSde& p, std::size_t channel, const Vector& x) {
  const auto& g = p.nonlinear[channel];
  if (g) return g(x);
  return Vector(p.dimension, 0.0);
}

QuadraticInvariant::QuadraticInvariant(Matrix d) : weight(std::move(d)) {
  if (!weight.square()) throw std::invalid_argument("quadratic invariant weight must be square");
  const double scale = std::max(1.0, weight.max_abs());
  if ((weight - weight.transposed()).max_abs() > 1e-12 * scale)
    throw std::invalid_argument("quadratic invariant weight must be symmetric");
}

double evaluate_invariant(const InvariantSpec& spec, const Vector& x) {
  if (const auto* quad = std::get_if<QuadraticInvariant>(&spec)) {
    const Vector dx = quad->weight * x;
    return dot(x, dx);
  }
  const auto& lin = std::get<LinearInvariant>(spec);
  return dot(lin.weight, x);
}

CommutativityReport validate_commutativity(const SplitSde& p, double tol) {
  CommutativityReport report;
  const std::size_t count = p.total_channels();
  for (std::size_t l = 0; l < count; ++l) {
    for (std::size_t k = l + 1; k < count; ++k) {
      CommutatorCheck check{l, k, 0.0, true};
      if (p.linear[l] && p.linear[k])
        check.residual = commutator(*p.linear[l], *p.linear[k]).max_abs();
      check.pass = check.residual <= tol;
      report.max_residual = std::max(report.max_residual, check.residual);
      report.pass = report.pass && check.pass;
      report.pairs.push_back(check);
    }
  }
  return report;
}

QuadraticAssumptionsReport validate_quadratic_assumptions(const SplitSde& p, const Matrix& d,
                                                          double tol, std::size_t sample_count,
                                                          std::uint64_t seed) {
  if (!d.square() || d.rows() != p.dimension)
    throw std::invalid_argument("weight matrix must be d x d");
  QuadraticAssumptionsReport report;
  const std::size_t count = p.total_channels();
  report.skew_residuals.assign(count, 0.0);
  report.commute_residuals.assign(count, 0.0);
  report.tangency_residuals.assign(count, 0.0);

  for (std::size_t m = 0; m < count; ++m) {
    if (p.linear[m]) {
      report.skew_residuals[m] = (*p.linear[m] + p.linear[m]->transposed()).max_abs();
      report.commute_residuals[m] = commutator(*p.linear[m], d).max_abs();
    }
  }
  for (std::size_t s = 0; s < sample_count; ++s) {
    const Vector x = sample_box_state(p.dimension, seed, s);
    const Vector dx = d * x;
    for (std::size_t m = 0; m < count; ++m) {
      if (!p.nonlinear[m]) continue;
      const double v = std::abs(dot(dx, p.nonlinear[m](x)));
      report.tangency_residuals[m] = std::max(report.tangency_residuals[m], v);
    }
  }

  for (std::size_t m = 0; m < count; ++m) {
    report.max_skew_residual = std::max(report.max_skew_residual, report.skew_residuals[m]);
    report.max_commute_residual =
        std::max(report.max_commute_residual, report.commute_residuals[m]);
    report.max_tangency_residual =
        std::max(report.max_tangency_residual, report.tangency_residuals[m]);
  }
  report.skew_pass = report.max_skew_residual <= tol;
  report.commute_pass = report.max_commute_residual <= tol;
  report.tangency_pass = report.max_tangency_residual <= tol;
  report.pass = report.skew_pass && report.commute_pass && report.tangency_pass;
  return report;
}

LinearAssumptionsReport validate_linear_assumptions(const SplitSde& p, const Vector& r, double tol,
                                                    std::size_t sample_count, std::uint64_t seed) {
  if (r.size() != p.dimension) throw std::invalid_argument("r must have dimension d");
  LinearAssumptionsReport report;
  const std::size_t count = p.total_channels();
  report.matrix_residuals.assign(count, 0.0);
  report.map_residuals.assign(count, 0.0);

  for (std::size_t m = 0; m < count; ++m) {
    if (!p.linear[m]) continue;
    const auto& a = *p.linear[m];
    double worst = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      double s = 0.0;
      for (std::size_t i = 0; i < a.rows(); ++i) s += r[i] * a(i, j);
      worst = std::max(worst, std::abs(s));
    }
    report.matrix_residuals[m] = worst;
  }
  for (std::size_t s = 0; s < sample_count; ++s) {
    const Vector x = sample_box_state(p.dimension, seed, s);
    for (std::size_t m = 0; m < count; ++m) {
      if (!p.nonlinear[m]) continue;
      const double v = std::abs(dot(r, p.nonlinear[m](x)));
      report.map_residuals[m] = std::max(report.map_residuals[m], v);
    }
  }

  for (std::size_t m = 0; m < count; ++m) {
    report.max_matrix_residual = std::max(report.max_matrix_residual, report.matrix_residuals[m]);
    report.max_map_residual = std::max(report.max_map_residual, report.map_residuals[m]);
  }
  report.matrix_pass = report.max_matrix_residual <= tol;
  report.map_pass = report.max_map_residual <= tol;
  report.pass = report.matrix_pass && report.map_pass;
  return report;
}

}  // namespace lawson
