#include "lawson/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace lawson {

namespace {

void check_finite(const std::vector<double>& entries) {
  for (double e : entries) {
    if (!std::isfinite(e)) throw std::invalid_argument("matrix entry is not finite");
  }
}

void check_same_shape(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix dimension mismatch");
}

// Solves A X = B in place by Gaussian elimination with partial pivoting.
// A and B are overwritten; the solution ends up in B.
void solve_in_place(Matrix& a, Matrix& b) {
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    double best = std::abs(a(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(a(i, k)) > best) {
        best = std::abs(a(i, k));
        pivot = i;
      }
    }
    if (best == 0.0) throw std::range_error("singular system in expm solve");
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(pivot, j));
      for (std::size_t j = 0; j < b.cols(); ++j) std::swap(b(k, j), b(pivot, j));
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = a(i, k) / a(k, k);
      if (f == 0.0) continue;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
      for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) -= f * b(k, j);
    }
  }
  for (std::size_t kk = n; kk-- > 0;) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      double s = b(kk, j);
      for (std::size_t i = kk + 1; i < n; ++i) s -= a(kk, i) * b(i, j);
      b(kk, j) = s / a(kk, kk);
    }
  }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, 0.0) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw std::invalid_argument("entry count does not match rows*cols");
  check_finite(entries_);
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  check_same_shape(*this, rhs);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  check_same_shape(*this, rhs);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

Matrix& Matrix::operator*=(double s) {
  for (double& e : entries_) e *= s;
  return *this;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

double Matrix::one_norm() const {
  double best = 0.0;
  for (std::size_t j = 0; j < cols_; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) s += std::abs((*this)(i, j));
    best = std::max(best, s);
  }
  return best;
}

double Matrix::max_abs() const {
  double best = 0.0;
  for (double e : entries_) best = std::max(best, std::abs(e));
  return best;
}

Matrix operator+(Matrix lhs, const Matrix& rhs) {
  lhs += rhs;
  return lhs;
}

Matrix operator-(Matrix lhs, const Matrix& rhs) {
  lhs -= rhs;
  return lhs;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.cols() != rhs.rows()) throw std::invalid_argument("matrix product dimension mismatch");
  Matrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const double a = lhs(i, k);
      if (a == 0.0) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

Matrix operator*(double s, Matrix m) {
  m *= s;
  return m;
}

Vector operator*(const Matrix& m, const Vector& v) {
  if (m.cols() != v.size()) throw std::invalid_argument("matrix-vector dimension mismatch");
  Vector out(m.rows(), 0.0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

bool operator==(const Matrix& lhs, const Matrix& rhs) {
  return lhs.rows() == rhs.rows() && lhs.cols() == rhs.cols() && lhs.entries() == rhs.entries();
}

Matrix expm(const Matrix& a) {
  if (!a.square()) throw std::invalid_argument("expm requires a square matrix");
  const std::size_t n = a.rows();
  const double norm = a.one_norm();
  if (!std::isfinite(norm) || norm > 1e15) throw std::range_error("expm: matrix norm too large");
  if (norm == 0.0) return Matrix::identity(n);

  // Degree-13 Pade coefficients with the matching 1-norm threshold.
  static constexpr double kTheta13 = 5.371920351148152;
  static constexpr double b[14] = {
      64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
      129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
      1323241920.0,        40840800.0,          960960.0,           16380.0,
      182.0,               1.0};

  int squarings = 0;
  Matrix as = a;
  if (norm > kTheta13) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / kTheta13)));
    as *= std::ldexp(1.0, -squarings);
  }

  const Matrix id = Matrix::identity(n);
  const Matrix a2 = as * as;
  const Matrix a4 = a2 * a2;
  const Matrix a6 = a4 * a2;

  Matrix w = b[13] * a6 + b[11] * a4 + b[9] * a2;
  Matrix u = as * (a6 * w + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id);
  Matrix w2 = b[12] * a6 + b[10] * a4 + b[8] * a2;
  Matrix v = a6 * w2 + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;

  Matrix num = v + u;
  Matrix den = v - u;
  solve_in_place(den, num);  // num becomes the Pade value

  for (int i = 0; i < squarings; ++i) num = num * num;

  for (double e : num.entries()) {
    if (!std::isfinite(e)) throw std::range_error("expm overflowed for extreme norm");
  }
  return num;
}

Matrix commutator(const Matrix& a, const Matrix& b) {
  if (!a.square() || !b.square() || a.rows() != b.rows())
    throw std::invalid_argument("commutator requires square matrices of equal dimension");
  return a * b - b * a;
}

bool is_skew_symmetric(const Matrix& a, double tol) {
  if (!a.square()) throw std::invalid_argument("is_skew_symmetric requires a square matrix");
  if (tol < 0.0) throw std::invalid_argument("tolerance must be non-negative");
  return (a + a.transposed()).max_abs() <= tol;
}

bool commutes_with(const Matrix& a, const Matrix& d, double tol) {
  return commutator(a, d).max_abs() <= tol;
}

double max_norm(const Vector& v) {
  double best = 0.0;
  for (double e : v) best = std::max(best, std::abs(e));
  return best;
}

double max_abs_diff(const Vector& a, const Vector& b) {
  double best = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) best = std::max(best, std::abs(a[i] - b[i]));
  return best;
}

double euclidean_norm(const Vector& v) {
  double s = 0.0;
  for (double e : v) s += e * e;
  return std::sqrt(s);
}

double euclidean_distance(const Vector& a, const Vector& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

double dot(const Vector& a, const Vector& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void axpy(Vector& y, double s, const Vector& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += s * x[i];
}

}  // namespace lawson
