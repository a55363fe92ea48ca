#ifndef LAWSON_LINALG_HPP
#define LAWSON_LINALG_HPP

#include <cstddef>
#include <vector>

namespace lawson {

using Vector = std::vector<double>;

/// Dense row-major matrix. Sized for the small systems handled here (d <= 12),
/// so no sparse or blocked storage. Entries must be finite; the constructors
/// reject NaN/Inf.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);  // zero-filled
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t n) { return Matrix(n, n); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  bool empty() const { return entries_.empty(); }

  double& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  const std::vector<double>& entries() const { return entries_; }

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(double s);

  Matrix transposed() const;
  double one_norm() const;  // max absolute column sum
  double max_abs() const;   // entrywise max magnitude

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> entries_;
};

Matrix operator+(Matrix lhs, const Matrix& rhs);
Matrix operator-(Matrix lhs, const Matrix& rhs);
Matrix operator*(const Matrix& lhs, const Matrix& rhs);
Matrix operator*(double s, Matrix m);
Vector operator*(const Matrix& m, const Vector& v);
bool operator==(const Matrix& lhs, const Matrix& rhs);

/// Matrix exponential by scaling and squaring with the degree-13 Pade
/// approximant. Exact for the zero matrix. Throws std::invalid_argument for
/// non-square input and std::range_error when the norm is too extreme for the
/// result to stay finite.
Matrix expm(const Matrix& a);

/// AB - BA. Throws std::invalid_argument on dimension mismatch.
Matrix commutator(const Matrix& a, const Matrix& b);

/// max|A + A^T| <= tol entrywise.
bool is_skew_symmetric(const Matrix& a, double tol = 1e-12);

/// max|AD - DA| <= tol entrywise.
bool commutes_with(const Matrix& a, const Matrix& d, double tol = 1e-12);

// Small vector helpers shared across the library.
double max_norm(const Vector& v);
double max_abs_diff(const Vector& a, const Vector& b);
double euclidean_norm(const Vector& v);
double euclidean_distance(const Vector& a, const Vector& b);
double dot(const Vector& a, const Vector& b);
/// y += s * x
void axpy(Vector& y, double s, const Vector& x);

}  // namespace lawson

#endif  // LAWSON_LINALG_HPP
