#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace pwp {

/// Dense real matrix, row-major.
///
/// Entries are always finite. Construction from raw entries validates this;
/// mutable element access is provided for building matrices in place and the
/// caller is responsible for writing finite values.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

  static Matrix zeros(std::size_t n) { return Matrix(n, n); }
  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return rows_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return entries_.empty(); }

  double operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  std::span<const double> entries() const noexcept { return entries_; }
  std::span<const double> row(std::size_t i) const {
    return std::span<const double>(entries_).subspan(i * cols_, cols_);
  }

  bool is_zero() const noexcept;
  bool all_finite() const noexcept;

  Matrix transposed() const;
  Matrix scaled(double c) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> entries_;
};

// Canonical-order summation: the result depends only on the multiset of
// values, never on their order. Matrix products and norms use it so that
// relabelling vertices permutes results bit-exactly.
double canonical_sum(std::span<double> values);

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);

/// Maximum absolute row sum.
double norm_inf(const Matrix& m);
double norm_frobenius(const Matrix& m);
/// ‖a − b‖_F / max(‖b‖_F, tiny); 0 when both are zero.
double relative_frobenius_distance(const Matrix& a, const Matrix& b);

/// Permutation as a matrix: result(perm[i], i) = 1, so (P·D·Pᵀ)(perm[i], perm[j]) = D(i, j).
Matrix permutation_matrix(std::span<const std::size_t> perm);
/// Relabels vertices: out(perm[i], perm[j]) = m(i, j). Equal to P·m·Pᵀ.
Matrix permute(const Matrix& m, std::span<const std::size_t> perm);

/// General inverse via Gauss-Jordan with partial pivoting. Throws
/// IllConditionedBasis when a pivot vanishes.
Matrix inverse(const Matrix& m);

}  // namespace pwp
