#pragma once

// Sparse exact matrices stored by columns. Each column is a sorted list of
// (row, value) entries with no zeros, so equal matrices are structurally
// equal. Tensor-power spaces index their basis in base d with the first
// (outermost) factor most significant.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyc/scalar.hpp"

namespace cyc {

using Index = std::uint64_t;

struct Entry {
  Index index;
  Scalar value;
  friend bool operator==(const Entry&, const Entry&) = default;
};

using SparseVec = std::vector<Entry>;

/// Sorts by index, sums duplicates and drops zeros.
void canonicalize(SparseVec& v);

class Matrix {
 public:
  Matrix() : Matrix(0, 0, Field::rationals()) {}
  Matrix(Index rows, Index cols, Field field);

  static Matrix identity(Index n, Field field);
  /// Row-major dense values.
  static Matrix from_dense(Index rows, Index cols, const std::vector<Scalar>& values, Field field);

  Index rows() const noexcept { return rows_; }
  Index cols() const noexcept { return cols_; }
  const Field& field() const noexcept { return field_; }

  const SparseVec& column(Index j) const { return columns_[j]; }
  /// Replaces column j; `v` is canonicalized.
  void set_column(Index j, SparseVec v);
  Scalar at(Index i, Index j) const;
  std::size_t nnz() const;
  bool is_zero() const;

  /// Row-major dense values as exact-scalar strings.
  std::vector<std::string> dense_strings() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  Index rows_;
  Index cols_;
  Field field_;
  std::vector<SparseVec> columns_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& a, const Scalar& s);
/// a o b (b applied first). Parallel over the columns of b.
Matrix multiply(const Matrix& a, const Matrix& b);
/// a (x) b with a's factor outermost.
Matrix kron(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);
/// Reverses the order of `factors` tensor factors of dimension d on both the
/// domain and the codomain: P * a * P for the reversal permutation P.
Matrix mirror(const Matrix& a, Index d);
/// a applied to v.
SparseVec apply(const Matrix& a, const SparseVec& v);

struct Mismatch {
  Index row = 0;
  Index col = 0;
  std::string lhs;
  std::string rhs;
};

/// First differing entry in column-major order, or nullopt when equal.
/// Shape differences report row = col = max Index.
std::optional<Mismatch> first_difference(const Matrix& a, const Matrix& b);

/// Rank by Gaussian elimination over the field (dense).
std::size_t rank(const Matrix& a);
/// Inverse by Gauss-Jordan elimination, nullopt if singular or non-square.
std::optional<Matrix> inverse(const Matrix& a);

Index ipow(Index base, std::size_t exp);

}  // namespace cyc
