#include "cyc/matrix.hpp"

#include <algorithm>
#include <limits>

#include "cyc/error.hpp"

namespace cyc {

void canonicalize(SparseVec& v) {
  bool sorted = true;
  for (std::size_t i = 1; i < v.size() && sorted; ++i) sorted = v[i - 1].index < v[i].index;
  if (sorted) {
    if (std::none_of(v.begin(), v.end(), [](const Entry& e) { return e.value.is_zero(); })) return;
    std::erase_if(v, [](const Entry& e) { return e.value.is_zero(); });
    return;
  }
  // Sort plain (index, position) keys; scalars are moved once, not per swap.
  std::vector<std::pair<Index, std::size_t>> keys(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) keys[i] = {v[i].index, i};
  std::sort(keys.begin(), keys.end());
  SparseVec out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < keys.size();) {
    Entry acc{keys[i].first, std::move(v[keys[i].second].value)};
    std::size_t j = i + 1;
    for (; j < keys.size() && keys[j].first == acc.index; ++j) acc.value += v[keys[j].second].value;
    if (!acc.value.is_zero()) out.push_back(std::move(acc));
    i = j;
  }
  v = std::move(out);
}

Index ipow(Index base, std::size_t exp) {
  Index r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

Matrix::Matrix(Index rows, Index cols, Field field)
    : rows_(rows), cols_(cols), field_(field), columns_(static_cast<std::size_t>(cols)) {}

Matrix Matrix::identity(Index n, Field field) {
  Matrix m(n, n, field);
  for (Index j = 0; j < n; ++j) m.columns_[j].push_back({j, field.one()});
  return m;
}

Matrix Matrix::from_dense(Index rows, Index cols, const std::vector<Scalar>& values, Field field) {
  if (values.size() != rows * cols)
    throw ShapeError("from_dense: expected " + std::to_string(rows * cols) + " values, got " +
                     std::to_string(values.size()));
  Matrix m(rows, cols, field);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) {
      const Scalar& v = values[i * cols + j];
      if (v.field() != field) throw DomainError("from_dense: scalar outside the matrix field");
      if (!v.is_zero()) m.columns_[j].push_back({i, v});
    }
  return m;
}

void Matrix::set_column(Index j, SparseVec v) {
  canonicalize(v);
  if (!v.empty() && v.back().index >= rows_) throw ShapeError("set_column: row index out of range");
  columns_[j] = std::move(v);
}

Scalar Matrix::at(Index i, Index j) const {
  const auto& col = columns_[j];
  auto it = std::lower_bound(col.begin(), col.end(), i, [](const Entry& e, Index k) { return e.index < k; });
  if (it != col.end() && it->index == i) return it->value;
  return field_.zero();
}

std::size_t Matrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

bool Matrix::is_zero() const { return nnz() == 0; }

std::vector<std::string> Matrix::dense_strings() const {
  std::vector<std::string> out(static_cast<std::size_t>(rows_ * cols_), field_.zero().str());
  for (Index j = 0; j < cols_; ++j)
    for (const auto& e : columns_[j]) out[e.index * cols_ + j] = e.value.str();
  return out;
}

namespace {

void check_same_shape(const Matrix& a, const Matrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError(std::string(what) + ": " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
                     std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  if (a.field() != b.field()) throw DomainError(std::string(what) + ": matrices over different fields");
}

Matrix combine(const Matrix& a, const Matrix& b, bool subtract) {
  check_same_shape(a, b, subtract ? "subtract" : "add");
  Matrix out(a.rows(), a.cols(), a.field());
  for (Index j = 0; j < a.cols(); ++j) {
    SparseVec v = a.column(j);
    for (const auto& e : b.column(j)) v.push_back({e.index, subtract ? -e.value : e.value});
    out.set_column(j, std::move(v));
  }
  return out;
}

}  // namespace

Matrix operator+(const Matrix& a, const Matrix& b) { return combine(a, b, false); }
Matrix operator-(const Matrix& a, const Matrix& b) { return combine(a, b, true); }

Matrix scale(const Matrix& a, const Scalar& s) {
  Matrix out(a.rows(), a.cols(), a.field());
  for (Index j = 0; j < a.cols(); ++j) {
    SparseVec v;
    for (const auto& e : a.column(j)) v.push_back({e.index, e.value * s});
    out.set_column(j, std::move(v));
  }
  return out;
}

SparseVec apply(const Matrix& a, const SparseVec& v) {
  SparseVec out;
  for (const auto& e : v) {
    if (e.index >= a.cols()) throw ShapeError("apply: vector index out of range");
    for (const auto& x : a.column(e.index)) out.push_back({x.index, x.value * e.value});
  }
  canonicalize(out);
  return out;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    throw ShapeError("multiply: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " by " +
                     std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  if (a.field() != b.field()) throw DomainError("multiply: matrices over different fields");
  Matrix out(a.rows(), b.cols(), a.field());
  std::vector<SparseVec> cols(static_cast<std::size_t>(b.cols()));
  const auto n = static_cast<std::int64_t>(b.cols());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t j = 0; j < n; ++j) cols[static_cast<std::size_t>(j)] = apply(a, b.column(static_cast<Index>(j)));
  for (Index j = 0; j < b.cols(); ++j) out.set_column(j, std::move(cols[j]));
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) throw DomainError("kron: matrices over different fields");
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols(), a.field());
  for (Index ja = 0; ja < a.cols(); ++ja)
    for (Index jb = 0; jb < b.cols(); ++jb) {
      SparseVec v;
      for (const auto& ea : a.column(ja))
        for (const auto& eb : b.column(jb)) v.push_back({ea.index * b.rows() + eb.index, ea.value * eb.value});
      out.set_column(ja * b.cols() + jb, std::move(v));
    }
  return out;
}

Matrix transpose(const Matrix& a) {
  std::vector<SparseVec> rows(static_cast<std::size_t>(a.rows()));
  for (Index j = 0; j < a.cols(); ++j)
    for (const auto& e : a.column(j)) rows[e.index].push_back({j, e.value});
  Matrix out(a.cols(), a.rows(), a.field());
  for (Index i = 0; i < a.rows(); ++i) out.set_column(i, std::move(rows[i]));
  return out;
}

namespace {

std::size_t log_exact(Index n, Index d) {
  std::size_t k = 0;
  Index p = 1;
  while (p < n) {
    p *= d;
    ++k;
  }
  if (p != n) throw ShapeError("mirror: dimension " + std::to_string(n) + " is not a power of " + std::to_string(d));
  return k;
}

Index reverse_digits(Index x, Index d, std::size_t k) {
  Index out = 0;
  for (std::size_t i = 0; i < k; ++i) {
    out = out * d + x % d;
    x /= d;
  }
  return out;
}

}  // namespace

Matrix mirror(const Matrix& a, Index d) {
  if (d < 2) return a;
  const auto kr = log_exact(a.rows(), d);
  const auto kc = log_exact(a.cols(), d);
  Matrix out(a.rows(), a.cols(), a.field());
  for (Index j = 0; j < a.cols(); ++j) {
    SparseVec v;
    for (const auto& e : a.column(j)) v.push_back({reverse_digits(e.index, d, kr), e.value});
    out.set_column(reverse_digits(j, d, kc), std::move(v));
  }
  return out;
}

std::optional<Mismatch> first_difference(const Matrix& a, const Matrix& b) {
  constexpr Index kShape = std::numeric_limits<Index>::max();
  if (a.rows() != b.rows() || a.cols() != b.cols())
    return Mismatch{kShape, kShape, std::to_string(a.rows()) + "x" + std::to_string(a.cols()),
                    std::to_string(b.rows()) + "x" + std::to_string(b.cols())};
  for (Index j = 0; j < a.cols(); ++j) {
    const auto& ca = a.column(j);
    const auto& cb = b.column(j);
    if (ca == cb) continue;
    std::size_t ia = 0, ib = 0;
    while (ia < ca.size() || ib < cb.size()) {
      Index ra = ia < ca.size() ? ca[ia].index : kShape;
      Index rb = ib < cb.size() ? cb[ib].index : kShape;
      Index row = std::min(ra, rb);
      Scalar va = ra == row ? ca[ia].value : a.field().zero();
      Scalar vb = rb == row ? cb[ib].value : b.field().zero();
      if (!(va == vb)) return Mismatch{row, j, va.str(), vb.str()};
      if (ra == row) ++ia;
      if (rb == row) ++ib;
    }
  }
  return std::nullopt;
}

namespace {

using Dense = std::vector<std::vector<Scalar>>;

Dense to_dense(const Matrix& a) {
  Dense d(static_cast<std::size_t>(a.rows()), std::vector<Scalar>(static_cast<std::size_t>(a.cols()), a.field().zero()));
  for (Index j = 0; j < a.cols(); ++j)
    for (const auto& e : a.column(j)) d[e.index][j] = e.value;
  return d;
}

// Reduces `m` to reduced row echelon form in place; returns the pivot count.
// Over Z/m only unit pivots are used, which is exact when m is prime.
std::size_t row_reduce(Dense& m, std::size_t cols) {
  const std::size_t rows = m.size();
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t r = pivot_row; r < rows; ++r) {
      if (m[r][c].is_zero()) continue;
      try {
        (void)m[r][c].inverse();
      } catch (const DomainError&) {
        continue;
      }
      sel = r;
      break;
    }
    if (sel == rows) continue;
    std::swap(m[pivot_row], m[sel]);
    Scalar inv = m[pivot_row][c].inverse();
    for (auto& x : m[pivot_row]) x *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || m[r][c].is_zero()) continue;
      Scalar f = m[r][c];
      for (std::size_t k = 0; k < m[r].size(); ++k) m[r][k] -= f * m[pivot_row][k];
    }
    ++pivot_row;
  }
  return pivot_row;
}

}  // namespace

std::size_t rank(const Matrix& a) {
  Dense d = to_dense(a);
  return row_reduce(d, static_cast<std::size_t>(a.cols()));
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  const auto n = static_cast<std::size_t>(a.rows());
  Dense d = to_dense(a);
  for (std::size_t i = 0; i < n; ++i) {
    d[i].resize(2 * n, a.field().zero());
    d[i][n + i] = a.field().one();
  }
  if (row_reduce(d, n) != n) return std::nullopt;
  Matrix out(a.rows(), a.cols(), a.field());
  for (std::size_t j = 0; j < n; ++j) {
    SparseVec v;
    for (std::size_t i = 0; i < n; ++i)
      if (!d[i][n + j].is_zero()) v.push_back({i, d[i][n + j]});
    out.set_column(j, std::move(v));
  }
  // Over a composite modulus the unit-pivot elimination can stall; confirm.
  if (!(multiply(a, out) == Matrix::identity(a.rows(), a.field()))) return std::nullopt;
  return out;
}

}  // namespace cyc
