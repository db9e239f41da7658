#include "cyc/kernels.hpp"

#include <cstdint>

#include "cyc/error.hpp"

namespace cyc {

namespace {

Index outer_dim(const LocalOp& step, Index dim) {
  const Index block = step.op->cols() * step.inner;
  if (block == 0 || dim % block != 0)
    throw ShapeError("local op of width " + std::to_string(block) + " does not divide dimension " +
                     std::to_string(dim));
  return dim / block;
}

}  // namespace

Index local_target_dim(const LocalOp& step, Index dim) {
  return outer_dim(step, dim) * step.op->rows() * step.inner;
}

SparseVec apply_local(const LocalOp& step, const SparseVec& v, Index dim) {
  (void)outer_dim(step, dim);
  const Matrix& op = *step.op;
  const Index in = op.cols();
  const Index out = op.rows();
  const Index inner = step.inner;
  SparseVec result;
  std::size_t expected = 0;
  for (const auto& e : v) expected += op.column((e.index / inner) % in).size();
  result.reserve(expected);
  for (const auto& e : v) {
    const Index lo = e.index % inner;
    const Index mid = (e.index / inner) % in;
    const Index hi = e.index / (inner * in);
    const Index base = hi * out;
    for (const auto& x : op.column(mid)) result.push_back({(base + x.index) * inner + lo, x.value * e.value});
  }
  canonicalize(result);
  return result;
}

Matrix apply_chain(const std::vector<LocalOp>& steps, const Matrix& m) {
  std::vector<Index> dims{m.rows()};
  for (const auto& s : steps) dims.push_back(local_target_dim(s, dims.back()));
  std::vector<SparseVec> cols(static_cast<std::size_t>(m.cols()));
  const auto n = static_cast<std::int64_t>(m.cols());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t j = 0; j < n; ++j) {
    SparseVec v = m.column(static_cast<Index>(j));
    for (std::size_t k = 0; k < steps.size(); ++k) v = apply_local(steps[k], v, dims[k]);
    cols[static_cast<std::size_t>(j)] = std::move(v);
  }
  Matrix out(dims.back(), m.cols(), m.field());
  for (Index j = 0; j < m.cols(); ++j) out.set_column(j, std::move(cols[j]));
  return out;
}

Matrix materialize(const LocalOp& step, Index outer) {
  const Field& f = step.op->field();
  return kron(kron(Matrix::identity(outer, f), *step.op), Matrix::identity(step.inner, f));
}

namespace reference {

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw ShapeError("reference::multiply: shape mismatch");
  Matrix out(a.rows(), b.cols(), a.field());
  for (Index j = 0; j < b.cols(); ++j) out.set_column(j, apply(a, b.column(j)));
  return out;
}

Matrix apply_chain(const std::vector<LocalOp>& steps, const Matrix& m) {
  Matrix acc = m;
  for (const auto& s : steps) acc = reference::multiply(materialize(s, outer_dim(s, acc.rows())), acc);
  return acc;
}

}  // namespace reference

}  // namespace cyc
