#pragma once

// Applying whiskered structure maps id^{a} (x) M (x) id^{b} to tensor-power
// matrices without materializing the Kronecker product. The parallel kernels
// split the work over columns with OpenMP; the `reference` namespace keeps a
// serial implementation that does materialize the layers, used as a test
// oracle and as the benchmark baseline.

#include <vector>

#include "cyc/matrix.hpp"

namespace cyc {

/// id_{outer} (x) op (x) id_{inner}. `outer` is implied by the operand.
struct LocalOp {
  const Matrix* op = nullptr;
  Index inner = 1;
};

/// Dimension of the result of applying `step` to a space of dimension `dim`.
Index local_target_dim(const LocalOp& step, Index dim);

/// step applied to one vector of dimension `dim`.
SparseVec apply_local(const LocalOp& step, const SparseVec& v, Index dim);

/// steps applied in order (front first) to every column of `m`. Columns are
/// processed in parallel.
Matrix apply_chain(const std::vector<LocalOp>& steps, const Matrix& m);

/// The full matrix of id_{outer} (x) op (x) id_{inner}.
Matrix materialize(const LocalOp& step, Index outer);

namespace reference {

/// Single-threaded a o b.
Matrix multiply(const Matrix& a, const Matrix& b);

/// Materializes each step and multiplies serially.
Matrix apply_chain(const std::vector<LocalOp>& steps, const Matrix& m);

}  // namespace reference

}  // namespace cyc
