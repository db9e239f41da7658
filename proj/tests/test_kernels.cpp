#include <doctest.h>

#include <random>

#include "cyc/error.hpp"
#include "cyc/kernels.hpp"

using namespace cyc;

namespace {

Matrix random_matrix(Index rows, Index cols, const Field& f, std::mt19937_64& rng, int density_percent) {
  Matrix m(rows, cols, f);
  for (Index j = 0; j < cols; ++j) {
    SparseVec col;
    for (Index i = 0; i < rows; ++i)
      if (static_cast<int>(rng() % 100) < density_percent)
        col.push_back({i, f.from_int(static_cast<long>(rng() % 7) - 3)});
    m.set_column(j, std::move(col));
  }
  return m;
}

}  // namespace

TEST_CASE("a local operator equals its materialized Kronecker product") {
  std::mt19937_64 rng(7);
  for (const Field& f : {Field::rationals(), Field::integers_mod(5)}) {
    const Matrix op = random_matrix(3, 2, f, rng, 60);
    for (Index outer : {1, 2, 3})
      for (Index inner : {1, 2, 4}) {
        const Index dim = outer * 2 * inner;
        const Matrix input = random_matrix(dim, 5, f, rng, 40);
        const Matrix fast = apply_chain({{&op, inner}}, input);
        const Matrix slow = multiply(materialize({&op, inner}, outer), input);
        CHECK(fast == slow);
        CHECK(fast.rows() == outer * 3 * inner);
      }
  }
}

TEST_CASE("parallel chain matches the serial reference") {
  std::mt19937_64 rng(11);
  const Field q = Field::rationals();
  const Matrix a = random_matrix(4, 2, q, rng, 50);  // 2 -> 4
  const Matrix b = random_matrix(2, 4, q, rng, 50);  // 4 -> 2
  const Matrix c = random_matrix(2, 2, q, rng, 70);
  const std::vector<LocalOp> steps{{&a, 4}, {&c, 1}, {&b, 2}, {&a, 1}, {&c, 16}};
  const Matrix input = random_matrix(16, 40, q, rng, 30);
  CHECK(apply_chain(steps, input) == reference::apply_chain(steps, input));
}

TEST_CASE("parallel multiply matches the serial reference") {
  std::mt19937_64 rng(3);
  const Field z5 = Field::integers_mod(5);
  const Matrix a = random_matrix(30, 25, z5, rng, 30);
  const Matrix b = random_matrix(25, 60, z5, rng, 30);
  CHECK(multiply(a, b) == reference::multiply(a, b));
}

TEST_CASE("shape errors") {
  const Field q = Field::rationals();
  const Matrix op = Matrix::identity(3, q);
  CHECK_THROWS_AS(apply_chain({{&op, 2}}, Matrix::identity(4, q)), ShapeError);
  CHECK(local_target_dim({&op, 2}, 12) == 12);
  CHECK_THROWS_AS(reference::multiply(op, Matrix::identity(2, q)), ShapeError);
}
