#include <doctest.h>

#include <climits>

#include "cyc/error.hpp"
#include "cyc/matrix.hpp"

using namespace cyc;

namespace {

const Field Q = Field::rationals();
const Field Z5 = Field::integers_mod(5);

Matrix dense(Index rows, Index cols, std::initializer_list<long> v, const Field& f = Q) {
  std::vector<Scalar> s;
  for (long x : v) s.push_back(f.from_int(x));
  return Matrix::from_dense(rows, cols, s, f);
}

}  // namespace

TEST_CASE("rational arithmetic") {
  const Scalar half = Q.parse_scalar("1/2");
  const Scalar third = Q.parse_scalar("-2/6");
  CHECK(third.str() == "-1/3");
  CHECK((half + third).str() == "1/6");
  CHECK((half * third).str() == "-1/6");
  CHECK((half - half).is_zero());
  CHECK((half * Q.from_int(2)).is_one());
  CHECK(third.inverse().str() == "-3");
  CHECK_THROWS_AS(Q.zero().inverse(), DomainError);
  CHECK_THROWS_AS(Q.parse_scalar("1/0"), ConfigError);
  CHECK_THROWS_AS(Q.parse_scalar("x"), ConfigError);
}

TEST_CASE("rationals beyond 64 bits stay exact and compare by value") {
  Scalar big = Q.from_int(LONG_MAX);
  big *= Q.from_int(LONG_MAX);
  CHECK(big.str() == "85070591730234615847396907784232501249");
  Scalar back = big * Q.from_int(LONG_MAX).inverse();
  CHECK(back == Q.from_int(LONG_MAX));
  Scalar sum = Q.from_int(LONG_MAX) + Q.from_int(1);
  CHECK(sum.str() == "9223372036854775808");
  CHECK(sum - Q.from_int(1) == Q.from_int(LONG_MAX));
  Scalar tiny = Q.parse_scalar("1/9223372036854775807") * Q.parse_scalar("1/3");
  CHECK(tiny.str() == "1/27670116110564327421");
  CHECK((tiny * Q.from_int(3)) == Q.parse_scalar("1/9223372036854775807"));
  CHECK((-Q.from_int(LONG_MIN)).str() == "9223372036854775808");
}

TEST_CASE("residues") {
  CHECK(Z5.from_int(-1).str() == "4");
  CHECK((Z5.from_int(3) * Z5.from_int(4)).str() == "2");
  CHECK((Z5.from_int(3) + Z5.from_int(4)).str() == "2");
  CHECK(Z5.from_int(2).inverse().str() == "3");
  CHECK(Z5.parse_scalar("1/2").str() == "3");
  CHECK(Z5.from_int(10).is_zero());
  CHECK_THROWS_AS(Field::integers_mod(6).from_int(2).inverse(), DomainError);
  CHECK_THROWS_AS(Q.one() + Z5.one(), DomainError);
  CHECK(Field::parse("Z/5") == Z5);
  CHECK(Field::parse("Q") == Q);
  CHECK_THROWS_AS(Field::parse("R"), ConfigError);
}

TEST_CASE("sparse storage is canonical") {
  Matrix m(3, 2, Q);
  m.set_column(0, {{2, Q.one()}, {0, Q.one()}, {2, -Q.one()}});
  CHECK(m.column(0).size() == 1);
  CHECK(m.at(0, 0).is_one());
  CHECK(m.at(2, 0).is_zero());
  CHECK_THROWS_AS(m.set_column(1, {{3, Q.one()}}), ShapeError);
  CHECK(m == dense(3, 2, {1, 0, 0, 0, 0, 0}));
}

TEST_CASE("products, kron and transpose") {
  const Matrix a = dense(2, 2, {1, 2, 3, 4});
  const Matrix b = dense(2, 2, {0, 1, 1, 0});
  CHECK(multiply(a, b) == dense(2, 2, {2, 1, 4, 3}));
  CHECK(multiply(b, a) == dense(2, 2, {3, 4, 1, 2}));
  CHECK(transpose(a) == dense(2, 2, {1, 3, 2, 4}));
  // a outermost: block (i, j) of kron(a, b) is a_ij * b
  CHECK(kron(a, b) == dense(4, 4, {0, 1, 0, 2,  //
                                   1, 0, 2, 0,  //
                                   0, 3, 0, 4,  //
                                   3, 0, 4, 0}));
  CHECK(kron(Matrix::identity(1, Q), a) == a);
  CHECK_THROWS_AS(multiply(a, dense(1, 2, {1, 1})), ShapeError);
  CHECK(a + b - b == a);
  CHECK(scale(a, Q.from_int(0)).is_zero());
}

TEST_CASE("mirror reverses tensor factors") {
  const Matrix a = dense(2, 2, {1, 2, 3, 4});
  const Matrix b = dense(2, 2, {5, 6, 7, 8});
  CHECK(mirror(kron(a, b), 2) == kron(b, a));
  const Matrix c = dense(2, 2, {0, 1, 1, 1});
  CHECK(mirror(kron(kron(a, b), c), 2) == kron(kron(c, b), a));
}

TEST_CASE("first difference") {
  const Matrix a = dense(2, 2, {1, 2, 3, 4});
  CHECK_FALSE(first_difference(a, a));
  const auto m = first_difference(a, dense(2, 2, {1, 2, 3, 5}));
  REQUIRE(m);
  CHECK(m->row == 1);
  CHECK(m->col == 1);
  CHECK(m->lhs == "4");
  CHECK(m->rhs == "5");
  const auto shape = first_difference(a, Matrix::identity(3, Q));
  REQUIRE(shape);
  CHECK(shape->row == std::numeric_limits<Index>::max());
}

TEST_CASE("rank and inverse") {
  const Matrix a = dense(3, 3, {2, 1, 2, 1, 2, 9, 1, 2, 7});
  CHECK(rank(a) == 3);
  auto inv = inverse(a);
  REQUIRE(inv);
  CHECK(multiply(a, *inv) == Matrix::identity(3, Q));

  // over Z/11 the inverse has integer entries
  const Field z11 = Field::integers_mod(11);
  auto inv11 = inverse(dense(3, 3, {2, 1, 2, 1, 2, 9, 1, 2, 7}, z11));
  REQUIRE(inv11);
  CHECK(*inv11 == dense(3, 3, {8, 6, 1, 7, 9, 10, 0, 6, 5}, z11));

  CHECK(rank(dense(2, 2, {1, 2, 2, 4})) == 1);
  CHECK_FALSE(inverse(dense(2, 2, {1, 2, 2, 4})));
  CHECK_FALSE(inverse(dense(2, 3, {1, 0, 0, 0, 1, 0})));
  CHECK(ipow(4, 3) == 64);
}
