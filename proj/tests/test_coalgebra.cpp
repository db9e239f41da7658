#include <doctest.h>

#include <functional>

#include "cyc/coalgebra.hpp"
#include "cyc/error.hpp"
#include "cyc/expand.hpp"
#include "cyc/kernels.hpp"
#include "cyc/relations.hpp"

using namespace cyc;

namespace {

const Field Q = Field::rationals();

std::string axiom_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const AxiomError& e) {
    return e.axiom();
  }
  return "";
}

// d group-like elements: delta(g_i) = g_i (x) g_i, eps(g_i) = 1.
std::pair<Matrix, Matrix> grouplikes(Index d) {
  Matrix comult(d * d, d, Q), counit(1, d, Q);
  for (Index i = 0; i < d; ++i) {
    comult.set_column(i, {{i * d + i, Q.one()}});
    counit.set_column(i, {{0, Q.one()}});
  }
  return {comult, counit};
}

}  // namespace

TEST_CASE("built-in coalgebras load") {
  const auto all = builtin_coalgebras();
  REQUIRE(all.size() == 4);
  CHECK(all[0].dim == 1);
  CHECK(all[1].dim == 2);
  CHECK(all[2].dim == 4);
  CHECK(all[3].field == Field::integers_mod(5));
  // delta(e_01) = e_00 (x) e_01 + e_01 (x) e_11
  const Coalgebra m = all[2];
  CHECK(m.comult.column(1).size() == 2);
  CHECK(m.comult.at(0 * 4 + 1, 1).is_one());
  CHECK(m.comult.at(1 * 4 + 3, 1).is_one());
  CHECK(m.counit.at(0, 0).is_one());
  CHECK(m.counit.at(0, 1).is_zero());
}

TEST_CASE("the loader rejects broken structure maps") {
  Matrix one = Matrix::identity(1, Q);
  CHECK(axiom_of([&] { make_coalgebra("zero-counit", Q, 1, one, Matrix(1, 1, Q)); }) == "counit_left");

  auto [comult, counit] = grouplikes(3);
  comult.set_column(0, {{0, Q.one()}, {1 * 3 + 2, Q.one()}});
  CHECK(axiom_of([&] { make_coalgebra("skew", Q, 3, comult, counit); }) == "coassociativity");

  CHECK_THROWS_AS(make_coalgebra("shape", Q, 2, one, one), ShapeError);
  CHECK_THROWS_AS(make_coalgebra("field", Q, 1, Matrix::identity(1, Field::integers_mod(5)), one), DomainError);
}

TEST_CASE("large coalgebras use the functional test and still catch failures") {
  const Index d = kExhaustiveCoassociativityDim + 4;
  auto [comult, counit] = grouplikes(d);
  CHECK_NOTHROW(make_coalgebra("big", Q, d, comult, counit));

  // breaks coassociativity at g_7 only
  comult.set_column(7, {{7 * d + 7, Q.one()}, {1 * d + 2, Q.one()}});
  try {
    make_coalgebra("big-skew", Q, d, comult, counit);
    FAIL("accepted a non-coassociative coalgebra");
  } catch (const AxiomError& e) {
    CHECK(e.axiom() == "coassociativity");
    CHECK(std::string(e.what()).find(",7)") != std::string::npos);
  }
}

TEST_CASE("trivial symmetry") {
  const Coalgebra g = grouplike1();
  const BraidCandidate t = trivial_symmetry_matrix(g);
  CHECK(t.t == Matrix::identity(1, Q));

  for (const auto& c : builtin_coalgebras()) {
    const BraidCandidate tc = trivial_symmetry_matrix(c);
    CHECK(multiply(tc.t, tc.t) == Matrix::identity(c.dim * c.dim, c.field));
    REQUIRE(tc.inverse);
    CHECK(*tc.inverse == tc.t);
  }
}

TEST_CASE("theta") {
  for (const auto& c : builtin_coalgebras()) {
    CHECK(theta_matrix(c, c.field.one(), c.field.one()).t == trivial_symmetry_matrix(c).t);
    const BraidCandidate z = theta_matrix(c, c.field.zero(), c.field.zero());
    CHECK(z.t.is_zero());
    CHECK_FALSE(z.inverse);
  }
  const Coalgebra m = builtin_coalgebras()[2];
  const BraidCandidate th = theta_matrix(m, Q.from_int(2), Q.from_int(3));
  const auto q = relation_sides("qybe");
  CHECK(eval_termexpr(m, &th, q.lhs) == eval_termexpr(m, &th, q.rhs));
}

TEST_CASE("braid candidates check a supplied inverse") {
  const Matrix t = Matrix::identity(4, Q);
  CHECK_NOTHROW(make_braid("id", t, t));
  CHECK(axiom_of([&] { make_braid("bad", t, scale(t, Q.from_int(2))); }) == "inverse");
  CHECK_FALSE(make_braid("zero", Matrix(4, 4, Q)).inverse);
}

TEST_CASE("evaluating words") {
  const Coalgebra m = builtin_coalgebras()[2];
  const BraidCandidate t = trivial_symmetry_matrix(m);
  CHECK(eval_word(m, &t, Word(3)) == Matrix::identity(64, Q));
  CHECK(eval_word(m, nullptr, delta()) == m.comult);
  CHECK(eval_word(m, nullptr, eps()) == m.counit);
  CHECK(eval_word(m, &t, braid()) == t.t);
  CHECK(eval_word(m, &t, braid_inv()) == t.t);
  CHECK_THROWS_AS(eval_word(m, nullptr, braid()), DomainError);
  CHECK(eval_word(m, nullptr, delta(1, 0)) == kron(Matrix::identity(4, Q), m.comult));
  CHECK(eval_word(m, nullptr, delta(0, 1)) == kron(m.comult, Matrix::identity(4, Q)));
}

TEST_CASE("iterated comultiplication") {
  const Coalgebra m = builtin_coalgebras()[2];
  CHECK(iterated_comult(m, 0) == m.counit);
  CHECK(iterated_comult(m, 1) == Matrix::identity(4, Q));
  CHECK(iterated_comult(m, 2) == m.comult);
  CHECK(iterated_comult(m, 3) == apply_chain({{&m.comult, 4}}, m.comult));
}

TEST_CASE("tuples evaluate like the words they came from") {
  for (const auto& c : builtin_coalgebras()) {
    const BraidCandidate t = trivial_symmetry_matrix(c);
    CHECK(eval_lincomb(c, IntLinComb::identity(3)) == Matrix::identity(c.dim * c.dim * c.dim, c.field));
    for (const Word& w : {cyclic_word(1), cyclic_word(2), coproduct_n(2), face(2, 1), degeneracy(1, 0),
                          power(cyclic_word(2), 2)})
      CHECK(eval_lincomb(c, expand_trivial(w)) == eval_word(c, &t, w));
  }
}

TEST_CASE("polynomial coefficients need bindings") {
  const Coalgebra m = builtin_coalgebras()[2];
  const PolyLinComb theta = expand_theta(cyclic_word(2));
  CHECK_THROWS_AS(eval_lincomb(m, theta, std::nullopt), DomainError);
  const Bindings b{Q.from_int(2), Q.from_int(3)};
  const BraidCandidate th = theta_matrix(m, b.p, b.r);
  CHECK(eval_lincomb(m, theta, b) == eval_word(m, &th, cyclic_word(2)));
  CHECK(evaluate(PolyPR::p() * PolyPR::r() - PolyPR(1), b, Q) == Q.from_int(5));
  CHECK(eval_lincomb(m, expand_symbolic(cyclic_word(1), Substitution::trivial), std::nullopt) ==
        trivial_symmetry_matrix(m).t);
}
