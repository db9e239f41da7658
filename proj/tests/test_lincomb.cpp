#include <doctest.h>

#include "cyc/error.hpp"
#include "cyc/lincomb.hpp"

using namespace cyc;

namespace {

IntLinComb L(const char* s) { return parse_int_lincomb(s); }

// Collects x o y term by term through a plain map, independent of LinComb::add.
std::map<Tuple, long> brute_compose(const IntLinComb& x, const IntLinComb& y) {
  std::map<Tuple, long> acc;
  for (const auto& [tx, cx] : x.terms())
    for (const auto& [ty, cy] : y.terms()) acc[compose(tx, ty)] += cx.get_si() * cy.get_si();
  std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
  return acc;
}

std::map<Tuple, long> as_map(const IntLinComb& x) {
  std::map<Tuple, long> out;
  for (const auto& [t, c] : x.terms()) out[t] = c.get_si();
  return out;
}

}  // namespace

TEST_CASE("PolyPR ring operations") {
  const PolyPR p = PolyPR::p(), r = PolyPR::r();
  CHECK((p + r) * (p - r) == p * p - r * r);
  CHECK((p * r).str() == "p*r");
  CHECK((PolyPR(3) * p * p - r).str() == "3*p^2 - r");
  CHECK((p - p).is_zero());
  CHECK((p * p * r).evaluate(2, 3) == 12);
  CHECK(PolyPR(0).is_zero());
}

TEST_CASE("canonical form drops zero coefficients") {
  IntLinComb x(2, 2);
  x.add(Tuple::parse("02"), 1);
  x.add(Tuple::parse("02"), -1);
  CHECK(x.empty());
  CHECK(render(x) == "0");
  CHECK_THROWS_AS(x.add(Tuple::parse("3"), 1), ShapeError);
}

TEST_CASE("render and parse round trip") {
  const IntLinComb t2 = L("003 - 021 + 030 - 102 + 111 - 120 + 210");
  CHECK(render(t2) == "003 - 021 + 030 - 102 + 111 - 120 + 210");
  CHECK(render(t2, true) == "003 − 021 + 030 − 102 + 111 − 120 + 210");
  CHECK(L("00005-00041+00050").size() == 3);
  CHECK(L("3*02 - 11").coeff(Tuple::parse("02")) == 3);
  CHECK_THROWS_AS(L("02 11"), ShapeError);
  CHECK_THROWS_AS(L(""), ShapeError);
}

TEST_CASE("bilinear composition") {
  const IntLinComb tau = L("02 - 11 + 20");
  CHECK(lincomb_compose(tau, IntLinComb::identity(2)) == tau);
  CHECK(lincomb_compose(IntLinComb::identity(2), tau) == tau);

  // tau squared is the identity
  CHECK(lincomb_compose(tau, tau) == IntLinComb::identity(2));
  CHECK(brute_compose(tau, tau) == as_map(IntLinComb::identity(2)));

  const IntLinComb x = L("021 - 111 + 201");
  const IntLinComb y = L("102 - 111 + 120");
  const IntLinComb expected = L("003 - 021 + 030 - 102 + 111 - 120 + 210");
  CHECK(brute_compose(x, y) == as_map(expected));
  CHECK(lincomb_compose(x, y) == expected);

  CHECK_THROWS_AS(lincomb_compose(tau, L("003")), ShapeError);
}

TEST_CASE("tensor of combinations") {
  const IntLinComb tau = L("02 - 11 + 20");
  const IntLinComb one = IntLinComb::identity(1);
  CHECK(lincomb_tensor(tau, one) == L("021 - 111 + 201"));
  CHECK(lincomb_tensor(one, tau) == L("102 - 111 + 120"));
}

TEST_CASE("alternating sign check") {
  CHECK(nalt_check(L("0004 - 0040 + 1210 - 1300")));
  CHECK_FALSE(nalt_check(L("02 + 11")));
  CHECK(nalt_check(L("003 - 021 + 030 - 102 + 111 - 120 + 210")));
  CHECK_FALSE(nalt_check(L("-02 + 11")));
  CHECK_FALSE(nalt_check(L("2*02 - 11")));
  CHECK_FALSE(nalt_check(IntLinComb(2, 2)));
}

TEST_CASE("norm_theta weights by the abc string") {
  const PolyLinComb n = norm_theta(L("02 - 11 + 20"));
  CHECK(render(n, true) == "p·02 − p·11 + r·20");
  CHECK(n.coeff(Tuple::parse("20")) == PolyPR::r());

  // an all-c term of length n picks up r^(n-1)
  const PolyLinComb c = norm_theta(L("21110"));
  CHECK(c.coeff(Tuple::parse("21110")) == PolyPR::monomial(1, 0, 4));

  // 003 has no abc string
  CHECK_THROWS_AS(norm_theta(L("003 - 021")), DomainError);

  const IntLinComb t2_encodable = L("021 + 030 - 102 + 111 - 120 + 210");
  CHECK(specialize(norm_theta(t2_encodable), 1, 1) == t2_encodable);
}

TEST_CASE("specialization and embedding") {
  const IntLinComb tau = L("02 - 11 + 20");
  CHECK(specialize(to_poly(tau), 7, 9) == tau);
  PolyLinComb theta(2, 2);
  theta.add(Tuple::parse("02"), PolyPR::p());
  theta.add(Tuple::parse("11"), -PolyPR::p());
  theta.add(Tuple::parse("20"), PolyPR::r());
  CHECK(specialize(theta, 1, 1) == tau);
  CHECK(specialize(theta, 2, 3) == L("2*02 - 2*11 + 3*20"));
  CHECK(specialize(theta, 0, 0).empty());
}
