#include <doctest.h>

#include <algorithm>

#include "cyc/cyclic_object.hpp"
#include "cyc/error.hpp"

using namespace cyc;

namespace {

void require_all_hold(const CyclicObjectData& x) {
  const auto checks = check_cyclic_object(x);
  CHECK_FALSE(checks.empty());
  for (const auto& c : checks) {
    INFO(x.name << " " << c.label);
    CHECK(c.holds());
  }
}

bool same_object(const CyclicObjectData& a, const CyclicObjectData& b) {
  return a.levels == b.levels && a.dims == b.dims && a.faces == b.faces && a.degens == b.degens &&
         a.cyclic == b.cyclic;
}

}  // namespace

TEST_CASE("comonad objects satisfy every relation") {
  for (const auto& c : builtin_coalgebras()) {
    const std::size_t levels = c.dim > 2 ? 3 : 4;
    const CyclicObjectData x = from_comonad(c, trivial_symmetry_matrix(c), levels);
    CHECK(x.is_cyclic);
    REQUIRE(x.dims.size() == levels + 1);
    CHECK(x.dims[2] == c.dim * c.dim * c.dim);
    CHECK(x.faces[2].size() == 3);
    CHECK(x.degens[1].size() == 2);
    CHECK(x.cyclic[0] == Matrix::identity(c.dim, c.field));
    require_all_hold(x);
    CHECK_NOTHROW(validate(x));
  }
}

TEST_CASE("constant and Hochschild objects") {
  const Field q = Field::rationals();
  const CyclicObjectData k = constant_cyclic_object(q, 4);
  CHECK(std::all_of(k.dims.begin(), k.dims.end(), [](Index d) { return d == 1; }));
  require_all_hold(k);

  const CyclicObjectData h = hochschild_cyclic_object(q, 3);
  CHECK(h.dims == std::vector<Index>{2, 4, 8, 16});
  // basis 1, x of k[x]/(x^2); d_0(1 (x) x) = x, d_0(x (x) x) = 0
  CHECK(h.faces[1][0].at(1, 0 * 2 + 1).is_one());
  CHECK(h.faces[1][0].column(1 * 2 + 1).empty());
  // t_1(1 (x) x) = x (x) 1
  CHECK(h.cyclic[1].at(1 * 2 + 0, 0 * 2 + 1).is_one());
  require_all_hold(h);
  require_all_hold(hochschild_cyclic_object(Field::integers_mod(5), 3));
}

TEST_CASE("a broken structure map is reported by name") {
  const Field q = Field::rationals();
  CyclicObjectData k = constant_cyclic_object(q, 3);
  k.faces[2][1] = scale(k.faces[2][1], q.from_int(2));
  const auto checks = check_cyclic_object(k);
  CHECK(std::any_of(checks.begin(), checks.end(), [](const CyclicCheck& c) { return !c.holds(); }));
  CHECK_THROWS_AS(validate(k), AxiomError);
  const Coalgebra g = grouplike2();
  CHECK_THROWS_AS(relative_data(g, trivial_symmetry_matrix(g), k, 3), AxiomError);

  CyclicObjectData wrong = constant_cyclic_object(q, 3);
  wrong.dims[1] = 2;
  CHECK_THROWS_AS(validate(wrong), ShapeError);
}

TEST_CASE("negating the cyclic operator breaks cyclicity") {
  const Field q = Field::rationals();
  CyclicObjectData k = constant_cyclic_object(q, 2);
  // t_0 = -1 already has t_0^1 != id
  for (auto& t : k.cyclic) t = scale(t, q.from_int(-1));
  for (auto& inv : k.cyclic_inverse)
    if (inv) *inv = scale(*inv, q.from_int(-1));
  bool cyclicity_failed = false;
  for (const auto& c : check_cyclic_object(k))
    if (c.relation == "cyclicity" && !c.holds()) cyclicity_failed = true;
  CHECK(cyclicity_failed);
}

TEST_CASE("relative construction") {
  for (const auto& c : builtin_coalgebras()) {
    if (c.dim > 2) continue;
    const BraidCandidate t = trivial_symmetry_matrix(c);
    const std::size_t levels = 3;
    // with X constant the relative object is the comonad object
    const CyclicObjectData y = relative_data(c, t, constant_cyclic_object(c.field, levels), levels);
    CHECK(same_object(y, from_comonad(c, t, levels)));

    const CyclicObjectData yh = relative_data(c, t, hochschild_cyclic_object(c.field, levels), levels);
    for (std::size_t n = 0; n <= levels; ++n) CHECK(yh.dims[n] == ipow(c.dim, n + 1) * ipow(2, n + 1));
    require_all_hold(yh);
  }
  const Coalgebra g = grouplike2();
  CHECK_THROWS(relative_data(g, trivial_symmetry_matrix(g), constant_cyclic_object(Field::integers_mod(5), 2), 2));
}
