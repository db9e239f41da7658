#include "cyc/composite.hpp"

#include "cyc/error.hpp"
#include "cyc/kernels.hpp"

namespace cyc {

std::vector<LawAxiom> distributive_law_axioms(const Matrix& l, const Coalgebra& f, const Coalgebra& g) {
  const Index dd = f.dim;
  const Index dc = g.dim;
  if (l.rows() != dd * dc || l.cols() != dd * dc)
    throw ShapeError("distributive law must be " + std::to_string(dd * dc) + "x" + std::to_string(dd * dc));
  if (l.field() != f.field || l.field() != g.field) throw DomainError("distributive law over the wrong field");

  const Matrix id = Matrix::identity(dd * dc, l.field());
  std::vector<LawAxiom> out;
  auto check = [&](std::string id_, std::string statement, const Matrix& lhs, const Matrix& rhs) {
    out.push_back({std::move(id_), std::move(statement), first_difference(lhs, rhs)});
  };

  // Basis of D (x) C indexed with D outermost; C (x) D with C outermost.
  check("counit_F", "G(eps^F) l = eps^F_G", apply_chain({{&l, 1}, {&f.counit, 1}}, id),
        apply_chain({{&f.counit, dc}}, id));
  check("comult_F", "G(delta^F) l = l_F F(l) delta^F_G", apply_chain({{&l, 1}, {&f.comult, 1}}, id),
        apply_chain({{&f.comult, dc}, {&l, 1}, {&l, dd}}, id));
  check("counit_G", "eps^G_F l = F(eps^G)", apply_chain({{&l, 1}, {&g.counit, dd}}, id),
        apply_chain({{&g.counit, 1}}, id));
  check("comult_G", "delta^G_F l = G(l) l_G F(delta^G)", apply_chain({{&l, 1}, {&g.comult, dd}}, id),
        apply_chain({{&g.comult, 1}, {&l, dc}, {&l, 1}}, id));
  return out;
}

Coalgebra composite_comonad(const Matrix& l, const Coalgebra& f, const Coalgebra& g) {
  for (const auto& ax : distributive_law_axioms(l, f, g))
    if (!ax.holds())
      throw AxiomError(ax.id, ax.statement + " fails at entry (" + std::to_string(ax.mismatch->row) + "," +
                                  std::to_string(ax.mismatch->col) + ")");
  const Index dd = f.dim;
  const Index dc = g.dim;
  const Matrix id = Matrix::identity(dd * dc, l.field());
  // D C -> D C C -> D D C C -> D C D C
  Matrix comult = apply_chain({{&g.comult, 1}, {&f.comult, dc * dc}, {&l, dc}}, id);
  Matrix counit = apply_chain({{&g.counit, 1}, {&f.counit, 1}}, id);
  try {
    return make_coalgebra(f.name + "*" + g.name, l.field(), dd * dc, std::move(comult), std::move(counit));
  } catch (const AxiomError& e) {
    throw AxiomError("composite." + e.axiom(), e.what());
  }
}

Coalgebra power_coalgebra(const Coalgebra& c, const BraidCandidate& t, std::size_t n) {
  Matrix comult = eval_word(c, &t, coproduct_n(n));
  Matrix counit = eval_word(c, &t, counit_n(n));
  return make_coalgebra(c.name + "^" + std::to_string(n), c.field, ipow(c.dim, n), std::move(comult),
                        std::move(counit));
}

}  // namespace cyc
