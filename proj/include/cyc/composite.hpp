#pragma once

// Distributive laws between coalgebra comonads and their composites. For
// F = D (x) (-) and G = C (x) (-), a law l : FG => GF is a map D(x)C -> C(x)D.

#include <optional>
#include <string>
#include <vector>

#include "cyc/coalgebra.hpp"

namespace cyc {

struct LawAxiom {
  std::string id;  // counit_F, comult_F, counit_G, comult_G
  std::string statement;
  std::optional<Mismatch> mismatch;
  bool holds() const { return !mismatch; }
};

/// The four axioms, in the order above:
///   G(eps^F) l = eps^F_G,  G(delta^F) l = l_F F(l) delta^F_G,
///   eps^G_F l = F(eps^G),  delta^G_F l = G(l) l_G F(delta^G).
std::vector<LawAxiom> distributive_law_axioms(const Matrix& l, const Coalgebra& f, const Coalgebra& g);

/// Checks the four axioms (AxiomError naming the first failing one), then
/// returns the composite coalgebra on D (x) C with comultiplication
/// F(l_G) delta^F_GG F(delta^G) and counit eps^F F(eps^G), re-validated by
/// make_coalgebra.
Coalgebra composite_comonad(const Matrix& l, const Coalgebra& f, const Coalgebra& g);

/// (G^n, delta^(n), eps^(n)) as a coalgebra of dimension d^n.
Coalgebra power_coalgebra(const Coalgebra& c, const BraidCandidate& t, std::size_t n);

}  // namespace cyc
