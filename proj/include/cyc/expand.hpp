#pragma once

// Symbolic expansion of words into linear combinations of P-morphisms when
// the braiding is a combination of tuples: eps-layers become 1^a 0 1^b,
// delta-layers 1^a 2 1^b, braid-layers 1^a * (image of t) * 1^b, and layers
// compose bottom-up.

#include "cyc/lincomb.hpp"
#include "cyc/word.hpp"

namespace cyc {

enum class Substitution { trivial, theta };

/// 02 - 11 + 20.
IntLinComb trivial_braid_image();
/// p*02 - p*11 + r*20.
PolyLinComb theta_braid_image();

/// Expands with the braid generator replaced by `braid_image` (a P([2],[2])
/// combination). Throws DomainError on braid_inv layers.
template <class Coeff>
LinComb<Coeff> expand_with(const TermExpr& x, const LinComb<Coeff>& braid_image);

IntLinComb expand_trivial(const TermExpr& x);
PolyLinComb expand_theta(const TermExpr& x);

/// Trivial substitution embedded into polynomial coefficients, or theta.
PolyLinComb expand_symbolic(const TermExpr& x, Substitution sub);

}  // namespace cyc
