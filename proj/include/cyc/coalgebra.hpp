#pragma once

// The comonad G = C (x) (-) of a finite-dimensional coalgebra C. Every
// component of a word at a module M is (its ground matrix) (x) id_M, so words
// are compared through their matrices on tensor powers of C.

#include <optional>
#include <string>
#include <vector>

#include "cyc/lincomb.hpp"
#include "cyc/matrix.hpp"
#include "cyc/word.hpp"

namespace cyc {

struct Coalgebra {
  std::string name;
  Field field = Field::rationals();
  Index dim = 0;
  Matrix comult;  // d^2 x d
  Matrix counit;  // 1 x d
};

/// Above this dimension coassociativity is tested with random exact product
/// functionals instead of full matrices.
inline constexpr Index kExhaustiveCoassociativityDim = 256;

/// Checks shapes, coassociativity and both counit laws. Throws ShapeError on
/// bad dimensions and AxiomError naming "coassociativity", "counit_left" or
/// "counit_right" on the first failing axiom.
Coalgebra make_coalgebra(std::string name, Field field, Index dim, Matrix comult, Matrix counit);

/// A candidate t : GG => GG, given by its d^2 x d^2 ground matrix.
struct BraidCandidate {
  std::string name;
  Matrix t;
  std::optional<Matrix> inverse;
};

/// When `inverse` is given it must satisfy T T^-1 = T^-1 T = id (AxiomError
/// "inverse" otherwise); when absent it is computed if T is invertible.
BraidCandidate make_braid(std::string name, Matrix t, std::optional<Matrix> inverse = std::nullopt);

/// delta eps_G + delta G(eps) - 1.
BraidCandidate trivial_symmetry_matrix(const Coalgebra& c);
/// p (eps * delta) - p id + r (delta * eps).
BraidCandidate theta_matrix(const Coalgebra& c, const Scalar& p, const Scalar& r);

/// Matrix of a word on C^(source) -> C^(target). `t` is required when the
/// word contains braid layers (DomainError otherwise) and must carry an
/// inverse for braid_inv layers.
Matrix eval_word(const Coalgebra& c, const BraidCandidate* t, const Word& w);
Matrix eval_termexpr(const Coalgebra& c, const BraidCandidate* t, const TermExpr& x);

/// Values for the indeterminates of polynomial coefficients.
struct Bindings {
  Scalar p;
  Scalar r;
};

/// Delta_k : C -> C^k (k = 0 is the counit).
Matrix iterated_comult(const Coalgebra& c, std::size_t k);

/// Image of a combination of P-morphisms under the functor into the model.
Matrix eval_lincomb(const Coalgebra& c, const IntLinComb& x);
/// Throws DomainError when `bindings` is absent and some coefficient is not
/// constant.
Matrix eval_lincomb(const Coalgebra& c, const PolyLinComb& x, const std::optional<Bindings>& bindings);

Scalar evaluate(const PolyPR& poly, const Bindings& b, const Field& field);

/// Group-like 1-dim; two group-likes (k[Z/2] dual); 4-dim matrix coalgebra
/// over Q and over Z/5.
Coalgebra grouplike1();
Coalgebra grouplike2();
Coalgebra matrix_coalgebra(Index n, Field field, std::string name);
std::vector<Coalgebra> builtin_coalgebras();

}  // namespace cyc
