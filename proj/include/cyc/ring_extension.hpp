#pragma once

// Ring extensions R -> S with R a commutative base (Q or Z/m) and S free of
// finite rank, and the induced multiplication on S^(x)n. The multiplication
// is built from the explicit formula with adjacent swaps and products, and
// checked against the dual of the iterated coproduct delta^(n).

#include <cstdint>
#include <optional>
#include <string>

#include "cyc/coalgebra.hpp"
#include "cyc/matrix.hpp"

namespace cyc {

struct RingExtension {
  std::string name;
  Field field = Field::rationals();
  Index rank = 0;
  Matrix mult;  // rank x rank^2, e_i (x) e_j -> e_i e_j
  Matrix unit;  // rank x 1
};

/// Throws ShapeError on bad sizes and AxiomError naming "associativity",
/// "unit_left" or "unit_right".
RingExtension make_ring_extension(std::string name, Field field, Index rank, Matrix mult, Matrix unit);

/// Z/5[x]/(x^2+1) and M_2(Q).
RingExtension ext_z5();
RingExtension ext_m2q();

/// x (x) y -> xy (x) 1 + 1 (x) xy - x (x) y on S (x) S.
Matrix extension_symmetry(const RingExtension& e);

/// Product on S^(x)n from the displayed formula: the swap groups
/// tau_{2j,2j+1} ... tau_{n+j-1,n+j} for j = 1..n-1 (j = 1 applied first,
/// rightmost factor first inside a group), then mu_{12} ... mu_{2n-1,2n}.
Matrix nuss_mu_formula(const RingExtension& e, std::size_t n);

/// The dual coalgebra of S: comultiplication transpose of mu^op, counit the
/// transpose of the unit.
Coalgebra dual_coalgebra(const RingExtension& e);

/// The mirror image of the transpose of delta^(n) evaluated in the dual
/// coalgebra with its trivial symmetry.
Matrix nuss_mu_dual(const RingExtension& e, std::size_t n);

struct NussResult {
  Matrix mu;
  Matrix oracle;
  bool agrees = false;
  std::optional<Mismatch> mismatch;
  /// Basis input of the first differing column, e.g. "e0(x)e1 | e1(x)e1".
  std::string first_input;
};

/// Both constructions for n >= 1 (DomainError for n = 0).
NussResult nuss_mu(const RingExtension& e, std::size_t n);

/// Unit of S^(x)n.
Matrix tensor_unit(const RingExtension& e, std::size_t n);

struct AlgebraAudit {
  bool associative = true;
  bool unit_left = true;
  bool unit_right = true;
  bool exhaustive = false;
  std::uint64_t triples_checked = 0;
  std::string first_failure;
};

/// Associativity over basis triples (exhaustive up to `exhaustive_limit`
/// triples, otherwise the slices with one argument among the first and last
/// basis vectors plus `random_samples` seeded random triples) and both unit
/// laws over all basis vectors.
AlgebraAudit audit_algebra(const Matrix& mu, const Matrix& unit, std::uint64_t exhaustive_limit = 1u << 12,
                           std::uint64_t random_samples = 4096, std::uint64_t seed = 20240611);

/// Basis label of index `i` in a space of `factors` tensor factors of rank r.
std::string basis_label(Index i, Index r, std::size_t factors);

}  // namespace cyc
