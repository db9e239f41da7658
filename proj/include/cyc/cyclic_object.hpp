#pragma once

// Truncated (para)cyclic objects in finite-dimensional vector spaces, the
// one generated by a comonad with a braiding, and the relative construction
// Y_n = G^(n+1) X_n.

#include <optional>
#include <string>
#include <vector>

#include "cyc/coalgebra.hpp"

namespace cyc {

struct CyclicObjectData {
  std::string name;
  Field field = Field::rationals();
  std::size_t levels = 0;                    // N; objects X_0..X_N
  std::vector<Index> dims;                   // dims[n] = dim X_n
  std::vector<std::vector<Matrix>> faces;    // faces[n][i] : X_n -> X_{n-1}, 1 <= n <= N
  std::vector<std::vector<Matrix>> degens;   // degens[n][i] : X_n -> X_{n+1}, 0 <= n < N
  std::vector<Matrix> cyclic;                // cyclic[n] = t_n on X_n
  std::vector<std::optional<Matrix>> cyclic_inverse;
  bool is_cyclic = false;                    // t_n^(n+1) = id claimed
};

struct CyclicCheck {
  std::string relation;  // face_face, degen_degen, face_degen, A, B, C, D, invertible, cyclicity
  std::string label;     // e.g. "A{n=2,i=1}"
  std::optional<Mismatch> mismatch;
  bool holds() const { return !mismatch; }
};

/// Simplicial identities, the paracyclic relations
///   d_i t_n = t_{n-1} d_{i-1}, d_0 t_n = d_n,
///   s_i t_n = t_{n+1} s_{i-1}, s_0 t_n = t_{n+1}^2 s_n,
/// invertibility of every t_n, and t_n^(n+1) = id when the object claims to
/// be cyclic.
std::vector<CyclicCheck> check_cyclic_object(const CyclicObjectData& x);

/// Throws ShapeError on inconsistent sizes and AxiomError naming the first
/// failing check.
void validate(const CyclicObjectData& x);

/// X_n = G^(n+1) with the faces, degeneracies and t_n of the comonad.
CyclicObjectData from_comonad(const Coalgebra& c, const BraidCandidate& t, std::size_t levels);

/// The constant cyclic object on the ground field: every X_n one-dimensional,
/// every structure map the identity.
CyclicObjectData constant_cyclic_object(const Field& field, std::size_t levels);

/// The cyclic object A^(x)(n+1) of the algebra A = k[x]/(x^2): faces multiply
/// neighbours (the last one wraps around), degeneracies insert 1 and t_n
/// rotates the last factor to the front.
CyclicObjectData hochschild_cyclic_object(const Field& field, std::size_t levels);

/// Y_n = C^(n+1) (x) X_n with d_i^Y = (d_i (x) id)(id (x) d_i^X), likewise for
/// s_i, and t^Y_n = (id (x) t^X_n)(t_n (x) id). `x` is validated first.
CyclicObjectData relative_data(const Coalgebra& c, const BraidCandidate& t, const CyclicObjectData& x,
                               std::size_t levels);

}  // namespace cyc
