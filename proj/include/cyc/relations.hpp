#pragma once

// Catalog of every identity the construction asserts, each as a pair of
// parallel TermExprs. Identifiers:
//
//   bottom1..bottom4      G(ε)t = ε_G, ε_G t = G(ε), G(δ)t = t_G G(t) δ_G,
//                         δ_G t = [t_G G(t)]^2 G(δ)
//   qybe, tcubed          G(t)t_G G(t) = t_G G(t)t_G,  t t t δ = t δ
//   symm.t2 symm.t_delta symm.eps symm.delta          (symmetry axioms)
//   zsymm.eps_left zsymm.eps zsymm.delta_left zsymm.delta  (strong braiding)
//   A{n,i} B{n,i} C{n} D{n} cyclicity{n}              (paracyclic relations)
//   face_face{n,i,j} degen_degen{n,i,j} face_degen{n,i,j} augmentation
//   hidist1..hidist4{n} hidist1gen{n,l}               (distributive laws)
//   lema{n,i} lemb{n} lembp{p,l} lemc{n}
//   coprod.alt{n} coprod.expanded{n} coprod.coassoc{n} coprod.counit_left{n}
//   coprod.counit_right{n}

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cyc/word.hpp"

namespace cyc {

using RelationParams = std::map<std::string, long>;

struct RelationSides {
  TermExpr lhs;
  TermExpr rhs;
};

/// Throws DomainError for an unknown id, a missing parameter, or a parameter
/// outside its range.
RelationSides relation_sides(std::string_view id, const RelationParams& params = {});

/// Every relation id, in catalog order.
const std::vector<std::string>& relation_ids();

struct RelationInstance {
  std::string id;
  RelationParams params;
};

/// Every instance of `id` whose degree parameters stay within max_degree
/// (n <= N for the paracyclic, distributive-law and simplicial families;
/// n + i <= N, p + l <= N, n + 1 <= N for the braid lemmas).
std::vector<RelationInstance> relation_instances(std::string_view id, long max_degree);

/// All instances of all relations up to max_degree.
std::vector<RelationInstance> relation_catalog(long max_degree);

/// "A{n=2,i=1}" style label.
std::string instance_label(const RelationInstance& inst);

}  // namespace cyc
