#pragma once

// Identity suites and combinatorial audits. Every check becomes one
// InstanceResult. `hard` marks failures that contradict a theorem whose
// hypotheses were verified, or an identity that holds in every model; the
// hypotheses themselves, the symmetry/strong-braiding clauses and the
// literal combinatorial claims are findings.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyc/coalgebra.hpp"
#include "cyc/cyclic_object.hpp"
#include "cyc/lincomb.hpp"
#include "cyc/report.hpp"
#include "cyc/ring_extension.hpp"

namespace cyc {

/// The whole relation catalog up to degree N, evaluated in the model.
/// D and cyclicity are skipped when their hypotheses fail.
SuiteResult run_suite(const Coalgebra& c, const BraidCandidate& t, std::size_t max_degree);

struct BraidingClass {
  std::map<std::string, bool> flags;
  std::string verdict;  // symmetry, strong braiding, Theorem-1-eligible, none
};

/// Flags: bottom1..4, qybe, tcubed, invertible, t2 and the symm.* / zsymm.*
/// clauses. Throws std::logic_error if a symmetry fails a strong-braiding
/// clause (that would contradict a proven lemma, so it is a bug).
BraidingClass classify_braiding(const Coalgebra& c, const BraidCandidate& t);
SuiteResult classification_suite(const Coalgebra& c, const BraidCandidate& t);

/// Braid relations for the generators alpha^i = G^i(t_{G^(n-1-i)}) on
/// G^(n+1), the symmetric-group relations when t^2 = 1, and the
/// intermediate identity (a^0 ... a^n)^e = (a^0 ... a^(n-1))^e a^n ... a^1 on
/// G^(n+2) for e = n - 1 (as displayed; informational) and e = n.
SuiteResult braid_rep_check(const Coalgebra& c, const BraidCandidate& t, std::size_t n);

/// The expansion of t_(n-1) into P-morphisms and the claims made about it.
SuiteResult theorem3_audit(std::size_t n, const Coalgebra& c);

/// The theta expansion, its specialization, norm_theta and the semantic
/// comparison for (p, r) and a few fixed bindings.
SuiteResult prop4_audit(std::size_t n, const Coalgebra& c, const Scalar& p, const Scalar& r);

/// Builds Y from X and checks it; compares with the operators of the
/// comonad itself when X is constant.
SuiteResult relative_cyclic(const Coalgebra& c, const BraidCandidate& t, const CyclicObjectData& x,
                            std::size_t levels);

/// For n = 1..N: (G^n, delta^(n), eps^(n)) is a coalgebra, t_n satisfies the
/// four distributive-law axioms against it, and the composite revalidates.
SuiteResult distributive_law_suite(const Coalgebra& c, const BraidCandidate& t, std::size_t max_degree);

/// Formula versus dual-oracle comparison, associativity and unit laws of the
/// induced product on S^(x)n.
SuiteResult nuss_audit(const RingExtension& e, std::size_t n);

/// Symbolic versus semantic evaluation of every distinct side in the
/// catalog up to N: trivial when `bindings` is absent, theta otherwise.
SuiteResult oracle_agreement(const Coalgebra& c, std::size_t max_degree, const std::optional<Bindings>& bindings);

/// The displayed 29-term expansion of t_4.
IntLinComb printed_t4_example();

/// Two-sided comparison of symbolic combinations: terms only on one side and
/// coefficient disagreements, one line each.
std::vector<std::string> lincomb_diff(const IntLinComb& ours, const IntLinComb& theirs, const std::string& ours_name,
                                      const std::string& theirs_name);

}  // namespace cyc
