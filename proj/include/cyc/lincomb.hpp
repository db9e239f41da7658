#pragma once

// Formal linear combinations of parallel tuples (elements of ZS_n, k[p,r]S_n
// and their non-endomorphism analogues), kept in canonical form: one entry
// per tuple, no zero coefficients, iteration in lexicographic order.

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>

#include "cyc/error.hpp"
#include "cyc/poly_pr.hpp"
#include "cyc/tuple.hpp"

namespace cyc {

template <class Coeff>
class LinComb {
 public:
  using coeff_type = Coeff;

  LinComb(std::size_t domain, std::size_t codomain) : domain_(domain), codomain_(codomain) {}

  static LinComb single(const Tuple& t, const Coeff& c = Coeff(1)) {
    LinComb out(t.domain(), t.codomain());
    out.add(t, c);
    return out;
  }

  static LinComb identity(std::size_t n) { return single(Tuple::identity(n)); }

  std::size_t domain() const noexcept { return domain_; }
  std::size_t codomain() const noexcept { return codomain_; }
  const std::map<Tuple, Coeff>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  /// Coefficient of t, zero if absent.
  Coeff coeff(const Tuple& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  void add(const Tuple& t, const Coeff& c) {
    if (t.domain() != domain_ || t.codomain() != codomain_)
      throw ShapeError("LinComb::add: tuple " + t.str() + " is not in P([" + std::to_string(domain_) +
                       "],[" + std::to_string(codomain_) + "])");
    if (is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(t, c);
    if (!inserted) {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  LinComb& operator+=(const LinComb& o) {
    check_parallel(o);
    for (const auto& [t, c] : o.terms_) add(t, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    check_parallel(o);
    for (const auto& [t, c] : o.terms_) add(t, -c);
    return *this;
  }
  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }

  LinComb scaled(const Coeff& s) const {
    LinComb out(domain_, codomain_);
    for (const auto& [t, c] : terms_) out.add(t, c * s);
    return out;
  }

  friend bool operator==(const LinComb& a, const LinComb& b) {
    return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.terms_ == b.terms_;
  }

 private:
  void check_parallel(const LinComb& o) const {
    if (o.domain_ != domain_ || o.codomain_ != codomain_) throw ShapeError("LinComb: shapes differ");
  }

  std::size_t domain_;
  std::size_t codomain_;
  std::map<Tuple, Coeff> terms_;
};

using IntLinComb = LinComb<mpz_class>;
using PolyLinComb = LinComb<PolyPR>;

/// Bilinear extension of tuple composition: x o y (y applied first).
template <class Coeff>
LinComb<Coeff> lincomb_compose(const LinComb<Coeff>& x, const LinComb<Coeff>& y) {
  if (y.codomain() != x.domain()) throw ShapeError("lincomb_compose: shape mismatch");
  LinComb<Coeff> out(y.domain(), x.codomain());
  for (const auto& [tx, cx] : x.terms())
    for (const auto& [ty, cy] : y.terms()) out.add(compose(tx, ty), cx * cy);
  return out;
}

/// Bilinear extension of concatenation.
template <class Coeff>
LinComb<Coeff> lincomb_tensor(const LinComb<Coeff>& x, const LinComb<Coeff>& y) {
  LinComb<Coeff> out(x.domain() + y.domain(), x.codomain() + y.codomain());
  for (const auto& [tx, cx] : x.terms())
    for (const auto& [ty, cy] : y.terms()) out.add(tensor(tx, ty), cx * cy);
  return out;
}

/// True iff x = s1 - s2 + s3 - ... with s1 < s2 < ... lexicographically.
bool nalt_check(const IntLinComb& x);

/// Multiplies each term's coefficient by p^(#a + #b) r^(#c) of its abc-string.
/// Throws DomainError if some term has no abc-encoding.
PolyLinComb norm_theta(const IntLinComb& x);

PolyLinComb to_poly(const IntLinComb& x);

/// Evaluates every coefficient at integer p, r.
IntLinComb specialize(const PolyLinComb& x, const mpz_class& p, const mpz_class& r);

/// Signed term list in lexicographic order, e.g. "02 - 11 + 20"; "0" when
/// empty. `pretty` switches to the true minus sign and the middle dot.
std::string render(const IntLinComb& x, bool pretty = false);
std::string render(const PolyLinComb& x, bool pretty = false);

/// Parses "00005-00041+00050" or "02 - 11 + 20" (integer coefficients such as
/// "3*02" allowed). Shape is taken from the first term.
IntLinComb parse_int_lincomb(std::string_view text);

}  // namespace cyc
