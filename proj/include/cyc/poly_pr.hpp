#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>

namespace cyc {

/// Integer polynomial in two commuting indeterminates p and r, stored as
/// exponent pair (a, b) -> coefficient of p^a r^b with no zero coefficients.
class PolyPR {
 public:
  using Exponents = std::pair<unsigned, unsigned>;

  PolyPR() = default;
  PolyPR(long c) : PolyPR(mpz_class(c)) {}  // NOLINT(google-explicit-constructor)
  PolyPR(const mpz_class& c) {              // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.emplace(Exponents{0, 0}, c);
  }

  static PolyPR monomial(const mpz_class& c, unsigned p_exp, unsigned r_exp);
  static PolyPR p() { return monomial(1, 1, 0); }
  static PolyPR r() { return monomial(1, 0, 1); }

  const std::map<Exponents, mpz_class>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Value at integer p, r.
  mpz_class evaluate(const mpz_class& p, const mpz_class& r) const;

  PolyPR& operator+=(const PolyPR& o);
  PolyPR& operator-=(const PolyPR& o);
  PolyPR& operator*=(const PolyPR& o) { return *this = *this * o; }
  friend PolyPR operator+(PolyPR a, const PolyPR& b) { return a += b; }
  friend PolyPR operator-(PolyPR a, const PolyPR& b) { return a -= b; }
  friend PolyPR operator*(const PolyPR& a, const PolyPR& b);
  PolyPR operator-() const;

  friend bool operator==(const PolyPR& a, const PolyPR& b) { return a.terms_ == b.terms_; }

  /// "p^2*r - 3", highest p-degree first; "0" for zero. `pretty` uses the
  /// middle dot and a true minus sign.
  std::string str(bool pretty = false) const;

 private:
  std::map<Exponents, mpz_class> terms_;
};

inline bool is_zero(const mpz_class& c) { return c == 0; }
inline bool is_zero(const PolyPR& c) { return c.is_zero(); }

}  // namespace cyc
