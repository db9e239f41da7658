#pragma once

// Exact scalars: arbitrary-precision rationals or residues modulo m. Every
// model carries one Field and all of its matrices live over it; arithmetic
// between scalars of different fields throws DomainError.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace cyc {

class Scalar;

class Field {
 public:
  static Field rationals() { return Field(0); }
  /// Z/m, m >= 2. Division is available for units only.
  static Field integers_mod(std::uint64_t m);
  /// "Q" or "Z/5".
  static Field parse(std::string_view name);

  bool is_rational() const noexcept { return modulus_ == 0; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  std::string name() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long v) const;
  Scalar from_mpz(const mpz_class& v) const;
  /// "3", "-7/2" (rationals; modular fields require the denominator to be a unit).
  Scalar parse_scalar(std::string_view text) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint64_t m) : modulus_(m) {}
  std::uint64_t modulus_;
};

class Scalar {
 public:
  /// Rational zero.
  Scalar() : value_(Small{0, 1}) {}
  explicit Scalar(mpq_class q);
  static Scalar residue(std::uint64_t value, std::uint64_t modulus) {
    return Scalar(Residue{value % modulus, modulus});
  }

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  Scalar operator-() const;

  /// Multiplicative inverse; DomainError for zero or a non-unit residue.
  Scalar inverse() const;

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// "3/4", "-2", or the canonical residue "0".."m-1".
  std::string str() const;

 private:
  friend class Field;
  struct Residue {
    std::uint64_t value;
    std::uint64_t modulus;
    friend bool operator==(const Residue&, const Residue&) = default;
  };
  // Rationals whose numerator and denominator fit in 64 bits are always held
  // as Small, anything larger as mpq_class, so equal values compare equal
  // structurally and the common small-integer case never allocates.
  struct Small {
    std::int64_t num;
    std::int64_t den;  // > 0, coprime to num
    friend bool operator==(const Small&, const Small&) = default;
  };
  explicit Scalar(Residue r) : value_(r) {}
  explicit Scalar(Small s) : value_(s) {}
  static Scalar from_big(mpq_class q);
  mpq_class to_mpq() const;

  std::variant<Small, mpq_class, Residue> value_;
};

}  // namespace cyc
