#include "cyc/scalar.hpp"

#include <charconv>
#include <climits>
#include <cstdint>

#include "cyc/error.hpp"

namespace cyc {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t reduce(const mpz_class& v, std::uint64_t m) {
  mpz_class r;
  mpz_class mm;
  mpz_import(mm.get_mpz_t(), 1, 1, sizeof(m), 0, 0, &m);
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), mm.get_mpz_t());
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, r.get_mpz_t());
  return out;
}

// Inverse of a modulo m via extended Euclid; 0 when a is not a unit.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  __int128 t = 0, new_t = 1;
  __int128 r = m, new_r = a;
  while (new_r != 0) {
    __int128 q = r / new_r;
    __int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) return 0;
  if (t < 0) t += m;
  return static_cast<std::uint64_t>(t);
}

[[noreturn]] void field_mismatch() { throw DomainError("scalar arithmetic across different fields"); }

}  // namespace

Field Field::integers_mod(std::uint64_t m) {
  if (m < 2) throw DomainError("integers_mod: modulus must be >= 2");
  return Field(m);
}

Field Field::parse(std::string_view name) {
  if (name == "Q" || name == "QQ" || name == "rationals") return rationals();
  std::string_view digits;
  if (name.starts_with("Z/"))
    digits = name.substr(2);
  else if (name.starts_with("GF(") && name.ends_with(")"))
    digits = name.substr(3, name.size() - 4);
  else
    throw ConfigError("unknown scalar field '" + std::string(name) + "'");
  std::uint64_t m = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || m < 2)
    throw ConfigError("bad modulus in field '" + std::string(name) + "'");
  return integers_mod(m);
}

std::string Field::name() const { return is_rational() ? "Q" : "Z/" + std::to_string(modulus_); }

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long v) const {
  if (is_rational()) return Scalar(Scalar::Small{v, 1});
  const auto m = static_cast<__int128>(modulus_);
  auto r = static_cast<__int128>(v) % m;
  if (r < 0) r += m;
  return Scalar::residue(static_cast<std::uint64_t>(r), modulus_);
}

Scalar Field::from_mpz(const mpz_class& v) const {
  if (is_rational()) return Scalar(mpq_class(v));
  return Scalar::residue(reduce(v, modulus_), modulus_);
}

Scalar Field::parse_scalar(std::string_view text) const {
  std::string s(text);
  auto slash = s.find('/');
  mpz_class num, den = 1;
  try {
    if (slash == std::string::npos) {
      num = mpz_class(s);
    } else {
      num = mpz_class(s.substr(0, slash));
      den = mpz_class(s.substr(slash + 1));
    }
  } catch (const std::invalid_argument&) {
    throw ConfigError("bad scalar '" + s + "'");
  }
  if (den == 0) throw ConfigError("zero denominator in '" + s + "'");
  if (is_rational()) return Scalar(mpq_class(num, den));
  return from_mpz(num) * from_mpz(den).inverse();
}

Scalar::Scalar(mpq_class q) : value_(Small{0, 1}) { *this = from_big(std::move(q)); }

Scalar Scalar::from_big(mpq_class q) {
  q.canonicalize();
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (mpz_fits_slong_p(n.get_mpz_t()) && mpz_fits_slong_p(d.get_mpz_t()))
    return Scalar(Small{n.get_si(), d.get_si()});
  Scalar s;
  s.value_ = std::move(q);
  return s;
}

mpq_class Scalar::to_mpq() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  const auto& s = std::get<Small>(value_);
  mpq_class out{mpz_class(static_cast<signed long>(s.num)), mpz_class(static_cast<signed long>(s.den))};
  return out;
}

Field Scalar::field() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return Field::integers_mod(r->modulus);
  return Field::rationals();
}

bool Scalar::is_zero() const {
  if (const auto* s = std::get_if<Small>(&value_)) return s->num == 0;
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
  return false;  // big rationals are never 0
}

bool Scalar::is_one() const {
  if (const auto* s = std::get_if<Small>(&value_)) return s->num == 1 && s->den == 1;
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 1;
  return false;
}

namespace {

std::int64_t gcd64(std::int64_t x, std::int64_t y) {
  auto a = x < 0 ? 0 - static_cast<std::uint64_t>(x) : static_cast<std::uint64_t>(x);
  auto b = y < 0 ? 0 - static_cast<std::uint64_t>(y) : static_cast<std::uint64_t>(y);
  while (b) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  // 2^63 only arises from INT64_MIN paired with 0; callers fall back to mpq
  return a > static_cast<std::uint64_t>(INT64_MAX) ? 0 : static_cast<std::int64_t>(a);
}

}  // namespace

Scalar& Scalar::operator+=(const Scalar& o) {
  if (auto* r = std::get_if<Residue>(&value_)) {
    const auto* orr = std::get_if<Residue>(&o.value_);
    if (!orr || orr->modulus != r->modulus) field_mismatch();
    r->value += orr->value;
    if (r->value >= r->modulus || r->value < orr->value) r->value -= r->modulus;
    return *this;
  }
  if (std::holds_alternative<Residue>(o.value_)) field_mismatch();
  const auto* a = std::get_if<Small>(&value_);
  const auto* b = std::get_if<Small>(&o.value_);
  if (a && b) {
    std::int64_t num = 0;
    if (a->den == 1 && b->den == 1) {
      if (!__builtin_add_overflow(a->num, b->num, &num)) {
        value_ = Small{num, 1};
        return *this;
      }
    } else {
      // a/x + b/y = (a*(y/g) + b*(x/g)) / (x/g*y), g = gcd(x, y)
      const std::int64_t g = gcd64(a->den, b->den);
      std::int64_t l = 0, r = 0, den = 0;
      if (!__builtin_mul_overflow(a->num, b->den / g, &l) && !__builtin_mul_overflow(b->num, a->den / g, &r) &&
          !__builtin_add_overflow(l, r, &num) && !__builtin_mul_overflow(a->den / g, b->den, &den)) {
        const std::int64_t h = num == 0 ? den : gcd64(num, den);
        value_ = Small{num / h, den / h};
        return *this;
      }
    }
  }
  *this = from_big(to_mpq() + o.to_mpq());
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (auto* r = std::get_if<Residue>(&value_)) {
    const auto* orr = std::get_if<Residue>(&o.value_);
    if (!orr || orr->modulus != r->modulus) field_mismatch();
    r->value = mul_mod(r->value, orr->value, r->modulus);
    return *this;
  }
  if (std::holds_alternative<Residue>(o.value_)) field_mismatch();
  const auto* a = std::get_if<Small>(&value_);
  const auto* b = std::get_if<Small>(&o.value_);
  if (a && b) {
    const std::int64_t g1 = a->den == 1 ? 1 : gcd64(b->num, a->den);
    const std::int64_t g2 = b->den == 1 ? 1 : gcd64(a->num, b->den);
    std::int64_t num = 0, den = 0;
    if (g1 != 0 && g2 != 0 && !__builtin_mul_overflow(a->num / g2, b->num / g1, &num) &&
        !__builtin_mul_overflow(a->den / g1, b->den / g2, &den)) {
      value_ = num == 0 ? Small{0, 1} : Small{num, den};
      return *this;
    }
  }
  *this = from_big(to_mpq() * o.to_mpq());
  return *this;
}

Scalar Scalar::operator-() const {
  if (const auto* s = std::get_if<Small>(&value_)) {
    if (s->num != INT64_MIN) return Scalar(Small{-s->num, s->den});
    return from_big(-to_mpq());
  }
  if (const auto* q = std::get_if<mpq_class>(&value_)) return from_big(mpq_class(-*q));
  const auto& r = std::get<Residue>(value_);
  return residue(r.value == 0 ? 0 : r.modulus - r.value, r.modulus);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  if (const auto* r = std::get_if<Residue>(&value_)) {
    auto inv = inverse_mod(r->value, r->modulus);
    if (inv == 0) throw DomainError(std::to_string(r->value) + " is not a unit mod " + std::to_string(r->modulus));
    return residue(inv, r->modulus);
  }
  return from_big(mpq_class(1 / to_mpq()));
}

bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }

std::string Scalar::str() const {
  if (const auto* s = std::get_if<Small>(&value_))
    return s->den == 1 ? std::to_string(s->num) : std::to_string(s->num) + "/" + std::to_string(s->den);
  if (const auto* q = std::get_if<mpq_class>(&value_)) return q->get_str();
  return std::to_string(std::get<Residue>(value_).value);
}

}  // namespace cyc
