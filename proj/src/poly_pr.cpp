#include "cyc/poly_pr.hpp"

namespace cyc {

PolyPR PolyPR::monomial(const mpz_class& c, unsigned p_exp, unsigned r_exp) {
  PolyPR out;
  if (c != 0) out.terms_.emplace(Exponents{p_exp, r_exp}, c);
  return out;
}

mpz_class PolyPR::evaluate(const mpz_class& p, const mpz_class& r) const {
  mpz_class total = 0;
  for (const auto& [e, c] : terms_) {
    mpz_class pp, rr;
    mpz_pow_ui(pp.get_mpz_t(), p.get_mpz_t(), e.first);
    mpz_pow_ui(rr.get_mpz_t(), r.get_mpz_t(), e.second);
    total += c * pp * rr;
  }
  return total;
}

PolyPR& PolyPR::operator+=(const PolyPR& o) {
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

PolyPR& PolyPR::operator-=(const PolyPR& o) { return *this += -o; }

PolyPR PolyPR::operator-() const {
  PolyPR out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

PolyPR operator*(const PolyPR& a, const PolyPR& b) {
  PolyPR out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      out += PolyPR::monomial(ca * cb, ea.first + eb.first, ea.second + eb.second);
  return out;
}

namespace {

std::string monomial_str(unsigned a, unsigned b, bool pretty) {
  const std::string dot = pretty ? "·" : "*";
  std::string s;
  auto factor = [&](const char* var, unsigned e) {
    if (e == 0) return;
    if (!s.empty()) s += dot;
    s += var;
    if (e > 1) s += "^" + std::to_string(e);
  };
  factor("p", a);
  factor("r", b);
  return s;
}

}  // namespace

std::string PolyPR::str(bool pretty) const {
  if (terms_.empty()) return "0";
  const std::string minus = pretty ? "−" : "-";
  const std::string dot = pretty ? "·" : "*";
  std::string s;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    mpz_class mag = abs(c);
    auto mono = monomial_str(e.first, e.second, pretty);
    std::string body;
    if (mono.empty())
      body = mag.get_str();
    else if (mag == 1)
      body = mono;
    else
      body = mag.get_str() + dot + mono;
    if (first)
      s += (c < 0 ? minus : "") + body;
    else
      s += (c < 0 ? " " + minus + " " : " + ") + body;
    first = false;
  }
  return s;
}

}  // namespace cyc
