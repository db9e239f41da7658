#include "cyc/lincomb.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <utility>
#include <vector>

namespace cyc {

bool nalt_check(const IntLinComb& x) {
  if (x.empty()) return false;
  int expected = 1;
  for (const auto& [t, c] : x.terms()) {
    if (c != expected) return false;
    expected = -expected;
  }
  return true;
}

PolyLinComb norm_theta(const IntLinComb& x) {
  PolyLinComb out(x.domain(), x.codomain());
  for (const auto& [t, c] : x.terms()) {
    auto abc = abc_encode(t);
    if (!abc) throw DomainError("norm_theta: term " + t.str() + " has no abc-encoding");
    auto c_count = static_cast<unsigned>(std::count(abc->begin(), abc->end(), 'c'));
    auto ab_count = static_cast<unsigned>(abc->size()) - c_count;
    out.add(t, PolyPR::monomial(c, ab_count, c_count));
  }
  return out;
}

PolyLinComb to_poly(const IntLinComb& x) {
  PolyLinComb out(x.domain(), x.codomain());
  for (const auto& [t, c] : x.terms()) out.add(t, PolyPR(c));
  return out;
}

IntLinComb specialize(const PolyLinComb& x, const mpz_class& p, const mpz_class& r) {
  IntLinComb out(x.domain(), x.codomain());
  for (const auto& [t, c] : x.terms()) out.add(t, c.evaluate(p, r));
  return out;
}

std::string render(const IntLinComb& x, bool pretty) {
  if (x.empty()) return "0";
  const std::string minus = pretty ? "−" : "-";
  const std::string dot = pretty ? "·" : "*";
  std::string s;
  bool first = true;
  for (const auto& [t, c] : x.terms()) {
    mpz_class mag = abs(c);
    std::string body = (mag == 1 ? "" : mag.get_str() + dot) + t.str();
    if (first)
      s += (c < 0 ? minus : "") + body;
    else
      s += (c < 0 ? " " + minus + " " : " + ") + body;
    first = false;
  }
  return s;
}

std::string render(const PolyLinComb& x, bool pretty) {
  if (x.empty()) return "0";
  const std::string minus = pretty ? "−" : "-";
  const std::string dot = pretty ? "·" : "*";
  std::string s;
  bool first = true;
  for (const auto& [t, c] : x.terms()) {
    // A single monomial prints with its sign pulled out; anything longer is
    // parenthesised.
    bool negative = false;
    std::string coeff;
    if (c.terms().size() == 1) {
      const auto& [e, k] = *c.terms().begin();
      negative = k < 0;
      coeff = PolyPR::monomial(abs(k), e.first, e.second).str(pretty);
    } else {
      coeff = "(" + c.str(pretty) + ")";
    }
    std::string body = (coeff == "1" ? "" : coeff + dot) + t.str();
    if (first)
      s += (negative ? minus : "") + body;
    else
      s += (negative ? " " + minus + " " : " + ") + body;
    first = false;
  }
  return s;
}

IntLinComb parse_int_lincomb(std::string_view text) {
  std::vector<std::pair<Tuple, mpz_class>> terms;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  int sign = 1;
  bool expect_term = true;
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    char ch = text[i];
    if (ch == '+' || ch == '-') {
      sign = ch == '-' ? -sign : sign;
      ++i;
      expect_term = true;
      continue;
    }
    if (!expect_term) throw ShapeError("parse_int_lincomb: missing sign before term");
    std::size_t start = i;
    while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
    std::string_view token = text.substr(start, i - start);
    if (token.empty()) throw ShapeError("parse_int_lincomb: unexpected '" + std::string(1, ch) + "'");
    mpz_class coeff = sign;
    skip_ws();
    if (i < text.size() && text[i] == '*') {
      ++i;
      skip_ws();
      coeff *= mpz_class(std::string(token));
      start = i;
      while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
      token = text.substr(start, i - start);
    }
    terms.emplace_back(Tuple::parse(token), coeff);
    sign = 1;
    expect_term = false;
  }
  if (terms.empty()) throw ShapeError("parse_int_lincomb: no terms");
  IntLinComb out(terms.front().first.domain(), terms.front().first.codomain());
  for (const auto& [t, c] : terms) out.add(t, c);
  return out;
}

}  // namespace cyc
