#include "cyc/tuple.hpp"

#include <charconv>
#include <numeric>

#include "cyc/error.hpp"

namespace cyc {

std::size_t Tuple::codomain() const noexcept {
  return std::accumulate(entries_.begin(), entries_.end(), std::size_t{0});
}

Tuple Tuple::parse(std::string_view text) {
  std::vector<value_type> out;
  if (text.find(',') == std::string_view::npos) {
    for (char ch : text) {
      if (ch < '0' || ch > '9') throw ShapeError("bad tuple digit in '" + std::string(text) + "'");
      out.push_back(static_cast<value_type>(ch - '0'));
    }
    return Tuple(std::move(out));
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    auto part = text.substr(pos, end - pos);
    value_type v{};
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc{} || ptr != part.data() + part.size())
      throw ShapeError("bad tuple entry '" + std::string(part) + "'");
    out.push_back(v);
    pos = end + 1;
  }
  return Tuple(std::move(out));
}

std::string Tuple::str() const {
  bool digits = true;
  for (auto v : entries_) digits = digits && v <= 9;
  std::string s;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!digits && i > 0) s += ',';
    s += std::to_string(entries_[i]);
  }
  return s;
}

Tuple compose(const Tuple& r, const Tuple& k) {
  if (k.codomain() != r.domain())
    throw ShapeError("compose: codomain " + std::to_string(k.codomain()) + " of " + k.str() +
                     " does not match domain " + std::to_string(r.domain()) + " of " + r.str());
  std::vector<Tuple::value_type> out;
  out.reserve(k.size());
  std::size_t pos = 0;
  for (auto ki : k.entries()) {
    Tuple::value_type sum = 0;
    for (std::size_t j = 0; j < ki; ++j) sum += r[pos + j];
    pos += ki;
    out.push_back(sum);
  }
  return Tuple(std::move(out));
}

Tuple tensor(const Tuple& r, const Tuple& s) {
  auto out = r.entries();
  out.insert(out.end(), s.entries().begin(), s.entries().end());
  return Tuple(std::move(out));
}

std::strong_ordering lex_cmp(const Tuple& r, const Tuple& s) {
  if (r.size() != s.size()) throw ShapeError("lex_cmp: length mismatch");
  return r <=> s;
}

Tuple twin_key(const Tuple& s) {
  auto out = s.entries();
  for (auto& v : out) {
    if (v != 0) {
      --v;
      return Tuple(std::move(out));
    }
  }
  throw DomainError("twin_key: tuple " + s.str() + " has no nonzero entry");
}

bool are_twins(const Tuple& s, const Tuple& t) {
  return s.size() == t.size() && twin_key(s) == twin_key(t);
}

namespace {

std::optional<std::string> encode_rec(const std::vector<Tuple::value_type>& s) {
  const std::size_t n = s.size();
  if (n == 2) {
    if (s[0] == 0 && s[1] == 2) return "a";
    if (s[0] == 1 && s[1] == 1) return "b";
    if (s[0] == 2 && s[1] == 0) return "c";
    return std::nullopt;
  }
  switch (s[0]) {
    case 0: {
      if (s[1] <= 1) return std::nullopt;
      std::vector<Tuple::value_type> rest(s.begin() + 1, s.end());
      rest[0] -= 1;
      auto tail = encode_rec(rest);
      if (!tail) return std::nullopt;
      return "a" + *tail;
    }
    case 1: {
      std::vector<Tuple::value_type> rest(s.begin() + 1, s.end());
      auto tail = encode_rec(rest);
      if (!tail) return std::nullopt;
      return "b" + *tail;
    }
    case 2: {
      for (std::size_t i = 1; i + 1 < n; ++i)
        if (s[i] != 1) return std::nullopt;
      if (s[n - 1] != 0) return std::nullopt;
      return std::string(n - 1, 'c');
    }
    default:
      return std::nullopt;
  }
}

void compositions(std::size_t slots, std::size_t remaining, std::vector<Tuple::value_type>& cur,
                  std::vector<Tuple>& out) {
  if (cur.size() + 1 == slots) {
    cur.push_back(static_cast<Tuple::value_type>(remaining));
    out.emplace_back(cur);
    cur.pop_back();
    return;
  }
  for (std::size_t v = 0; v <= remaining; ++v) {
    cur.push_back(static_cast<Tuple::value_type>(v));
    compositions(slots, remaining - v, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::optional<std::string> abc_encode(const Tuple& s) {
  if (s.size() < 2 || s.codomain() != s.size()) return std::nullopt;
  return encode_rec(s.entries());
}

std::vector<Tuple> endomorphisms(std::size_t n) {
  std::vector<Tuple> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<Tuple::value_type> cur;
  compositions(n, n, cur, out);
  return out;
}

}  // namespace cyc
