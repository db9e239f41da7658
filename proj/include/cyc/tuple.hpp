#pragma once

// Morphisms of the strict monoidal category P: an m-tuple (k_1..k_m) of
// nonnegative integers is an arrow [m] -> [sum k_i]. Under the functor into
// endofunctors a 1-tuple (k) is the k-fold comultiplication G -> G^k, and
// a tuple is the Godement product of its entries, outermost entry first.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cyc {

class Tuple {
 public:
  using value_type = unsigned;

  Tuple() = default;
  Tuple(std::initializer_list<value_type> entries) : entries_(entries) {}
  explicit Tuple(std::vector<value_type> entries) : entries_(std::move(entries)) {}

  /// (1,...,1) of the given length: the identity on [n].
  static Tuple identity(std::size_t n) { return Tuple(std::vector<value_type>(n, 1)); }

  /// Parses "0004" (one digit per entry) or "10,0,2" (comma separated).
  static Tuple parse(std::string_view text);

  const std::vector<value_type>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  value_type operator[](std::size_t i) const { return entries_[i]; }

  std::size_t domain() const noexcept { return entries_.size(); }
  std::size_t codomain() const noexcept;

  /// Digit string when every entry is <= 9, comma-separated otherwise.
  std::string str() const;

  friend bool operator==(const Tuple&, const Tuple&) = default;
  // Lexicographic; tuples of different length order by the entries first.
  friend std::strong_ordering operator<=>(const Tuple& a, const Tuple& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<value_type> entries_;
};

/// r o k: apply k first, then r. Entry i of the result sums k_i consecutive
/// entries of r. Throws ShapeError unless sum(k) == length(r).
Tuple compose(const Tuple& r, const Tuple& k);

/// Concatenation; the monoidal product of P.
Tuple tensor(const Tuple& r, const Tuple& s);

/// Lexicographic comparison of equal-length tuples. Throws ShapeError otherwise.
std::strong_ordering lex_cmp(const Tuple& r, const Tuple& s);

/// Decrements the first nonzero entry. Two tuples are twins iff their keys
/// agree. Throws DomainError on an all-zero tuple.
Tuple twin_key(const Tuple& s);

bool are_twins(const Tuple& s, const Tuple& t);

/// Inductive encoding of endomorphism tuples as strings over {a,b,c}:
///   02 -> a, 11 -> b, 20 -> c;
///   (0,s2,...) -> 'a' + enc(s2-1,...)   when s2 > 1;
///   (1,s2,...) -> 'b' + enc(s2,...);
///   (2,1,...,1,0) -> c^(n-1).
/// Returns nullopt when no rule accepts the tuple.
std::optional<std::string> abc_encode(const Tuple& s);

/// All tuples of length n with entries summing to n, in lexicographic order.
std::vector<Tuple> endomorphisms(std::size_t n);

}  // namespace cyc
