#pragma once

// Formal natural transformations between powers of a comonad G, built from
// the counit, the comultiplication and a braiding t : GG => GG by whiskering
// and vertical composition.
//
// A Layer (left, gen, right) is G^left(gen_{G^right}). A Word stores its
// layers in application order: layers().front() acts first. Words are kept
// exactly as built; equality of the transformations they denote is decided
// by symbolic expansion or by evaluation in a model, never syntactically.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace cyc {

enum class Gen { eps, delta, braid, braid_inv };

constexpr std::size_t source_arity(Gen g) noexcept { return g == Gen::eps || g == Gen::delta ? 1 : 2; }
constexpr std::size_t target_arity(Gen g) noexcept { return g == Gen::eps ? 0 : 2; }

struct Layer {
  std::size_t left = 0;
  Gen gen = Gen::eps;
  std::size_t right = 0;

  std::size_t source() const noexcept { return left + source_arity(gen) + right; }
  std::size_t target() const noexcept { return left + target_arity(gen) + right; }
  std::string str() const;

  friend auto operator<=>(const Layer&, const Layer&) = default;
};

class Word {
 public:
  /// Identity at G^source.
  explicit Word(std::size_t source = 0) : source_(source), target_(source) {}

  static Word single(std::size_t left, Gen gen, std::size_t right);

  std::size_t source() const noexcept { return source_; }
  std::size_t target() const noexcept { return target_; }
  const std::vector<Layer>& layers() const noexcept { return layers_; }
  bool is_identity() const noexcept { return layers_.empty(); }
  bool contains(Gen g) const noexcept;

  /// Appends a layer applied after everything so far.
  Word& push(const Layer& layer);

  /// Composition notation, last-applied layer leftmost:
  /// "G(t_G)·δ_{G^2}·G(δ)". Identity prints as "1_{G^n}".
  std::string str() const;

  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::size_t source_;
  std::size_t target_;
  std::vector<Layer> layers_;
};

/// outer o inner. Throws ShapeError on an arity mismatch.
Word compose(const Word& outer, const Word& inner);
/// w1 o w2 o ... o wk (wk applied first).
Word compose(std::initializer_list<Word> words);
/// G^left(w_{G^right}).
Word whisker(const Word& w, std::size_t left, std::size_t right);
/// w o w o ... o w; power 0 is the identity.
Word power(const Word& w, std::size_t k);

inline Word eps(std::size_t left = 0, std::size_t right = 0) { return Word::single(left, Gen::eps, right); }
inline Word delta(std::size_t left = 0, std::size_t right = 0) { return Word::single(left, Gen::delta, right); }
inline Word braid(std::size_t left = 0, std::size_t right = 0) { return Word::single(left, Gen::braid, right); }
inline Word braid_inv(std::size_t left = 0, std::size_t right = 0) {
  return Word::single(left, Gen::braid_inv, right);
}

/// d_i^n = G^i eps G^(n-i) : G^(n+1) -> G^n, 0 <= i <= n.
Word face(std::size_t n, std::size_t i);
/// s_i^n = G^i delta G^(n-i) : G^(n+1) -> G^(n+2), 0 <= i <= n.
Word degeneracy(std::size_t n, std::size_t i);
/// t_n = t_{G^(n-1)} o G(t_{G^(n-2)}) o ... o G^(n-1)(t), n >= 1.
Word cyclic_word(std::size_t n);
/// As cyclic_word but also defined at 0, where it is the identity of G.
Word braid_cycle(std::size_t n);

/// delta^(n) : G^n -> G^2n by delta^(n) = G^(n-1)(t_{n-1,G}) delta^(n-1)_{G^2} G^(n-1)(delta).
Word coproduct_n(std::size_t n);
/// The second recursion: G^(n-1)(t_{n-1,G}) G^(2n-2)(delta) delta^(n-1)_G.
Word coproduct_n_alt(std::size_t n);
/// Fully unrolled: prod_j G^(n-j)(t_{n-j, G^(2j-1)}) prod_p G^p(delta_{G^(2n-2p-2)}).
Word coproduct_n_expanded(std::size_t n);
/// eps^(n) = eps o G(eps) o ... o G^(n-1)(eps) : G^n -> 1.
Word counit_n(std::size_t n);

/// Integer combination of parallel words.
class TermExpr {
 public:
  TermExpr(std::size_t source, std::size_t target) : source_(source), target_(target) {}
  TermExpr(const Word& w) : source_(w.source()), target_(w.target()) { add(w, 1); }  // NOLINT

  std::size_t source() const noexcept { return source_; }
  std::size_t target() const noexcept { return target_; }
  const std::map<Word, long>& terms() const noexcept { return terms_; }

  void add(const Word& w, long coeff);
  TermExpr& operator+=(const TermExpr& o);
  TermExpr& operator-=(const TermExpr& o);
  friend TermExpr operator+(TermExpr a, const TermExpr& b) { return a += b; }
  friend TermExpr operator-(TermExpr a, const TermExpr& b) { return a -= b; }

  /// "δ·ε_G + δ·G(ε) - 1_{G^2}"; "0" when empty.
  std::string str() const;

  friend bool operator==(const TermExpr&, const TermExpr&) = default;

 private:
  std::size_t source_;
  std::size_t target_;
  std::map<Word, long> terms_;
};

/// The trivial symmetry delta eps_G + delta G(eps) - 1 of an additive comonad.
TermExpr trivial_symmetry_expr();

}  // namespace cyc
