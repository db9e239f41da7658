#include "cyc/word.hpp"

#include "cyc/error.hpp"

namespace cyc {

namespace {

std::string power_of_g(std::size_t k) {
  if (k == 1) return "G";
  return "G^" + std::to_string(k);
}

std::string symbol(Gen g) {
  switch (g) {
    case Gen::eps: return "ε";
    case Gen::delta: return "δ";
    case Gen::braid: return "t";
    case Gen::braid_inv: return "t^{-1}";
  }
  return "?";
}

}  // namespace

std::string Layer::str() const {
  std::string s = symbol(gen);
  if (right == 1)
    s += "_G";
  else if (right > 1)
    s += "_{G^" + std::to_string(right) + "}";
  if (left > 0) s = power_of_g(left) + "(" + s + ")";
  return s;
}

Word Word::single(std::size_t left, Gen gen, std::size_t right) {
  Layer layer{left, gen, right};
  Word w(layer.source());
  w.push(layer);
  return w;
}

bool Word::contains(Gen g) const noexcept {
  for (const auto& l : layers_)
    if (l.gen == g) return true;
  return false;
}

Word& Word::push(const Layer& layer) {
  if (layer.source() != target_)
    throw ShapeError("Word::push: layer " + layer.str() + " expects G^" + std::to_string(layer.source()) +
                     " but word ends at G^" + std::to_string(target_));
  layers_.push_back(layer);
  target_ = layer.target();
  return *this;
}

std::string Word::str() const {
  if (layers_.empty()) return "1_{G^" + std::to_string(source_) + "}";
  std::string s;
  for (auto it = layers_.rbegin(); it != layers_.rend(); ++it) {
    if (!s.empty()) s += "·";
    s += it->str();
  }
  return s;
}

Word compose(const Word& outer, const Word& inner) {
  if (outer.source() != inner.target())
    throw ShapeError("compose: G^" + std::to_string(inner.target()) + " -> G^" + std::to_string(outer.source()));
  Word out = inner;
  for (const auto& l : outer.layers()) out.push(l);
  return out;
}

Word compose(std::initializer_list<Word> words) {
  if (words.size() == 0) throw ShapeError("compose: empty list");
  auto it = std::rbegin(words);
  Word out = *it;
  for (++it; it != std::rend(words); ++it) out = compose(*it, out);
  return out;
}

Word whisker(const Word& w, std::size_t left, std::size_t right) {
  Word out(w.source() + left + right);
  for (const auto& l : w.layers()) out.push(Layer{l.left + left, l.gen, l.right + right});
  return out;
}

Word power(const Word& w, std::size_t k) {
  if (k > 0 && w.source() != w.target()) throw ShapeError("power: word is not an endomorphism");
  Word out(w.source());
  for (std::size_t i = 0; i < k; ++i) out = compose(w, out);
  return out;
}

Word face(std::size_t n, std::size_t i) {
  if (i > n) throw DomainError("face: index " + std::to_string(i) + " > degree " + std::to_string(n));
  return eps(i, n - i);
}

Word degeneracy(std::size_t n, std::size_t i) {
  if (i > n) throw DomainError("degeneracy: index " + std::to_string(i) + " > degree " + std::to_string(n));
  return delta(i, n - i);
}

Word braid_cycle(std::size_t n) {
  Word w(n + 1);
  for (std::size_t j = n; j-- > 0;) w.push(Layer{j, Gen::braid, n - 1 - j});
  return w;
}

Word cyclic_word(std::size_t n) {
  if (n == 0) throw DomainError("cyclic_word: degree must be >= 1");
  return braid_cycle(n);
}

Word coproduct_n(std::size_t n) {
  if (n == 0) throw DomainError("coproduct_n: level must be >= 1");
  if (n == 1) return delta();
  return compose({whisker(braid_cycle(n - 1), n - 1, 1), whisker(coproduct_n(n - 1), 0, 2), delta(n - 1, 0)});
}

Word coproduct_n_alt(std::size_t n) {
  if (n == 0) throw DomainError("coproduct_n_alt: level must be >= 1");
  if (n == 1) return delta();
  return compose(
      {whisker(braid_cycle(n - 1), n - 1, 1), delta(2 * n - 2, 0), whisker(coproduct_n_alt(n - 1), 0, 1)});
}

Word coproduct_n_expanded(std::size_t n) {
  if (n == 0) throw DomainError("coproduct_n_expanded: level must be >= 1");
  Word w(n);
  for (std::size_t p = n; p-- > 0;) w = compose(delta(p, 2 * n - 2 * p - 2), w);
  for (std::size_t j = n - 1; j >= 1; --j) w = compose(whisker(braid_cycle(n - j), n - j, 2 * j - 1), w);
  return w;
}

Word counit_n(std::size_t n) {
  if (n == 0) throw DomainError("counit_n: level must be >= 1");
  Word w(n);
  for (std::size_t i = n; i-- > 0;) w.push(Layer{i, Gen::eps, 0});
  return w;
}

void TermExpr::add(const Word& w, long coeff) {
  if (w.source() != source_ || w.target() != target_) throw ShapeError("TermExpr::add: arity mismatch");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

TermExpr& TermExpr::operator+=(const TermExpr& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

TermExpr& TermExpr::operator-=(const TermExpr& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

std::string TermExpr::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    long mag = c < 0 ? -c : c;
    std::string body = (mag == 1 ? "" : std::to_string(mag) + "·") + w.str();
    if (first)
      s += (c < 0 ? "-" : "") + body;
    else
      s += (c < 0 ? " - " : " + ") + body;
    first = false;
  }
  return s;
}

TermExpr trivial_symmetry_expr() {
  TermExpr tau(2, 2);
  tau.add(compose(delta(), eps(0, 1)), 1);
  tau.add(compose(delta(), eps(1, 0)), 1);
  tau.add(Word(2), -1);
  return tau;
}

}  // namespace cyc
