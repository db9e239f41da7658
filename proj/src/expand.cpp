#include "cyc/expand.hpp"

#include "cyc/error.hpp"

namespace cyc {

IntLinComb trivial_braid_image() {
  IntLinComb x(2, 2);
  x.add(Tuple{0, 2}, 1);
  x.add(Tuple{1, 1}, -1);
  x.add(Tuple{2, 0}, 1);
  return x;
}

PolyLinComb theta_braid_image() {
  PolyLinComb x(2, 2);
  x.add(Tuple{0, 2}, PolyPR::p());
  x.add(Tuple{1, 1}, -PolyPR::p());
  x.add(Tuple{2, 0}, PolyPR::r());
  return x;
}

namespace {

template <class Coeff>
LinComb<Coeff> layer_image(const Layer& l, const LinComb<Coeff>& braid_image) {
  LinComb<Coeff> core(source_arity(l.gen), target_arity(l.gen));
  switch (l.gen) {
    case Gen::eps: core = LinComb<Coeff>::single(Tuple{0}); break;
    case Gen::delta: core = LinComb<Coeff>::single(Tuple{2}); break;
    case Gen::braid: core = braid_image; break;
    case Gen::braid_inv: throw DomainError("expand_symbolic: braid_inv has no tuple image");
  }
  return lincomb_tensor(lincomb_tensor(LinComb<Coeff>::identity(l.left), core), LinComb<Coeff>::identity(l.right));
}

template <class Coeff>
LinComb<Coeff> expand_word(const Word& w, const LinComb<Coeff>& braid_image) {
  auto acc = LinComb<Coeff>::identity(w.source());
  for (const auto& l : w.layers()) acc = lincomb_compose(layer_image(l, braid_image), acc);
  return acc;
}

}  // namespace

template <class Coeff>
LinComb<Coeff> expand_with(const TermExpr& x, const LinComb<Coeff>& braid_image) {
  LinComb<Coeff> out(x.source(), x.target());
  for (const auto& [w, c] : x.terms()) out += expand_word(w, braid_image).scaled(Coeff(c));
  return out;
}

template IntLinComb expand_with(const TermExpr&, const IntLinComb&);
template PolyLinComb expand_with(const TermExpr&, const PolyLinComb&);

IntLinComb expand_trivial(const TermExpr& x) { return expand_with(x, trivial_braid_image()); }

PolyLinComb expand_theta(const TermExpr& x) { return expand_with(x, theta_braid_image()); }

PolyLinComb expand_symbolic(const TermExpr& x, Substitution sub) {
  return sub == Substitution::trivial ? to_poly(expand_trivial(x)) : expand_theta(x);
}

}  // namespace cyc
