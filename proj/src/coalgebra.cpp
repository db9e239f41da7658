#include "cyc/coalgebra.hpp"

#include <map>
#include <random>

#include "cyc/error.hpp"
#include "cyc/kernels.hpp"

namespace cyc {

namespace {

std::string describe(const Mismatch& m) {
  return "entry (" + std::to_string(m.row) + "," + std::to_string(m.col) + ") is " + m.lhs + ", expected " + m.rhs;
}

void require_equal(const Matrix& lhs, const Matrix& rhs, const char* axiom) {
  if (auto m = first_difference(lhs, rhs)) throw AxiomError(axiom, describe(*m));
}

using Dense = std::vector<Scalar>;

// (a (x) b) o comult as a functional on the coalgebra.
Dense pair_through(const Matrix& comult, Index dim, const Dense& a, const Dense& b) {
  Dense out(dim, comult.field().zero());
  for (Index j = 0; j < dim; ++j)
    for (const auto& e : comult.column(j)) {
      const Scalar& x = a[e.index / dim];
      const Scalar& y = b[e.index % dim];
      if (!x.is_zero() && !y.is_zero()) out[j] += e.value * x * y;
    }
  return out;
}

// Large coalgebras: the two sides of coassociativity are compared under
// random product functionals f1 (x) f2 (x) f3. A nonzero difference survives
// one trial except with probability <= 3/|S| (Schwartz-Zippel), so the trial
// count scales with the sample set. Any disagreement is confirmed on the
// offending column with the exact kernel before it is reported.
void sketch_coassociativity(const Matrix& comult, Index dim) {
  const Field& f = comult.field();
  const std::uint64_t span = f.is_rational() ? (1u << 20) : f.modulus();
  std::size_t trials = 4;
  if (!f.is_rational()) {
    trials = 1;
    for (double miss = 3.0 / static_cast<double>(span); miss > 1e-15 && trials < 256; ++trials)
      miss *= 3.0 / static_cast<double>(span);
  }
  std::mt19937_64 rng(0x5eed'c0a1 ^ dim);
  auto draw = [&] {
    Dense v;
    v.reserve(dim);
    for (Index i = 0; i < dim; ++i) v.push_back(f.from_int(static_cast<long>(rng() % span)));
    return v;
  };
  for (std::size_t k = 0; k < trials; ++k) {
    const Dense f1 = draw(), f2 = draw(), f3 = draw();
    const Dense lhs = pair_through(comult, dim, pair_through(comult, dim, f1, f2), f3);
    const Dense rhs = pair_through(comult, dim, f1, pair_through(comult, dim, f2, f3));
    for (Index j = 0; j < dim; ++j) {
      if (lhs[j] == rhs[j]) continue;
      Matrix col(dim, 1, f);
      col.set_column(0, {{j, f.one()}});
      const Matrix one = apply_chain({{&comult, 1}}, col);
      const auto m = first_difference(apply_chain({{&comult, dim}}, one), apply_chain({{&comult, 1}}, one));
      Mismatch at = *m;
      at.col = j;
      throw AxiomError("coassociativity", describe(at));
    }
  }
}

}  // namespace

Coalgebra make_coalgebra(std::string name, Field field, Index dim, Matrix comult, Matrix counit) {
  if (dim == 0) throw ShapeError("coalgebra '" + name + "': dimension must be positive");
  if (comult.rows() != dim * dim || comult.cols() != dim)
    throw ShapeError("coalgebra '" + name + "': comultiplication must be " + std::to_string(dim * dim) + "x" +
                     std::to_string(dim));
  if (counit.rows() != 1 || counit.cols() != dim)
    throw ShapeError("coalgebra '" + name + "': counit must be 1x" + std::to_string(dim));
  if (comult.field() != field || counit.field() != field)
    throw DomainError("coalgebra '" + name + "': structure maps over the wrong field");

  const Matrix id = Matrix::identity(dim, field);
  if (dim <= kExhaustiveCoassociativityDim)
    require_equal(apply_chain({{&comult, dim}}, comult), apply_chain({{&comult, 1}}, comult), "coassociativity");
  else
    sketch_coassociativity(comult, dim);
  require_equal(apply_chain({{&counit, dim}}, comult), id, "counit_left");
  require_equal(apply_chain({{&counit, 1}}, comult), id, "counit_right");
  return Coalgebra{std::move(name), field, dim, std::move(comult), std::move(counit)};
}

BraidCandidate make_braid(std::string name, Matrix t, std::optional<Matrix> inverse) {
  if (t.rows() != t.cols()) throw ShapeError("braid '" + name + "' is not square");
  if (inverse) {
    if (inverse->rows() != t.rows() || inverse->cols() != t.cols())
      throw ShapeError("braid '" + name + "': inverse has the wrong shape");
    const Matrix id = Matrix::identity(t.rows(), t.field());
    require_equal(multiply(t, *inverse), id, "inverse");
    require_equal(multiply(*inverse, t), id, "inverse");
  } else {
    inverse = cyc::inverse(t);
  }
  return BraidCandidate{std::move(name), std::move(t), std::move(inverse)};
}

BraidCandidate trivial_symmetry_matrix(const Coalgebra& c) {
  Matrix t = eval_termexpr(c, nullptr, trivial_symmetry_expr());
  require_equal(multiply(t, t), Matrix::identity(t.rows(), c.field), "t2");
  Matrix inv = t;
  return BraidCandidate{"trivial", std::move(t), std::move(inv)};
}

BraidCandidate theta_matrix(const Coalgebra& c, const Scalar& p, const Scalar& r) {
  const Matrix left = eval_word(c, nullptr, compose(delta(), eps(0, 1)));
  const Matrix right = eval_word(c, nullptr, compose(delta(), eps(1, 0)));
  const Matrix id = Matrix::identity(c.dim * c.dim, c.field);
  Matrix t = scale(left, p) - scale(id, p) + scale(right, r);
  return make_braid("theta:" + p.str() + "," + r.str(), std::move(t));
}

Matrix eval_word(const Coalgebra& c, const BraidCandidate* t, const Word& w) {
  std::vector<LocalOp> steps;
  steps.reserve(w.layers().size());
  for (const auto& l : w.layers()) {
    const Matrix* op = nullptr;
    switch (l.gen) {
      case Gen::eps: op = &c.counit; break;
      case Gen::delta: op = &c.comult; break;
      case Gen::braid:
        if (!t) throw DomainError("eval_word: " + w.str() + " needs a braiding");
        op = &t->t;
        break;
      case Gen::braid_inv:
        if (!t) throw DomainError("eval_word: " + w.str() + " needs a braiding");
        if (!t->inverse) throw DomainError("eval_word: braiding '" + t->name + "' has no inverse");
        op = &*t->inverse;
        break;
    }
    if (op->rows() != ipow(c.dim, target_arity(l.gen)) || op->cols() != ipow(c.dim, source_arity(l.gen)))
      throw ShapeError("eval_word: structure map for " + l.str() + " has the wrong size");
    steps.push_back({op, ipow(c.dim, l.right)});
  }
  return apply_chain(steps, Matrix::identity(ipow(c.dim, w.source()), c.field));
}

Matrix eval_termexpr(const Coalgebra& c, const BraidCandidate* t, const TermExpr& x) {
  Matrix acc(ipow(c.dim, x.target()), ipow(c.dim, x.source()), c.field);
  for (const auto& [w, k] : x.terms()) acc = acc + scale(eval_word(c, t, w), c.field.from_int(k));
  return acc;
}

Matrix iterated_comult(const Coalgebra& c, std::size_t k) {
  if (k == 0) return c.counit;
  Matrix acc = Matrix::identity(c.dim, c.field);
  for (std::size_t j = 1; j < k; ++j) acc = apply_chain({{&c.comult, ipow(c.dim, j - 1)}}, acc);
  return acc;
}

namespace {

using Term = std::pair<const Tuple*, Scalar>;

// Groups the terms by their entry at `pos` so that shared prefixes are
// evaluated once: sum_t c_t (x)_i D_{t_i} = sum_k D_k (x) (sum over tails).
Matrix eval_terms(const Coalgebra& c, std::map<std::size_t, Matrix>& cache, const std::vector<Term>& terms,
                  std::size_t pos, std::size_t length) {
  if (pos == length) {
    Scalar sum = c.field.zero();
    for (const auto& [t, coeff] : terms) sum += coeff;
    Matrix m(1, 1, c.field);
    m.set_column(0, {{0, sum}});
    return m;
  }
  std::map<unsigned, std::vector<Term>> groups;
  std::size_t tail_sum = 0;
  for (const auto& term : terms) groups[(*term.first)[pos]].push_back(term);
  const auto& first = *terms.front().first;
  for (std::size_t i = pos; i < length; ++i) tail_sum += first[i];
  Matrix acc(ipow(c.dim, tail_sum), ipow(c.dim, length - pos), c.field);
  for (const auto& [k, group] : groups) {
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, iterated_comult(c, k)).first;
    acc = acc + kron(it->second, eval_terms(c, cache, group, pos + 1, length));
  }
  return acc;
}

Matrix eval_scalar_terms(const Coalgebra& c, std::size_t domain, std::size_t codomain, const std::vector<Term>& terms) {
  if (terms.empty()) return Matrix(ipow(c.dim, codomain), ipow(c.dim, domain), c.field);
  std::map<std::size_t, Matrix> cache;
  return eval_terms(c, cache, terms, 0, domain);
}

}  // namespace

Matrix eval_lincomb(const Coalgebra& c, const IntLinComb& x) {
  std::vector<Term> terms;
  for (const auto& [t, coeff] : x.terms()) terms.emplace_back(&t, c.field.from_mpz(coeff));
  return eval_scalar_terms(c, x.domain(), x.codomain(), terms);
}

Scalar evaluate(const PolyPR& poly, const Bindings& b, const Field& field) {
  Scalar sum = field.zero();
  for (const auto& [exps, coeff] : poly.terms()) {
    Scalar term = field.from_mpz(coeff);
    for (unsigned i = 0; i < exps.first; ++i) term *= b.p;
    for (unsigned i = 0; i < exps.second; ++i) term *= b.r;
    sum += term;
  }
  return sum;
}

Matrix eval_lincomb(const Coalgebra& c, const PolyLinComb& x, const std::optional<Bindings>& bindings) {
  std::vector<Term> terms;
  for (const auto& [t, coeff] : x.terms()) {
    if (!bindings) {
      const auto& ts = coeff.terms();
      if (ts.size() != 1 || ts.begin()->first != PolyPR::Exponents{0, 0})
        throw DomainError("eval_lincomb: coefficient " + coeff.str() + " needs values for p and r");
      terms.emplace_back(&t, c.field.from_mpz(ts.begin()->second));
    } else {
      terms.emplace_back(&t, evaluate(coeff, *bindings, c.field));
    }
  }
  return eval_scalar_terms(c, x.domain(), x.codomain(), terms);
}

Coalgebra grouplike1() {
  const Field q = Field::rationals();
  return make_coalgebra("grouplike1", q, 1, Matrix::identity(1, q), Matrix::identity(1, q));
}

Coalgebra grouplike2() {
  const Field q = Field::rationals();
  Matrix comult(4, 2, q);
  comult.set_column(0, {{0, q.one()}});
  comult.set_column(1, {{3, q.one()}});
  Matrix counit(1, 2, q);
  counit.set_column(0, {{0, q.one()}});
  counit.set_column(1, {{0, q.one()}});
  return make_coalgebra("grouplike2", q, 2, std::move(comult), std::move(counit));
}

Coalgebra matrix_coalgebra(Index n, Field field, std::string name) {
  const Index d = n * n;
  Matrix comult(d * d, d, field);
  Matrix counit(1, d, field);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      SparseVec v;
      for (Index k = 0; k < n; ++k) v.push_back({(i * n + k) * d + (k * n + j), field.one()});
      comult.set_column(i * n + j, std::move(v));
      if (i == j) counit.set_column(i * n + j, {{0, field.one()}});
    }
  return make_coalgebra(std::move(name), field, d, std::move(comult), std::move(counit));
}

std::vector<Coalgebra> builtin_coalgebras() {
  return {grouplike1(), grouplike2(), matrix_coalgebra(2, Field::rationals(), "matrix4_q"),
          matrix_coalgebra(2, Field::integers_mod(5), "matrix4_z5")};
}

}  // namespace cyc
