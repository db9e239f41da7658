#include "cyc/ring_extension.hpp"

#include <random>
#include <set>
#include <tuple>

#include "cyc/error.hpp"
#include "cyc/kernels.hpp"

namespace cyc {

namespace {

std::string describe(const Mismatch& m) {
  return "entry (" + std::to_string(m.row) + "," + std::to_string(m.col) + ") is " + m.lhs + ", expected " + m.rhs;
}

Matrix swap_factors(Index r, const Field& f) {
  Matrix s(r * r, r * r, f);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < r; ++j) s.set_column(i * r + j, {{j * r + i, f.one()}});
  return s;
}

Matrix from_int_rows(Index rows, Index cols, const std::vector<long>& values, const Field& f) {
  std::vector<Scalar> s;
  s.reserve(values.size());
  for (long v : values) s.push_back(f.from_int(v));
  return Matrix::from_dense(rows, cols, s, f);
}

}  // namespace

RingExtension make_ring_extension(std::string name, Field field, Index rank, Matrix mult, Matrix unit) {
  if (rank == 0) throw ShapeError("ring extension '" + name + "': rank must be positive");
  if (mult.rows() != rank || mult.cols() != rank * rank)
    throw ShapeError("ring extension '" + name + "': multiplication must be " + std::to_string(rank) + "x" +
                     std::to_string(rank * rank));
  if (unit.rows() != rank || unit.cols() != 1)
    throw ShapeError("ring extension '" + name + "': unit must be " + std::to_string(rank) + "x1");
  if (mult.field() != field || unit.field() != field)
    throw DomainError("ring extension '" + name + "': structure constants over the wrong field");

  const Matrix id3 = Matrix::identity(rank * rank * rank, field);
  if (auto m = first_difference(apply_chain({{&mult, rank}, {&mult, 1}}, id3), apply_chain({{&mult, 1}, {&mult, 1}}, id3)))
    throw AxiomError("associativity", describe(*m));
  const Matrix id = Matrix::identity(rank, field);
  if (auto m = first_difference(multiply(mult, kron(unit, id)), id)) throw AxiomError("unit_left", describe(*m));
  if (auto m = first_difference(multiply(mult, kron(id, unit)), id)) throw AxiomError("unit_right", describe(*m));
  return RingExtension{std::move(name), field, rank, std::move(mult), std::move(unit)};
}

RingExtension ext_z5() {
  // basis 1, x with x^2 = -1
  const Field f = Field::integers_mod(5);
  Matrix mult = from_int_rows(2, 4, {1, 0, 0, -1,  //
                                     0, 1, 1, 0},
                              f);
  return make_ring_extension("ext_z5", f, 2, std::move(mult), from_int_rows(2, 1, {1, 0}, f));
}

RingExtension ext_m2q() {
  // matrix units e_ij at index 2i + j; e_ij e_kl = [j == k] e_il
  const Field f = Field::rationals();
  Matrix mult(4, 16, f);
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j)
      for (Index k = 0; k < 2; ++k)
        for (Index l = 0; l < 2; ++l)
          if (j == k) mult.set_column((2 * i + j) * 4 + (2 * k + l), {{2 * i + l, f.one()}});
  return make_ring_extension("ext_m2q", f, 4, std::move(mult), from_int_rows(4, 1, {1, 0, 0, 1}, f));
}

Matrix extension_symmetry(const RingExtension& e) {
  const Index r = e.rank;
  const Matrix id = Matrix::identity(r, e.field);
  Matrix left = multiply(kron(id, e.unit), e.mult);
  Matrix right = multiply(kron(e.unit, id), e.mult);
  return left + right - Matrix::identity(r * r, e.field);
}

Matrix nuss_mu_formula(const RingExtension& e, std::size_t n) {
  if (n == 0) throw DomainError("nuss_mu: level must be >= 1");
  const Index r = e.rank;
  const Matrix tau = extension_symmetry(e);
  std::vector<LocalOp> steps;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t k = n + j - 1; k >= 2 * j; --k) steps.push_back({&tau, ipow(r, 2 * n - k - 1)});
  for (std::size_t k = 2 * n - 1;; k -= 2) {
    steps.push_back({&e.mult, ipow(r, (2 * n - k - 1) / 2)});
    if (k == 1) break;
  }
  return apply_chain(steps, Matrix::identity(ipow(r, 2 * n), e.field));
}

Coalgebra dual_coalgebra(const RingExtension& e) {
  Matrix op = multiply(e.mult, swap_factors(e.rank, e.field));
  return make_coalgebra(e.name + "*", e.field, e.rank, transpose(op), transpose(e.unit));
}

Matrix nuss_mu_dual(const RingExtension& e, std::size_t n) {
  if (n == 0) throw DomainError("nuss_mu: level must be >= 1");
  const Coalgebra dual = dual_coalgebra(e);
  const BraidCandidate t = trivial_symmetry_matrix(dual);
  return mirror(transpose(eval_word(dual, &t, coproduct_n_expanded(n))), e.rank);
}

std::string basis_label(Index i, Index r, std::size_t factors) {
  std::vector<Index> digits(factors);
  for (std::size_t k = factors; k-- > 0;) {
    digits[k] = i % r;
    i /= r;
  }
  std::string s;
  for (std::size_t k = 0; k < factors; ++k) {
    if (k) s += "(x)";
    s += "e" + std::to_string(digits[k]);
  }
  return s;
}

NussResult nuss_mu(const RingExtension& e, std::size_t n) {
  NussResult out;
  out.mu = nuss_mu_formula(e, n);
  out.oracle = nuss_mu_dual(e, n);
  out.mismatch = first_difference(out.mu, out.oracle);
  out.agrees = !out.mismatch;
  if (out.mismatch) {
    const Index half = ipow(e.rank, n);
    const Index col = out.mismatch->col;
    out.first_input = basis_label(col / half, e.rank, n) + " | " + basis_label(col % half, e.rank, n);
  }
  return out;
}

Matrix tensor_unit(const RingExtension& e, std::size_t n) {
  Matrix u = Matrix::identity(1, e.field);
  for (std::size_t i = 0; i < n; ++i) u = kron(u, e.unit);
  return u;
}

AlgebraAudit audit_algebra(const Matrix& mu, const Matrix& unit, std::uint64_t exhaustive_limit,
                           std::uint64_t random_samples, std::uint64_t seed) {
  const Index d = unit.rows();
  if (mu.rows() != d || mu.cols() != d * d || unit.cols() != 1) throw ShapeError("audit_algebra: bad shapes");
  const Field& f = mu.field();
  AlgebraAudit out;

  std::set<std::tuple<Index, Index, Index>> triples;
  if (d * d * d <= exhaustive_limit) {
    out.exhaustive = true;
    for (Index a = 0; a < d; ++a)
      for (Index b = 0; b < d; ++b)
        for (Index c = 0; c < d; ++c) triples.emplace(a, b, c);
  } else {
    for (Index fixed : {Index{0}, d - 1})
      for (Index x = 0; x < d; ++x)
        for (Index y = 0; y < d; ++y) {
          triples.emplace(fixed, x, y);
          triples.emplace(x, fixed, y);
          triples.emplace(x, y, fixed);
        }
    std::mt19937_64 rng(seed);
    for (std::uint64_t k = 0; k < random_samples; ++k) triples.emplace(rng() % d, rng() % d, rng() % d);
  }

  Matrix sel(d * d * d, triples.size(), f);
  Index j = 0;
  for (const auto& [a, b, c] : triples) sel.set_column(j++, {{(a * d + b) * d + c, f.one()}});
  const Matrix lhs = apply_chain({{&mu, d}, {&mu, 1}}, sel);
  const Matrix rhs = apply_chain({{&mu, 1}, {&mu, 1}}, sel);
  out.triples_checked = triples.size();
  if (auto m = first_difference(lhs, rhs)) {
    out.associative = false;
    auto it = triples.begin();
    std::advance(it, static_cast<std::ptrdiff_t>(m->col));
    const auto& [a, b, c] = *it;
    out.first_failure = "(e" + std::to_string(a) + " e" + std::to_string(b) + ") e" + std::to_string(c) + " != e" +
                        std::to_string(a) + " (e" + std::to_string(b) + " e" + std::to_string(c) + ") at row " +
                        std::to_string(m->row);
  }

  const Matrix id = Matrix::identity(d, f);
  if (auto m = first_difference(multiply(mu, kron(unit, id)), id)) {
    out.unit_left = false;
    if (out.first_failure.empty()) out.first_failure = "1 e" + std::to_string(m->col) + " != e" + std::to_string(m->col);
  }
  if (auto m = first_difference(multiply(mu, kron(id, unit)), id)) {
    out.unit_right = false;
    if (out.first_failure.empty()) out.first_failure = "e" + std::to_string(m->col) + " 1 != e" + std::to_string(m->col);
  }
  return out;
}

}  // namespace cyc
