#include "cyc/cyclic_object.hpp"

#include "cyc/error.hpp"
#include "cyc/kernels.hpp"
#include "cyc/relations.hpp"

namespace cyc {

namespace {

std::string label(const char* rel, std::initializer_list<std::pair<const char*, std::size_t>> params) {
  std::string s = rel;
  if (params.size() == 0) return s;
  s += "{";
  bool first = true;
  for (const auto& [k, v] : params) {
    if (!first) s += ",";
    s += std::string(k) + "=" + std::to_string(v);
    first = false;
  }
  return s + "}";
}

Matrix power(const Matrix& m, std::size_t k) {
  Matrix acc = Matrix::identity(m.rows(), m.field());
  for (std::size_t i = 0; i < k; ++i) acc = multiply(m, acc);
  return acc;
}

void check_shapes(const CyclicObjectData& x) {
  const std::size_t N = x.levels;
  auto fail = [&](const std::string& what) { throw ShapeError("cyclic object '" + x.name + "': " + what); };
  if (x.dims.size() != N + 1 || x.cyclic.size() != N + 1 || x.cyclic_inverse.size() != N + 1 ||
      x.faces.size() != N + 1 || x.degens.size() != N + 1)
    fail("expected data for levels 0.." + std::to_string(N));
  for (std::size_t n = 0; n <= N; ++n) {
    const Index d = x.dims[n];
    if (x.cyclic[n].rows() != d || x.cyclic[n].cols() != d) fail("t_" + std::to_string(n) + " has the wrong size");
    if (x.cyclic_inverse[n] && (x.cyclic_inverse[n]->rows() != d || x.cyclic_inverse[n]->cols() != d))
      fail("inverse of t_" + std::to_string(n) + " has the wrong size");
    if (x.faces[n].size() != (n == 0 ? 0 : n + 1)) fail("wrong number of faces at level " + std::to_string(n));
    for (const auto& f : x.faces[n])
      if (f.rows() != x.dims[n - 1] || f.cols() != d) fail("face at level " + std::to_string(n) + " has the wrong size");
    if (x.degens[n].size() != (n == N ? 0 : n + 1)) fail("wrong number of degeneracies at level " + std::to_string(n));
    for (const auto& s : x.degens[n])
      if (s.rows() != x.dims[n + 1] || s.cols() != d)
        fail("degeneracy at level " + std::to_string(n) + " has the wrong size");
  }
}

}  // namespace

std::vector<CyclicCheck> check_cyclic_object(const CyclicObjectData& x) {
  check_shapes(x);
  const std::size_t N = x.levels;
  const auto& d = x.faces;
  const auto& s = x.degens;
  const auto& t = x.cyclic;
  std::vector<CyclicCheck> out;
  auto check = [&](const char* rel, std::string lbl, const Matrix& lhs, const Matrix& rhs) {
    out.push_back({rel, std::move(lbl), first_difference(lhs, rhs)});
  };

  for (std::size_t n = 2; n <= N; ++n)
    for (std::size_t j = 1; j <= n; ++j)
      for (std::size_t i = 0; i < j; ++i)
        check("face_face", label("face_face", {{"i", i}, {"j", j}, {"n", n}}), multiply(d[n - 1][i], d[n][j]),
              multiply(d[n - 1][j - 1], d[n][i]));
  for (std::size_t n = 0; n + 1 < N; ++n)
    for (std::size_t j = 0; j <= n; ++j)
      for (std::size_t i = 0; i <= j; ++i)
        check("degen_degen", label("degen_degen", {{"i", i}, {"j", j}, {"n", n}}), multiply(s[n + 1][i], s[n][j]),
              multiply(s[n + 1][j + 1], s[n][i]));
  for (std::size_t n = 0; n < N; ++n)
    for (std::size_t j = 0; j <= n; ++j)
      for (std::size_t i = 0; i <= n + 1; ++i) {
        const Matrix lhs = multiply(d[n + 1][i], s[n][j]);
        std::string lbl = label("face_degen", {{"i", i}, {"j", j}, {"n", n}});
        if (i < j)
          check("face_degen", lbl, lhs, multiply(s[n - 1][j - 1], d[n][i]));
        else if (i == j || i == j + 1)
          check("face_degen", lbl, lhs, Matrix::identity(x.dims[n], x.field));
        else
          check("face_degen", lbl, lhs, multiply(s[n - 1][j], d[n][i - 1]));
      }

  for (std::size_t n = 1; n <= N; ++n) {
    for (std::size_t i = 1; i <= n; ++i)
      check("A", label("A", {{"i", i}, {"n", n}}), multiply(d[n][i], t[n]), multiply(t[n - 1], d[n][i - 1]));
    check("C", label("C", {{"n", n}}), multiply(d[n][0], t[n]), d[n][n]);
  }
  for (std::size_t n = 0; n < N; ++n) {
    for (std::size_t i = 1; i <= n; ++i)
      check("B", label("B", {{"i", i}, {"n", n}}), multiply(s[n][i], t[n]), multiply(t[n + 1], s[n][i - 1]));
    check("D", label("D", {{"n", n}}), multiply(s[n][0], t[n]), multiply(power(t[n + 1], 2), s[n][n]));
  }

  for (std::size_t n = 0; n <= N; ++n) {
    const Matrix id = Matrix::identity(x.dims[n], x.field);
    std::optional<Matrix> inv = x.cyclic_inverse[n];
    if (!inv) inv = inverse(t[n]);
    if (!inv) {
      out.push_back({"invertible", label("invertible", {{"n", n}}), Mismatch{0, 0, "singular", "invertible"}});
      continue;
    }
    auto m = first_difference(multiply(t[n], *inv), id);
    if (!m) m = first_difference(multiply(*inv, t[n]), id);
    out.push_back({"invertible", label("invertible", {{"n", n}}), m});
  }
  if (x.is_cyclic)
    for (std::size_t n = 0; n <= N; ++n)
      check("cyclicity", label("cyclicity", {{"n", n}}), power(t[n], n + 1), Matrix::identity(x.dims[n], x.field));
  return out;
}

void validate(const CyclicObjectData& x) {
  for (const auto& c : check_cyclic_object(x))
    if (!c.holds())
      throw AxiomError(c.label, "cyclic object '" + x.name + "' fails at entry (" + std::to_string(c.mismatch->row) +
                                    "," + std::to_string(c.mismatch->col) + ")");
}

namespace {

CyclicObjectData empty_object(std::string name, const Field& field, std::size_t levels) {
  CyclicObjectData x;
  x.name = std::move(name);
  x.field = field;
  x.levels = levels;
  x.dims.resize(levels + 1);
  x.faces.resize(levels + 1);
  x.degens.resize(levels + 1);
  x.cyclic.resize(levels + 1);
  x.cyclic_inverse.resize(levels + 1);
  return x;
}

Word inverse_cycle(std::size_t n) {
  Word w(n + 1);
  for (std::size_t j = 0; j < n; ++j) w.push(Layer{j, Gen::braid_inv, n - 1 - j});
  return w;
}

}  // namespace

CyclicObjectData from_comonad(const Coalgebra& c, const BraidCandidate& t, std::size_t levels) {
  CyclicObjectData x = empty_object(c.name + "/" + t.name, c.field, levels);
  for (std::size_t n = 0; n <= levels; ++n) {
    x.dims[n] = ipow(c.dim, n + 1);
    if (n >= 1)
      for (std::size_t i = 0; i <= n; ++i) x.faces[n].push_back(eval_word(c, &t, face(n, i)));
    if (n < levels)
      for (std::size_t i = 0; i <= n; ++i) x.degens[n].push_back(eval_word(c, &t, degeneracy(n, i)));
    x.cyclic[n] = eval_word(c, &t, braid_cycle(n));
    if (t.inverse) x.cyclic_inverse[n] = eval_word(c, &t, inverse_cycle(n));
  }
  x.is_cyclic = multiply(t.t, t.t) == Matrix::identity(t.t.rows(), c.field);
  return x;
}

CyclicObjectData constant_cyclic_object(const Field& field, std::size_t levels) {
  CyclicObjectData x = empty_object("constant", field, levels);
  const Matrix one = Matrix::identity(1, field);
  for (std::size_t n = 0; n <= levels; ++n) {
    x.dims[n] = 1;
    if (n >= 1) x.faces[n].assign(n + 1, one);
    if (n < levels) x.degens[n].assign(n + 1, one);
    x.cyclic[n] = one;
    x.cyclic_inverse[n] = one;
  }
  x.is_cyclic = true;
  return x;
}

namespace {

// Basis of A^(x)m, A = k[x]/(x^2) with basis {1, x}: bit k (from the most
// significant end) is 1 when factor k is x.
std::vector<unsigned> bits_of(Index i, std::size_t m) {
  std::vector<unsigned> b(m);
  for (std::size_t k = m; k-- > 0;) {
    b[k] = static_cast<unsigned>(i & 1);
    i >>= 1;
  }
  return b;
}

Index index_of(const std::vector<unsigned>& b) {
  Index i = 0;
  for (unsigned v : b) i = (i << 1) | v;
  return i;
}

template <class Fn>
Matrix basis_map(Index rows, Index cols, std::size_t m, const Field& f, Fn fn) {
  Matrix out(rows, cols, f);
  for (Index j = 0; j < cols; ++j) {
    auto image = fn(bits_of(j, m));
    if (image) out.set_column(j, {{index_of(*image), f.one()}});
  }
  return out;
}

}  // namespace

CyclicObjectData hochschild_cyclic_object(const Field& field, std::size_t levels) {
  CyclicObjectData x = empty_object("hochschild", field, levels);
  using Bits = std::vector<unsigned>;
  for (std::size_t n = 0; n <= levels; ++n) {
    const std::size_t m = n + 1;
    x.dims[n] = Index{1} << m;
    if (n >= 1)
      for (std::size_t i = 0; i <= n; ++i)
        x.faces[n].push_back(basis_map(x.dims[n] >> 1, x.dims[n], m, field, [&](const Bits& b) -> std::optional<Bits> {
          Bits out;
          if (i < n) {
            if (b[i] && b[i + 1]) return std::nullopt;  // x * x = 0
            out = b;
            out[i] = b[i] | b[i + 1];
            out.erase(out.begin() + static_cast<std::ptrdiff_t>(i) + 1);
          } else {
            if (b[n] && b[0]) return std::nullopt;
            out.assign(b.begin(), b.end() - 1);
            out[0] = b[n] | b[0];
          }
          return out;
        }));
    if (n < levels)
      for (std::size_t i = 0; i <= n; ++i)
        x.degens[n].push_back(basis_map(x.dims[n] << 1, x.dims[n], m, field, [&](const Bits& b) -> std::optional<Bits> {
          Bits out = b;
          out.insert(out.begin() + static_cast<std::ptrdiff_t>(i) + 1, 0u);
          return out;
        }));
    x.cyclic[n] = basis_map(x.dims[n], x.dims[n], m, field, [&](const Bits& b) -> std::optional<Bits> {
      Bits out{b.back()};
      out.insert(out.end(), b.begin(), b.end() - 1);
      return out;
    });
    x.cyclic_inverse[n] = basis_map(x.dims[n], x.dims[n], m, field, [&](const Bits& b) -> std::optional<Bits> {
      Bits out(b.begin() + 1, b.end());
      out.push_back(b.front());
      return out;
    });
  }
  x.is_cyclic = true;
  return x;
}

CyclicObjectData relative_data(const Coalgebra& c, const BraidCandidate& t, const CyclicObjectData& x,
                               std::size_t levels) {
  if (levels > x.levels)
    throw DomainError("relative_data: level " + std::to_string(levels) + " exceeds the truncation " +
                      std::to_string(x.levels) + " of '" + x.name + "'");
  if (x.field != c.field) throw DomainError("relative_data: cyclic object over the wrong field");
  validate(x);
  for (const char* id : {"bottom1", "bottom2", "bottom3", "bottom4", "qybe", "tcubed"}) {
    auto sides = relation_sides(id);
    if (auto m = first_difference(eval_termexpr(c, &t, sides.lhs), eval_termexpr(c, &t, sides.rhs)))
      throw AxiomError(id, "braiding '" + t.name + "' fails a hypothesis of the construction");
  }
  if (!t.inverse) throw AxiomError("invertible", "braiding '" + t.name + "' is not invertible");

  CyclicObjectData y = empty_object(c.name + "/" + t.name + "/" + x.name, c.field, levels);
  auto identity = [&](std::size_t n) { return Matrix::identity(ipow(c.dim, n + 1) * x.dims[n], c.field); };
  for (std::size_t n = 0; n <= levels; ++n) {
    y.dims[n] = ipow(c.dim, n + 1) * x.dims[n];
    if (n >= 1)
      for (std::size_t i = 0; i <= n; ++i) {
        const Matrix g = eval_word(c, &t, face(n, i));
        y.faces[n].push_back(apply_chain({{&x.faces[n][i], 1}, {&g, x.dims[n - 1]}}, identity(n)));
      }
    if (n < levels)
      for (std::size_t i = 0; i <= n; ++i) {
        const Matrix g = eval_word(c, &t, degeneracy(n, i));
        y.degens[n].push_back(apply_chain({{&x.degens[n][i], 1}, {&g, x.dims[n + 1]}}, identity(n)));
      }
    const Matrix tn = eval_word(c, &t, braid_cycle(n));
    y.cyclic[n] = apply_chain({{&tn, x.dims[n]}, {&x.cyclic[n], 1}}, identity(n));
    std::optional<Matrix> xinv = x.cyclic_inverse[n] ? x.cyclic_inverse[n] : inverse(x.cyclic[n]);
    if (xinv) {
      const Matrix tinv = eval_word(c, &t, inverse_cycle(n));
      y.cyclic_inverse[n] = apply_chain({{&*xinv, 1}, {&tinv, x.dims[n]}}, identity(n));
    }
  }
  y.is_cyclic = x.is_cyclic && multiply(t.t, t.t) == Matrix::identity(t.t.rows(), c.field);
  return y;
}

}  // namespace cyc
