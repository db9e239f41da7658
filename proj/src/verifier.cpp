#include "cyc/verifier.hpp"

#include <chrono>
#include <set>
#include <stdexcept>

#include "cyc/composite.hpp"
#include "cyc/error.hpp"
#include "cyc/expand.hpp"
#include "cyc/relations.hpp"

namespace cyc {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string label(const std::string& id, const RelationParams& params) { return instance_label({id, params}); }

InstanceResult compare(const std::string& id, const RelationParams& params, const Matrix& lhs, const Matrix& rhs,
                       bool hard_if_failing) {
  InstanceResult r;
  r.label = label(id, params);
  r.params = params;
  r.mismatch = first_difference(lhs, rhs);
  r.status = r.mismatch ? Status::fail : Status::pass;
  r.hard = r.mismatch && hard_if_failing;
  return r;
}

InstanceResult finding(const std::string& id, const RelationParams& params, bool ok, std::string note,
                       bool hard_if_failing = false) {
  InstanceResult r;
  r.label = label(id, params);
  r.params = params;
  r.status = ok ? Status::pass : Status::fail;
  r.hard = !ok && hard_if_failing;
  r.note = std::move(note);
  return r;
}

InstanceResult skipped(const std::string& id, const RelationParams& params, std::string reason) {
  InstanceResult r;
  r.label = label(id, params);
  r.params = params;
  r.status = Status::skipped;
  r.note = std::move(reason);
  return r;
}

bool holds(const Coalgebra& c, const BraidCandidate& t, const std::string& id, const RelationParams& p = {}) {
  auto sides = relation_sides(id, p);
  return eval_termexpr(c, &t, sides.lhs) == eval_termexpr(c, &t, sides.rhs);
}

struct Hypotheses {
  bool bottom = true;
  bool qybe = true;
  bool tcubed = true;
  bool invertible = true;
  bool t2 = true;
  bool theorem1() const { return bottom && qybe && tcubed && invertible; }
};

Hypotheses hypotheses(const Coalgebra& c, const BraidCandidate& t) {
  Hypotheses h;
  for (const char* id : {"bottom1", "bottom2", "bottom3", "bottom4"}) h.bottom = h.bottom && holds(c, t, id);
  h.qybe = holds(c, t, "qybe");
  h.tcubed = holds(c, t, "tcubed");
  h.invertible = t.inverse.has_value();
  h.t2 = holds(c, t, "symm.t2");
  return h;
}

enum class Kind { hypothesis, clause, structural, theorem, gated_d, gated_cyclic };

Kind kind_of(const std::string& id) {
  if (id.starts_with("bottom") || id == "qybe" || id == "tcubed") return Kind::hypothesis;
  if (id.starts_with("symm.") || id.starts_with("zsymm.")) return Kind::clause;
  if (id == "face_face" || id == "degen_degen" || id == "face_degen" || id == "augmentation" || id == "lema" ||
      id == "coprod.alt" || id == "coprod.expanded")
    return Kind::structural;
  if (id == "D") return Kind::gated_d;
  if (id == "cyclicity") return Kind::gated_cyclic;
  return Kind::theorem;
}

std::string render_terms(const IntLinComb& x) { return render(x, false); }

}  // namespace

SuiteResult run_suite(const Coalgebra& c, const BraidCandidate& t, std::size_t max_degree) {
  SuiteResult suite{"run_suite", c.name, t.name, {}};
  const Hypotheses h = hypotheses(c, t);
  for (const auto& inst : relation_catalog(static_cast<long>(max_degree))) {
    const auto start = Clock::now();
    const Kind kind = kind_of(inst.id);
    if (kind == Kind::gated_d && !h.theorem1()) {
      suite.add(inst.id, skipped(inst.id, inst.params, "hypotheses of the paracyclic construction fail"));
      continue;
    }
    if (kind == Kind::gated_cyclic && !(h.theorem1() && h.t2)) {
      suite.add(inst.id, skipped(inst.id, inst.params,
                                 h.theorem1() ? "t^2 = 1 fails" : "hypotheses of the paracyclic construction fail"));
      continue;
    }
    const bool hard = kind == Kind::structural || ((kind == Kind::theorem || kind == Kind::gated_d) && h.theorem1()) ||
                      (kind == Kind::gated_cyclic);
    auto sides = relation_sides(inst.id, inst.params);
    InstanceResult r =
        compare(inst.id, inst.params, eval_termexpr(c, &t, sides.lhs), eval_termexpr(c, &t, sides.rhs), hard);
    if (kind == Kind::hypothesis) r.note = "hypothesis";
    if (kind == Kind::clause) r.note = "classification clause";
    if (kind == Kind::theorem && !h.theorem1() && r.status == Status::fail) r.note = "hypotheses fail";
    r.seconds = since(start);
    suite.add(inst.id, std::move(r));
  }
  return suite;
}

BraidingClass classify_braiding(const Coalgebra& c, const BraidCandidate& t) {
  BraidingClass out;
  for (const auto& id : relation_ids())
    if (kind_of(id) == Kind::hypothesis || kind_of(id) == Kind::clause) out.flags[id] = holds(c, t, id);
  out.flags["invertible"] = t.inverse.has_value();
  out.flags["t2"] = out.flags["symm.t2"];
  auto all = [&](const char* prefix) {
    for (const auto& [k, v] : out.flags)
      if (k.starts_with(prefix) && !v) return false;
    return true;
  };
  const bool symmetry = all("symm.");
  const bool strong = all("zsymm.");
  const bool eligible = all("bottom") && out.flags["qybe"] && out.flags["tcubed"] && out.flags["invertible"];
  if (symmetry && !strong)
    throw std::logic_error("classify_braiding: '" + t.name + "' is a symmetry but not a strong braiding");
  out.verdict = symmetry ? "symmetry" : strong ? "strong braiding" : eligible ? "Theorem-1-eligible" : "none";
  return out;
}

SuiteResult classification_suite(const Coalgebra& c, const BraidCandidate& t) {
  SuiteResult suite{"classify", c.name, t.name, {}};
  const auto cls = classify_braiding(c, t);
  for (const auto& [flag, value] : cls.flags) suite.add("flags", finding(flag, {}, value, ""));
  suite.add("verdict", finding("verdict", {}, true, cls.verdict));
  return suite;
}

SuiteResult braid_rep_check(const Coalgebra& c, const BraidCandidate& t, std::size_t n) {
  if (n == 0) throw DomainError("braid_rep_check: at least one strand pair is needed");
  SuiteResult suite{"braid_rep", c.name, t.name, {}};
  const Hypotheses h = hypotheses(c, t);
  const long nn = static_cast<long>(n);
  auto alpha = [](std::size_t k, std::size_t i) { return braid(i, k - 1 - i); };  // on G^(k+1)
  auto eval = [&](const Word& w) { return eval_word(c, &t, w); };
  auto timed = [&](const std::string& id, InstanceResult r, Clock::time_point start) {
    r.seconds = since(start);
    suite.add(id, std::move(r));
  };

  auto start = Clock::now();
  timed("invertible", finding("invertible", {{"n", nn}}, h.invertible, h.invertible ? "" : "no inverse"), start);

  for (std::size_t i = 0; i + 1 < n; ++i) {
    start = Clock::now();
    Word a = alpha(n, i), b = alpha(n, i + 1);
    timed("braid",
          compare("braid", {{"n", nn}, {"i", static_cast<long>(i)}}, eval(compose({a, b, a})), eval(compose({b, a, b})),
                  h.qybe),
          start);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 2; j < n; ++j) {
      start = Clock::now();
      Word a = alpha(n, i), b = alpha(n, j);
      timed("commute",
            compare("commute", {{"n", nn}, {"i", static_cast<long>(i)}, {"j", static_cast<long>(j)}},
                    eval(compose(a, b)), eval(compose(b, a)), true),
            start);
    }
  const bool symmetric = h.t2 && h.qybe;
  for (std::size_t i = 0; i < n; ++i) {
    start = Clock::now();
    RelationParams p{{"n", nn}, {"i", static_cast<long>(i)}};
    if (!h.t2) {
      suite.add("square", skipped("square", p, "t^2 = 1 fails"));
      continue;
    }
    Word a = alpha(n, i);
    timed("square", compare("square", p, eval(compose(a, a)), eval(Word(n + 1)), true), start);
  }
  start = Clock::now();
  if (symmetric)
    timed("cyclicity", compare("cyclicity", {{"n", nn}}, eval(power(braid_cycle(n), n + 1)), eval(Word(n + 1)), true),
          start);
  else
    suite.add("cyclicity", skipped("cyclicity", {{"n", nn}}, h.t2 ? "QYBE fails" : "t^2 = 1 fails"));

  // On G^(k+1), k = n + 1, the generators alpha^0 .. alpha^n all exist.
  const std::size_t k = n + 1;
  Word full(k + 1), head(k + 1), tail(k + 1);
  for (std::size_t i = 0; i <= n; ++i) full = compose(full, alpha(k, i));
  for (std::size_t i = 0; i < n; ++i) head = compose(head, alpha(k, i));
  for (std::size_t i = n; i >= 1; --i) tail = compose(tail, alpha(k, i));
  for (std::size_t e : {n - 1, n}) {
    start = Clock::now();
    const bool printed = e + 1 == n;
    const std::string id = printed ? "intermediate.printed" : "intermediate";
    InstanceResult r = compare(id, {{"n", nn}, {"k", static_cast<long>(k)}, {"e", static_cast<long>(e)}},
                               eval(power(full, e)), eval(compose(power(head, e), tail)), !printed && symmetric);
    r.note = printed ? "exponent n-1 as displayed" : "exponent n";
    timed(id, std::move(r), start);
  }
  return suite;
}

IntLinComb printed_t4_example() {
  return parse_int_lincomb(
      "00005-00041+00050-00302+00311-00320+00410-02003+02021-02030+02102-02111+02120-02210+03110"
      "-10004+10031-10040+10202-10310+11003-11021+11030-11102+11111-11120+11210-12110+21110");
}

std::vector<std::string> lincomb_diff(const IntLinComb& ours, const IntLinComb& theirs, const std::string& ours_name,
                                      const std::string& theirs_name) {
  std::vector<std::string> out;
  for (const auto& [t, c] : ours.terms()) {
    auto other = theirs.coeff(t);
    if (other == 0)
      out.push_back("only in " + ours_name + ": " + c.get_str() + "*" + t.str());
    else if (other != c)
      out.push_back("coefficient of " + t.str() + ": " + c.get_str() + " in " + ours_name + ", " + other.get_str() +
                    " in " + theirs_name);
  }
  for (const auto& [t, c] : theirs.terms())
    if (ours.coeff(t) == 0) out.push_back("only in " + theirs_name + ": " + c.get_str() + "*" + t.str());
  return out;
}

SuiteResult theorem3_audit(std::size_t n, const Coalgebra& c) {
  if (n < 2) throw DomainError("theorem3_audit: n must be >= 2");
  SuiteResult suite{"theorem3", c.name, "trivial", {}};
  const long nn = static_cast<long>(n);
  const RelationParams p{{"n", nn}};
  const Word w = cyclic_word(n - 1);
  auto start = Clock::now();
  const IntLinComb e = expand_trivial(w);
  {
    InstanceResult r = finding("expansion", p, true, std::to_string(e.size()) + " terms");
    r.details.push_back(render_terms(e));
    r.seconds = since(start);
    suite.add("expansion", std::move(r));
  }

  const std::size_t claimed = (std::size_t{1} << (n - 1)) + 1;
  suite.add("count", finding("count", p, e.size() == claimed,
                             "computed " + std::to_string(e.size()) + ", claimed " + std::to_string(claimed)));

  std::vector<std::pair<Tuple, mpz_class>> terms(e.terms().begin(), e.terms().end());
  std::map<Tuple, std::string> codes;
  {
    InstanceResult r = finding("membership", p, true, "");
    for (const auto& [t, coeff] : terms) {
      if (auto a = abc_encode(t))
        codes[t] = *a;
      else
        r.details.push_back("not in the inductive set: " + t.str());
    }
    r.status = r.details.empty() ? Status::pass : Status::fail;
    r.note = std::to_string(codes.size()) + " of " + std::to_string(terms.size()) + " terms encodable";
    suite.add("membership", std::move(r));
  }
  {
    // Claim 2 over all of S_n: the image of the encoding is exactly the
    // strings in which a and b never follow c.
    std::set<std::string> image;
    for (const auto& t : endomorphisms(n))
      if (auto a = abc_encode(t)) image.insert(*a);
    std::set<std::string> expected;
    for (std::size_t k = 0; k < n; ++k) {
      // k leading characters from {a, b}, then c^(n-1-k)
      for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        std::string s;
        for (std::size_t i = 0; i < k; ++i) s += (mask >> (k - 1 - i)) & 1 ? 'b' : 'a';
        expected.insert(s + std::string(n - 1 - k, 'c'));
      }
    }
    InstanceResult r = finding("abc_image", p, image == expected,
                               std::to_string(image.size()) + " strings in the image");
    for (const auto& s : image)
      if (!expected.count(s)) r.details.push_back("unexpected image " + s);
    for (const auto& s : expected)
      if (!image.count(s)) r.details.push_back("missing from the image: " + s);
    suite.add("abc_image", std::move(r));
  }
  suite.add("nalt", finding("nalt", p, nalt_check(e), "alternating signs in lexicographic order"));
  {
    InstanceResult r = finding("twins", p, true, "");
    std::size_t zero_headed = 0;
    for (const auto& [t, coeff] : terms) {
      const auto key = twin_key(t);
      std::vector<std::string> partners;
      bool opposite = false;
      for (const auto& [u, cu] : terms)
        if (!(u == t) && twin_key(u) == key) {
          partners.push_back(u.str());
          opposite = opposite || sgn(cu) == -sgn(coeff);
        }
      if (partners.empty()) r.details.push_back("twinless: " + t.str());
      if (t[0] == 0) {
        ++zero_headed;
        if (!opposite) {
          r.status = Status::fail;
          r.details.push_back("no opposite-sign twin for " + t.str());
        }
      }
    }
    r.note = std::to_string(zero_headed) + " terms headed by 0";
    suite.add("twins", std::move(r));
  }
  if (n >= 3) {
    const std::size_t offset = std::size_t{1} << (n - 2);
    InstanceResult r = finding("twin_offset", p, true, "claimed offset " + std::to_string(offset));
    std::set<std::size_t> observed;
    for (std::size_t k = 0; k < terms.size(); ++k) {
      if (terms[k].first[0] != 0) continue;
      for (std::size_t j = k + 1; j < terms.size(); ++j)
        if (twin_key(terms[j].first) == twin_key(terms[k].first)) observed.insert(j - k);
      if (k + offset >= terms.size() || !are_twins(terms[k].first, terms[k + offset].first) ||
          sgn(terms[k + offset].second) != -sgn(terms[k].second)) {
        if (r.status == Status::pass)
          r.details.push_back("m_" + std::to_string(k + 1) + " = " + terms[k].first.str() + " vs m_" +
                              std::to_string(k + 1 + offset) +
                              (k + offset < terms.size() ? " = " + terms[k + offset].first.str() : " (absent)"));
        r.status = Status::fail;
      }
    }
    std::string obs;
    for (auto o : observed) obs += (obs.empty() ? "" : ", ") + std::to_string(o);
    r.details.push_back("observed twin offsets: " + obs);
    suite.add("twin_offset", std::move(r));
  }
  {
    InstanceResult r = finding("sign_rule", p, true, "sign positive iff #b even, on encodable terms");
    for (const auto& [t, coeff] : terms) {
      auto it = codes.find(t);
      if (it == codes.end()) continue;
      const auto bs = std::count(it->second.begin(), it->second.end(), 'b');
      if ((bs % 2 == 0) != (coeff > 0)) {
        r.status = Status::fail;
        r.details.push_back(t.str() + " (" + it->second + ") has sign " + (coeff > 0 ? "+" : "-"));
      }
    }
    suite.add("sign_rule", std::move(r));
  }
  {
    start = Clock::now();
    const BraidCandidate tau = trivial_symmetry_matrix(c);
    InstanceResult r = compare("semantic", p, eval_lincomb(c, e), eval_word(c, &tau, w), true);
    r.note = "expansion evaluated against the braid cycle";
    r.seconds = since(start);
    suite.add("semantic", std::move(r));
  }
  if (n == 5) {
    const IntLinComb printed = printed_t4_example();
    InstanceResult r = finding("printed_example", p, printed == e,
                               std::to_string(printed.size()) + " displayed terms, " + std::to_string(e.size()) +
                                   " computed");
    r.details = lincomb_diff(e, printed, "expansion", "example");
    suite.add("printed_example", std::move(r));
  }
  return suite;
}

SuiteResult prop4_audit(std::size_t n, const Coalgebra& c, const Scalar& p, const Scalar& r) {
  if (n < 2) throw DomainError("prop4_audit: n must be >= 2");
  SuiteResult suite{"prop4", c.name, "theta:" + p.str() + "," + r.str(), {}};
  const RelationParams params{{"n", static_cast<long>(n)}};
  const Word w = cyclic_word(n - 1);
  const IntLinComb e = expand_trivial(w);
  const PolyLinComb et = expand_theta(w);
  {
    InstanceResult res = finding("theta_expansion", params, true, std::to_string(et.size()) + " terms");
    res.details.push_back(render(et));
    suite.add("theta_expansion", std::move(res));
  }
  suite.add("specialization",
            finding("specialization", params, specialize(et, 1, 1) == e, "theta at p = r = 1 against the trivial expansion",
                    true));
  {
    IntLinComb encodable(e.domain(), e.codomain());
    for (const auto& [t, coeff] : e.terms())
      if (abc_encode(t)) encodable.add(t, coeff);
    const PolyLinComb normed = norm_theta(encodable);
    InstanceResult res = finding("norm_theta", params, true, "");
    std::size_t agree = 0;
    for (const auto& [t, coeff] : et.terms()) {
      if (!abc_encode(t)) {
        res.details.push_back("not covered (no abc-encoding): " + t.str() + " with " + coeff.str());
        continue;
      }
      const PolyPR expected = normed.terms().count(t) ? normed.terms().at(t) : PolyPR();
      if (expected == coeff) {
        ++agree;
      } else {
        res.status = Status::fail;
        res.details.push_back(t.str() + ": expansion " + coeff.str() + ", norm_theta " + expected.str());
      }
    }
    res.note = std::to_string(agree) + " encodable terms agree";
    suite.add("norm_theta", std::move(res));
  }
  std::vector<std::pair<Scalar, Scalar>> bindings{{p, r}};
  for (auto [a, b] : {std::pair{1L, 1L}, {2L, 3L}, {1L, 5L}}) {
    Scalar sa = c.field.from_int(a), sb = c.field.from_int(b);
    bool seen = false;
    for (const auto& [x, y] : bindings) seen = seen || (x == sa && y == sb);
    if (!seen) bindings.emplace_back(sa, sb);
  }
  for (const auto& [bp, br] : bindings) {
    const auto start = Clock::now();
    const BraidCandidate theta = theta_matrix(c, bp, br);
    InstanceResult res = compare("semantic", params, eval_lincomb(c, et, Bindings{bp, br}), eval_word(c, &theta, w), true);
    res.label = "semantic{n=" + std::to_string(n) + ",p=" + bp.str() + ",r=" + br.str() + "}";
    res.seconds = since(start);
    suite.add("semantic", std::move(res));
  }
  return suite;
}

SuiteResult relative_cyclic(const Coalgebra& c, const BraidCandidate& t, const CyclicObjectData& x,
                            std::size_t levels) {
  SuiteResult suite{"relative", c.name + "/" + x.name, t.name, {}};
  auto start = Clock::now();
  const CyclicObjectData y = relative_data(c, t, x, levels);
  for (const auto& chk : check_cyclic_object(y)) {
    InstanceResult r;
    r.label = chk.label;
    r.mismatch = chk.mismatch;
    r.status = chk.holds() ? Status::pass : Status::fail;
    r.hard = !chk.holds();
    suite.add(chk.relation, std::move(r));
  }
  suite.relations.front().instances.front().seconds = since(start);

  bool constant = true;
  for (std::size_t n = 0; n <= levels && constant; ++n) constant = x.dims[n] == 1 && x.cyclic[n].at(0, 0).is_one();
  for (std::size_t n = 1; n <= levels && constant; ++n)
    for (const auto& f : x.faces[n]) constant = constant && f.at(0, 0).is_one();
  for (std::size_t n = 0; n < levels && constant; ++n)
    for (const auto& s : x.degens[n]) constant = constant && s.at(0, 0).is_one();
  if (constant) {
    const CyclicObjectData z = from_comonad(c, t, levels);
    for (std::size_t n = 0; n <= levels; ++n) {
      const RelationParams p{{"n", static_cast<long>(n)}};
      for (std::size_t i = 0; n >= 1 && i <= n; ++i)
        suite.add("constant_x.face", compare("constant_x.face", {{"n", static_cast<long>(n)}, {"i", static_cast<long>(i)}},
                                          y.faces[n][i], z.faces[n][i], true));
      for (std::size_t i = 0; n < levels && i <= n; ++i)
        suite.add("constant_x.degeneracy",
                  compare("constant_x.degeneracy", {{"n", static_cast<long>(n)}, {"i", static_cast<long>(i)}},
                          y.degens[n][i], z.degens[n][i], true));
      suite.add("constant_x.cyclic", compare("constant_x.cyclic", p, y.cyclic[n], z.cyclic[n], true));
    }
  }
  return suite;
}

SuiteResult distributive_law_suite(const Coalgebra& c, const BraidCandidate& t, std::size_t max_degree) {
  SuiteResult suite{"distributive_law", c.name, t.name, {}};
  const bool hard = hypotheses(c, t).theorem1();
  for (std::size_t n = 1; n <= max_degree; ++n) {
    const RelationParams p{{"n", static_cast<long>(n)}};
    auto start = Clock::now();
    std::optional<Coalgebra> cn;
    try {
      cn = power_coalgebra(c, t, n);
      suite.add("power_coalgebra", finding("power_coalgebra", p, true, "coassociative and counital"));
    } catch (const AxiomError& e) {
      suite.add("power_coalgebra", finding("power_coalgebra", p, false, e.what(), hard));
      continue;
    }
    const Matrix l = eval_word(c, &t, braid_cycle(n));
    for (const auto& ax : distributive_law_axioms(l, *cn, c)) {
      InstanceResult r;
      r.label = label("law." + ax.id, p);
      r.params = p;
      r.note = ax.statement;
      r.mismatch = ax.mismatch;
      r.status = ax.holds() ? Status::pass : Status::fail;
      r.hard = !ax.holds() && hard;
      suite.add("law." + ax.id, std::move(r));
    }
    try {
      const Coalgebra comp = composite_comonad(l, *cn, c);
      InstanceResult r = finding("composite", p, true, comp.name + " of dimension " + std::to_string(comp.dim));
      r.seconds = since(start);
      suite.add("composite", std::move(r));
    } catch (const AxiomError& e) {
      suite.add("composite", finding("composite", p, false, e.what(), hard));
    }
  }
  return suite;
}

SuiteResult nuss_audit(const RingExtension& e, std::size_t n) {
  SuiteResult suite{"nuss", e.name, "trivial", {}};
  const RelationParams p{{"n", static_cast<long>(n)}};
  auto start = Clock::now();
  const NussResult res = nuss_mu(e, n);
  {
    InstanceResult r = finding("cross_check", p, res.agrees, "formula against the dual of delta^(n)");
    r.mismatch = res.mismatch;
    if (!res.agrees) r.details.push_back("first differing basis input: " + res.first_input);
    r.seconds = since(start);
    suite.add("cross_check", std::move(r));
  }
  const Matrix unit = tensor_unit(e, n);
  for (const auto& [id, mu] : {std::pair<std::string, const Matrix*>{"", &res.mu}, {"oracle.", &res.oracle}}) {
    start = Clock::now();
    const AlgebraAudit a = audit_algebra(*mu, unit);
    const std::string scope = std::to_string(a.triples_checked) + (a.exhaustive ? " triples, exhaustive" : " triples, slices and random");
    InstanceResult assoc = finding(id + "associativity", p, a.associative, scope, true);
    if (!a.associative) assoc.details.push_back(a.first_failure);
    assoc.seconds = since(start);
    suite.add(id + "associativity", std::move(assoc));
    InstanceResult u = finding(id + "unit", p, a.unit_left && a.unit_right, "1 = unit of S tensored n times", true);
    if (!(a.unit_left && a.unit_right)) u.details.push_back(a.first_failure);
    suite.add(id + "unit", std::move(u));
  }
  return suite;
}

SuiteResult oracle_agreement(const Coalgebra& c, std::size_t max_degree, const std::optional<Bindings>& bindings) {
  const BraidCandidate t = bindings ? theta_matrix(c, bindings->p, bindings->r) : trivial_symmetry_matrix(c);
  SuiteResult suite{"oracle_agreement", c.name, t.name, {}};
  std::set<std::string> seen;
  for (const auto& inst : relation_catalog(static_cast<long>(max_degree))) {
    auto sides = relation_sides(inst.id, inst.params);
    for (const auto* side : {&sides.lhs, &sides.rhs}) {
      const std::string key = side->str() + "@" + std::to_string(side->source());
      if (!seen.insert(key).second) continue;
      const auto start = Clock::now();
      const Matrix symbolic = bindings ? eval_lincomb(c, expand_theta(*side), bindings)
                                       : eval_lincomb(c, expand_trivial(*side));
      InstanceResult r = compare(inst.id, inst.params, eval_termexpr(c, &t, *side), symbolic, true);
      r.label = instance_label(inst) + (side == &sides.lhs ? ".lhs" : ".rhs");
      r.note = side->str();
      r.seconds = since(start);
      suite.add(inst.id, std::move(r));
    }
  }
  return suite;
}

}  // namespace cyc
