#include "cyc/relations.hpp"

#include <functional>

#include "cyc/error.hpp"

namespace cyc {

namespace {

long param(const RelationParams& params, const char* name, std::string_view id) {
  auto it = params.find(name);
  if (it == params.end())
    throw DomainError("relation " + std::string(id) + ": missing parameter '" + name + "'");
  return it->second;
}

void require(bool ok, std::string_view id, const char* what) {
  if (!ok) throw DomainError("relation " + std::string(id) + ": parameter out of range (" + what + ")");
}

using Builder = std::function<RelationSides(const RelationParams&, std::string_view)>;

RelationSides sides(const Word& l, const Word& r) { return {TermExpr(l), TermExpr(r)}; }

Word tn(long n) { return braid_cycle(static_cast<std::size_t>(n)); }
Word t() { return braid(); }
std::size_t u(long v) { return static_cast<std::size_t>(v); }

const std::vector<std::pair<std::string, Builder>>& builders() {
  static const std::vector<std::pair<std::string, Builder>> table = {
      {"bottom1", [](const RelationParams&, std::string_view) { return sides(compose(eps(1, 0), t()), eps(0, 1)); }},
      {"bottom2", [](const RelationParams&, std::string_view) { return sides(compose(eps(0, 1), t()), eps(1, 0)); }},
      {"bottom3",
       [](const RelationParams&, std::string_view) {
         return sides(compose(delta(1, 0), t()), compose({braid(0, 1), braid(1, 0), delta(0, 1)}));
       }},
      {"bottom4",
       [](const RelationParams&, std::string_view) {
         return sides(compose(delta(0, 1), t()), compose(power(compose(braid(0, 1), braid(1, 0)), 2), delta(1, 0)));
       }},
      {"qybe",
       [](const RelationParams&, std::string_view) {
         return sides(compose({braid(1, 0), braid(0, 1), braid(1, 0)}),
                      compose({braid(0, 1), braid(1, 0), braid(0, 1)}));
       }},
      {"tcubed",
       [](const RelationParams&, std::string_view) {
         return sides(compose({t(), t(), t(), delta()}), compose(t(), delta()));
       }},
      {"symm.t2", [](const RelationParams&, std::string_view) { return sides(power(t(), 2), Word(2)); }},
      {"symm.t_delta", [](const RelationParams&, std::string_view) { return sides(compose(t(), delta()), delta()); }},
      {"symm.eps", [](const RelationParams&, std::string_view) { return sides(compose(eps(0, 1), t()), eps(1, 0)); }},
      {"symm.delta",
       [](const RelationParams&, std::string_view) {
         return sides(compose(delta(0, 1), t()), compose({braid(1, 0), braid(0, 1), delta(1, 0)}));
       }},
      {"zsymm.eps_left",
       [](const RelationParams&, std::string_view) { return sides(compose(eps(1, 0), t()), eps(0, 1)); }},
      {"zsymm.eps", [](const RelationParams&, std::string_view) { return sides(compose(eps(0, 1), t()), eps(1, 0)); }},
      {"zsymm.delta_left",
       [](const RelationParams&, std::string_view) {
         return sides(compose({braid(0, 1), braid(1, 0), delta(0, 1)}), compose(delta(1, 0), t()));
       }},
      {"zsymm.delta",
       [](const RelationParams&, std::string_view) {
         return sides(compose(delta(0, 1), t()), compose({braid(1, 0), braid(0, 1), delta(1, 0)}));
       }},
      {"A",
       [](const RelationParams& p, std::string_view id) {
         long n = param(p, "n", id), i = param(p, "i", id);
         require(n >= 1 && i >= 1 && i <= n, id, "1 <= i <= n");
         return sides(compose(eps(u(i), u(n - i)), tn(n)), compose(tn(n - 1), eps(u(i - 1), u(n - i + 1))));
       }},
      {"B",
       [](const RelationParams& p, std::string_view id) {
         long n = param(p, "n", id), i = param(p, "i", id);
         require(n >= 1 && i >= 1 && i <= n, id, "1 <= i <= n");
         return sides(compose(delta(u(i), u(n - i)), tn(n)), compose(tn(n + 1), delta(u(i - 1), u(n - i + 1))));
       }},
      {"C",
       [](const RelationParams& p, std::string_view id) {
         long n = param(p, "n", id);
         require(n >= 1, id, "n >= 1");
         return sides(compose(eps(0, u(n)), tn(n)), eps(u(n), 0));
       }},
      {"D",
       [](const RelationParams& p, std::string_view id) {
         long n = param(p, "n", id);
         require(n >= 1, id, "n >= 1");
         return sides(compose(delta(0, u(n)), tn(n)), compose(power(tn(n + 1), 2), delta(u(n), 0)));
       }},
      {"cyclicity",
       [](const RelationParams& p, std::string_view id) {
         long n = param(p, "n", id);
         require(n >= 1, id, "n >= 1");
         return sides(power(tn(n), u(n + 1)), Word(u(n + 1)));
       }},
      {"face_face",
       [](const RelationParams& p, std::string_view id) {
         long n = param(p, "n", id), i = param(p, "i", id), j = param(p, "j", id);
         require(n >= 2 && i >= 0 && i < j && j <= n, id, "0 <= i < j <= n, n >= 2");
         return sides(compose(face(u(n - 1), u(i)), face(u(n), u(j))),
                      compose(face(u(n - 1), u(j - 1)), face(u(n), u(i))));
       }},
      {"degen_degen",
       [](const RelationParams& p, std::string_view id) {
         long n = param(p, "n", id), i = param(p, "i", id), j = param(p, "j", id);
         require(n >= 0 && i >= 0 && i <= j && j <= n, id, "0 <= i <= j <= n");
         return sides(compose(degeneracy(u(n + 1), u(i)), degeneracy(u(n), u(j))),
                      compose(degeneracy(u(n + 1), u(j + 1)), degeneracy(u(n), u(i))));
       }},
      {"face_degen",
       [](const RelationParams& p, std::string_view id) {
         long n = param(p, "n", id), i = param(p, "i", id), j = param(p, "j", id);
         require(n >= 0 && j >= 0 && j <= n && i >= 0 && i <= n + 1, id, "0 <= j <= n, 0 <= i <= n+1");
         Word lhs = compose(face(u(n + 1), u(i)), degeneracy(u(n), u(j)));
         if (i < j) return sides(lhs, compose(degeneracy(u(n - 1), u(j - 1)), face(u(n), u(i))));
         if (i == j || i == j + 1) return sides(lhs, Word(u(n + 1)));
         return sides(lhs, compose(degeneracy(u(n - 1), u(j)), face(u(n), u(i - 1))));
       }},
      {"augmentation",
       [](const RelationParams&, std::string_view) {
         return sides(compose(eps(), face(1, 0)), compose(eps(), face(1, 1)));
       }},
      {"hidist1",
       [](const RelationParams& p, std::string_view id) {
         long n = param(p, "n", id);
         require(n >= 1, id, "n >= 1");
         Word dn = coproduct_n(u(n));
         return sides(compose(whisker(dn, 1, 0), tn(n)),
                      compose({whisker(tn(n), 0, u(n)), whisker(tn(n), u(n), 0), whisker(dn, 0, 1)}));
       }},
      {"hidist2",
       [](const RelationParams& p, std::string_view id) {
         long n = param(p, "n", id);
         require(n >= 1, id, "n >= 1");
         return sides(compose(delta(0, u(n)), tn(n)),
                      compose({whisker(tn(n), 1, 0), whisker(tn(n), 0, 1), delta(u(n), 0)}));
       }},
      {"hidist3",
       [](const RelationParams& p, std::string_view id) {
         long n = param(p, "n", id);
         require(n >= 1, id, "n >= 1");
         Word en = counit_n(u(n));
         return sides(whisker(en, 0, 1), compose(whisker(en, 1, 0), tn(n)));
       }},
      {"hidist4",
       [](const RelationParams& p, std::string_view id) {
         long n = param(p, "n", id);
         require(n >= 1, id, "n >= 1");
         return sides(eps(u(n), 0), compose(eps(0, u(n)), tn(n)));
       }},
      {"hidist1gen",
       [](const RelationParams& p, std::string_view id) {
         long n = param(p, "n", id), l = param(p, "l", id);
         require(n >= 1 && l >= 1 && l <= n, id, "1 <= l <= n");
         Word dl = coproduct_n(u(l));
         return sides(compose(whisker(dl, u(n - l + 1), 0), tn(n)), compose(tn(n + l), whisker(dl, u(n - l), 1)));
       }},
      {"lema",
       [](const RelationParams& p, std::string_view id) {
         long n = param(p, "n", id), i = param(p, "i", id);
         require(n >= 1 && i >= 1, id, "n, i >= 1");
         return sides(tn(n + i), compose(whisker(tn(n), 0, u(i)), whisker(tn(i), u(n), 0)));
       }},
      {"lemb",
       [](const RelationParams& p, std::string_view id) {
         long n = param(p, "n", id);
         require(n >= 2, id, "n >= 2");
         return sides(compose(whisker(tn(n - 1), 1, 1), tn(n + 1)), compose(tn(n + 1), whisker(tn(n - 1), 0, 2)));
       }},
      {"lembp",
       [](const RelationParams& p, std::string_view id) {
         long pp = param(p, "p", id), l = param(p, "l", id);
         require(pp >= 1 && l >= 2, id, "p >= 1, l >= 2");
         return sides(compose(whisker(tn(l - 1), u(pp), 1), tn(pp + l)),
                      compose(tn(pp + l), whisker(tn(l - 1), u(pp - 1), 2)));
       }},
      {"lemc",
       [](const RelationParams& p, std::string_view id) {
         long n = param(p, "n", id);
         require(n >= 1, id, "n >= 1");
         return sides(power(tn(n + 1), 2), compose(whisker(tn(n), 1, 0), whisker(tn(n), 0, 1)));
       }},
      {"coprod.alt",
       [](const RelationParams& p, std::string_view id) {
         long n = param(p, "n", id);
         require(n >= 2, id, "n >= 2");
         return sides(coproduct_n(u(n)), coproduct_n_alt(u(n)));
       }},
      {"coprod.expanded",
       [](const RelationParams& p, std::string_view id) {
         long n = param(p, "n", id);
         require(n >= 1, id, "n >= 1");
         return sides(coproduct_n(u(n)), coproduct_n_expanded(u(n)));
       }},
      {"coprod.coassoc",
       [](const RelationParams& p, std::string_view id) {
         long n = param(p, "n", id);
         require(n >= 1, id, "n >= 1");
         Word dn = coproduct_n(u(n));
         return sides(compose(whisker(dn, 0, u(n)), dn), compose(whisker(dn, u(n), 0), dn));
       }},
      {"coprod.counit_left",
       [](const RelationParams& p, std::string_view id) {
         long n = param(p, "n", id);
         require(n >= 1, id, "n >= 1");
         return sides(compose(whisker(counit_n(u(n)), 0, u(n)), coproduct_n(u(n))), Word(u(n)));
       }},
      {"coprod.counit_right",
       [](const RelationParams& p, std::string_view id) {
         long n = param(p, "n", id);
         require(n >= 1, id, "n >= 1");
         return sides(compose(whisker(counit_n(u(n)), u(n), 0), coproduct_n(u(n))), Word(u(n)));
       }},
  };
  return table;
}

}  // namespace

RelationSides relation_sides(std::string_view id, const RelationParams& params) {
  for (const auto& [name, build] : builders())
    if (name == id) return build(params, id);
  throw DomainError("unknown relation id '" + std::string(id) + "'");
}

const std::vector<std::string>& relation_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [name, build] : builders()) out.push_back(name);
    return out;
  }();
  return ids;
}

std::vector<RelationInstance> relation_instances(std::string_view id, long N) {
  std::vector<RelationInstance> out;
  auto add = [&](RelationParams p) { out.push_back({std::string(id), std::move(p)}); };
  const std::string s(id);
  if (s == "A" || s == "B") {
    for (long n = 1; n <= N; ++n)
      for (long i = 1; i <= n; ++i) add({{"n", n}, {"i", i}});
  } else if (s == "C" || s == "D" || s == "cyclicity" || s == "hidist1" || s == "hidist2" || s == "hidist3" ||
             s == "hidist4" || s == "coprod.expanded" || s == "coprod.coassoc" || s == "coprod.counit_left" ||
             s == "coprod.counit_right") {
    for (long n = 1; n <= N; ++n) add({{"n", n}});
  } else if (s == "coprod.alt") {
    for (long n = 2; n <= N; ++n) add({{"n", n}});
  } else if (s == "face_face") {
    for (long n = 2; n <= N; ++n)
      for (long j = 1; j <= n; ++j)
        for (long i = 0; i < j; ++i) add({{"n", n}, {"i", i}, {"j", j}});
  } else if (s == "degen_degen") {
    for (long n = 0; n < N; ++n)
      for (long j = 0; j <= n; ++j)
        for (long i = 0; i <= j; ++i) add({{"n", n}, {"i", i}, {"j", j}});
  } else if (s == "face_degen") {
    for (long n = 0; n < N; ++n)
      for (long j = 0; j <= n; ++j)
        for (long i = 0; i <= n + 1; ++i) add({{"n", n}, {"i", i}, {"j", j}});
  } else if (s == "hidist1gen") {
    for (long n = 1; n <= N; ++n)
      for (long l = 1; l <= n; ++l) add({{"n", n}, {"l", l}});
  } else if (s == "lema") {
    for (long n = 1; n < N; ++n)
      for (long i = 1; n + i <= N; ++i) add({{"n", n}, {"i", i}});
  } else if (s == "lemb") {
    for (long n = 2; n + 1 <= N; ++n) add({{"n", n}});
  } else if (s == "lembp") {
    for (long p = 1; p + 2 <= N; ++p)
      for (long l = 2; p + l <= N; ++l) add({{"p", p}, {"l", l}});
  } else if (s == "lemc") {
    for (long n = 1; n + 1 <= N; ++n) add({{"n", n}});
  } else {
    relation_sides(id);  // validates the id
    add({});
  }
  return out;
}

std::vector<RelationInstance> relation_catalog(long max_degree) {
  std::vector<RelationInstance> out;
  for (const auto& id : relation_ids()) {
    auto part = relation_instances(id, max_degree);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::string instance_label(const RelationInstance& inst) {
  std::string s = inst.id;
  if (inst.params.empty()) return s;
  s += "{";
  bool first = true;
  for (const auto& [k, v] : inst.params) {
    if (!first) s += ",";
    s += k + "=" + std::to_string(v);
    first = false;
  }
  return s + "}";
}

}  // namespace cyc
