#include "cyc/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cyc/error.hpp"

namespace cyc {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
}

const json& field_of(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ConfigError(std::string("missing key '") + key + "'");
  return j.at(key);
}

Index positive(const json& j, const char* key) {
  const json& v = field_of(j, key);
  if (!v.is_number_integer() || v.get<long long>() <= 0)
    throw ConfigError(std::string("'") + key + "' must be a positive integer");
  return v.get<Index>();
}

Scalar scalar_of(const json& v, const Field& f) {
  if (v.is_number_integer()) return f.from_mpz(mpz_class(std::to_string(v.get<long long>())));
  if (v.is_string()) return f.parse_scalar(v.get<std::string>());
  throw ConfigError("matrix entries must be integers or strings, got " + v.dump());
}

Matrix matrix_of(const json& j, const char* key, Index rows, Index cols, const Field& f) {
  const json& v = field_of(j, key);
  if (!v.is_array()) throw ConfigError(std::string("'") + key + "' must be an array");
  if (v.size() != rows * cols)
    throw ShapeError(std::string("'") + key + "' needs " + std::to_string(rows * cols) + " entries, got " +
                     std::to_string(v.size()));
  std::vector<Scalar> values;
  values.reserve(v.size());
  for (const auto& x : v) values.push_back(scalar_of(x, f));
  return Matrix::from_dense(rows, cols, values, f);
}

std::string kind_of(const json& j) { return field_of(j, "kind").get<std::string>(); }

std::string name_of(const json& j, const char* fallback) {
  return j.contains("name") ? j.at("name").get<std::string>() : fallback;
}

CoalgebraModel coalgebra_from(const json& j) {
  const Field f = Field::parse(field_of(j, "field").get<std::string>());
  const Index d = positive(j, "dim");
  CoalgebraModel m{make_coalgebra(name_of(j, "coalgebra"), f, d, matrix_of(j, "comult", d * d, d, f),
                                  matrix_of(j, "counit", 1, d, f)),
                   std::nullopt};
  if (j.contains("braid")) {
    std::optional<Matrix> inv;
    if (j.contains("braid_inverse")) inv = matrix_of(j, "braid_inverse", d * d, d * d, f);
    m.braid = make_braid(m.coalgebra.name + ":braid", matrix_of(j, "braid", d * d, d * d, f), std::move(inv));
  }
  return m;
}

RingExtension ring_extension_from(const json& j) {
  const Field f = Field::parse(field_of(j, "field").get<std::string>());
  const Index r = positive(j, "rank");
  return make_ring_extension(name_of(j, "ring_extension"), f, r, matrix_of(j, "mult", r, r * r, f),
                             matrix_of(j, "unit", r, 1, f));
}

}  // namespace

Model parse_model(std::string_view text) {
  const json j = parse_json(text);
  try {
    const std::string kind = kind_of(j);
    if (kind == "coalgebra") return coalgebra_from(j);
    if (kind == "ring_extension") return ring_extension_from(j);
    throw ConfigError("unknown model kind '" + kind + "'");
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed model: ") + e.what());
  }
}

CoalgebraModel load_coalgebra(std::string_view text) {
  auto m = parse_model(text);
  if (auto* c = std::get_if<CoalgebraModel>(&m)) return std::move(*c);
  throw ConfigError("expected a coalgebra model");
}

RingExtension load_ring_extension(std::string_view text) {
  auto m = parse_model(text);
  if (auto* e = std::get_if<RingExtension>(&m)) return std::move(*e);
  throw ConfigError("expected a ring_extension model");
}

BraidCandidate load_braiding(std::string_view text, const Coalgebra& c) {
  const json j = parse_json(text);
  try {
    if (kind_of(j) != "braiding") throw ConfigError("expected kind 'braiding'");
    const Field f = Field::parse(field_of(j, "field").get<std::string>());
    if (f != c.field) throw ConfigError("braiding field " + f.name() + " differs from the model's " + c.field.name());
    const Index d = positive(j, "dim");
    if (d != c.dim) throw ShapeError("braiding dimension " + std::to_string(d) + " differs from the model's");
    std::optional<Matrix> inv;
    if (j.contains("inverse")) inv = matrix_of(j, "inverse", d * d, d * d, f);
    return make_braid(name_of(j, "braiding"), matrix_of(j, "matrix", d * d, d * d, f), std::move(inv));
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed braiding: ") + e.what());
  }
}

const std::vector<std::string>& builtin_model_names() {
  static const std::vector<std::string> names = {"grouplike1", "grouplike2", "matrix4_q",
                                                 "matrix4_z5", "ext_z5",     "ext_m2q"};
  return names;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Model load_model(const std::string& name_or_path) {
  if (name_or_path == "grouplike1") return CoalgebraModel{grouplike1(), std::nullopt};
  if (name_or_path == "grouplike2") return CoalgebraModel{grouplike2(), std::nullopt};
  if (name_or_path == "matrix4_q")
    return CoalgebraModel{matrix_coalgebra(2, Field::rationals(), "matrix4_q"), std::nullopt};
  if (name_or_path == "matrix4_z5")
    return CoalgebraModel{matrix_coalgebra(2, Field::integers_mod(5), "matrix4_z5"), std::nullopt};
  if (name_or_path == "ext_z5") return ext_z5();
  if (name_or_path == "ext_m2q") return ext_m2q();
  return parse_model(read_file(name_or_path));
}

}  // namespace cyc
