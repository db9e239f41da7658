#pragma once

// JSON model files and the built-in model library.
//
//   {"kind": "coalgebra", "name": "...", "field": "Q" | "Z/5", "dim": d,
//    "comult": [d^2 * d values, row-major], "counit": [d values],
//    "braid": [d^4 values]?, "braid_inverse": [d^4 values]?}
//   {"kind": "ring_extension", "name": "...", "field": ..., "rank": r,
//    "mult": [r * r^2 values, row-major], "unit": [r values]}
//   {"kind": "braiding", "name": "...", "field": ..., "dim": d,
//    "matrix": [d^4 values], "inverse": [d^4 values]?}
//
// Values are integers or strings such as "-3/2".

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cyc/coalgebra.hpp"
#include "cyc/ring_extension.hpp"

namespace cyc {

struct CoalgebraModel {
  Coalgebra coalgebra;
  std::optional<BraidCandidate> braid;
};

using Model = std::variant<CoalgebraModel, RingExtension>;

/// Throws ConfigError on malformed text and propagates loader errors
/// (ShapeError, AxiomError) from validation.
Model parse_model(std::string_view json_text);
CoalgebraModel load_coalgebra(std::string_view json_text);
RingExtension load_ring_extension(std::string_view json_text);
/// A braiding file for the coalgebra `c`.
BraidCandidate load_braiding(std::string_view json_text, const Coalgebra& c);

/// Built-in name (grouplike1, grouplike2, matrix4_q, matrix4_z5, ext_z5,
/// ext_m2q) or a path to a model file.
Model load_model(const std::string& name_or_path);
const std::vector<std::string>& builtin_model_names();

std::string read_file(const std::string& path);

}  // namespace cyc
