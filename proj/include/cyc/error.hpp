#pragma once

#include <stdexcept>
#include <string>

namespace cyc {

/// Operands whose domains/codomains or arities do not line up.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the range an operation is defined on.
class DomainError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A structure failed one of its defining axioms. `axiom()` names the first
/// failing one.
class AxiomError : public std::runtime_error {
 public:
  AxiomError(std::string axiom, const std::string& detail)
      : std::runtime_error(axiom + ": " + detail), axiom_(std::move(axiom)) {}

  const std::string& axiom() const noexcept { return axiom_; }

 private:
  std::string axiom_;
};

/// Malformed configuration or report text.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cyc
