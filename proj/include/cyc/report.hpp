#pragma once

// Verification reports: suite -> relation -> instance. The machine format is
// JSON with a schema version; timings are kept in memory for the human
// format only, so machine output is byte-identical across runs.

#include <optional>
#include <string>
#include <vector>

#include "cyc/matrix.hpp"
#include "cyc/relations.hpp"

namespace cyc {

inline constexpr int kReportSchemaVersion = 1;

enum class Status { pass, fail, skipped };

std::string to_string(Status s);
Status status_from_string(const std::string& s);

struct InstanceResult {
  std::string label;
  RelationParams params;
  Status status = Status::pass;
  /// A failure that counts against the run: the conclusion of a theorem
  /// failed while its hypotheses held, or a model-independent identity failed.
  bool hard = false;
  /// Skip reason, or a one-line description of the failure or finding.
  std::string note;
  std::optional<Mismatch> mismatch;
  std::vector<std::string> details;
  double seconds = 0;  // not serialized

  friend bool operator==(const InstanceResult& a, const InstanceResult& b);
};

struct RelationResult {
  std::string id;
  std::vector<InstanceResult> instances;
  friend bool operator==(const RelationResult&, const RelationResult&) = default;
};

struct SuiteResult {
  std::string name;   // run_suite, braid_rep, theorem3, ...
  std::string model;
  std::string braiding;
  std::vector<RelationResult> relations;

  /// Appends to the relation `id`, creating it on first use.
  InstanceResult& add(const std::string& id, InstanceResult inst);
  const RelationResult* find(const std::string& id) const;

  friend bool operator==(const SuiteResult&, const SuiteResult&) = default;
};

struct VerificationReport {
  int schema_version = kReportSchemaVersion;
  std::string command;
  std::vector<SuiteResult> suites;

  std::size_t count(Status s) const;
  bool has_hard_failure() const;
  bool has_failure() const;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Pretty-printed JSON with a trailing newline.
std::string to_machine(const VerificationReport& r);
/// Throws ConfigError on malformed input or an unsupported schema version.
VerificationReport parse_machine(const std::string& text);
/// Indented text, one line per instance, with timings.
std::string to_human(const VerificationReport& r);

}  // namespace cyc
