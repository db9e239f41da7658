#include "cyc/report.hpp"

#include <cstdio>
#include <limits>

#include <json.hpp>

#include "cyc/error.hpp"

namespace cyc {

using nlohmann::ordered_json;

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "?";
}

Status status_from_string(const std::string& s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  if (s == "skipped") return Status::skipped;
  throw ConfigError("unknown status '" + s + "'");
}

bool operator==(const InstanceResult& a, const InstanceResult& b) {
  auto same_mismatch = [](const std::optional<Mismatch>& x, const std::optional<Mismatch>& y) {
    if (x.has_value() != y.has_value()) return false;
    if (!x) return true;
    return x->row == y->row && x->col == y->col && x->lhs == y->lhs && x->rhs == y->rhs;
  };
  return a.label == b.label && a.params == b.params && a.status == b.status && a.hard == b.hard &&
         a.note == b.note && same_mismatch(a.mismatch, b.mismatch) && a.details == b.details;
}

InstanceResult& SuiteResult::add(const std::string& id, InstanceResult inst) {
  for (auto& rel : relations)
    if (rel.id == id) {
      rel.instances.push_back(std::move(inst));
      return rel.instances.back();
    }
  relations.push_back({id, {std::move(inst)}});
  return relations.back().instances.back();
}

const RelationResult* SuiteResult::find(const std::string& id) const {
  for (const auto& rel : relations)
    if (rel.id == id) return &rel;
  return nullptr;
}

std::size_t VerificationReport::count(Status s) const {
  std::size_t n = 0;
  for (const auto& suite : suites)
    for (const auto& rel : suite.relations)
      for (const auto& inst : rel.instances) n += inst.status == s;
  return n;
}

bool VerificationReport::has_hard_failure() const {
  for (const auto& suite : suites)
    for (const auto& rel : suite.relations)
      for (const auto& inst : rel.instances)
        if (inst.status == Status::fail && inst.hard) return true;
  return false;
}

bool VerificationReport::has_failure() const { return count(Status::fail) > 0; }

namespace {

ordered_json instance_json(const InstanceResult& inst) {
  ordered_json j;
  j["label"] = inst.label;
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : inst.params) params[k] = v;
  j["params"] = params;
  j["status"] = to_string(inst.status);
  j["hard"] = inst.hard;
  j["note"] = inst.note;
  if (inst.mismatch) {
    constexpr Index kShape = std::numeric_limits<Index>::max();
    ordered_json m;
    if (inst.mismatch->row == kShape) {
      m["shape"] = true;
    } else {
      m["row"] = inst.mismatch->row;
      m["col"] = inst.mismatch->col;
    }
    m["lhs"] = inst.mismatch->lhs;
    m["rhs"] = inst.mismatch->rhs;
    j["first_difference"] = m;
  } else {
    j["first_difference"] = nullptr;
  }
  j["details"] = inst.details;
  return j;
}

InstanceResult instance_from_json(const ordered_json& j) {
  InstanceResult inst;
  inst.label = j.at("label").get<std::string>();
  for (const auto& [k, v] : j.at("params").items()) inst.params[k] = v.get<long>();
  inst.status = status_from_string(j.at("status").get<std::string>());
  inst.hard = j.at("hard").get<bool>();
  inst.note = j.at("note").get<std::string>();
  const auto& m = j.at("first_difference");
  if (!m.is_null()) {
    Mismatch mm;
    if (m.contains("shape")) {
      mm.row = mm.col = std::numeric_limits<Index>::max();
    } else {
      mm.row = m.at("row").get<Index>();
      mm.col = m.at("col").get<Index>();
    }
    mm.lhs = m.at("lhs").get<std::string>();
    mm.rhs = m.at("rhs").get<std::string>();
    inst.mismatch = mm;
  }
  inst.details = j.at("details").get<std::vector<std::string>>();
  return inst;
}

}  // namespace

std::string to_machine(const VerificationReport& r) {
  ordered_json j;
  j["schema_version"] = r.schema_version;
  j["command"] = r.command;
  j["summary"] = {{"pass", r.count(Status::pass)},
                  {"fail", r.count(Status::fail)},
                  {"skipped", r.count(Status::skipped)},
                  {"hard_failure", r.has_hard_failure()}};
  ordered_json suites = ordered_json::array();
  for (const auto& s : r.suites) {
    ordered_json js;
    js["suite"] = s.name;
    js["model"] = s.model;
    js["braiding"] = s.braiding;
    ordered_json rels = ordered_json::array();
    for (const auto& rel : s.relations) {
      ordered_json jr;
      jr["relation"] = rel.id;
      ordered_json insts = ordered_json::array();
      for (const auto& inst : rel.instances) insts.push_back(instance_json(inst));
      jr["instances"] = insts;
      rels.push_back(jr);
    }
    js["relations"] = rels;
    suites.push_back(js);
  }
  j["suites"] = suites;
  return j.dump(2) + "\n";
}

VerificationReport parse_machine(const std::string& text) {
  try {
    auto j = ordered_json::parse(text);
    VerificationReport r;
    r.schema_version = j.at("schema_version").get<int>();
    if (r.schema_version != kReportSchemaVersion)
      throw ConfigError("unsupported report schema version " + std::to_string(r.schema_version));
    r.command = j.at("command").get<std::string>();
    for (const auto& js : j.at("suites")) {
      SuiteResult s;
      s.name = js.at("suite").get<std::string>();
      s.model = js.at("model").get<std::string>();
      s.braiding = js.at("braiding").get<std::string>();
      for (const auto& jr : js.at("relations")) {
        RelationResult rel;
        rel.id = jr.at("relation").get<std::string>();
        for (const auto& ji : jr.at("instances")) rel.instances.push_back(instance_from_json(ji));
        s.relations.push_back(std::move(rel));
      }
      r.suites.push_back(std::move(s));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed report: ") + e.what());
  }
}

std::string to_human(const VerificationReport& r) {
  std::string out;
  for (const auto& s : r.suites) {
    out += "== " + s.name;
    if (!s.model.empty()) out += "  model=" + s.model;
    if (!s.braiding.empty()) out += "  braiding=" + s.braiding;
    out += "\n";
    for (const auto& rel : s.relations)
      for (const auto& inst : rel.instances) {
        const char* tag = inst.status == Status::pass ? "PASS"
                          : inst.status == Status::skipped ? "SKIP"
                          : inst.hard ? "FAIL"
                                      : "NOTE";
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.3fs", inst.seconds);
        out += "  [" + std::string(tag) + "] " + inst.label;
        if (!inst.note.empty()) out += "  " + inst.note;
        out += "  (" + std::string(timing) + ")\n";
        if (inst.mismatch) {
          out += "      first difference";
          if (inst.mismatch->row != std::numeric_limits<Index>::max())
            out += " at (" + std::to_string(inst.mismatch->row) + "," + std::to_string(inst.mismatch->col) + ")";
          out += ": " + inst.mismatch->lhs + " vs " + inst.mismatch->rhs + "\n";
        }
        for (const auto& d : inst.details) out += "      " + d + "\n";
      }
  }
  out += "summary: " + std::to_string(r.count(Status::pass)) + " pass, " + std::to_string(r.count(Status::fail)) +
         " fail (" + (r.has_hard_failure() ? "hard failures present" : "no hard failures") + "), " +
         std::to_string(r.count(Status::skipped)) + " skipped\n";
  return out;
}

}  // namespace cyc
