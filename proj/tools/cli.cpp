// Command-line front end.
//
//   cyc expand <n> [trivial|theta]
//   cyc verify --model M --braiding trivial|theta:p,r|<file> --max-degree N
//   cyc audit theorem3|prop4|nuss --n N [--model M] [--p P --r R]
//
// Exit status: 0 when no hard failure occurred (with --strict: no failure
// at all), 1 otherwise, 2 for usage, configuration or model errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "cyc/config.hpp"
#include "cyc/error.hpp"
#include "cyc/expand.hpp"
#include "cyc/verifier.hpp"

namespace {

using namespace cyc;

struct Options {
  std::string model = "matrix4_q";
  std::string braiding = "trivial";
  std::size_t max_degree = 4;
  std::size_t n = 0;
  std::string p = "2";
  std::string r = "3";
  std::string out;
  std::string format = "human";
  std::string suites = "run,classify,braid";
  std::string substitution = "trivial";
  std::string audit_kind;
  bool strict = false;
};

Coalgebra require_coalgebra(const Model& m, const std::string& name) {
  if (const auto* c = std::get_if<CoalgebraModel>(&m)) return c->coalgebra;
  throw ConfigError("model '" + name + "' is not a coalgebra");
}

BraidCandidate select_braiding(const Options& o, const Model& m, const Coalgebra& c) {
  if (o.braiding == "trivial") return trivial_symmetry_matrix(c);
  if (o.braiding.starts_with("theta:")) {
    const std::string args = o.braiding.substr(6);
    const auto comma = args.find(',');
    if (comma == std::string::npos) throw ConfigError("--braiding theta:p,r needs two values");
    return theta_matrix(c, c.field.parse_scalar(args.substr(0, comma)), c.field.parse_scalar(args.substr(comma + 1)));
  }
  if (o.braiding == "model") {
    const auto& cm = std::get<CoalgebraModel>(m);
    if (!cm.braid) throw ConfigError("model '" + o.model + "' carries no braid matrix");
    return *cm.braid;
  }
  std::string path = o.braiding.starts_with("file:") ? o.braiding.substr(5) : o.braiding;
  return load_braiding(read_file(path), c);
}

int finish(const Options& o, const VerificationReport& report) {
  const std::string text = o.format == "machine" ? to_machine(report) : to_human(report);
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out);
    if (!f) throw ConfigError("cannot write '" + o.out + "'");
    f << text;
    if (o.format != "machine") std::cout << text;
  }
  if (report.has_hard_failure()) return 1;
  if (o.strict && report.has_failure()) return 1;
  return 0;
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

int cmd_expand(const Options& o) {
  if (o.n == 0) throw DomainError("expand: n must be >= 1");
  const Word w = cyclic_word(o.n);
  if (o.substitution == "theta") {
    const PolyLinComb e = expand_theta(w);
    std::cout << render(e, true) << "\n" << e.size() << " terms\n";
    return 0;
  }
  if (o.substitution != "trivial") throw ConfigError("substitution must be trivial or theta");
  const IntLinComb e = expand_trivial(w);
  std::cout << render(e, true) << "\n" << e.size() << " terms\n";
  for (const auto& [t, c] : e.terms()) {
    std::string twins;
    for (const auto& [u, cu] : e.terms())
      if (!(u == t) && are_twins(t, u)) twins += (twins.empty() ? "" : " ") + u.str();
    const auto code = abc_encode(t);
    std::cout << "  " << (c > 0 ? "+" : "-") << " " << t.str() << "  abc=" << (code ? *code : "-")
              << "  twins=" << (twins.empty() ? "-" : twins) << "\n";
  }
  return 0;
}

int cmd_verify(const Options& o) {
  const Model m = load_model(o.model);
  const Coalgebra c = require_coalgebra(m, o.model);
  const BraidCandidate t = select_braiding(o, m, c);
  VerificationReport report;
  report.command = "verify --model " + c.name + " --braiding " + t.name + " --max-degree " + std::to_string(o.max_degree);
  for (const auto& s : split(o.suites)) {
    if (s == "run")
      report.suites.push_back(run_suite(c, t, o.max_degree));
    else if (s == "classify")
      report.suites.push_back(classification_suite(c, t));
    else if (s == "braid")
      report.suites.push_back(braid_rep_check(c, t, o.max_degree));
    else if (s == "distributive")
      report.suites.push_back(distributive_law_suite(c, t, o.max_degree));
    else if (s == "relative") {
      report.suites.push_back(relative_cyclic(c, t, constant_cyclic_object(c.field, o.max_degree), o.max_degree));
      report.suites.push_back(relative_cyclic(c, t, hochschild_cyclic_object(c.field, o.max_degree), o.max_degree));
    }
    else if (s == "oracle")
      report.suites.push_back(oracle_agreement(c, o.max_degree, std::nullopt));
    else
      throw ConfigError("unknown suite '" + s + "'");
  }
  return finish(o, report);
}

int cmd_audit(const Options& o) {
  VerificationReport report;
  const std::size_t n = o.n == 0 ? 2 : o.n;
  report.command = "audit " + o.audit_kind + " --n " + std::to_string(n);
  const Model m = load_model(o.audit_kind == "nuss" && o.model == "matrix4_q" ? "ext_z5" : o.model);
  if (o.audit_kind == "theorem3") {
    report.suites.push_back(theorem3_audit(n, require_coalgebra(m, o.model)));
  } else if (o.audit_kind == "prop4") {
    const Coalgebra c = require_coalgebra(m, o.model);
    report.command += " --p " + o.p + " --r " + o.r;
    report.suites.push_back(prop4_audit(n, c, c.field.parse_scalar(o.p), c.field.parse_scalar(o.r)));
  } else if (o.audit_kind == "nuss") {
    const auto* e = std::get_if<RingExtension>(&m);
    if (!e) throw ConfigError("audit nuss needs a ring_extension model");
    report.suites.push_back(nuss_audit(*e, n));
  } else {
    throw ConfigError("unknown audit '" + o.audit_kind + "'");
  }
  return finish(o, report);
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Exact verification of paracyclic operators built from a comonad"};
  app.require_subcommand(1);

  auto* expand = app.add_subcommand("expand", "Expand t_n into P-morphisms");
  expand->add_option("n", o.n, "Degree")->required();
  expand->add_option("substitution", o.substitution, "trivial or theta")->check(CLI::IsMember({"trivial", "theta"}));

  auto common = [&](CLI::App* sub) {
    sub->add_option("--model", o.model, "Built-in model name or JSON model file");
    sub->add_option("--out", o.out, "Write the report to this file");
    sub->add_option("--format", o.format, "human or machine")->check(CLI::IsMember({"human", "machine"}));
    sub->add_flag("--strict", o.strict, "Fail on any failing check, including informational findings");
  };

  auto* verify = app.add_subcommand("verify", "Run identity suites in a coalgebra model");
  common(verify);
  verify->add_option("--braiding", o.braiding, "trivial, theta:p,r, model, or a braiding file");
  verify->add_option("--max-degree", o.max_degree, "Highest degree n")->check(CLI::PositiveNumber);
  verify->add_option("--suites", o.suites, "Comma list of run,classify,braid,distributive,relative,oracle");

  auto* audit = app.add_subcommand("audit", "Audit the combinatorial claims or the ring-extension product");
  common(audit);
  audit->add_option("kind", o.audit_kind, "theorem3, prop4 or nuss")
      ->required()
      ->check(CLI::IsMember({"theorem3", "prop4", "nuss"}));
  audit->add_option("--n", o.n, "Length / level")->check(CLI::PositiveNumber);
  audit->add_option("--p", o.p, "Value of p");
  audit->add_option("--r", o.r, "Value of r");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*expand) return cmd_expand(o);
    if (*verify) return cmd_verify(o);
    return cmd_audit(o);
  } catch (const AxiomError& e) {
    std::cerr << "model rejected (" << e.axiom() << "): " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 2;
}
