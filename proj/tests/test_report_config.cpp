#include <doctest.h>

#include <algorithm>

#include "cyc/config.hpp"
#include "cyc/error.hpp"
#include "cyc/report.hpp"

using namespace cyc;

namespace {

VerificationReport sample_report() {
  VerificationReport r;
  r.command = "verify --model matrix4_q";
  SuiteResult s{"run_suite", "matrix4_q", "trivial", {}};
  InstanceResult ok;
  ok.label = "A{i=1,n=2}";
  ok.params = {{"i", 1}, {"n", 2}};
  ok.seconds = 0.25;
  s.add("A", ok);
  InstanceResult bad;
  bad.label = "zsymm.3";
  bad.status = Status::fail;
  bad.note = "clause fails";
  bad.mismatch = Mismatch{3, 5, "1/2", "-1"};
  bad.details = {"first term: +020"};
  s.add("zsymm.3", bad);
  InstanceResult skip;
  skip.label = "D{n=2}";
  skip.status = Status::skipped;
  skip.note = "hypotheses fail";
  s.add("D", skip);
  r.suites.push_back(s);
  return r;
}

}  // namespace

TEST_CASE("report counts and hard failures") {
  VerificationReport r = sample_report();
  CHECK(r.count(Status::pass) == 1);
  CHECK(r.count(Status::fail) == 1);
  CHECK(r.count(Status::skipped) == 1);
  CHECK(r.has_failure());
  CHECK_FALSE(r.has_hard_failure());
  r.suites[0].relations[1].instances[0].hard = true;
  CHECK(r.has_hard_failure());
  REQUIRE(r.suites[0].find("D"));
  CHECK_FALSE(r.suites[0].find("E"));
}

TEST_CASE("machine format round-trips and ignores timings") {
  const VerificationReport r = sample_report();
  const std::string text = to_machine(r);
  CHECK(text.back() == '\n');
  CHECK(text.find("\"schema_version\": 1") != std::string::npos);
  CHECK(text.find("seconds") == std::string::npos);
  const VerificationReport back = parse_machine(text);
  CHECK(back == r);
  CHECK(to_machine(back) == text);

  VerificationReport slower = r;
  slower.suites[0].relations[0].instances[0].seconds = 9;
  CHECK(slower == r);
  CHECK(to_machine(slower) == text);

  VerificationReport other = r;
  other.suites[0].relations[1].instances[0].mismatch->rhs = "1";
  CHECK_FALSE(other == r);
}

TEST_CASE("machine format rejects bad input") {
  CHECK_THROWS_AS(parse_machine("{"), ConfigError);
  std::string text = to_machine(sample_report());
  text.replace(text.find("\"schema_version\": 1"), 19, "\"schema_version\": 7");
  CHECK_THROWS_AS(parse_machine(text), ConfigError);
  CHECK_THROWS_AS(status_from_string("maybe"), ConfigError);
  CHECK(status_from_string(to_string(Status::skipped)) == Status::skipped);
}

TEST_CASE("human format") {
  const std::string h = to_human(sample_report());
  CHECK(h.find("A{i=1,n=2}") != std::string::npos);
  CHECK(h.find("no hard failures") != std::string::npos);
}

TEST_CASE("model files") {
  const std::string grouplike = R"({"kind": "coalgebra", "name": "g2", "field": "Q", "dim": 2,
    "comult": [1,0, 0,0, 0,0, 0,1], "counit": [1, 1]})";
  const Model m = parse_model(grouplike);
  REQUIRE(std::holds_alternative<CoalgebraModel>(m));
  const auto& c = std::get<CoalgebraModel>(m).coalgebra;
  CHECK(c.dim == 2);
  CHECK(c.comult.at(3, 1).is_one());
  CHECK_FALSE(std::get<CoalgebraModel>(m).braid);

  const std::string ext = R"({"kind": "ring_extension", "name": "c", "field": "Z/5", "rank": 2,
    "mult": [1,0,0,"-1", 0,1,1,0], "unit": [1, 0]})";
  const RingExtension e = load_ring_extension(ext);
  CHECK(e.mult == ext_z5().mult);
  CHECK_THROWS_AS(load_coalgebra(ext), ConfigError);

  CHECK_THROWS_AS(parse_model("{not json"), ConfigError);
  CHECK_THROWS_AS(parse_model(R"({"kind": "monoid"})"), ConfigError);
  CHECK_THROWS_AS(parse_model(R"({"kind": "coalgebra", "name": "z", "field": "Q", "dim": 1,
    "comult": [1], "counit": [0]})"),
                  AxiomError);
  CHECK_THROWS_AS(parse_model(R"({"kind": "coalgebra", "name": "s", "field": "Q", "dim": 2,
    "comult": [1, 0], "counit": [1, 1]})"),
                  ShapeError);
  CHECK_THROWS_AS(parse_model(R"({"kind": "coalgebra", "name": "s", "field": "Q", "dim": 1,
    "comult": [1.5], "counit": [1]})"),
                  ConfigError);
}

TEST_CASE("braiding files") {
  const Coalgebra g = grouplike2();
  // the flip on a (x) b
  const std::string flip = R"({"kind": "braiding", "name": "flip", "field": "Q", "dim": 2,
    "matrix": [1,0,0,0, 0,0,1,0, 0,1,0,0, 0,0,0,1],
    "inverse": [1,0,0,0, 0,0,1,0, 0,1,0,0, 0,0,0,1]})";
  const BraidCandidate b = load_braiding(flip, g);
  CHECK(b.t.at(2, 1).is_one());
  REQUIRE(b.inverse);
  CHECK(multiply(b.t, *b.inverse) == Matrix::identity(4, g.field));

  std::string z5 = flip;
  z5.replace(z5.find("\"Q\""), 3, "\"Z/5\"");
  CHECK_THROWS_AS(load_braiding(z5, g), ConfigError);
  CHECK_THROWS_AS(load_braiding(flip, grouplike1()), ShapeError);
}

TEST_CASE("built-in model names") {
  const auto& names = builtin_model_names();
  for (const char* n : {"grouplike1", "grouplike2", "matrix4_q", "matrix4_z5", "ext_z5", "ext_m2q"})
    CHECK(std::find(names.begin(), names.end(), n) != names.end());
  CHECK(std::holds_alternative<RingExtension>(load_model("ext_m2q")));
  CHECK(std::get<CoalgebraModel>(load_model("matrix4_z5")).coalgebra.field == Field::integers_mod(5));
  CHECK_THROWS_AS(load_model("/nonexistent/model.json"), ConfigError);
}

TEST_CASE("shipped model files match the built-in models") {
  const std::string dir = CYC_MODELS_DIR;
  for (const char* name : {"grouplike2", "matrix4_q", "matrix4_z5"}) {
    const auto file = std::get<CoalgebraModel>(load_model(dir + "/" + name + ".json")).coalgebra;
    const auto builtin = std::get<CoalgebraModel>(load_model(name)).coalgebra;
    CHECK(file.comult == builtin.comult);
    CHECK(file.counit == builtin.counit);
  }
  for (const char* name : {"ext_z5", "ext_m2q"}) {
    const auto file = std::get<RingExtension>(load_model(dir + "/" + name + ".json"));
    const auto builtin = std::get<RingExtension>(load_model(name));
    CHECK(file.mult == builtin.mult);
    CHECK(file.unit == builtin.unit);
  }
  CHECK_THROWS_AS(load_model(dir + "/bad_counit.json"), AxiomError);
}
