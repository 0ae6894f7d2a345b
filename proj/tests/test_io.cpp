#include <doctest.h>

#include "milreg/error.hpp"
#include "milreg/io/job.hpp"

using milreg::DomainError;
using milreg::io::Json;
using milreg::io::run_job;
using milreg::io::SchemaError;

namespace {

Json job(const char* text) { return Json::parse(text); }

const char* kTorus = R"({"tau": [0, 1]})";

std::string with_torus(const std::string& body) {
  std::string s = body;
  const std::string key = "TORUS";
  for (auto p = s.find(key); p != std::string::npos; p = s.find(key)) s.replace(p, key.size(), kTorus);
  return s;
}

}  // namespace

TEST_CASE("normalize: Steinberg symbol is zero, 2-torsion is reported") {
  const auto r = run_job(job(R"({"task":"normalize","payload":{"element":[{"entries":[{"q":"2"},{"q":"-1"}]}]}})"));
  CHECK(r.json["result"] == "zero");
  const auto s = run_job(job(R"({"task":"normalize","payload":{"element":[{"coef":3,"entries":[{"q":"-1"},{"q":"5"}]}]}})"));
  CHECK(s.json["result"]["text"] == "{-1, 5}");
  CHECK(s.json["result"]["vanishes_in_k_theory"] == false);
  CHECK(s.json["tool_version"].is_string());
  CHECK(s.json["job"]["task"] == "normalize");
}

TEST_CASE("tame, gersten and reciprocity tasks") {
  const auto t = run_job(job(R"({"task":"tame","payload":{"element":[{"entries":[{"q":5},{"q":2}]}],"prime":5}})"));
  CHECK(t.json["result"]["text"] == "{3 mod 5}");
  const auto g = run_job(job(R"({"task":"gersten","payload":{"element":[{"entries":[{"fn":{"c":1,"factors":[[0,1]]}},{"fn":{"c":3}}]}]}})"));
  CHECK(g.json["result"]["chain"].size() == 2);
  const auto w = run_job(job(R"({"task":"reciprocity","payload":{"f":{"c":2,"factors":[[1,1],[3,-2]]},"g":{"c":-1,"factors":[[0,2],[5,1]]}}})"));
  CHECK(w.json["result"]["defect"] == "1");
  CHECK_THROWS_AS(run_job(job(R"({"task":"tame","payload":{"element":[{"entries":[{"q":5},{"q":2}]}]}})")), SchemaError);
}

TEST_CASE("schema errors") {
  CHECK_THROWS_AS(run_job(job(R"({"task":"normalize"})")), SchemaError);
  CHECK_THROWS_AS(run_job(job(R"({"task":"normalize","payload":{"element":[]},"extra":1})")), SchemaError);
  CHECK_THROWS_AS(run_job(job(R"({"task":"frobnicate","payload":{}})")), SchemaError);
  CHECK_THROWS_AS(run_job(job(R"({"task":"normalize","payload":{"element":[{"entries":[{"q":0}]}]}})")), SchemaError);
  CHECK_THROWS_AS(run_job(job(R"({"task":"normalize","payload":{"element":[{"entries":[{"x":1}]}]}})")), SchemaError);
  try {
    run_job(job(R"({"task":"normalize","payload":{"element":[{"entries":[{"q":"1/0"}]}]}})"));
    FAIL("expected an error");
  } catch (const SchemaError&) {
  } catch (const DomainError&) {
  }
}

TEST_CASE("domain errors surface from the modules") {
  CHECK_THROWS_AS(run_job(job(R"({"task":"rlog","payload":{"torus":{"tau":[0,-1]},"functions":[]}})")), DomainError);
  CHECK_THROWS_AS(run_job(job(R"({"task":"normalize","payload":{"element":[{"entries":[{"q":2},{"modp":[1,5]}]}]}})")),
                  DomainError);
  CHECK_THROWS_AS(run_job(job(R"({"task":"rlog","payload":{"points":[]},"grid":{"N":4}})")), DomainError);
}

TEST_CASE("rlog on functions and points, deterministic across runs") {
  const std::string text = with_torus(R"({"task":"rlog","grid":{"N":32,"delta":0.001,"threads":1},"payload":{"torus":TORUS,
    "functions":[{"divisor":[{"z":[0.1,0.2],"n":1},{"z":[0.6,0.3],"n":1},{"z":[0.4,0.7],"n":-1},{"z":[0.3,-0.2],"n":-1}]},
                 {"divisor":[{"z":[0.2,0.4],"n":1},{"z":[0.7,0.7],"n":1},{"z":[0.45,0.55],"n":-1},{"z":[0.45,0.55],"n":-1}]}]}})");
  // The second divisor lists a double pole as two points; they merge.
  const auto a = run_job(job(text.c_str()));
  const auto b = run_job(job(text.c_str()));
  CHECK(a.json["result"] == b.json["result"]);
  CHECK(a.json["result"]["pairings"].size() == 2);
  const auto p = run_job(job(R"({"task":"rbeilinson","payload":{"points":[{"values":[[2,0]],"coefficient":1}]}})"));
  CHECK(p.json["result"]["pairings"][0]["value"].get<double>() == doctest::Approx(std::log(2.0)));
}

TEST_CASE("descent and converge tasks") {
  const auto d = run_job(job(with_torus(R"({"task":"descent","seed":3,"payload":{"torus":TORUS,"random_pairs":3}})").c_str()));
  CHECK(d.json["result"]["pairs"].size() == 3);
  CHECK(d.json["result"]["max_abs_defect"].get<double>() < 1e-5);
  const auto c = run_job(job(R"({"task":"converge","grid":{"N":16,"delta":0.001},"payload":{"test":"steinberg","tau":[0,1],"Ns":[16,32]}})"));
  CHECK(c.csv.rfind("test,form,N,delta,value,error\n", 0) == 0);
  CHECK(c.json["result"]["rows"].size() == 4);
  CHECK_THROWS_AS(run_job(job(R"({"task":"converge","payload":{"test":"steinberg","tau":[0,1],"Ns":[32,16]}})")), DomainError);
}

TEST_CASE("overrides replace the job grid") {
  milreg::io::Overrides o;
  o.N = 16;
  o.R = 20;
  const auto d = run_job(job(with_torus(R"({"task":"descent","payload":{"torus":TORUS,"random_pairs":1}})").c_str()), o);
  CHECK(d.json["grid"]["N"] == 16);
  CHECK(d.json["grid"]["R"] == 20);
}
