#include <doctest.h>

#include <nlohmann/json.hpp>

#include "bbgeo/run.hpp"
#include "helpers.hpp"

using namespace bbgeo;
using nlohmann::json;

namespace {

const char* kParityKickConfig = R"({
  "system": {"dimension": 2, "basis": "pauli"},
  "terms": [
    {"label": "dephasing", "role": "error", "coefficients": [0, 0, 1],
     "bath": {"label": "B"}}
  ],
  "pulses": {"sequence": "parity-kick"},
  "tolerance": 1e-12
})";

const char* kSimulateConfig = R"({
  "system": {"dimension": 2, "basis": "pauli"},
  "terms": [
    {"label": "coupling", "role": "error", "coefficients": [1, 0, 0],
     "bath": {"matrix": {"dimension": 2, "real": [1, 0, 0, -1]}}},
    {"label": "drift", "role": "error", "coefficients": [0, 0, 1]}
  ],
  "pulses": {"sequence": "vierergruppe"},
  "delta_t": [0.1, 0.05, 0.025]
})";

}  // namespace

TEST_CASE("parse_config: minimal problem parses and builds") {
  const ProblemConfig cfg = parse_config(kParityKickConfig);
  CHECK(cfg.dimension == 2);
  CHECK(cfg.basis_name == "pauli");
  CHECK(cfg.tolerance == 1e-12);
  REQUIRE(cfg.terms.size() == 1);
  CHECK(cfg.terms[0].label == "dephasing");
  CHECK_FALSE(cfg.terms[0].wanted);

  const Problem problem = build_problem(cfg);
  CHECK(problem.basis.name == "pauli");
  CHECK(problem.pulses.size() == 2);
  CHECK(problem.hamiltonian.terms.size() == 1);
}

TEST_CASE("parse_config: field-addressed diagnostics") {
  auto message_of = [](const char* text) {
    try {
      build_problem(parse_config(text));
      return std::string();
    } catch (const ConfigError& e) {
      return std::string(e.what());
    }
  };
  CHECK(message_of("{") .find("JSON") != std::string::npos);
  CHECK(message_of(R"({"system": {"dimension": 2}})").find("system.basis") !=
        std::string::npos);
  CHECK(message_of(R"({"system": {"dimension": 2, "basis": "pauli"}, "terms": []})")
            .find("terms") != std::string::npos);
  CHECK(message_of(
            R"({"system": {"dimension": 2, "basis": "pauli"},
                "terms": [{"label": "a", "coefficients": [0,0,1]}],
                "pulses": {}})")
            .find("pulses") != std::string::npos);
  // empty pulse list
  CHECK(message_of(
            R"({"system": {"dimension": 2, "basis": "pauli"},
                "terms": [{"label": "a", "coefficients": [0,0,1]}],
                "pulses": {"matrices": []}})")
            .find("pulses.matrices") != std::string::npos);
  // wrong coefficient count
  CHECK(message_of(
            R"({"system": {"dimension": 2, "basis": "pauli"},
                "terms": [{"label": "a", "coefficients": [0,0,1,0]}],
                "pulses": {"sequence": "parity-kick"}})")
            .find("expected 3 coefficients") != std::string::npos);
  // duplicate labels
  CHECK(message_of(
            R"({"system": {"dimension": 2, "basis": "pauli"},
                "terms": [{"label": "a", "coefficients": [0,0,1]},
                           {"label": "a", "coefficients": [0,1,0]}],
                "pulses": {"sequence": "parity-kick"}})")
            .find("duplicate") != std::string::npos);
  // unknown target label
  CHECK(message_of(
            R"({"system": {"dimension": 2, "basis": "pauli"},
                "terms": [{"label": "a", "coefficients": [0,0,1]}],
                "pulses": {"sequence": "parity-kick"},
                "targets": {"b": [0,0,0]}})")
            .find("targets.b") != std::string::npos);
}

TEST_CASE("config round trip: canonical form re-parses to the same problem") {
  for (const char* text : {kParityKickConfig, kSimulateConfig}) {
    const ProblemConfig cfg = parse_config(text);
    const json canon = canonical_json(cfg);
    const ProblemConfig cfg2 = parse_config_json(canon);
    CHECK(canonical_json(cfg2) == canon);
  }
}

TEST_CASE("run_analyze: parity-kick storage report") {
  const std::string out = run_analyze(kParityKickConfig);
  const json report = json::parse(out);
  CHECK(report["storage_achieved"] == true);
  CHECK(report["max_distance"].get<double>() <= 1e-12);
  CHECK(report["group_closed"] == "yes");
  REQUIRE(report["terms"].size() == 1);
  const auto avg = report["terms"][0]["averaged"].get<std::vector<double>>();
  for (double x : avg) CHECK(std::abs(x) <= 1e-12);
  // the emitted problem re-parses to an identical problem
  CHECK(canonical_json(parse_config_json(report["problem"])) == report["problem"]);
}

TEST_CASE("run_analyze: axis-angle and explicit-matrix pulse specs") {
  const char* axis_cfg = R"({
    "system": {"dimension": 2, "basis": "pauli"},
    "terms": [{"label": "dephasing", "coefficients": [0, 0, 1]}],
    "pulses": {"axis_angle": [{"axis": [1, 0, 0], "angle": 3.141592653589793}]},
    "tolerance": 1e-9
  })";
  const json report = json::parse(run_analyze(axis_cfg));
  CHECK(report["storage_achieved"] == true);

  const char* matrix_cfg = R"({
    "system": {"dimension": 2, "basis": "pauli"},
    "terms": [{"label": "dephasing", "coefficients": [0, 0, 1]}],
    "pulses": {"matrices": [
      {"dimension": 2, "real": [1, 0, 0, 1]},
      {"dimension": 2, "real": [0, 1, 1, 0]}
    ]}
  })";
  const json report2 = json::parse(run_analyze(matrix_cfg));
  CHECK(report2["storage_achieved"] == true);
}

TEST_CASE("run_simulate: structured and csv outputs") {
  const json report = json::parse(run_simulate(kSimulateConfig, "structured"));
  REQUIRE(report["scan"].size() == 3);
  double prev = 1e9;
  for (const auto& pt : report["scan"]) {
    const double res = pt["residual_interaction_norm"].get<double>();
    CHECK(res < prev);
    prev = res;
  }

  const std::string csv = run_simulate(kSimulateConfig, "csv");
  CHECK(csv.rfind("delta_t,residual_interaction_norm,residual_total_norm\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);  // header + 3 rows

  // single interval -> single row
  RunOverrides ov;
  ov.delta_t = std::vector<double>{0.1};
  const std::string one = run_simulate(kSimulateConfig, "csv", ov);
  CHECK(std::count(one.begin(), one.end(), '\n') == 2);
}

TEST_CASE("run_simulate: abstract bath labels are rejected") {
  CHECK_THROWS_AS(run_simulate(kParityKickConfig, "csv"), ConfigError);
  CHECK_THROWS_AS(run_simulate(kSimulateConfig, "yaml"), ConfigError);
}

TEST_CASE("run_search: recovers the parity kick through the config surface") {
  const char* cfg = R"({
    "system": {"dimension": 2, "basis": "pauli"},
    "terms": [{"label": "dephasing", "coefficients": [0, 0, 1]}],
    "pulses": {"sequence": "parity-kick"},
    "search": {"library": "pauli-1q", "max_size": 2}
  })";
  const json report = json::parse(run_search(cfg));
  REQUIRE(report["results"].size() == 2);
  CHECK(report["results"][0]["labels"] == json::array({"I", "X"}));
  CHECK(report["results"][0]["d_max"].get<double>() == 0.0);
}

TEST_CASE("run_catalog: deterministic listing with provenance notes") {
  const std::string a = run_catalog();
  CHECK(a == run_catalog());
  const json catalog = json::parse(a);
  bool tetra = false;
  for (const auto& seq : catalog["sequences"])
    if (seq["name"] == "tetrahedron") {
      tetra = true;
      CHECK(seq["note"].get<std::string>().find("non-subgroup") != std::string::npos);
      CHECK(seq["group_closed"] == "no");
    }
  CHECK(tetra);
}
