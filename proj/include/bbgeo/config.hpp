#ifndef BBGEO_CONFIG_HPP
#define BBGEO_CONFIG_HPP

#include <nlohmann/json_fwd.hpp>

#include "bbgeo/search.hpp"
#include "bbgeo/sequences.hpp"

namespace bbgeo {

// Parsed problem description. The wire format is JSON; complex matrices are
// encoded as paired row-major real/imag arrays. See README for the schema.
struct ProblemConfig {
  int dimension = 0;
  std::string basis_name;  // "pauli" | "gell-mann" | "pauli-tensor"

  struct TermSpec {
    std::string label;
    bool wanted = false;
    // exactly one of:
    std::optional<RVector> coefficients;
    std::optional<Matrix> matrix;
    BathOperator bath;  // monostate = identity
  };
  std::vector<TermSpec> terms;

  struct PulseSpec {
    std::string sequence;                  // catalog name, or
    std::vector<AxisAngle> axis_angles;    // rotations (identity prepended), or
    std::vector<Matrix> matrices;          // explicit unitaries, identity first
  };
  PulseSpec pulses;

  std::map<std::string, RVector> targets;
  double tolerance = storage_tol_default;
  std::vector<double> delta_t;
  std::optional<Matrix> bath_hamiltonian;

  struct SearchSpec {
    // "pauli-1q" | "pauli-2q" | "axis-grid"; empty picks the Pauli library
    // matching the system dimension.
    std::string library;
    int divisions = 4;  // axis-grid only
    int max_size = 2;
    long budget = 1'000'000;
    int top_k = 5;
  };
  SearchSpec search;
};

ProblemConfig parse_config(const std::string& json_text);
ProblemConfig parse_config_json(const nlohmann::json& j);

// Canonical re-serialization; parse_config(canonical_json(c)) reproduces c.
nlohmann::json canonical_json(const ProblemConfig& config);

// Materialized module-level objects for a parsed problem.
struct Problem {
  GeneratorBasis basis;
  SystemHamiltonian hamiltonian;
  PulseSet pulses;
  std::map<std::string, CoefficientVector> targets;
  ProblemConfig config;
};

Problem build_problem(const ProblemConfig& config);

}  // namespace bbgeo

#endif
