#include "bbgeo/config.hpp"

#include <nlohmann/json.hpp>

#include "bbgeo/matrix_utils.hpp"

namespace bbgeo {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ConfigError(where + ": " + what);
}

double number_at(const json& j, const std::string& where) {
  if (!j.is_number()) fail(where, "expected a number");
  return j.get<double>();
}

RVector real_array(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of numbers");
  RVector v(static_cast<Eigen::Index>(j.size()));
  for (size_t i = 0; i < j.size(); ++i)
    v(static_cast<Eigen::Index>(i)) = number_at(j[i], where + "[" + std::to_string(i) + "]");
  return v;
}

Matrix complex_matrix(const json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object with dimension/real[/imag]");
  if (!j.contains("dimension")) fail(where + ".dimension", "missing");
  const int d = j["dimension"].get<int>();
  if (d < 1) fail(where + ".dimension", "must be positive");
  if (!j.contains("real")) fail(where + ".real", "missing");
  RVector re = real_array(j["real"], where + ".real");
  if (re.size() != static_cast<Eigen::Index>(d) * d)
    fail(where + ".real", "expected " + std::to_string(d * d) + " row-major entries");
  RVector im = RVector::Zero(re.size());
  if (j.contains("imag")) {
    im = real_array(j["imag"], where + ".imag");
    if (im.size() != re.size()) fail(where + ".imag", "length differs from real part");
  }
  Matrix m(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c)
      m(r, c) = Complex(re(r * d + c), im(r * d + c));
  return m;
}

json matrix_json(const Matrix& m) {
  json re = json::array(), im = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      re.push_back(m(r, c).real());
      im.push_back(m(r, c).imag());
    }
  return {{"dimension", m.rows()}, {"real", re}, {"imag", im}};
}

json vector_json(const RVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

GeneratorBasis basis_for(const std::string& name, int dimension) {
  if (name == "pauli") {
    if (dimension != 2) throw ConfigError("system.basis: pauli requires dimension 2");
    return make_pauli_basis();
  }
  if (name == "gell-mann") return make_gell_mann_basis(dimension);
  if (name == "pauli-tensor") {
    int q = 0, n = dimension;
    while (n > 1 && n % 2 == 0) {
      n /= 2;
      ++q;
    }
    if (n != 1 || q < 1)
      throw ConfigError("system.basis: pauli-tensor requires a power-of-two dimension");
    return make_pauli_tensor_basis(q);
  }
  throw ConfigError("system.basis: unknown basis '" + name + "'");
}

}  // namespace

ProblemConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  return parse_config_json(j);
}

ProblemConfig parse_config_json(const json& j) {
  if (!j.is_object()) fail("config", "top level must be an object");
  ProblemConfig cfg;

  if (!j.contains("system")) fail("system", "missing");
  const json& sys = j["system"];
  if (!sys.contains("dimension")) fail("system.dimension", "missing");
  cfg.dimension = sys["dimension"].get<int>();
  if (cfg.dimension < 2) fail("system.dimension", "must be >= 2");
  if (!sys.contains("basis")) fail("system.basis", "missing");
  cfg.basis_name = sys["basis"].get<std::string>();

  if (!j.contains("terms") || !j["terms"].is_array() || j["terms"].empty())
    fail("terms", "at least one Hamiltonian term is required");
  for (size_t t = 0; t < j["terms"].size(); ++t) {
    const std::string where = "terms[" + std::to_string(t) + "]";
    const json& jt = j["terms"][t];
    ProblemConfig::TermSpec term;
    if (!jt.contains("label")) fail(where + ".label", "missing");
    term.label = jt["label"].get<std::string>();
    for (const auto& other : cfg.terms)
      if (other.label == term.label) fail(where + ".label", "duplicate label '" + term.label + "'");
    const std::string role = jt.value("role", "error");
    if (role != "wanted" && role != "error")
      fail(where + ".role", "expected 'wanted' or 'error'");
    term.wanted = role == "wanted";
    if (jt.contains("coefficients") == jt.contains("matrix"))
      fail(where, "exactly one of 'coefficients' or 'matrix' is required");
    if (jt.contains("coefficients"))
      term.coefficients = real_array(jt["coefficients"], where + ".coefficients");
    else
      term.matrix = complex_matrix(jt["matrix"], where + ".matrix");
    if (jt.contains("bath")) {
      const json& jb = jt["bath"];
      if (jb.is_object() && jb.contains("label"))
        term.bath = jb["label"].get<std::string>();
      else if (jb.is_object() && jb.contains("matrix"))
        term.bath = complex_matrix(jb["matrix"], where + ".bath.matrix");
      else
        fail(where + ".bath", "expected {\"label\": ...} or {\"matrix\": ...}");
    }
    cfg.terms.push_back(std::move(term));
  }

  if (!j.contains("pulses")) fail("pulses", "missing");
  const json& jp = j["pulses"];
  const int given = (jp.contains("sequence") ? 1 : 0) +
                    (jp.contains("axis_angle") ? 1 : 0) +
                    (jp.contains("matrices") ? 1 : 0);
  if (given != 1)
    fail("pulses", "exactly one of 'sequence', 'axis_angle' or 'matrices' is required");
  if (jp.contains("sequence")) {
    cfg.pulses.sequence = jp["sequence"].get<std::string>();
  } else if (jp.contains("axis_angle")) {
    if (!jp["axis_angle"].is_array() || jp["axis_angle"].empty())
      fail("pulses.axis_angle", "expected a non-empty array");
    for (size_t k = 0; k < jp["axis_angle"].size(); ++k) {
      const std::string where = "pulses.axis_angle[" + std::to_string(k) + "]";
      const json& je = jp["axis_angle"][k];
      if (!je.contains("axis") || !je.contains("angle")) fail(where, "needs axis and angle");
      RVector ax = real_array(je["axis"], where + ".axis");
      if (ax.size() != 3) fail(where + ".axis", "expected 3 components");
      cfg.pulses.axis_angles.push_back(
          {Eigen::Vector3d(ax(0), ax(1), ax(2)), number_at(je["angle"], where + ".angle")});
    }
  } else {
    if (!jp["matrices"].is_array() || jp["matrices"].empty())
      fail("pulses.matrices", "expected a non-empty array");
    for (size_t k = 0; k < jp["matrices"].size(); ++k)
      cfg.pulses.matrices.push_back(
          complex_matrix(jp["matrices"][k], "pulses.matrices[" + std::to_string(k) + "]"));
  }

  if (j.contains("targets")) {
    if (!j["targets"].is_object()) fail("targets", "expected an object keyed by term label");
    for (const auto& [label, value] : j["targets"].items()) {
      bool known = false;
      for (const auto& term : cfg.terms) known = known || term.label == label;
      if (!known) fail("targets." + label, "no term with this label");
      cfg.targets.emplace(label, real_array(value, "targets." + label));
    }
  }

  cfg.tolerance = j.value("tolerance", storage_tol_default);
  if (cfg.tolerance <= 0.0) fail("tolerance", "must be positive");

  if (j.contains("delta_t")) {
    RVector dts = real_array(j["delta_t"], "delta_t");
    for (Eigen::Index i = 0; i < dts.size(); ++i) cfg.delta_t.push_back(dts(i));
  }
  if (j.contains("bath_hamiltonian"))
    cfg.bath_hamiltonian = complex_matrix(j["bath_hamiltonian"], "bath_hamiltonian");

  if (j.contains("search")) {
    const json& js = j["search"];
    cfg.search.library = js.value("library", cfg.search.library);
    cfg.search.divisions = js.value("divisions", cfg.search.divisions);
    cfg.search.max_size = js.value("max_size", cfg.search.max_size);
    cfg.search.budget = js.value("budget", cfg.search.budget);
    cfg.search.top_k = js.value("top_k", cfg.search.top_k);
  }
  return cfg;
}

json canonical_json(const ProblemConfig& cfg) {
  json j;
  j["system"] = {{"dimension", cfg.dimension}, {"basis", cfg.basis_name}};
  j["terms"] = json::array();
  for (const auto& term : cfg.terms) {
    json jt;
    jt["label"] = term.label;
    jt["role"] = term.wanted ? "wanted" : "error";
    if (term.coefficients)
      jt["coefficients"] = vector_json(*term.coefficients);
    else
      jt["matrix"] = matrix_json(*term.matrix);
    if (const std::string* label = std::get_if<std::string>(&term.bath))
      jt["bath"] = {{"label", *label}};
    else if (const Matrix* m = std::get_if<Matrix>(&term.bath))
      jt["bath"] = {{"matrix", matrix_json(*m)}};
    j["terms"].push_back(std::move(jt));
  }
  if (!cfg.pulses.sequence.empty()) {
    j["pulses"] = {{"sequence", cfg.pulses.sequence}};
  } else if (!cfg.pulses.axis_angles.empty()) {
    json arr = json::array();
    for (const auto& aa : cfg.pulses.axis_angles)
      arr.push_back({{"axis", {aa.axis.x(), aa.axis.y(), aa.axis.z()}},
                     {"angle", aa.angle}});
    j["pulses"] = {{"axis_angle", std::move(arr)}};
  } else {
    json arr = json::array();
    for (const auto& m : cfg.pulses.matrices) arr.push_back(matrix_json(m));
    j["pulses"] = {{"matrices", std::move(arr)}};
  }
  if (!cfg.targets.empty()) {
    json jt;
    for (const auto& [label, v] : cfg.targets) jt[label] = vector_json(v);
    j["targets"] = std::move(jt);
  }
  j["tolerance"] = cfg.tolerance;
  if (!cfg.delta_t.empty()) j["delta_t"] = cfg.delta_t;
  if (cfg.bath_hamiltonian) j["bath_hamiltonian"] = matrix_json(*cfg.bath_hamiltonian);
  j["search"] = {{"library", cfg.search.library},
                 {"divisions", cfg.search.divisions},
                 {"max_size", cfg.search.max_size},
                 {"budget", cfg.search.budget},
                 {"top_k", cfg.search.top_k}};
  return j;
}

Problem build_problem(const ProblemConfig& cfg) {
  Problem problem;
  problem.config = cfg;
  problem.basis = basis_for(cfg.basis_name, cfg.dimension);

  problem.hamiltonian.dimension = cfg.dimension;
  for (const auto& term : cfg.terms) {
    Matrix s;
    if (term.coefficients) {
      if (term.coefficients->size() != problem.basis.count())
        throw ConfigError("term '" + term.label + "': expected " +
                          std::to_string(problem.basis.count()) + " coefficients");
      s = reconstruct({problem.basis.ref(), *term.coefficients, term.label}, problem.basis);
    } else {
      if (term.matrix->rows() != cfg.dimension)
        throw ConfigError("term '" + term.label + "': matrix dimension mismatch");
      if (!is_hermitian(*term.matrix))
        throw ConfigError("term '" + term.label + "': system matrix is not Hermitian");
      s = *term.matrix;
    }
    problem.hamiltonian.add_term(term.label, s, term.bath, term.wanted);
  }

  for (const auto& [label, values] : cfg.targets) {
    if (values.size() != problem.basis.count())
      throw ConfigError("targets." + label + ": expected " +
                        std::to_string(problem.basis.count()) + " components");
    problem.targets.emplace(label, CoefficientVector{problem.basis.ref(), values, label});
  }

  if (!cfg.pulses.sequence.empty()) {
    const CoefficientVector* tetra_initial = nullptr;
    CoefficientVector first_error;
    if (cfg.pulses.sequence == "tetrahedron") {
      // Build the tetrahedron against the first error term's vector.
      for (const auto& term : problem.hamiltonian.terms)
        if (!term.wanted) {
          first_error = expand(term.system_op, problem.basis);
          tetra_initial = &first_error;
          break;
        }
    }
    NamedSequence seq = make_named_sequence(cfg.pulses.sequence, tetra_initial);
    if (seq.pulses.dimension() != cfg.dimension)
      throw ConfigError("pulses.sequence: '" + cfg.pulses.sequence + "' acts on dimension " +
                        std::to_string(seq.pulses.dimension()) + ", system has " +
                        std::to_string(cfg.dimension));
    problem.pulses = std::move(seq.pulses);
  } else if (!cfg.pulses.axis_angles.empty()) {
    if (cfg.dimension != 2)
      throw ConfigError("pulses.axis_angle: only defined for dimension-2 systems");
    std::vector<Matrix> us{Matrix::Identity(2, 2)};
    // Each entry names a coordinate rotation; the pulse is its conjugation.
    for (const auto& aa : cfg.pulses.axis_angles)
      us.push_back(su2_from_axis_angle({aa.axis, -aa.angle}));
    problem.pulses = make_pulse_set(std::move(us));
  } else {
    std::vector<Matrix> us = cfg.pulses.matrices;
    for (const auto& u : us)
      if (u.rows() != cfg.dimension)
        throw ConfigError("pulses.matrices: dimension mismatch");
    try {
      problem.pulses = make_pulse_set(std::move(us));
    } catch (const Error& e) {
      throw ConfigError(std::string("pulses.matrices: ") + e.what());
    }
  }
  return problem;
}

}  // namespace bbgeo
