#include "bbgeo/run.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "bbgeo/dynamics.hpp"
#include "bbgeo/matrix_utils.hpp"

namespace bbgeo {

using nlohmann::json;

namespace {

json vector_json(const RVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

const char* closure_name(Closure c) {
  switch (c) {
    case Closure::Yes: return "yes";
    case Closure::No: return "no";
    default: return "unchecked";
  }
}

ProblemConfig apply_overrides(ProblemConfig cfg, const RunOverrides& ov) {
  if (ov.tolerance) cfg.tolerance = *ov.tolerance;
  if (ov.delta_t) cfg.delta_t = *ov.delta_t;
  if (ov.search_budget) cfg.search.budget = *ov.search_budget;
  if (ov.search_top_k) cfg.search.top_k = *ov.search_top_k;
  return cfg;
}

int bath_dimension(const SystemHamiltonian& h) {
  for (const auto& term : h.terms)
    if (const Matrix* b = std::get_if<Matrix>(&term.bath)) return static_cast<int>(b->rows());
  return 1;
}

json search_result_json(const SearchResult& r) {
  json jr;
  jr["labels"] = r.labels;
  jr["size"] = r.size;
  jr["d_max"] = r.d_max;
  jr["group_closed"] = r.group_closed;
  jr["feasible"] = r.feasible;
  json avg;
  for (const auto& [label, vec] : r.averaged) avg[label] = vector_json(vec.values);
  jr["averaged"] = std::move(avg);
  return jr;
}

}  // namespace

std::string run_analyze(const std::string& config_json, const RunOverrides& ov) {
  const ProblemConfig cfg = apply_overrides(parse_config(config_json), ov);
  Problem problem = build_problem(cfg);
  const DecouplingReport report = analyze(problem.hamiltonian, problem.pulses,
                                          problem.basis, problem.targets, cfg.tolerance);

  json out;
  out["problem"] = canonical_json(cfg);
  out["tolerance"] = report.tolerance;
  out["group_closed"] = closure_name(report.group_closed);
  out["storage_achieved"] = report.storage_achieved;
  out["max_distance"] = report.max_distance;
  out["terms"] = json::array();
  for (const auto& term : report.terms) {
    json jt;
    jt["label"] = term.label;
    jt["role"] = term.wanted ? "wanted" : "error";
    jt["original"] = vector_json(term.original.values);
    jt["averaged"] = vector_json(term.averaged.values);
    jt["target"] = vector_json(term.target.values);
    jt["error"] = vector_json(term.error);
    jt["distance"] = term.distance;
    jt["hs_overlap"] = term.hs_overlap;
    out["terms"].push_back(std::move(jt));
  }
  out["warnings"] = problem.hamiltonian.warnings;
  return out.dump(2) + "\n";
}

std::string run_simulate(const std::string& config_json, const std::string& format,
                         const RunOverrides& ov) {
  if (format != "structured" && format != "csv")
    throw ConfigError("format: expected 'structured' or 'csv'");
  const ProblemConfig cfg = apply_overrides(parse_config(config_json), ov);
  if (cfg.delta_t.empty())
    throw ConfigError("delta_t: a simulate run needs at least one interval");
  Problem problem = build_problem(cfg);

  const int bath_dim = bath_dimension(problem.hamiltonian);
  for (const auto& term : problem.hamiltonian.terms)
    if (std::holds_alternative<std::string>(term.bath))
      throw ConfigError("term '" + term.label +
                        "': simulate needs concrete bath matrices, found abstract label");

  const Matrix* hb = cfg.bath_hamiltonian ? &*cfg.bath_hamiltonian : nullptr;
  const Matrix h_total = full_hamiltonian(problem.hamiltonian, bath_dim, hb);
  const std::vector<ScanPoint> scan =
      convergence_scan(h_total, problem.pulses, problem.hamiltonian, bath_dim, cfg.delta_t);

  if (format == "csv") {
    std::ostringstream csv;
    csv.precision(17);
    csv << "delta_t,residual_interaction_norm,residual_total_norm\n";
    for (const auto& pt : scan)
      csv << pt.delta_t << ',' << pt.residual_interaction << ',' << pt.residual_total << '\n';
    return csv.str();
  }

  json out;
  out["problem"] = canonical_json(cfg);
  out["bath_dimension"] = bath_dim;
  // Sign convention carried with the data so comparisons stay unambiguous.
  out["sign_convention"] =
      "free evolution exp(-i H t); estimate H = (i / T_c) Log U(T_c), principal branch";
  out["scan"] = json::array();
  for (const auto& pt : scan) {
    json jp;
    jp["delta_t"] = pt.delta_t;
    jp["residual_interaction_norm"] = pt.residual_interaction;
    jp["residual_total_norm"] = pt.residual_total;
    jp["estimate_components"] = {{"wanted", pt.estimate_components.wanted},
                                 {"error_terms", pt.estimate_components.error_terms},
                                 {"bath_only", pt.estimate_components.bath_only},
                                 {"other", pt.estimate_components.other}};
    out["scan"].push_back(std::move(jp));
  }
  out["warnings"] = problem.hamiltonian.warnings;
  return out.dump(2) + "\n";
}

std::string run_search(const std::string& config_json, const RunOverrides& ov) {
  const ProblemConfig cfg = apply_overrides(parse_config(config_json), ov);
  Problem problem = build_problem(cfg);

  std::string library_name = cfg.search.library;
  if (library_name.empty()) {
    if (cfg.dimension == 2)
      library_name = "pauli-1q";
    else if (cfg.dimension == 4)
      library_name = "pauli-2q";
    else
      throw ConfigError("search.library: no default library for dimension " +
                        std::to_string(cfg.dimension));
  }
  CandidateLibrary library;
  if (library_name == "pauli-1q")
    library = single_qubit_pauli_library();
  else if (library_name == "pauli-2q")
    library = two_qubit_pauli_library();
  else if (library_name == "axis-grid")
    library = axis_grid_library(cfg.search.divisions);
  else
    throw ConfigError("search.library: unknown library '" + library_name + "'");

  SearchOptions options;
  options.max_size = cfg.search.max_size;
  options.tolerance = cfg.tolerance;
  options.budget = cfg.search.budget;
  options.top_k = cfg.search.top_k;

  const std::vector<SearchResult> results =
      find_pulse_sets(problem.hamiltonian, problem.basis, problem.targets, library, options);

  json out;
  out["problem"] = canonical_json(cfg);
  out["library"] = library_name;
  out["results"] = json::array();
  for (const auto& r : results) out["results"].push_back(search_result_json(r));
  return out.dump(2) + "\n";
}

std::string run_catalog() {
  json out;
  out["sequences"] = json::array();
  for (const std::string& name : catalog_names()) {
    NamedSequence seq = make_named_sequence(name);
    json js;
    js["name"] = seq.name;
    js["size"] = seq.pulses.size();
    js["dimension"] = seq.pulses.dimension();
    js["basis"] = seq.basis_name;
    js["action"] = seq.action == SequenceAction::Storage ? "storage" : "preserve-subspace";
    js["group_closed"] = closure_name(seq.pulses.group_closed);
    js["note"] = seq.note;
    out["sequences"].push_back(std::move(js));
  }
  return out.dump(2) + "\n";
}

}  // namespace bbgeo
