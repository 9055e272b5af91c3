#ifndef BBGEO_RUN_HPP
#define BBGEO_RUN_HPP

#include "bbgeo/config.hpp"

namespace bbgeo {

// Optional command-line overrides applied on top of a parsed config.
struct RunOverrides {
  std::optional<double> tolerance;
  std::optional<std::vector<double>> delta_t;
  std::optional<long> search_budget;
  std::optional<int> search_top_k;
};

// Coordinate-level averaging report (JSON).
std::string run_analyze(const std::string& config_json, const RunOverrides& ov = {});

// Finite-interval convergence report; format "structured" (JSON) or "csv"
// with columns delta_t, residual_interaction_norm, residual_total_norm.
std::string run_simulate(const std::string& config_json, const std::string& format,
                         const RunOverrides& ov = {});

// Exhaustive pulse-set search report (JSON).
std::string run_search(const std::string& config_json, const RunOverrides& ov = {});

// Catalog listing of the named sequences (JSON).
std::string run_catalog();

}  // namespace bbgeo

#endif
