#include "bbgeo.h"

#include <cstring>

#include "bbgeo/run.hpp"
#include "bbgeo/sequences.hpp"

namespace {

thread_local std::string g_last_error;

bbgeo_status record(bbgeo_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

template <typename Fn>
bbgeo_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return BBGEO_OK;
  } catch (const bbgeo::ShapeError& e) {
    return record(BBGEO_ERROR_SHAPE, e.what());
  } catch (const bbgeo::ValidityError& e) {
    return record(BBGEO_ERROR_VALIDITY, e.what());
  } catch (const bbgeo::DimensionError& e) {
    return record(BBGEO_ERROR_DIMENSION, e.what());
  } catch (const bbgeo::BudgetError& e) {
    return record(BBGEO_ERROR_BUDGET, e.what());
  } catch (const bbgeo::BranchCutError& e) {
    return record(BBGEO_ERROR_BRANCH_CUT, e.what());
  } catch (const bbgeo::ConfigError& e) {
    return record(BBGEO_ERROR_CONFIG, e.what());
  } catch (const std::exception& e) {
    return record(BBGEO_ERROR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bbgeo::Matrix matrix_from_parts(const double* re, const double* im, int rows, int cols) {
  bbgeo::Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      m(r, c) = bbgeo::Complex(re[r * cols + c], im ? im[r * cols + c] : 0.0);
  return m;
}

void matrix_to_parts(const bbgeo::Matrix& m, double* re, double* im) {
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      re[r * m.cols() + c] = m(r, c).real();
      if (im) im[r * m.cols() + c] = m(r, c).imag();
    }
}

bbgeo::RunOverrides overrides_from(const bbgeo_options* options) {
  bbgeo::RunOverrides ov;
  if (!options) return ov;
  if (options->tolerance > 0.0) ov.tolerance = options->tolerance;
  if (options->delta_t && options->delta_t_count > 0)
    ov.delta_t = std::vector<double>(options->delta_t,
                                     options->delta_t + options->delta_t_count);
  if (options->search_budget > 0) ov.search_budget = options->search_budget;
  if (options->search_top_k > 0) ov.search_top_k = static_cast<int>(options->search_top_k);
  return ov;
}

}  // namespace

struct bbgeo_basis {
  bbgeo::GeneratorBasis value;
};

struct bbgeo_pulse_set {
  bbgeo::PulseSet value;
};

extern "C" {

const char* bbgeo_status_name(bbgeo_status status) {
  switch (status) {
    case BBGEO_OK: return "ok";
    case BBGEO_ERROR_INVALID_ARGUMENT: return "invalid-argument";
    case BBGEO_ERROR_SHAPE: return "shape";
    case BBGEO_ERROR_VALIDITY: return "validity";
    case BBGEO_ERROR_DIMENSION: return "dimension";
    case BBGEO_ERROR_CONFIG: return "config";
    case BBGEO_ERROR_BUDGET: return "budget";
    case BBGEO_ERROR_BRANCH_CUT: return "branch-cut";
    default: return "internal";
  }
}

const char* bbgeo_last_error(void) { return g_last_error.c_str(); }

const char* bbgeo_version(void) { return "0.1.0"; }

void bbgeo_string_free(char* text) { delete[] text; }

bbgeo_status bbgeo_basis_create(const char* kind, int32_t param, bbgeo_basis** out) {
  if (!kind || !out)
    return record(BBGEO_ERROR_INVALID_ARGUMENT, "bbgeo_basis_create: null argument");
  return guarded([&] {
    const std::string name(kind);
    bbgeo::GeneratorBasis basis;
    if (name == "pauli")
      basis = bbgeo::make_pauli_basis();
    else if (name == "gell-mann")
      basis = bbgeo::make_gell_mann_basis(param);
    else if (name == "pauli-tensor")
      basis = bbgeo::make_pauli_tensor_basis(param);
    else
      throw bbgeo::ConfigError("unknown basis kind '" + name + "'");
    *out = new bbgeo_basis{std::move(basis)};
  });
}

void bbgeo_basis_destroy(bbgeo_basis* basis) { delete basis; }

int32_t bbgeo_basis_dimension(const bbgeo_basis* basis) {
  return basis ? basis->value.dimension : 0;
}

int32_t bbgeo_basis_count(const bbgeo_basis* basis) {
  return basis ? basis->value.count() : 0;
}

double bbgeo_basis_normalization(const bbgeo_basis* basis) {
  return basis ? basis->value.normalization : 0.0;
}

bbgeo_status bbgeo_basis_element(const bbgeo_basis* basis, int32_t index,
                                 double* re, double* im) {
  if (!basis || !re || !im)
    return record(BBGEO_ERROR_INVALID_ARGUMENT, "bbgeo_basis_element: null argument");
  if (index < 0 || index >= basis->value.count())
    return record(BBGEO_ERROR_INVALID_ARGUMENT, "bbgeo_basis_element: index out of range");
  matrix_to_parts(basis->value.elements[static_cast<size_t>(index)], re, im);
  return BBGEO_OK;
}

bbgeo_status bbgeo_expand(const bbgeo_basis* basis, const double* re,
                          const double* im, double* coeffs) {
  if (!basis || !re || !coeffs)
    return record(BBGEO_ERROR_INVALID_ARGUMENT, "bbgeo_expand: null argument");
  return guarded([&] {
    const int n = basis->value.dimension;
    const bbgeo::CoefficientVector a =
        bbgeo::expand(matrix_from_parts(re, im, n, n), basis->value);
    for (int i = 0; i < basis->value.count(); ++i) coeffs[i] = a.values(i);
  });
}

bbgeo_status bbgeo_reconstruct(const bbgeo_basis* basis, const double* coeffs,
                               double* re, double* im) {
  if (!basis || !coeffs || !re)
    return record(BBGEO_ERROR_INVALID_ARGUMENT, "bbgeo_reconstruct: null argument");
  return guarded([&] {
    bbgeo::RVector a(basis->value.count());
    for (int i = 0; i < basis->value.count(); ++i) a(i) = coeffs[i];
    matrix_to_parts(
        bbgeo::reconstruct({basis->value.ref(), std::move(a), {}}, basis->value), re, im);
  });
}

bbgeo_status bbgeo_adjoint_rotation(const bbgeo_basis* basis, const double* u_re,
                                    const double* u_im, double* rotation) {
  if (!basis || !u_re || !rotation)
    return record(BBGEO_ERROR_INVALID_ARGUMENT, "bbgeo_adjoint_rotation: null argument");
  return guarded([&] {
    const int n = basis->value.dimension;
    const bbgeo::AdjointRotation r =
        bbgeo::adjoint_rotation(matrix_from_parts(u_re, u_im, n, n), basis->value);
    const int N = basis->value.count();
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) rotation[i * N + j] = r.matrix(i, j);
  });
}

bbgeo_status bbgeo_pulse_set_create(const double* re, const double* im,
                                    int32_t count, int32_t dim,
                                    bbgeo_pulse_set** out) {
  if (!re || !out || count < 1 || dim < 1)
    return record(BBGEO_ERROR_INVALID_ARGUMENT, "bbgeo_pulse_set_create: bad argument");
  return guarded([&] {
    std::vector<bbgeo::Matrix> us;
    us.reserve(static_cast<size_t>(count));
    const int stride = dim * dim;
    for (int k = 0; k < count; ++k)
      us.push_back(matrix_from_parts(re + k * stride, im ? im + k * stride : nullptr,
                                     dim, dim));
    *out = new bbgeo_pulse_set{bbgeo::make_pulse_set(std::move(us))};
  });
}

bbgeo_status bbgeo_pulse_set_from_sequence(const char* name, bbgeo_pulse_set** out) {
  if (!name || !out)
    return record(BBGEO_ERROR_INVALID_ARGUMENT, "bbgeo_pulse_set_from_sequence: null argument");
  return guarded([&] {
    *out = new bbgeo_pulse_set{bbgeo::make_named_sequence(name).pulses};
  });
}

void bbgeo_pulse_set_destroy(bbgeo_pulse_set* pulses) { delete pulses; }

int32_t bbgeo_pulse_set_size(const bbgeo_pulse_set* pulses) {
  return pulses ? pulses->value.size() : 0;
}

int32_t bbgeo_pulse_set_dimension(const bbgeo_pulse_set* pulses) {
  return pulses ? pulses->value.dimension() : 0;
}

bbgeo_status bbgeo_pulse_set_verify_closure(bbgeo_pulse_set* pulses, double tol,
                                            int32_t* closed) {
  if (!pulses || !closed)
    return record(BBGEO_ERROR_INVALID_ARGUMENT, "bbgeo_pulse_set_verify_closure: null argument");
  return guarded([&] {
    *closed = bbgeo::verify_group_closure(pulses->value, tol > 0 ? tol : bbgeo::numeric_tol)
                  ? 1
                  : 0;
  });
}

bbgeo_status bbgeo_average_vector(const bbgeo_basis* basis,
                                  const bbgeo_pulse_set* pulses,
                                  const double* coeffs, double* averaged) {
  if (!basis || !pulses || !coeffs || !averaged)
    return record(BBGEO_ERROR_INVALID_ARGUMENT, "bbgeo_average_vector: null argument");
  return guarded([&] {
    const int N = basis->value.count();
    bbgeo::RVector a(N);
    for (int i = 0; i < N; ++i) a(i) = coeffs[i];
    std::vector<bbgeo::AdjointRotation> rotations;
    for (const bbgeo::Matrix& u : pulses->value.unitaries)
      rotations.push_back(bbgeo::adjoint_rotation(u, basis->value));
    const bbgeo::CoefficientVector result = bbgeo::average_vector(
        {basis->value.ref(), std::move(a), {}}, rotations, pulses->value.weights);
    for (int i = 0; i < N; ++i) averaged[i] = result.values(i);
  });
}

bbgeo_status bbgeo_run_analyze(const char* config_json, const bbgeo_options* options,
                               char** report_json) {
  if (!config_json || !report_json)
    return record(BBGEO_ERROR_INVALID_ARGUMENT, "bbgeo_run_analyze: null argument");
  return guarded([&] {
    *report_json = copy_string(bbgeo::run_analyze(config_json, overrides_from(options)));
  });
}

bbgeo_status bbgeo_run_simulate(const char* config_json, const char* format,
                                const bbgeo_options* options, char** report) {
  if (!config_json || !format || !report)
    return record(BBGEO_ERROR_INVALID_ARGUMENT, "bbgeo_run_simulate: null argument");
  return guarded([&] {
    *report = copy_string(bbgeo::run_simulate(config_json, format, overrides_from(options)));
  });
}

bbgeo_status bbgeo_run_search(const char* config_json, const bbgeo_options* options,
                              char** report_json) {
  if (!config_json || !report_json)
    return record(BBGEO_ERROR_INVALID_ARGUMENT, "bbgeo_run_search: null argument");
  return guarded([&] {
    *report_json = copy_string(bbgeo::run_search(config_json, overrides_from(options)));
  });
}

bbgeo_status bbgeo_run_catalog(char** report_json) {
  if (!report_json)
    return record(BBGEO_ERROR_INVALID_ARGUMENT, "bbgeo_run_catalog: null argument");
  return guarded([&] { *report_json = copy_string(bbgeo::run_catalog()); });
}

}  // extern "C"
