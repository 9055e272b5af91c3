#include "bbgeo/search.hpp"

#include <algorithm>

#include "bbgeo/matrix_utils.hpp"
#include "bbgeo/metrics.hpp"

namespace bbgeo {

namespace {

Matrix pauli_matrix(int i) {
  GeneratorBasis p = make_pauli_basis();
  return i == 0 ? Matrix(Matrix::Identity(2, 2)) : p.elements[static_cast<size_t>(i - 1)];
}

// Per-term target, defaulting to zero (error) or the original (wanted).
CoefficientVector target_for(const SystemHamiltonian::Term& term,
                             const CoefficientVector& original,
                             const GeneratorBasis& basis,
                             const std::map<std::string, CoefficientVector>& targets) {
  auto it = targets.find(term.label);
  if (it != targets.end()) {
    if (!it->second.basis.compatible(basis.ref()))
      throw ShapeError("search: target basis mismatch for term '" + term.label + "'");
    return it->second;
  }
  if (term.wanted) return original;
  return {basis.ref(), RVector::Zero(basis.count()), term.label};
}

struct GradingContext {
  std::vector<std::string> labels;       // term labels
  std::vector<CoefficientVector> originals;
  std::vector<CoefficientVector> targets;
};

GradingContext make_context(const SystemHamiltonian& h, const GeneratorBasis& basis,
                            const std::map<std::string, CoefficientVector>& targets) {
  if (h.dimension != basis.dimension)
    throw ShapeError("search: basis dimension does not match system");
  GradingContext ctx;
  for (const auto& term : h.terms) {
    CoefficientVector a = expand(term.system_op, basis);
    a.label = term.label;
    ctx.targets.push_back(target_for(term, a, basis, targets));
    ctx.originals.push_back(std::move(a));
    ctx.labels.push_back(term.label);
  }
  return ctx;
}

SearchResult grade(const GradingContext& ctx, const GeneratorBasis& basis,
                   std::vector<std::string> labels, PulseSet pulses, double tol) {
  std::vector<AdjointRotation> rotations;
  rotations.reserve(static_cast<size_t>(pulses.size()));
  for (const Matrix& u : pulses.unitaries) rotations.push_back(adjoint_rotation(u, basis));

  SearchResult res;
  res.size = pulses.size();
  for (size_t t = 0; t < ctx.originals.size(); ++t) {
    CoefficientVector avg = average_vector(ctx.originals[t], rotations, pulses.weights);
    res.d_max = std::max(res.d_max, euclidean_distance(avg, ctx.targets[t]));
    res.averaged.emplace(ctx.labels[t], std::move(avg));
  }
  res.group_closed = verify_group_closure(pulses);
  res.feasible = res.d_max <= tol;
  res.labels = std::move(labels);
  res.pulses = std::move(pulses);
  return res;
}

}  // namespace

CandidateLibrary single_qubit_pauli_library() {
  CandidateLibrary lib;
  lib.basis = make_pauli_basis().ref();
  const char* names[] = {"I", "X", "Y", "Z"};
  for (int i = 0; i < 4; ++i) lib.candidates.push_back({names[i], pauli_matrix(i)});
  return lib;
}

CandidateLibrary two_qubit_pauli_library() {
  CandidateLibrary lib;
  lib.basis = make_pauli_tensor_basis(2).ref();
  const char* names[] = {"I", "X", "Y", "Z"};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      lib.candidates.push_back({std::string(names[i]) + names[j],
                                kron(pauli_matrix(i), pauli_matrix(j))});
  return lib;
}

CandidateLibrary axis_grid_library(int divisions) {
  if (divisions < 2) throw DimensionError("axis_grid_library: divisions must be >= 2");
  CandidateLibrary lib;
  lib.basis = make_pauli_basis().ref();
  lib.candidates.push_back({"I", Matrix::Identity(2, 2)});
  const Eigen::Vector3d axes[] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  const char* axis_names[] = {"x", "y", "z"};
  for (int a = 0; a < 3; ++a)
    for (int k = 1; k < divisions; ++k) {
      const double angle = 2.0 * M_PI * k / divisions;
      lib.candidates.push_back(
          {std::string(axis_names[a]) + ":" + std::to_string(k) + "/" +
               std::to_string(divisions),
           su2_from_axis_angle({axes[a], -angle})});
    }
  return lib;
}

std::vector<SearchResult> find_pulse_sets(
    const SystemHamiltonian& h, const GeneratorBasis& basis,
    const std::map<std::string, CoefficientVector>& targets,
    const CandidateLibrary& library, const SearchOptions& options) {
  if (library.candidates.empty()) throw ConfigError("search: empty candidate library");
  if (options.max_size < 1) throw ConfigError("search: max_size must be >= 1");

  GradingContext ctx = make_context(h, basis, targets);
  const Eigen::Index n = basis.dimension;

  // Non-identity candidates in lexicographic label order; identity is
  // always U_0 and never enumerated.
  std::vector<CandidateLibrary::Candidate> pool;
  for (const auto& cand : library.candidates) {
    if (cand.unitary.rows() != n)
      throw ShapeError("search: candidate '" + cand.label + "' dimension mismatch");
    if (phase_insensitive_distance(cand.unitary, Matrix::Identity(n, n)) > numeric_tol)
      pool.push_back(cand);
  }
  std::sort(pool.begin(), pool.end(),
            [](const auto& a, const auto& b) { return a.label < b.label; });

  // Subset count check up front so the budget error names the cap.
  long total = 0;
  {
    const int p = static_cast<int>(pool.size());
    long level = 1;  // C(p, s-1)
    for (int s = 1; s <= options.max_size && s - 1 <= p; ++s) {
      total += level;
      if (total > options.budget)
        throw BudgetError("search: subset count exceeds budget cap of " +
                          std::to_string(options.budget));
      level = level * (p - (s - 1)) / s;
    }
  }

  std::vector<SearchResult> feasible;
  std::vector<SearchResult> fallback;
  auto consider = [&](std::vector<int> chosen) {
    std::vector<std::string> labels{"I"};
    std::vector<Matrix> us{Matrix::Identity(n, n)};
    for (int idx : chosen) {
      labels.push_back(pool[static_cast<size_t>(idx)].label);
      us.push_back(pool[static_cast<size_t>(idx)].unitary);
    }
    SearchResult res = grade(ctx, basis, std::move(labels),
                             make_pulse_set(std::move(us)), options.tolerance);
    (res.feasible ? feasible : fallback).push_back(std::move(res));
  };

  // Increasing size, lexicographic combinations.
  for (int s = 1; s <= options.max_size; ++s) {
    const int pick = s - 1;
    if (pick > static_cast<int>(pool.size())) break;
    std::vector<int> comb(static_cast<size_t>(pick));
    for (int i = 0; i < pick; ++i) comb[static_cast<size_t>(i)] = i;
    while (true) {
      consider(comb);
      if (pick == 0) break;
      int i = pick - 1;
      while (i >= 0 && comb[static_cast<size_t>(i)] ==
                           static_cast<int>(pool.size()) - pick + i)
        --i;
      if (i < 0) break;
      ++comb[static_cast<size_t>(i)];
      for (int j = i + 1; j < pick; ++j)
        comb[static_cast<size_t>(j)] = comb[static_cast<size_t>(j - 1)] + 1;
    }
  }

  auto order = [](const SearchResult& a, const SearchResult& b) {
    if (a.size != b.size) return a.size < b.size;
    if (a.d_max != b.d_max) return a.d_max < b.d_max;
    return a.labels < b.labels;
  };
  if (!feasible.empty()) {
    std::sort(feasible.begin(), feasible.end(), order);
    return feasible;
  }
  std::sort(fallback.begin(), fallback.end(), [](const SearchResult& a, const SearchResult& b) {
    if (a.d_max != b.d_max) return a.d_max < b.d_max;
    if (a.size != b.size) return a.size < b.size;
    return a.labels < b.labels;
  });
  if (static_cast<int>(fallback.size()) > options.top_k)
    fallback.resize(static_cast<size_t>(options.top_k));
  return fallback;
}

SearchResult grade_pulse_set(const SystemHamiltonian& h, const GeneratorBasis& basis,
                             const std::map<std::string, CoefficientVector>& targets,
                             PulseSet pulses) {
  GradingContext ctx = make_context(h, basis, targets);
  std::vector<std::string> labels;
  for (int k = 0; k < pulses.size(); ++k) labels.push_back("U" + std::to_string(k));
  return grade(ctx, basis, std::move(labels), std::move(pulses), storage_tol_default);
}

}  // namespace bbgeo
