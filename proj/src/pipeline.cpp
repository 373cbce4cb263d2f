#include "hpfem/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace hpfem {

MeshParams RunConfig::mesh_params(int degree, double eps_value) const {
  MeshParams params = default_mesh_params(geometry(), degree, eps_value);
  params.kappa = kappa;
  params.sectors = sectors;
  if (rho0) params.rho0 = *rho0;
  if (rho_sigma) params.rho_sigma = *rho_sigma;
  return params;
}

void validate(const RunConfig& config) {
  (void)config.geometry();
  if (config.eps.empty()) throw std::invalid_argument("--eps list is empty");
  if (config.degrees.empty()) throw std::invalid_argument("--p list is empty");
  for (double e : config.eps) {
    if (!(e > 0.0 && e <= 1.0)) throw std::invalid_argument("every eps must lie in (0, 1]");
  }
  for (int p : config.degrees) {
    if (p < 1 || p > 16) throw std::invalid_argument("every p must lie in 1..16");
  }
  if (!(config.kappa > 0.0)) throw std::invalid_argument("--kappa must be positive");
  if (config.sectors < 4) throw std::invalid_argument("--sectors must be at least 4");
  if (config.h_sign != 1.0 && config.h_sign != -1.0) throw std::invalid_argument("--h-sign must be + or -");
}

CaseResult solve_case(const RunConfig& config, double eps, int degree) {
  const AnnularGeometry geometry = config.geometry();
  const LayerMesh mesh = build_mesh(geometry, config.mesh_params(degree, eps));
  CaseResult result;
  result.space = std::make_unique<FeSpace>(build_space(mesh, degree));

  TransmissionProblem problem = constant_problem(geometry, eps, config.f_const, config.f_const, config.h_const,
                                                 config.h_sign);
  ExactFunction exact;
  if (config.data == DataCase::manufactured) {
    const ManufacturedCase mc = manufactured_case(geometry, eps, config.h_sign);
    problem = mc.problem;
    exact = exact_field(mc.exact);
    result.exact_norm = radial_energy_norm(geometry, eps, [ex = mc.exact](double r, Region) { return ex.eval(r); });
  } else {
    const RadialExact oracle(geometry, eps, config.f_const, config.h_const, config.h_sign);
    exact = exact_field(oracle);
    result.exact_norm = radial_energy_norm(oracle);
  }

  const auto start = std::chrono::steady_clock::now();
  const SparseSystem system = assemble(*result.space, problem, default_assembly_order(degree));
  const SolveReport solved = solve_spd_report(system);
  const auto stop = std::chrono::steady_clock::now();

  result.coefficients.assign(solved.solution.data(), solved.solution.data() + solved.solution.size());
  if (result.coefficients.empty()) result.coefficients.assign(result.space->dof_count(), 0.0);
  result.relative_residual = solved.relative_residual;

  const ErrorNorms err = error_norms(result.field(), exact, eps, default_error_order(degree));
  SweepRecord& rec = result.record;
  rec.eps = eps;
  rec.p = degree;
  rec.n_dofs = result.space->dof_count();
  rec.err_energy_abs = err.energy;
  rec.err_energy_rel = result.exact_norm > 0.0 ? err.energy / result.exact_norm : err.energy;
  rec.err_l2 = err.l2;
  rec.runtime_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return result;
}

std::vector<SweepRecord> run_sweep(const RunConfig& config) {
  validate(config);
  std::vector<SweepRecord> records;
  for (double eps : config.eps) {
    for (int p : config.degrees) records.push_back(solve_case(config, eps, p).record);
  }
  std::stable_sort(records.begin(), records.end(), [](const SweepRecord& x, const SweepRecord& y) {
    return x.eps != y.eps ? x.eps < y.eps : x.p < y.p;
  });
  return records;
}

}  // namespace hpfem
