#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "hpfem/assembly.hpp"
#include "hpfem/postproc.hpp"

namespace hpfem {

enum class DataCase { constant, manufactured };

/// Everything a solve or sweep needs. Defaults reproduce the benchmark:
/// radii (1, 2, 3), f+ = f- = 1, h = 0, kappa = 1, 16 sectors.
struct RunConfig {
  double a = 1.0;
  double b = 2.0;
  double c = 3.0;
  std::vector<double> eps{1e-2};
  std::vector<int> degrees{1, 2, 3, 4, 5, 6, 7, 8};
  double kappa = 1.0;
  int sectors = 16;
  std::optional<double> rho0;       // default 0.9 a
  std::optional<double> rho_sigma;  // default 0.9 min(b - a, b)
  DataCase data = DataCase::constant;
  double f_const = 1.0;
  double h_const = 0.0;
  double h_sign = 1.0;

  AnnularGeometry geometry() const { return {a, b, c}; }
  MeshParams mesh_params(int degree, double eps_value) const;
};

/// Throws std::invalid_argument with an actionable message.
void validate(const RunConfig& config);

struct CaseResult {
  SweepRecord record;
  std::unique_ptr<FeSpace> space;
  std::vector<double> coefficients;  // one per free DOF
  double exact_norm = 0.0;
  double relative_residual = 0.0;

  DiscreteField field() const { return DiscreteField(*space, coefficients); }
};

/// mesh -> space -> assemble -> solve -> errors for a single (eps, p).
CaseResult solve_case(const RunConfig& config, double eps, int degree);

/// Cross product of config.eps x config.degrees, sorted by (eps, p).
std::vector<SweepRecord> run_sweep(const RunConfig& config);

}  // namespace hpfem
