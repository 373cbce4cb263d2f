#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "hpfem/fe_space.hpp"
#include "hpfem/postproc.hpp"

namespace hpfem {

/// 17 significant digits, round-trip exact.
std::string format_double(double value);

inline constexpr const char* sweep_csv_header = "eps,p,N,err_energy_abs,err_energy_rel,err_l2,runtime_ms";

std::string csv_row(const SweepRecord& record);
void write_csv(std::ostream& out, const std::vector<SweepRecord>& records);
/// JSON array of objects with the CSV field names.
std::string records_json(const std::vector<SweepRecord>& records);

/// {regime, m, p, eps, kappa, w_bl, w_il, elements: [{r0, r1, t0, t1, region, band}]}
std::string mesh_json(const LayerMesh& mesh, int degree, double eps, double kappa);

/// {eps, p, N, x: [...], y: [...], value: [...]} over the free DOFs.
std::string solution_json(const FeSpace& space, const std::vector<double>& coefficients, double eps);

}  // namespace hpfem
