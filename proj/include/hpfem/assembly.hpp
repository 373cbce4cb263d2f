#pragma once

#include <Eigen/Sparse>

#include "hpfem/fe_space.hpp"
#include "hpfem/problem.hpp"

namespace hpfem {

/// Thrown when the numerics break down (lost positive definiteness, residual
/// contract violated). Indicates a bug rather than bad user input.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using SparseMatrix = Eigen::SparseMatrix<double>;

/// Symmetric positive definite system on the free DOFs.
struct SparseSystem {
  SparseMatrix matrix;
  Eigen::VectorXd rhs;

  Eigen::Index dimension() const { return rhs.size(); }
};

/// Default Gauss-Legendre points per direction for assembly.
inline int default_assembly_order(int degree) { return degree + 2; }

/// Assembles B_eps(u, v) = int_{plus} (eps^2 grad u . grad v + u v) + int_{minus} (grad u . grad v + u v)
/// and F(v) with the interface integral taken on the minus-side trace of r = b.
/// Rows and columns of Dirichlet nodes are removed. Throws std::invalid_argument
/// when quad_order < p + 1.
SparseSystem assemble(const FeSpace& space, const TransmissionProblem& problem, int quad_order);

struct OperatorParts {
  bool stiffness = true;
  bool mass = true;
};

/// Grid-sized operator with no Dirichlet elimination; the stiffness part is
/// weighted by eps^2 on the plus region.
SparseMatrix assemble_full_operator(const FeSpace& space, double eps, int quad_order, OperatorParts parts = {});

struct SolveReport {
  Eigen::VectorXd solution;
  double relative_residual = 0.0;
  int refinement_steps = 0;
};

/// Sparse LDL^T with iterative refinement; enforces ||Ax - b|| <= 1e-10 ||b||.
/// Throws NumericalError on a non-positive pivot (with its index) or when the
/// residual contract cannot be met.
SolveReport solve_spd_report(const SparseSystem& system);
Eigen::VectorXd solve_spd(const SparseSystem& system);

}  // namespace hpfem
