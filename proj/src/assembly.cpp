#include "hpfem/assembly.hpp"

#include <Eigen/SparseCholesky>
#include <cmath>
#include <string>

namespace hpfem {

TransmissionProblem constant_problem(const AnnularGeometry& geometry, double eps, double f_plus, double f_minus,
                                     double h_value, double h_sign) {
  TransmissionProblem problem{geometry, eps, nullptr, nullptr, nullptr, h_sign};
  problem.f_plus = [f_plus](Vec2) { return f_plus; };
  problem.f_minus = [f_minus](Vec2) { return f_minus; };
  problem.h = [h_value](double) { return h_value; };
  return problem;
}

namespace {

struct ElementKernel {
  const FeSpace& space;
  QuadRule rule;
  BasisTable table;
  std::size_t n1;
  std::size_t n_loc;

  ElementKernel(const FeSpace& s, int quad_order)
      : space(s), rule(gauss_legendre(quad_order)), table(tabulate(s.basis(), rule.nodes)),
        n1(s.basis().size()), n_loc(s.local_size()) {}

  // Element matrix stiff_weight * (grad, grad) + mass_weight * (., .) and optionally the load of f.
  template <class F>
  void compute(const Element& e, double stiff_weight, double mass_weight, const F* f, Eigen::MatrixXd& ke,
               Eigen::VectorXd& fe) const {
    ke.setZero(n_loc, n_loc);
    fe.setZero(n_loc);
    const double hr = 0.5 * (e.r1 - e.r0);
    const double ht = 0.5 * (e.t1 - e.t0);
    const std::size_t nq = rule.size();
    Eigen::VectorXd phi(n_loc), dr(n_loc), dt(n_loc);
    for (std::size_t qy = 0; qy < nq; ++qy) {
      for (std::size_t qx = 0; qx < nq; ++qx) {
        const auto map = element_map(e, rule.nodes[qx], rule.nodes[qy]);
        const double w = rule.weights[qx] * rule.weights[qy] * map.det;
        const double r = map.radius;
        for (std::size_t j = 0; j < n1; ++j) {
          for (std::size_t i = 0; i < n1; ++i) {
            const std::size_t k = i + n1 * j;
            phi[k] = table.v(qx, i) * table.v(qy, j);
            dr[k] = table.d(qx, i) * table.v(qy, j) / hr;
            dt[k] = table.v(qx, i) * table.d(qy, j) / (r * ht);
          }
        }
        if (stiff_weight != 0.0) {
          ke.noalias() += (w * stiff_weight) * (dr * dr.transpose() + dt * dt.transpose());
        }
        if (mass_weight != 0.0) ke.noalias() += (w * mass_weight) * (phi * phi.transpose());
        if (f != nullptr) fe += (w * (*f)(map.point)) * phi;
      }
    }
  }
};

void check_order(const FeSpace& space, int quad_order) {
  if (quad_order < space.degree() + 1) {
    throw std::invalid_argument("quadrature order " + std::to_string(quad_order) + " below p + 1 = " +
                                std::to_string(space.degree() + 1));
  }
}

}  // namespace

SparseSystem assemble(const FeSpace& space, const TransmissionProblem& problem, int quad_order) {
  check_order(space, quad_order);
  const ElementKernel kernel(space, quad_order);
  const auto& mesh = space.mesh();
  const double eps2 = problem.eps * problem.eps;
  const auto n_free = static_cast<Eigen::Index>(space.dof_count());

  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(mesh.size() * kernel.n_loc * kernel.n_loc);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n_free);
  Eigen::MatrixXd ke;
  Eigen::VectorXd fe;

  for (std::size_t id = 0; id < mesh.size(); ++id) {
    const Element& e = mesh.element(id);
    const bool plus = e.region == Region::plus;
    const auto& f = plus ? problem.f_plus : problem.f_minus;
    kernel.compute(e, plus ? eps2 : 1.0, 1.0, &f, ke, fe);
    const auto nodes = space.element_nodes(id);
    for (std::size_t a = 0; a < kernel.n_loc; ++a) {
      const int ga = space.free_index(nodes[a]);
      if (ga < 0) continue;
      rhs[ga] += fe[a];
      for (std::size_t b = 0; b < kernel.n_loc; ++b) {
        const int gb = space.free_index(nodes[b]);
        if (gb >= 0) triplets.emplace_back(ga, gb, ke(a, b));
      }
    }
  }

  // interface integral on the minus-side trace xi = -1 of the first minus band
  if (problem.h) {
    const int band = mesh.plus_band_count();
    const std::size_t n1 = kernel.n1;
    for (int sector = 0; sector < mesh.sectors(); ++sector) {
      const std::size_t id = mesh.element_id(band, sector);
      const Element& e = mesh.element(id);
      const double ht = 0.5 * (e.t1 - e.t0);
      const auto nodes = space.element_nodes(id);
      for (std::size_t q = 0; q < kernel.rule.size(); ++q) {
        const double theta = 0.5 * (e.t0 + e.t1) + ht * kernel.rule.nodes[q];
        const double w = kernel.rule.weights[q] * e.r0 * ht * problem.h_sign * problem.h(theta);
        for (std::size_t j = 0; j < n1; ++j) {
          const int g = space.free_index(nodes[n1 * j]);
          if (g >= 0) rhs[g] += w * kernel.table.v(q, j);
        }
      }
    }
  }

  SparseSystem system;
  system.matrix.resize(n_free, n_free);
  system.matrix.setFromTriplets(triplets.begin(), triplets.end());
  system.matrix.makeCompressed();
  system.rhs = std::move(rhs);
  return system;
}

SparseMatrix assemble_full_operator(const FeSpace& space, double eps, int quad_order, OperatorParts parts) {
  check_order(space, quad_order);
  const ElementKernel kernel(space, quad_order);
  const auto& mesh = space.mesh();
  const auto n = static_cast<Eigen::Index>(space.node_count());
  std::vector<Eigen::Triplet<double>> triplets;
  Eigen::MatrixXd ke;
  Eigen::VectorXd fe;
  using NoLoad = std::function<double(Vec2)>;
  for (std::size_t id = 0; id < mesh.size(); ++id) {
    const Element& e = mesh.element(id);
    const double w = e.region == Region::plus ? eps * eps : 1.0;
    kernel.compute(e, parts.stiffness ? w : 0.0, parts.mass ? 1.0 : 0.0, static_cast<const NoLoad*>(nullptr), ke, fe);
    const auto nodes = space.element_nodes(id);
    for (std::size_t a = 0; a < kernel.n_loc; ++a) {
      for (std::size_t b = 0; b < kernel.n_loc; ++b) triplets.emplace_back(nodes[a], nodes[b], ke(a, b));
    }
  }
  SparseMatrix m(n, n);
  m.setFromTriplets(triplets.begin(), triplets.end());
  return m;
}

SolveReport solve_spd_report(const SparseSystem& system) {
  constexpr double residual_contract = 1e-10;
  constexpr int max_refinement = 5;
  SolveReport report;
  const auto n = system.dimension();
  if (n == 0) return report;

  Eigen::SimplicialLDLT<SparseMatrix, Eigen::Lower, Eigen::AMDOrdering<int>> ldlt;
  ldlt.compute(system.matrix);
  if (ldlt.info() != Eigen::Success) throw NumericalError("sparse LDL^T factorization failed");
  const Eigen::VectorXd d = ldlt.vectorD();
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    if (!(d[i] > 0.0)) {
      throw NumericalError("non-positive pivot " + std::to_string(d[i]) + " at elimination step " +
                           std::to_string(i) + ": system is not positive definite");
    }
  }

  const double b_norm = system.rhs.norm();
  report.solution = ldlt.solve(system.rhs);
  if (b_norm == 0.0) {
    report.solution.setZero();
    return report;
  }
  Eigen::VectorXd residual = system.rhs - system.matrix * report.solution;
  report.relative_residual = residual.norm() / b_norm;
  while (report.relative_residual > residual_contract && report.refinement_steps < max_refinement) {
    report.solution += ldlt.solve(residual);
    residual = system.rhs - system.matrix * report.solution;
    report.relative_residual = residual.norm() / b_norm;
    ++report.refinement_steps;
  }
  if (!(report.relative_residual <= residual_contract)) {
    throw NumericalError("relative residual " + std::to_string(report.relative_residual) +
                         " exceeds 1e-10 after iterative refinement");
  }
  return report;
}

Eigen::VectorXd solve_spd(const SparseSystem& system) { return solve_spd_report(system).solution; }

}  // namespace hpfem
