#pragma once

#include <functional>
#include <vector>

#include "hpfem/exact_oracle.hpp"
#include "hpfem/fe_space.hpp"

namespace hpfem {

/// Reference field evaluated at a physical point of the given region.
using ExactFunction = std::function<FieldValue(Vec2 point, Region region)>;

/// Lifts a radial profile u(r) to the plane: value u(r), gradient u'(r) (cos t, sin t).
ExactFunction radial_field(std::function<RadialValue(double r, Region region)> profile);
ExactFunction exact_field(const RadialExact& exact);
ExactFunction exact_field(const ManufacturedSolution& exact);
ExactFunction zero_field();

inline int default_error_order(int degree) { return degree + 5; }

/// Calls visit(element_id, xi, eta, map, weight) for every tensor Gauss-Legendre
/// point of every element; weight includes the Jacobian determinant.
template <class Visit>
void for_each_quadrature_point(const FeSpace& space, int order, Visit&& visit) {
  const QuadRule rule = gauss_legendre(order);
  const auto& mesh = space.mesh();
  for (std::size_t id = 0; id < mesh.size(); ++id) {
    const Element& e = mesh.element(id);
    for (std::size_t qy = 0; qy < rule.size(); ++qy) {
      for (std::size_t qx = 0; qx < rule.size(); ++qx) {
        const auto map = element_map(e, rule.nodes[qx], rule.nodes[qy]);
        visit(id, rule.nodes[qx], rule.nodes[qy], map, rule.weights[qx] * rule.weights[qy] * map.det);
      }
    }
  }
}

/// Radial panel breakpoints in the reference coordinate xi for error quadrature.
/// Plus-region elements wider than eps get panels graded geometrically towards
/// both radial edges, smallest width eps / 4; all other elements use one panel.
std::vector<double> error_panels(const Element& element, double eps);

/// Like for_each_quadrature_point, with an order-point Gauss-Legendre rule on
/// every radial panel of error_panels.
template <class Visit>
void for_each_error_point(const FeSpace& space, int order, double eps, Visit&& visit) {
  const QuadRule rule = gauss_legendre(order);
  const auto& mesh = space.mesh();
  for (std::size_t id = 0; id < mesh.size(); ++id) {
    const Element& e = mesh.element(id);
    const std::vector<double> panels = error_panels(e, eps);
    for (std::size_t k = 0; k + 1 < panels.size(); ++k) {
      const double mid = 0.5 * (panels[k] + panels[k + 1]);
      const double half = 0.5 * (panels[k + 1] - panels[k]);
      for (std::size_t qy = 0; qy < rule.size(); ++qy) {
        for (std::size_t qx = 0; qx < rule.size(); ++qx) {
          const double xi = mid + half * rule.nodes[qx];
          const auto map = element_map(e, xi, rule.nodes[qy]);
          visit(id, xi, rule.nodes[qy], map, half * rule.weights[qx] * rule.weights[qy] * map.det);
        }
      }
    }
  }
}

struct ErrorNorms {
  double energy = 0.0;  // ||exact - field||_eps
  double l2 = 0.0;      // ||exact - field||_0
};

/// Energy and L2 norms of (exact - field); weight eps^2 on the plus region gradient.
/// Integrates with for_each_error_point.
/// Throws std::invalid_argument when quad_order < p + 3.
ErrorNorms error_norms(const DiscreteField& field, const ExactFunction& exact, double eps, int quad_order);

/// ||field||_eps, with Dirichlet nodes taken as stored in the field.
double energy_norm(const DiscreteField& field, double eps, int quad_order);
/// ||exact - field||_eps.
double energy_norm(const DiscreteField& field, const ExactFunction& exact, double eps, int quad_order);

/// B_eps(exact - field, test) by element quadrature.
double energy_product(const DiscreteField& field, const ExactFunction& exact, const DiscreteField& test, double eps,
                      int quad_order);

/// 2 pi int_a^c (w u'^2 + u^2) r dr by composite Gauss-Legendre on panels graded
/// towards r = a and r = b (w = eps^2 on [a, b], 1 on [b, c]). Returns the norm.
double radial_energy_norm(const AnnularGeometry& geometry, double eps,
                          const std::function<RadialValue(double r, Region region)>& profile);
double radial_energy_norm(const RadialExact& exact);

struct SweepRecord {
  double eps = 0.0;
  int p = 0;
  std::size_t n_dofs = 0;
  double err_energy_abs = 0.0;
  double err_energy_rel = 0.0;
  double err_l2 = 0.0;
  double runtime_ms = 0.0;
};

struct RateFit {
  double b = 0.0;              // decay constant in err ~ C N^2 e^{-b sqrt(N)}
  double c = 0.0;              // prefactor C
  double r_squared = 0.0;      // of ln(err / N^2) against sqrt(N)
  double semilog_slope = 0.0;  // d ln(err) / dp, least squares
};

/// Least-squares fit of ln(err) = ln C + 2 ln N - b sqrt(N) over relative energy errors.
/// Throws std::invalid_argument for fewer than 3 distinct N or non-positive errors.
RateFit fit_rate(const std::vector<SweepRecord>& records);

}  // namespace hpfem
