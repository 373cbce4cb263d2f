#pragma once

#include <span>
#include <vector>

namespace hpfem {

/// Quadrature rule on the reference interval [-1, 1].
struct QuadRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
};

/// Legendre polynomial P_n(x) and its derivative, by the three-term recurrence.
struct LegendreValue {
  double value;
  double derivative;
};
LegendreValue legendre(int n, double x);

/// n-point Gauss-Legendre rule, exact for degree <= 2n - 1.
QuadRule gauss_legendre(int n);

/// (p+1)-point Gauss-Lobatto rule, exact for degree <= 2p - 1.
/// Interior nodes are the zeros of P_p'.
QuadRule gauss_lobatto(int p);

/// Lagrange basis of degree p on the Gauss-Lobatto nodes.
///
/// Evaluation uses the first barycentric form
///   l_j(x) = w_j * prod_k (x - x_k) / (x - x_j)
/// which stays accurate arbitrarily close to a node.
class NodalBasis1D {
 public:
  explicit NodalBasis1D(int degree);

  int degree() const { return degree_; }
  std::size_t size() const { return nodes_.size(); }
  const std::vector<double>& nodes() const { return nodes_; }

  /// values[j] = l_j(x)
  void values(double x, std::span<double> out) const;
  /// derivs[j] = l_j'(x)
  void derivatives(double x, std::span<double> out) const;

  std::vector<double> values(double x) const;
  std::vector<double> derivatives(double x) const;

 private:
  int degree_;
  std::vector<double> nodes_;
  std::vector<double> bary_;
  // diff_[i * n + j] = l_j'(x_i)
  std::vector<double> diff_;

  int node_index(double x) const;
};

/// Basis values and derivatives sampled at the nodes of a rule.
struct BasisTable {
  std::size_t n_basis = 0;
  std::size_t n_points = 0;
  std::vector<double> value;  // [q * n_basis + i]
  std::vector<double> deriv;  // [q * n_basis + i]

  double v(std::size_t q, std::size_t i) const { return value[q * n_basis + i]; }
  double d(std::size_t q, std::size_t i) const { return deriv[q * n_basis + i]; }
};
BasisTable tabulate(const NodalBasis1D& basis, std::span<const double> points);

/// Tensor-product Gauss-Lobatto interpolant Pi_p evaluated at (x, y) in [-1,1]^2.
/// grid[i + (p+1) * j] holds the value at (x_i, y_j). Throws std::invalid_argument
/// when the grid does not have (p+1)^2 entries.
double interpolate_gl(std::span<const double> grid, int p, double x, double y);

}  // namespace hpfem
