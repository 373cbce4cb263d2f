#pragma once

#include <span>
#include <vector>

#include "hpfem/layer_mesh.hpp"
#include "hpfem/quadrature.hpp"

namespace hpfem {

/// Continuous Q_p space on a LayerMesh with homogeneous Dirichlet data on r = a and r = c.
///
/// Nodes live on the structured polar grid of Gauss-Lobatto points: radial grid
/// index R = band * p + i in [0, K p], angular grid index T = (sector * p + j) mod (m p).
/// Coincident nodes are identified by this index arithmetic, never by coordinates,
/// which makes the theta-periodic seam and the interface r = b conforming by construction.
class FeSpace {
 public:
  FeSpace(LayerMesh mesh, int degree);

  const LayerMesh& mesh() const { return mesh_; }
  int degree() const { return degree_; }
  const NodalBasis1D& basis() const { return basis_; }
  std::size_t local_size() const { return local_size_; }

  /// Number of grid nodes before Dirichlet elimination: (K p + 1) * (m p).
  std::size_t node_count() const { return node_free_.size(); }
  /// N = dim V_N, the number of free nodes.
  std::size_t dof_count() const { return free_node_.size(); }
  std::size_t dirichlet_count() const { return node_count() - dof_count(); }

  /// Grid node of local node (i radial, j angular) = i + (p+1) j of element e.
  std::span<const int> element_nodes(std::size_t element) const {
    return std::span(element_nodes_).subspan(element * local_size_, local_size_);
  }
  /// Free index of a grid node, or -1 on the Dirichlet boundary.
  int free_index(int node) const { return node_free_[node]; }
  bool is_dirichlet(int node) const { return node_free_[node] < 0; }
  /// Grid node carrying free DOF k.
  int free_node(std::size_t k) const { return free_node_[k]; }

  int radial_node_count() const { return radial_nodes_; }
  int angular_node_count() const { return angular_nodes_; }
  double node_radius(int node) const { return node_radius_[node / angular_nodes_]; }
  double node_theta(int node) const;
  Vec2 node_point(int node) const;

 private:
  LayerMesh mesh_;
  int degree_;
  NodalBasis1D basis_;
  std::size_t local_size_;
  int radial_nodes_;
  int angular_nodes_;
  std::vector<double> node_radius_;
  std::vector<int> element_nodes_;
  std::vector<int> node_free_;
  std::vector<int> free_node_;
};

FeSpace build_space(const LayerMesh& mesh, int degree);

struct FieldValue {
  double value = 0.0;
  Vec2 gradient;
};

/// Piecewise Q_p function on an FeSpace. Values are stored per grid node;
/// Dirichlet nodes hold zero unless the field was built from raw node values.
class DiscreteField {
 public:
  /// From one coefficient per free DOF; Dirichlet nodes are zero.
  DiscreteField(const FeSpace& space, std::span<const double> free_coefficients);
  /// From one value per grid node, Dirichlet nodes included (diagnostics only).
  static DiscreteField from_node_values(const FeSpace& space, std::vector<double> node_values);

  const FeSpace& space() const { return *space_; }
  const std::vector<double>& node_values() const { return node_values_; }
  std::vector<double> free_coefficients() const;

  /// Value and physical gradient at reference point (xi, eta) of an element.
  /// Throws std::out_of_range for an invalid element id.
  FieldValue eval(std::size_t element, double xi, double eta) const;

 private:
  DiscreteField(const FeSpace& space, std::vector<double> node_values, int);
  const FeSpace* space_;
  std::vector<double> node_values_;
};

FieldValue eval_field(const DiscreteField& field, std::size_t element, double xi, double eta);

/// Nodal interpolant of g (evaluated at grid node coordinates) onto the space.
/// With `keep_dirichlet` the boundary nodes keep g's values instead of zero.
template <class F>
DiscreteField interpolate(const FeSpace& space, F&& g, bool keep_dirichlet = false) {
  std::vector<double> values(space.node_count(), 0.0);
  for (std::size_t n = 0; n < values.size(); ++n) {
    const int node = static_cast<int>(n);
    if (keep_dirichlet || !space.is_dirichlet(node)) values[n] = g(space.node_point(node));
  }
  return DiscreteField::from_node_values(space, std::move(values));
}

/// Inverse-transpose of the element Jacobian applied to a reference gradient.
Vec2 physical_gradient(const Mat2& jacobian, double det, double d_xi, double d_eta);

}  // namespace hpfem
