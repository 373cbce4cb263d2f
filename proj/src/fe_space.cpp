#include "hpfem/fe_space.hpp"

#include <cmath>
#include <stdexcept>

namespace hpfem {

FeSpace::FeSpace(LayerMesh mesh, int degree)
    : mesh_(std::move(mesh)),
      degree_(degree),
      basis_(degree),
      local_size_(static_cast<std::size_t>(degree + 1) * (degree + 1)) {
  const int p = degree_;
  const int bands = mesh_.radial_band_count();
  const int m = mesh_.sectors();
  radial_nodes_ = bands * p + 1;
  angular_nodes_ = m * p;

  const auto& ref = basis_.nodes();
  const auto& breaks = mesh_.radial_breaks();
  node_radius_.resize(radial_nodes_);
  for (int k = 0; k < bands; ++k) {
    for (int i = 0; i <= p; ++i) {
      node_radius_[k * p + i] = 0.5 * (breaks[k] + breaks[k + 1]) + 0.5 * (breaks[k + 1] - breaks[k]) * ref[i];
    }
  }
  for (int k = 0; k <= bands; ++k) node_radius_[k * p] = breaks[k];

  element_nodes_.resize(mesh_.size() * local_size_);
  for (std::size_t e = 0; e < mesh_.size(); ++e) {
    const Element& el = mesh_.element(e);
    for (int j = 0; j <= p; ++j) {
      const int t_index = (el.angular_index * p + j) % angular_nodes_;
      for (int i = 0; i <= p; ++i) {
        const int r_index = el.radial_index * p + i;
        element_nodes_[e * local_size_ + i + (p + 1) * j] = r_index * angular_nodes_ + t_index;
      }
    }
  }

  // free numbering in order of first appearance along (element, local node)
  node_free_.assign(static_cast<std::size_t>(radial_nodes_) * angular_nodes_, -2);
  for (int node : element_nodes_) {
    if (node_free_[node] != -2) continue;
    const int r_index = node / angular_nodes_;
    if (r_index == 0 || r_index == radial_nodes_ - 1) {
      node_free_[node] = -1;
    } else {
      node_free_[node] = static_cast<int>(free_node_.size());
      free_node_.push_back(node);
    }
  }
  for (int v : node_free_) {
    if (v == -2) throw std::logic_error("grid node not covered by any element");
  }
}

double FeSpace::node_theta(int node) const {
  const int t_index = node % angular_nodes_;
  const int sector = t_index / degree_;
  const int j = t_index % degree_;
  const Element& el = mesh_.element(mesh_.element_id(0, sector));
  return 0.5 * (el.t0 + el.t1) + 0.5 * (el.t1 - el.t0) * basis_.nodes()[j];
}

Vec2 FeSpace::node_point(int node) const {
  const double r = node_radius(node);
  const double t = node_theta(node);
  return {r * std::cos(t), r * std::sin(t)};
}

FeSpace build_space(const LayerMesh& mesh, int degree) {
  if (degree < 1) throw std::invalid_argument("polynomial degree must be >= 1");
  return FeSpace(mesh, degree);
}

DiscreteField::DiscreteField(const FeSpace& space, std::vector<double> node_values, int)
    : space_(&space), node_values_(std::move(node_values)) {}

DiscreteField::DiscreteField(const FeSpace& space, std::span<const double> free_coefficients)
    : space_(&space), node_values_(space.node_count(), 0.0) {
  if (free_coefficients.size() != space.dof_count()) {
    throw std::invalid_argument("coefficient vector length does not match the number of free DOFs");
  }
  for (std::size_t k = 0; k < free_coefficients.size(); ++k) node_values_[space.free_node(k)] = free_coefficients[k];
}

DiscreteField DiscreteField::from_node_values(const FeSpace& space, std::vector<double> node_values) {
  if (node_values.size() != space.node_count()) {
    throw std::invalid_argument("node value vector length does not match the grid");
  }
  return DiscreteField(space, std::move(node_values), 0);
}

std::vector<double> DiscreteField::free_coefficients() const {
  std::vector<double> out(space_->dof_count());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = node_values_[space_->free_node(k)];
  return out;
}

Vec2 physical_gradient(const Mat2& J, double det, double d_xi, double d_eta) {
  // grad_x u = J^{-T} grad_xi u
  return {(J[1][1] * d_xi - J[1][0] * d_eta) / det, (-J[0][1] * d_xi + J[0][0] * d_eta) / det};
}

FieldValue DiscreteField::eval(std::size_t element, double xi, double eta) const {
  if (element >= space_->mesh().size()) throw std::out_of_range("invalid element id");
  const auto& basis = space_->basis();
  const std::size_t n = basis.size();
  const auto vx = basis.values(xi);
  const auto dx = basis.derivatives(xi);
  const auto vy = basis.values(eta);
  const auto dy = basis.derivatives(eta);
  const auto nodes = space_->element_nodes(element);
  double u = 0.0;
  double u_xi = 0.0;
  double u_eta = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const double c = node_values_[nodes[i + n * j]];
      u += c * vx[i] * vy[j];
      u_xi += c * dx[i] * vy[j];
      u_eta += c * vx[i] * dy[j];
    }
  }
  const auto map = element_map(space_->mesh().element(element), xi, eta);
  return {u, physical_gradient(map.jacobian, map.det, u_xi, u_eta)};
}

FieldValue eval_field(const DiscreteField& field, std::size_t element, double xi, double eta) {
  return field.eval(element, xi, eta);
}

}  // namespace hpfem
