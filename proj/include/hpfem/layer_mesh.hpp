#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "hpfem/geometry.hpp"

namespace hpfem {

enum class Region { plus, minus };
enum class Band { boundary_needle, interface_needle, bulk };
enum class Regime { asymptotic, preasymptotic };

std::string_view to_string(Region region);
std::string_view to_string(Band band);
std::string_view to_string(Regime regime);

/// Curved quadrilateral [r0, r1] x [t0, t1] in polar coordinates.
struct Element {
  double r0 = 0.0;
  double r1 = 0.0;
  double t0 = 0.0;
  double t1 = 0.0;
  Region region = Region::plus;
  Band band = Band::bulk;
  int radial_index = 0;   // position in the radial breakpoint list
  int angular_index = 0;  // sector number
};

struct MeshParams {
  int sectors = 16;
  int degree = 1;
  double eps = 1.0;
  double kappa = 1.0;
  double rho0 = 0.0;       // tubular depth along r = a
  double rho_sigma = 0.0;  // tubular depth along r = b (plus side)
  int plus_bulk_elements = 2;
  int minus_elements = 3;
};

/// MeshParams with rho0 / rho_sigma taken from the geometry defaults.
MeshParams default_mesh_params(const AnnularGeometry& geometry, int degree, double eps);

/// kappa * p * eps >= 1/2 selects the regular (asymptotic) mesh.
Regime select_regime(int degree, double eps, double kappa);

class LayerMesh {
 public:
  LayerMesh(AnnularGeometry geometry, int sectors, Regime regime, double w_bl, double w_il,
            std::vector<double> radial_breaks, std::vector<Band> bands, int plus_band_count);

  const AnnularGeometry& geometry() const { return geometry_; }
  int sectors() const { return sectors_; }
  Regime regime() const { return regime_; }
  double boundary_needle_width() const { return w_bl_; }
  double interface_needle_width() const { return w_il_; }

  /// Radial breakpoints from a to c; b is always one of them.
  const std::vector<double>& radial_breaks() const { return radial_breaks_; }
  int radial_band_count() const { return static_cast<int>(radial_breaks_.size()) - 1; }
  /// Number of radial bands inside Omega_plus.
  int plus_band_count() const { return plus_band_count_; }

  const std::vector<Element>& elements() const { return elements_; }
  const Element& element(std::size_t id) const { return elements_.at(id); }
  std::size_t size() const { return elements_.size(); }
  /// Element id of (radial band, sector).
  std::size_t element_id(int radial_band, int sector) const {
    return static_cast<std::size_t>(radial_band) * sectors_ + sector;
  }

 private:
  AnnularGeometry geometry_;
  int sectors_;
  Regime regime_;
  double w_bl_;
  double w_il_;
  std::vector<double> radial_breaks_;
  int plus_band_count_;
  std::vector<Element> elements_;
};

/// Builds the layer-adapted mesh. In the preasymptotic regime the plus region is
/// split radially into {a, a + w_bl, bulk..., b - w_il, b} with
/// w_bl = rho0 * kappa * p * eps / 2 and w_il = rho_sigma * kappa * p * eps / 2.
/// Throws std::invalid_argument on bad parameters or degenerate needle widths.
LayerMesh build_mesh(const AnnularGeometry& geometry, const MeshParams& params);

using Mat2 = std::array<std::array<double, 2>, 2>;

struct ElementMapValue {
  Vec2 point;
  Mat2 jacobian;  // jacobian[i][j] = d x_i / d xi_j, xi_0 = xi (radial), xi_1 = eta (angular)
  double det = 0.0;
  double radius = 0.0;
  double theta = 0.0;
};

/// Exact polar map of the reference square [-1, 1]^2 onto the element.
/// Throws std::out_of_range for reference coordinates outside the square.
ElementMapValue element_map(const Element& element, double xi, double eta);

}  // namespace hpfem
