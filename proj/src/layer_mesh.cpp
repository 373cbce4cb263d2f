#include "hpfem/layer_mesh.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hpfem {

std::string_view to_string(Region region) { return region == Region::plus ? "plus" : "minus"; }

std::string_view to_string(Band band) {
  switch (band) {
    case Band::boundary_needle:
      return "boundary-needle";
    case Band::interface_needle:
      return "interface-needle";
    case Band::bulk:
      return "bulk";
  }
  return "bulk";
}

std::string_view to_string(Regime regime) {
  return regime == Regime::asymptotic ? "asymptotic" : "preasymptotic";
}

MeshParams default_mesh_params(const AnnularGeometry& geometry, int degree, double eps) {
  MeshParams params;
  params.degree = degree;
  params.eps = eps;
  params.rho0 = geometry.default_rho0();
  params.rho_sigma = geometry.default_rho_sigma();
  return params;
}

Regime select_regime(int degree, double eps, double kappa) {
  return kappa * degree * eps >= 0.5 ? Regime::asymptotic : Regime::preasymptotic;
}

LayerMesh::LayerMesh(AnnularGeometry geometry, int sectors, Regime regime, double w_bl, double w_il,
                     std::vector<double> radial_breaks, std::vector<Band> bands, int plus_band_count)
    : geometry_(geometry),
      sectors_(sectors),
      regime_(regime),
      w_bl_(w_bl),
      w_il_(w_il),
      radial_breaks_(std::move(radial_breaks)),
      plus_band_count_(plus_band_count) {
  const int n_bands = radial_band_count();
  elements_.reserve(static_cast<std::size_t>(n_bands) * sectors_);
  const double dt = two_pi / sectors_;
  for (int k = 0; k < n_bands; ++k) {
    for (int j = 0; j < sectors_; ++j) {
      Element e;
      e.r0 = radial_breaks_[k];
      e.r1 = radial_breaks_[k + 1];
      e.t0 = dt * j;
      e.t1 = j + 1 == sectors_ ? two_pi : dt * (j + 1);
      e.region = k < plus_band_count_ ? Region::plus : Region::minus;
      e.band = bands[k];
      e.radial_index = k;
      e.angular_index = j;
      elements_.push_back(e);
    }
  }
}

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

void push_uniform(std::vector<double>& breaks, double from, double to, int pieces) {
  for (int i = 1; i <= pieces; ++i) {
    breaks.push_back(i == pieces ? to : from + (to - from) * i / pieces);
  }
}

}  // namespace

LayerMesh build_mesh(const AnnularGeometry& g, const MeshParams& params) {
  const double a = g.a();
  const double b = g.b();
  const double c = g.c();
  require(params.sectors >= 4, "mesh needs at least 4 angular sectors");
  require(params.degree >= 1, "polynomial degree must be >= 1");
  require(params.eps > 0.0 && params.eps <= 1.0, "eps must lie in (0, 1]");
  require(params.kappa > 0.0, "kappa must be positive");
  require(params.rho0 > 0.0 && params.rho0 < a, "rho0 must satisfy 0 < rho0 < a (curvature bound)");
  require(params.rho_sigma > 0.0 && params.rho_sigma < std::min(b - a, b),
          "rho_sigma must satisfy 0 < rho_sigma < min(b - a, b)");
  require(params.plus_bulk_elements >= 1 && params.minus_elements >= 1, "subdivision counts must be >= 1");

  const Regime regime = select_regime(params.degree, params.eps, params.kappa);
  std::vector<double> breaks{a};
  std::vector<Band> bands;
  double w_bl = 0.0;
  double w_il = 0.0;
  int plus_bands = 0;

  if (regime == Regime::asymptotic) {
    push_uniform(breaks, a, b, 2);
    push_uniform(breaks, b, c, 2);
    bands.assign(4, Band::bulk);
    plus_bands = 2;
  } else {
    const double scale = 0.5 * params.kappa * params.degree * params.eps;
    w_bl = params.rho0 * scale;
    w_il = params.rho_sigma * scale;
    const double half_thickness = 0.5 * (b - a);
    require(w_bl < half_thickness, "boundary needle width " + fmt_double(w_bl) +
                                       " reaches half the plus-region thickness; mesh would degenerate");
    require(w_il < half_thickness, "interface needle width " + fmt_double(w_il) +
                                       " reaches half the plus-region thickness; mesh would degenerate");
    breaks.push_back(a + w_bl);
    bands.push_back(Band::boundary_needle);
    push_uniform(breaks, a + w_bl, b - w_il, params.plus_bulk_elements);
    bands.insert(bands.end(), params.plus_bulk_elements, Band::bulk);
    breaks.push_back(b);
    bands.push_back(Band::interface_needle);
    plus_bands = static_cast<int>(bands.size());
    push_uniform(breaks, b, c, params.minus_elements);
    bands.insert(bands.end(), params.minus_elements, Band::bulk);
  }

  for (std::size_t i = 1; i < breaks.size(); ++i) {
    if (!(breaks[i] > breaks[i - 1])) throw std::logic_error("radial breakpoints not increasing");
  }
  return LayerMesh(g, params.sectors, regime, w_bl, w_il, std::move(breaks), std::move(bands), plus_bands);
}

ElementMapValue element_map(const Element& e, double xi, double eta) {
  if (!(xi >= -1.0 && xi <= 1.0 && eta >= -1.0 && eta <= 1.0)) {
    throw std::out_of_range("reference coordinates outside [-1, 1]^2");
  }
  const double hr = 0.5 * (e.r1 - e.r0);
  const double ht = 0.5 * (e.t1 - e.t0);
  const double r = 0.5 * (e.r0 + e.r1) + hr * xi;
  const double t = 0.5 * (e.t0 + e.t1) + ht * eta;
  const double cs = std::cos(t);
  const double sn = std::sin(t);
  ElementMapValue m;
  m.point = {r * cs, r * sn};
  m.jacobian = {{{hr * cs, -r * sn * ht}, {hr * sn, r * cs * ht}}};
  m.det = r * hr * ht;
  m.radius = r;
  m.theta = t;
  return m;
}

}  // namespace hpfem
