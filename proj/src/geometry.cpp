#include "hpfem/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hpfem {

double canonical_angle(double theta) {
  double t = std::fmod(theta, two_pi);
  if (t < 0.0) t += two_pi;
  // fmod of a value just below a multiple of 2*pi can round up to 2*pi
  if (t >= two_pi) t = 0.0;
  return t;
}

Circle::Circle(double radius) : radius_(radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("circle radius must be positive");
}

CurvePoint Circle::at(double theta) const {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return CurvePoint{{radius_ * c, radius_ * s}, {-s, c}, {c, s}, 1.0 / radius_};
}

CurvePoint circle_point(double radius, double theta) { return Circle(radius).at(theta); }

AnnularGeometry::AnnularGeometry(double a, double b, double c) : a_(a), b_(b), c_(c) {
  if (!(a > 0.0 && a < b && b < c)) {
    throw std::invalid_argument("radii must satisfy 0 < a < b < c (got " + std::to_string(a) + ", " +
                                std::to_string(b) + ", " + std::to_string(c) + ")");
  }
}

double AnnularGeometry::area() const { return std::numbers::pi * (c_ * c_ - a_ * a_); }
double AnnularGeometry::plus_area() const { return std::numbers::pi * (b_ * b_ - a_ * a_); }
double AnnularGeometry::minus_area() const { return std::numbers::pi * (c_ * c_ - b_ * b_); }

double AnnularGeometry::default_rho_sigma() const {
  return 0.9 * std::min(b_ - a_, b_);
}

BoundaryFittedFrame::BoundaryFittedFrame(double curve_radius, double rho_max, Inward orientation)
    : curve_radius_(curve_radius), rho_max_(rho_max), orientation_(orientation) {
  if (!(curve_radius > 0.0)) throw std::invalid_argument("frame curve radius must be positive");
  if (!(rho_max > 0.0 && rho_max < curve_radius)) {
    throw std::invalid_argument("tubular depth must satisfy 0 < rho_max < 1/curvature");
  }
}

double BoundaryFittedFrame::radius_at(double rho) const {
  return curve_radius_ + static_cast<int>(orientation_) * rho;
}

Vec2 BoundaryFittedFrame::map(double rho, double theta) const {
  if (!(rho >= 0.0 && rho <= rho_max_)) {
    throw std::out_of_range("depth " + std::to_string(rho) + " outside [0, rho_max]");
  }
  const double r = radius_at(rho);
  return {r * std::cos(theta), r * std::sin(theta)};
}

Vec2 psi_map(const BoundaryFittedFrame& frame, double rho, double theta) { return frame.map(rho, theta); }

}  // namespace hpfem
