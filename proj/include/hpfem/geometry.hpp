#pragma once

#include <numbers>

namespace hpfem {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Maps any angle onto [0, 2*pi).
double canonical_angle(double theta);

/// Point on a closed analytic curve together with its local frame.
/// `normal` is the outward unit normal of the region the curve encloses.
struct CurvePoint {
  Vec2 point;
  Vec2 tangent;
  Vec2 normal;
  double curvature = 0.0;
};

/// Closed analytic curve parametrized by an angle-like parameter in [0, 2*pi).
class AnalyticCurve {
 public:
  virtual ~AnalyticCurve() = default;
  virtual CurvePoint at(double theta) const = 0;
  virtual double max_curvature() const = 0;
};

class Circle final : public AnalyticCurve {
 public:
  explicit Circle(double radius);

  CurvePoint at(double theta) const override;
  double max_curvature() const override { return 1.0 / radius_; }
  double radius() const { return radius_; }

 private:
  double radius_;
};

/// (r cos t, r sin t) with unit tangent, outward normal and curvature 1/r.
/// Throws std::invalid_argument for radius <= 0.
CurvePoint circle_point(double radius, double theta);

/// Three concentric circles: Omega_plus = {a < r < b}, Omega_minus = {b < r < c}.
/// The circle r = a carries the boundary layer, r = b is the interface.
class AnnularGeometry {
 public:
  AnnularGeometry(double a, double b, double c);

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }

  Circle inner_boundary() const { return Circle(a_); }
  Circle interface() const { return Circle(b_); }
  Circle outer_boundary() const { return Circle(c_); }

  double area() const;
  double plus_area() const;
  double minus_area() const;

  /// Tubular depth along r = a: 0.9 of the curvature bound 1/a.
  double default_rho0() const { return 0.9 * a_; }
  /// Tubular depth along r = b on the plus side: 0.9 of min(b - a, b).
  double default_rho_sigma() const;

  bool operator==(const AnnularGeometry&) const = default;

 private:
  double a_;
  double b_;
  double c_;
};

/// Which way the depth coordinate points, relative to increasing radius.
enum class Inward { increasing_radius = +1, decreasing_radius = -1 };

/// Boundary-fitted coordinates (rho, theta) in a half-tube of a circle.
/// The depth rho is measured along the normal pointing into Omega_plus.
class BoundaryFittedFrame {
 public:
  BoundaryFittedFrame(double curve_radius, double rho_max, Inward orientation);

  double curve_radius() const { return curve_radius_; }
  double rho_max() const { return rho_max_; }
  Inward orientation() const { return orientation_; }

  /// Radius reached at depth rho: R + rho or R - rho.
  double radius_at(double rho) const;
  /// Throws std::out_of_range for rho outside [0, rho_max].
  Vec2 map(double rho, double theta) const;

 private:
  double curve_radius_;
  double rho_max_;
  Inward orientation_;
};

/// psi(rho, theta) for a circle. Same contract as BoundaryFittedFrame::map.
Vec2 psi_map(const BoundaryFittedFrame& frame, double rho, double theta);

}  // namespace hpfem
