#include "hpfem/postproc.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

namespace hpfem {

ExactFunction radial_field(std::function<RadialValue(double r, Region region)> profile) {
  return [profile = std::move(profile)](Vec2 p, Region region) {
    const double r = std::hypot(p.x, p.y);
    const RadialValue v = profile(r, region);
    return FieldValue{v.value, {v.derivative * p.x / r, v.derivative * p.y / r}};
  };
}

ExactFunction exact_field(const RadialExact& exact) {
  return radial_field([exact](double r, Region region) {
    const auto& g = exact.geometry();
    return exact.eval(std::clamp(r, g.a(), g.c()), region);
  });
}

ExactFunction exact_field(const ManufacturedSolution& exact) {
  return radial_field([exact](double r, Region) { return exact.eval(r); });
}

ExactFunction zero_field() {
  return [](Vec2, Region) { return FieldValue{}; };
}

namespace {

void check_error_order(const FeSpace& space, int quad_order) {
  if (quad_order < space.degree() + 3) {
    throw std::invalid_argument("error quadrature order " + std::to_string(quad_order) + " below p + 3");
  }
}

}  // namespace

std::vector<double> error_panels(const Element& element, double eps) {
  const double width = element.r1 - element.r0;
  std::vector<double> xi{-1.0, 1.0};
  if (element.region != Region::plus || width <= eps) return xi;
  const double half = 0.5 * width;
  for (double d = 0.25 * eps; d < half; d *= 2.0) {
    xi.push_back(-1.0 + 2.0 * d / width);
    xi.push_back(1.0 - 2.0 * d / width);
  }
  xi.push_back(0.0);
  std::sort(xi.begin(), xi.end());
  return xi;
}

ErrorNorms error_norms(const DiscreteField& field, const ExactFunction& exact, double eps, int quad_order) {
  const FeSpace& space = field.space();
  check_error_order(space, quad_order);
  double energy2 = 0.0;
  double l2 = 0.0;
  const double eps2 = eps * eps;
  for_each_error_point(space, quad_order, eps, [&](std::size_t id, double xi, double eta, const ElementMapValue& map,
                                                   double weight) {
    const Region region = space.mesh().element(id).region;
    const FieldValue uh = field.eval(id, xi, eta);
    const FieldValue u = exact(map.point, region);
    const double e = u.value - uh.value;
    const double gx = u.gradient.x - uh.gradient.x;
    const double gy = u.gradient.y - uh.gradient.y;
    const double w = region == Region::plus ? eps2 : 1.0;
    energy2 += weight * (w * (gx * gx + gy * gy) + e * e);
    l2 += weight * e * e;
  });
  return {std::sqrt(energy2), std::sqrt(l2)};
}

double energy_norm(const DiscreteField& field, double eps, int quad_order) {
  return error_norms(field, zero_field(), eps, quad_order).energy;
}

double energy_norm(const DiscreteField& field, const ExactFunction& exact, double eps, int quad_order) {
  return error_norms(field, exact, eps, quad_order).energy;
}

double energy_product(const DiscreteField& field, const ExactFunction& exact, const DiscreteField& test, double eps,
                      int quad_order) {
  const FeSpace& space = field.space();
  check_error_order(space, quad_order);
  double sum = 0.0;
  for_each_error_point(space, quad_order, eps, [&](std::size_t id, double xi, double eta, const ElementMapValue& map,
                                                   double weight) {
    const Region region = space.mesh().element(id).region;
    const FieldValue uh = field.eval(id, xi, eta);
    const FieldValue u = exact(map.point, region);
    const FieldValue v = test.eval(id, xi, eta);
    const double w = region == Region::plus ? eps * eps : 1.0;
    const double grad = (u.gradient.x - uh.gradient.x) * v.gradient.x + (u.gradient.y - uh.gradient.y) * v.gradient.y;
    sum += weight * (w * grad + (u.value - uh.value) * v.value);
  });
  return sum;
}

double radial_energy_norm(const AnnularGeometry& g, double eps,
                          const std::function<RadialValue(double r, Region region)>& profile) {
  const double a = g.a();
  const double b = g.b();
  const double c = g.c();
  // panels on [a, b] graded geometrically away from both ends at scale eps
  std::vector<double> plus{a, b};
  const double half = 0.5 * (b - a);
  for (double d = eps * 0.25; d < half; d *= 2.0) {
    plus.push_back(a + d);
    plus.push_back(b - d);
  }
  plus.push_back(a + half);
  std::sort(plus.begin(), plus.end());
  std::vector<double> minus;
  for (int i = 0; i <= 16; ++i) minus.push_back(b + (c - b) * i / 16.0);

  const QuadRule rule = gauss_legendre(30);
  const auto integrate = [&](const std::vector<double>& breaks, Region region, double w) {
    double sum = 0.0;
    for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
      const double lo = breaks[k];
      const double hi = breaks[k + 1];
      if (!(hi > lo)) continue;
      for (std::size_t q = 0; q < rule.size(); ++q) {
        const double r = 0.5 * (lo + hi) + 0.5 * (hi - lo) * rule.nodes[q];
        const RadialValue u = profile(r, region);
        sum += 0.5 * (hi - lo) * rule.weights[q] * (w * u.derivative * u.derivative + u.value * u.value) * r;
      }
    }
    return sum;
  };
  const double total = integrate(plus, Region::plus, eps * eps) + integrate(minus, Region::minus, 1.0);
  return std::sqrt(two_pi * total);
}

double radial_energy_norm(const RadialExact& exact) {
  return radial_energy_norm(exact.geometry(), exact.eps(),
                            [&exact](double r, Region region) { return exact.eval(r, region); });
}

RateFit fit_rate(const std::vector<SweepRecord>& records) {
  std::set<std::size_t> distinct;
  for (const auto& rec : records) {
    if (!(rec.err_energy_rel > 0.0)) throw std::invalid_argument("rate fit needs positive errors");
    distinct.insert(rec.n_dofs);
  }
  if (distinct.size() < 3) throw std::invalid_argument("rate fit needs at least 3 records with distinct N");

  // y = ln C - b x with x = sqrt(N), y = ln(err) - 2 ln N
  const auto n = static_cast<double>(records.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  double sp = 0, sl = 0, spp = 0, spl = 0;
  for (const auto& rec : records) {
    const double dofs = static_cast<double>(rec.n_dofs);
    const double x = std::sqrt(dofs);
    const double y = std::log(rec.err_energy_rel) - 2.0 * std::log(dofs);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    const double p = rec.p;
    const double l = std::log(rec.err_energy_rel);
    sp += p;
    sl += l;
    spp += p * p;
    spl += p * l;
  }
  RateFit fit;
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double intercept = (sy - slope * sx) / n;
  fit.b = -slope;
  fit.c = std::exp(intercept);

  const double mean_y = sy / n;
  double ss_res = 0.0;
  double ss_tot = 0.0;
  for (const auto& rec : records) {
    const double dofs = static_cast<double>(rec.n_dofs);
    const double y = std::log(rec.err_energy_rel) - 2.0 * std::log(dofs);
    const double model = intercept + slope * std::sqrt(dofs);
    ss_res += (y - model) * (y - model);
    ss_tot += (y - mean_y) * (y - mean_y);
  }
  fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;

  const double denom = n * spp - sp * sp;
  fit.semilog_slope = denom != 0.0 ? (n * spl - sp * sl) / denom : 0.0;
  return fit;
}

}  // namespace hpfem
