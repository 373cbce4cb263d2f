#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "hpfem/expansion.hpp"
#include "support/shooting_oracle.hpp"

using namespace hpfem;
using doctest::Approx;

namespace {
const AnnularGeometry benchmark(1, 2, 3);
}

TEST_CASE("smooth cutoff") {
  CHECK(smooth_cutoff(0.1, 0.2, 0.4) == 1.0);
  CHECK(smooth_cutoff(0.2, 0.2, 0.4) == 1.0);
  CHECK(smooth_cutoff(0.4, 0.2, 0.4) == 0.0);
  CHECK(smooth_cutoff(0.9, 0.2, 0.4) == 0.0);
  CHECK(smooth_cutoff(0.3, 0.2, 0.4) == Approx(0.5).epsilon(1e-14));
  double prev = 1.0;
  for (int k = 0; k <= 100; ++k) {
    const double v = smooth_cutoff(0.2 + 0.002 * k, 0.2, 0.4);
    CHECK(v <= prev);
    prev = v;
  }
}

TEST_CASE("zero data gives a zero composite") {
  const CompositeApprox z = build_composite(benchmark, 1e-2, 0.0, 0.0);
  CHECK(z.boundary_layer_amplitude() == 0.0);
  CHECK(z.interface_layer_amplitude() == 0.0);
  for (double r : {1.0, 1.3, 2.0, 2.6, 3.0}) CHECK(z.value(r) == 0.0);
  CHECK(composite_error(z, RadialExact(benchmark, 1e-2, 0.0, 0.0), 200) == 0.0);
}

TEST_CASE("benchmark components and amplitudes") {
  const CompositeApprox comp = build_composite(benchmark, 1e-3, 1.0, 0.0);
  CHECK(comp.outer_plus() == 1.0);
  CHECK(comp.boundary_layer_amplitude() == -1.0);
  for (double r : {2.0, 2.5, 3.0}) CHECK(comp.interface_minus(r).value == 0.0);
  // g_il = V0-(b) - (f - u0-(b)) with V0- = 0 for h = 0; u0-(b) by single shooting
  const double u0b = testing::limit_shooting(2, 3, 1.0, 0.0, 2.0);
  CHECK(u0b == Approx(0.32241453593540209).epsilon(1e-12));
  CHECK(comp.interface_layer_amplitude() == Approx(u0b - 1.0).epsilon(1e-10));
  CHECK(std::abs(comp.value(1.0)) <= 1e-12);
  CHECK(std::abs(comp.value(3.0)) <= 1e-12);
}

TEST_CASE("composite error decays linearly in eps") {
  std::vector<double> err;
  for (double eps : {1e-1, 1e-2, 1e-3, 1e-4}) {
    const CompositeApprox comp = build_composite(benchmark, eps, 1.0, 0.0);
    err.push_back(composite_error(comp, RadialExact(benchmark, eps, 1.0, 0.0), 400));
  }
  CHECK(std::isfinite(err[0]));
  CHECK(err[0] <= 1.0);
  for (std::size_t k = 1; k < err.size(); ++k) CHECK(err[k] <= 3.0 * err[k - 1]);
  CHECK(err[3] / err[0] <= 1e-2);
  const double ratio = err[1] / err[2];
  CHECK(ratio >= std::pow(10.0, 0.5));
  CHECK(ratio <= std::pow(10.0, 1.5));
}

TEST_CASE("nonzero interface datum also decays") {
  const double e1 = composite_error(build_composite(benchmark, 1e-2, 1.0, 0.5), RadialExact(benchmark, 1e-2, 1.0, 0.5), 400);
  const double e2 = composite_error(build_composite(benchmark, 1e-3, 1.0, 0.5), RadialExact(benchmark, 1e-3, 1.0, 0.5), 400);
  CHECK(e2 < e1);
  CHECK(e1 / e2 >= std::pow(10.0, 0.5));
}

TEST_CASE("away from both layers the outer terms dominate") {
  for (double eps : {1e-2, 1e-3, 1e-4}) {
    const CompositeApprox comp = build_composite(benchmark, eps, 1.0, 0.0);
    const RadialExact exact(benchmark, eps, 1.0, 0.0);
    const double gap = 10 * eps * std::log(1 / eps);
    for (int k = 0; k <= 400; ++k) {
      const double r = 1.0 + 2.0 * k / 400.0;
      if (std::abs(r - 1.0) <= gap || std::abs(r - 2.0) <= gap) continue;
      CHECK(std::abs(comp.value(r) - exact.eval(r).value) <= 5 * eps);
    }
  }
}

TEST_CASE("mismatched problems are rejected") {
  const CompositeApprox comp = build_composite(benchmark, 1e-2, 1.0, 0.0);
  CHECK_THROWS_AS(composite_error(comp, RadialExact(benchmark, 1e-3, 1.0, 0.0), 100), std::invalid_argument);
  CHECK_THROWS_AS(composite_error(comp, RadialExact(benchmark, 1e-2, 2.0, 0.0), 100), std::invalid_argument);
  CHECK_THROWS_AS(composite_error(comp, RadialExact(AnnularGeometry(1, 2, 4), 1e-2, 1.0, 0.0), 100),
                  std::invalid_argument);
  CHECK_THROWS_AS(composite_error(comp, RadialExact(benchmark, 1e-2, 1.0, 0.0), 2), std::invalid_argument);
}
