#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "hpfem/quadrature.hpp"

using namespace hpfem;
using doctest::Approx;

namespace {

double monomial_integral(int k) { return k % 2 ? 0.0 : 2.0 / (k + 1); }

double bisect(double (*f)(double), double lo, double hi) {
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if ((f(lo) < 0) == (f(mid) < 0)) lo = mid; else hi = mid;
  }
  return 0.5 * (lo + hi);
}

double p4_derivative(double x) { return (140.0 * x * x * x - 60.0 * x) / 8.0; }

// Exact integral of a random polynomial of degree `deg` against the rule.
void check_exactness(const QuadRule& rule, int deg, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> c(deg + 1);
    for (auto& v : c) v = coef(rng);
    double exact = 0.0;
    for (int k = 0; k <= deg; ++k) exact += c[k] * monomial_integral(k);
    double approx = 0.0;
    for (std::size_t q = 0; q < rule.size(); ++q) {
      double value = 0.0;
      for (int k = deg; k >= 0; --k) value = value * rule.nodes[q] + c[k];
      approx += rule.weights[q] * value;
    }
    CHECK(std::abs(approx - exact) <= 1e-12 * std::max(1.0, std::abs(exact)));
  }
}

}  // namespace

TEST_CASE("gauss_legendre examples") {
  auto r = gauss_legendre(1);
  REQUIRE(r.size() == 1);
  CHECK(std::abs(r.nodes[0]) < 1e-16);
  CHECK(r.weights[0] == Approx(2.0));

  r = gauss_legendre(2);
  // moment equations sum w x^k = int x^k for k = 0..3 give w = 1, x = +-1/sqrt(3)
  CHECK(r.nodes[0] == Approx(-0.5773502692).epsilon(1e-10));
  CHECK(r.nodes[1] == Approx(0.5773502692).epsilon(1e-10));
  CHECK(r.weights[0] == Approx(1.0));
  CHECK(r.weights[1] == Approx(1.0));
  for (int k = 0; k <= 3; ++k) {
    CHECK(r.weights[0] * std::pow(r.nodes[0], k) + r.weights[1] * std::pow(r.nodes[1], k) ==
          Approx(monomial_integral(k)).epsilon(1e-15));
  }

  r = gauss_legendre(3);
  double x4 = 0.0;
  for (std::size_t q = 0; q < 3; ++q) x4 += r.weights[q] * std::pow(r.nodes[q], 4);
  CHECK(std::abs(x4 - 0.4) < 1e-14);

  CHECK_THROWS_AS(gauss_legendre(0), std::invalid_argument);
}

TEST_CASE("gauss_lobatto examples") {
  auto r = gauss_lobatto(1);
  CHECK(r.nodes == std::vector<double>{-1.0, 1.0});
  CHECK(r.weights[0] == Approx(1.0));
  CHECK(r.weights[1] == Approx(1.0));

  r = gauss_lobatto(2);
  CHECK(r.nodes[0] == -1.0);
  CHECK(std::abs(r.nodes[1]) < 1e-16);
  CHECK(r.nodes[2] == 1.0);
  CHECK(r.weights[0] == Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(r.weights[1] == Approx(4.0 / 3.0).epsilon(1e-15));
  CHECK(r.weights[2] == Approx(1.0 / 3.0).epsilon(1e-15));

  r = gauss_lobatto(4);
  const double root = bisect(p4_derivative, 0.1, 0.99);
  CHECK(root == Approx(std::sqrt(3.0 / 7.0)).epsilon(1e-14));
  CHECK(r.nodes[3] == Approx(root).epsilon(1e-14));
  CHECK(r.nodes[1] == Approx(-root).epsilon(1e-14));
  CHECK(r.nodes[3] == Approx(0.6546536707).epsilon(1e-10));

  CHECK_THROWS_AS(gauss_lobatto(0), std::invalid_argument);
}

TEST_CASE("exactness and symmetry for n, p up to 16") {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 16; ++n) {
    const QuadRule gl = gauss_legendre(n);
    check_exactness(gl, 2 * n - 1, rng);
    const QuadRule lob = gauss_lobatto(n);
    check_exactness(lob, std::max(1, 2 * n - 1), rng);
    for (const QuadRule* rule : {&gl, &lob}) {
      const std::size_t m = rule->size();
      for (std::size_t i = 0; i < m; ++i) {
        CHECK(std::abs(rule->nodes[i] + rule->nodes[m - 1 - i]) <= 1e-14);
        CHECK(std::abs(rule->weights[i] - rule->weights[m - 1 - i]) <= 1e-14);
        if (i > 0) CHECK(rule->nodes[i] > rule->nodes[i - 1]);
      }
    }
  }
}

TEST_CASE("nodal basis: cardinality, partition of unity, derivative by finite differences") {
  for (int p = 1; p <= 8; ++p) {
    const NodalBasis1D basis(p);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const auto v = basis.values(basis.nodes()[i]);
      for (std::size_t j = 0; j < v.size(); ++j) CHECK(v[j] == (i == j ? 1.0 : 0.0));
    }
    for (double x : {-0.93, -0.2, 0.0, 0.41, 0.999}) {
      const auto v = basis.values(x);
      const auto d = basis.derivatives(x);
      double sum = 0.0, dsum = 0.0;
      for (std::size_t j = 0; j < v.size(); ++j) {
        sum += v[j];
        dsum += d[j];
        const double h = 1e-6;
        const double fd = (basis.values(x + h)[j] - basis.values(x - h)[j]) / (2 * h);
        CHECK(d[j] == Approx(fd).epsilon(1e-6).scale(1.0));
      }
      CHECK(sum == Approx(1.0).epsilon(1e-14));
      CHECK(std::abs(dsum) < 1e-11);
    }
  }
}

TEST_CASE("interpolate_gl examples") {
  for (int p = 1; p <= 8; ++p) {
    const auto& x = gauss_lobatto(p).nodes;
    const std::size_t n = p + 1;
    std::vector<double> constant(n * n, 3.7), xy(n * n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) xy[i + n * j] = x[i] * x[j];
    CHECK(interpolate_gl(constant, p, 0.123, -0.77) == Approx(3.7).epsilon(1e-14));
    CHECK(std::abs(interpolate_gl(xy, p, 0.3, -0.2) + 0.06) < 1e-13);
  }
  std::vector<double> bad(5, 0.0);
  CHECK_THROWS_AS(interpolate_gl(bad, 2, 0.0, 0.0), std::invalid_argument);

  const int p = 8;
  const auto& x = gauss_lobatto(p).nodes;
  std::vector<double> grid(81);
  for (int j = 0; j < 9; ++j)
    for (int i = 0; i < 9; ++i) grid[i + 9 * j] = std::exp(x[i] + x[j]);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const double qx = u(rng), qy = u(rng);
    worst = std::max(worst, std::abs(interpolate_gl(grid, p, qx, qy) - std::exp(qx + qy)));
  }
  CHECK(worst <= 1e-6);
}

TEST_CASE("interpolation reproduces Q_p") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int p = 1; p <= 8; ++p) {
    const std::size_t n = p + 1;
    std::vector<double> c(n * n);
    for (auto& v : c) v = u(rng);
    auto q = [&](double x, double y) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) s += c[i + n * j] * std::pow(x, i) * std::pow(y, j);
      return s;
    };
    const auto& nodes = gauss_lobatto(p).nodes;
    std::vector<double> grid(n * n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) grid[i + n * j] = q(nodes[i], nodes[j]);
    for (int k = 0; k < 20; ++k) {
      const double x = u(rng), y = u(rng);
      CHECK(interpolate_gl(grid, p, x, y) == Approx(q(x, y)).epsilon(1e-12).scale(1.0));
    }
  }
}

TEST_CASE("interpolation stability grows no faster than (1 + ln p)^2") {
  // The worst grid with |values| <= 1 has values sign(l_i(x*) l_j(y*)), so the
  // sup of the interpolant equals the squared 1D Lebesgue constant.
  std::vector<double> ratio;
  for (int p = 1; p <= 8; ++p) {
    const NodalBasis1D basis(p);
    double lebesgue = 0.0;
    for (int k = 0; k <= 4000; ++k) {
      const auto v = basis.values(-1.0 + 2.0 * k / 4000.0);
      double s = 0.0;
      for (double w : v) s += std::abs(w);
      lebesgue = std::max(lebesgue, s);
    }
    // realize the worst grid explicitly and evaluate through interpolate_gl
    double x_star = -1.0, best = 0.0;
    for (int k = 0; k <= 4000; ++k) {
      const double x = -1.0 + 2.0 * k / 4000.0;
      double s = 0.0;
      for (double w : basis.values(x)) s += std::abs(w);
      if (s > best) best = s, x_star = x;
    }
    const auto v = basis.values(x_star);
    const std::size_t n = p + 1;
    std::vector<double> grid(n * n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) grid[i + n * j] = (v[i] >= 0 ? 1.0 : -1.0) * (v[j] >= 0 ? 1.0 : -1.0);
    const double sup = interpolate_gl(grid, p, x_star, x_star);
    CHECK(sup == Approx(lebesgue * lebesgue).epsilon(1e-10));
    ratio.push_back(sup / std::pow(1.0 + std::log(p), 2));
  }
  const double c_fit = *std::max_element(ratio.begin(), ratio.end());
  CHECK(c_fit <= 1.5);
  CHECK(ratio.back() <= ratio.front() * 1.01);
}
