#include "hpfem/bessel.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace hpfem {

namespace {

constexpr double tiny = 1e-17;
constexpr int max_terms = 500;
constexpr double series_limit_i = 30.0;
constexpr double series_limit_k = 2.0;

struct Pair {
  double order0;
  double order1;
};

// I0, I1 by their power series in t = x^2 / 4; all terms positive.
Pair i_series(double x) {
  const double t = 0.25 * x * x;
  double term0 = 1.0;
  double term1 = 1.0;
  double s0 = 1.0;
  double s1 = 1.0;
  for (int k = 1; k < max_terms; ++k) {
    term0 *= t / (static_cast<double>(k) * k);
    term1 *= t / (static_cast<double>(k) * (k + 1));
    s0 += term0;
    s1 += term1;
    if (term0 < tiny * s0 && term1 < tiny * s1) break;
  }
  return {s0, 0.5 * x * s1};
}

// e^{-x} I_nu(x) ~ (2 pi x)^{-1/2} sum_k prod_{j<=k} ((2j-1)^2 - 4 nu^2) / (k! (8x)^k)
double i_asymptotic(double x, int nu) {
  const double mu = 4.0 * nu * nu;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < max_terms; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = term * (odd * odd - mu) / (k * 8.0 * x);
    if (std::abs(next) > std::abs(term)) break;
    term = next;
    sum += term;
    if (std::abs(term) < tiny * std::abs(sum)) break;
  }
  return sum / std::sqrt(2.0 * std::numbers::pi * x);
}

// K0, K1 by their logarithmic power series (small x only).
Pair k_series(double x, const Pair& i) {
  const double t = 0.25 * x * x;
  const double log_half = std::log(0.5 * x);
  constexpr double euler = std::numbers::egamma;
  // K0 = -(ln(x/2) + gamma) I0 + sum_{k>=1} t^k / (k!)^2 H_k
  double term0 = 1.0;
  double harmonic = 0.0;
  double sum0 = 0.0;
  // K1 = 1/x + ln(x/2) I1 - (x/4) sum_{k>=0} (psi(k+1) + psi(k+2)) t^k / (k! (k+1)!)
  double term1 = 1.0;
  double psi_k1 = -euler;        // psi(1)
  double psi_k2 = 1.0 - euler;   // psi(2)
  double sum1 = psi_k1 + psi_k2;
  for (int k = 1; k < max_terms; ++k) {
    term0 *= t / (static_cast<double>(k) * k);
    harmonic += 1.0 / k;
    sum0 += term0 * harmonic;
    term1 *= t / (static_cast<double>(k) * (k + 1));
    psi_k1 += 1.0 / k;
    psi_k2 += 1.0 / (k + 1);
    sum1 += term1 * (psi_k1 + psi_k2);
    if (term0 < tiny && term1 < tiny) break;
  }
  const double k0 = -(log_half + euler) * i.order0 + sum0;
  const double k1 = 1.0 / x + log_half * i.order1 - 0.25 * x * sum1;
  return {k0, k1};
}

// Steed's continued fraction (Temme's CF2) for e^x K0 and e^x K1, x >= 2.
Pair k_continued_fraction(double x) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double h = d;
  double delh = d;
  double q1 = 0.0;
  double q2 = 1.0;
  const double a1 = 0.25;
  double q = a1;
  double c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  for (int i = 1; i < 100000; ++i) {
    a -= 2.0 * i;
    c = -a * c / (i + 1.0);
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) < eps) break;
  }
  h *= a1;
  const double k0 = std::sqrt(std::numbers::pi / (2.0 * x)) / s;
  const double k1 = k0 * (x + 0.5 - h) / x;
  return {k0, k1};
}

}  // namespace

ScaledBessel bessel_scaled(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw std::domain_error("Bessel argument must be positive and finite");
  ScaledBessel out;
  out.x = x;
  if (x < series_limit_i) {
    const Pair i = i_series(x);
    const double scale = std::exp(-x);
    out.i0 = i.order0 * scale;
    out.i1 = i.order1 * scale;
    if (x <= series_limit_k) {
      const Pair k = k_series(x, i);
      out.k0 = k.order0 / scale;
      out.k1 = k.order1 / scale;
    }
  } else {
    out.i0 = i_asymptotic(x, 0);
    out.i1 = i_asymptotic(x, 1);
  }
  if (x > series_limit_k) {
    const Pair k = k_continued_fraction(x);
    out.k0 = k.order0;
    out.k1 = k.order1;
  }
  return out;
}

}  // namespace hpfem
