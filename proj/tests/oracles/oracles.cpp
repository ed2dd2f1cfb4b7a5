#include "oracles.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <cmath>
#include <numbers>

namespace oracle {

namespace {

// Half-line integral of mu^(2j) exp(i a mu^k - eps mu^2), mu = e^(i phi) s.
// phi = sgn(a) pi / (4k) keeps both exponentials decaying on the ray.
cplx half_line(int j, int k, double a, double eps) {
  const double phi = std::copysign(std::numbers::pi / (4.0 * k), a);
  const cplx rot = std::polar(1.0, phi);
  const cplx rot_k = std::pow(rot, k);
  const cplx rot_2 = rot * rot;
  const cplx front = std::pow(rot, 2 * j + 1);
  // log form keeps s^(2j) from overflowing where the exponential has already underflowed
  auto integrand = [&](double s) -> cplx {
    if (s == 0.0) return j == 0 ? front : cplx(0.0);
    cplx arg = cplx(0.0, a) * rot_k * std::pow(s, k) - eps * rot_2 * s * s + 2.0 * j * std::log(s);
    if (arg.real() < -745.0) return 0.0;
    return front * std::exp(arg);
  };
  boost::math::quadrature::exp_sinh<double> q;
  double tol = 1e-14;
  double re = q.integrate([&](double s) { return integrand(s).real(); }, tol);
  double im = q.integrate([&](double s) { return integrand(s).imag(); }, tol);
  return {re, im};
}

}  // namespace

cplx regulated_moment(int j, int k, double a, double eps) {
  cplx plus = half_line(j, k, a, eps);
  // mu -> -mu: even k keeps the phase, odd k flips it
  cplx minus = (k % 2 == 0) ? plus : half_line(j, k, -a, eps);
  return plus + minus;
}

cplx extrapolated_moment(int j, int k, double a, int levels) {
  const double eps0 = 0.02 * std::abs(a);
  std::vector<double> x(static_cast<std::size_t>(levels));
  std::vector<cplx> p(static_cast<std::size_t>(levels));
  for (int l = 0; l < levels; ++l) {
    x[static_cast<std::size_t>(l)] = eps0 / std::pow(2.0, l);
    p[static_cast<std::size_t>(l)] = regulated_moment(j, k, a, x[static_cast<std::size_t>(l)]);
  }
  // Neville's scheme evaluated at eps = 0
  for (int m = 1; m < levels; ++m) {
    for (int i = 0; i + m < levels; ++i) {
      auto u = static_cast<std::size_t>(i);
      auto v = static_cast<std::size_t>(i + m);
      p[u] = (x[u] * p[u + 1] - x[v] * p[u]) / (x[u] - x[v]);
    }
  }
  return p[0];
}

int folded_count_bruteforce(int E) {
  const long e2 = static_cast<long>(E) * E;
  int count = 0;
  for (long s = 0; s < e2; ++s) {
    if ((e2 - s) % 2 != 0) continue;
    count += s > 0 ? 2 : 1;
  }
  return count;
}

double free_gaussian_width(double sigma, double hbar, double t) {
  double r = hbar * t / (2.0 * sigma * sigma);
  return sigma * std::sqrt(1.0 + r * r);
}

cplx free_gaussian(double q, double t, double q0, double p0, double sigma, double hbar) {
  const cplx z(1.0, hbar * t / (2.0 * sigma * sigma));
  const double x = q - q0 - p0 * t;
  const cplx amp = std::pow(2.0 * std::numbers::pi * sigma * sigma, -0.25) / std::sqrt(z);
  const cplx arg = -x * x / (4.0 * sigma * sigma * z) + cplx(0.0, p0 * (q - 0.5 * p0 * t) / hbar);
  return amp * std::exp(arg);
}

void plain_free_cn_step(std::vector<cplx>& psi, double dq, double dt, double hbar) {
  const std::size_t m = psi.size();
  const double c = -0.5 * hbar * hbar / (dq * dq);
  const cplx ik(0.0, dt / (2.0 * hbar));
  std::vector<cplx> rhs(m, 0.0), cp(m, 0.0), den(m, 1.0);
  for (std::size_t i = 1; i + 1 < m; ++i) {
    cplx d = 1.0 + ik * cplx(-2.0 * c, 0.0) - ((i > 1) ? ik * cplx(c) : cplx(0.0)) * cp[i - 1];
    den[i] = d;
    cp[i] = (i + 2 < m) ? ik * cplx(c) / d : cplx(0.0);
  }
  for (std::size_t i = 1; i + 1 < m; ++i)
    rhs[i] = psi[i] - ik * (cplx(c) * psi[i - 1] + cplx(-2.0 * c, 0.0) * psi[i] + cplx(c) * psi[i + 1]);
  for (std::size_t i = 1; i + 1 < m; ++i) rhs[i] = (rhs[i] - ((i > 1) ? ik * cplx(c) : cplx(0.0)) * rhs[i - 1]) / den[i];
  psi.front() = 0.0;
  psi.back() = 0.0;
  for (std::size_t i = m - 2; i >= 1; --i) psi[i] = rhs[i] - cp[i] * psi[i + 1];
}

}  // namespace oracle
