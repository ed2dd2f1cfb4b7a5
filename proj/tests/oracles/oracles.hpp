#pragma once

// Independent reference computations used only by the tests.

#include <complex>
#include <cstdint>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

/// Integral of mu^(2j) exp(i a mu^k - eps mu^2) over the real line, by
/// double-exponential quadrature along a rotated ray.
cplx regulated_moment(int j, int k, double a, double eps);

/// eps -> 0 limit of regulated_moment by Neville extrapolation over
/// eps_0 / 2^l, l = 0..levels-1.
cplx extrapolated_moment(int j, int k, double a, int levels = 7);

/// Counts l with |l| < E and (E^2 - l^2)/2 a non-negative integer by scanning
/// every integer candidate for l^2.
int folded_count_bruteforce(int E);

/// Position spread of a free Gaussian packet at time t (unit mass).
double free_gaussian_width(double sigma, double hbar, double t);

/// Closed-form free evolution of the Gaussian packet at q.
cplx free_gaussian(double q, double t, double q0, double p0, double sigma, double hbar);

/// Plain Crank-Nicolson step for i hbar psi_t = -(hbar^2/2) psi'' with zero
/// end values, written without any of the library's data structures.
void plain_free_cn_step(std::vector<cplx>& psi, double dq, double dt, double hbar);

}  // namespace oracle
