#pragma once

#include <complex>

namespace pq::bks {

/// Generalised Fresnel moment
///
///   integral over the real line of  mu^(2j) exp(i a mu^k) d mu
///
/// in closed form: each half line is rotated onto the ray of steepest descent,
/// which gives Gamma((2j+1)/k) / k * |a|^(-(2j+1)/k) * exp(+-i pi (2j+1) / (2k)).
/// For odd k the two half lines carry opposite rotations. Values with
/// 2j + 1 >= k are the Abel-regularised (analytically continued) moments.
///
/// Throws DomainError for j < 0, k < 2, a == 0 or non-finite a.
std::complex<double> oscillatory_moment(int j, int k, double a);

}  // namespace pq::bks
