#include "pseudoquant/bks/oscillatory.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "pseudoquant/symcore/scalar.hpp"

namespace pq::bks {

std::complex<double> oscillatory_moment(int j, int k, double a) {
  if (j < 0) throw DomainError("moment order must be non-negative");
  if (k < 2) throw DomainError("phase power k = " + std::to_string(k) + " is not oscillatory-integrable (need k >= 2)");
  if (a == 0.0 || !std::isfinite(a)) throw DomainError("phase coefficient must be finite and nonzero");

  const double s = (2.0 * j + 1.0) / k;
  const double half = std::tgamma(s) / k * std::pow(std::abs(a), -s);
  const double angle = std::copysign(std::numbers::pi * s / 2.0, a);
  if (k % 2 == 0) return 2.0 * std::polar(half, angle);
  // mu -> -mu flips the sign of the phase on the negative half line
  return std::polar(half, angle) + std::polar(half, -angle);
}

}  // namespace pq::bks
