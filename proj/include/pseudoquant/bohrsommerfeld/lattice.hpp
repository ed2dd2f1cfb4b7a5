#pragma once

#include <cstdint>
#include <vector>

namespace pq::bs {

/// l = sign * sqrt(l_squared), kept exact.
struct LatticePoint {
  int sign = 1;  ///< -1, 0 or +1
  std::int64_t l_squared = 0;

  double value() const;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

struct LatticeReport {
  int E = 0;
  int standard_dim = 0;
  std::vector<LatticePoint> folded_points;  ///< sorted by value
  int folded_dim = 0;
};

/// 2E - 1 integral leaves of the standard height function on the sphere.
int standard_dim(int E);

/// Solutions of (E^2 - l^2)/2 in Z with |l| < E. l = 0 is counted once.
LatticeReport folded_points(int E);

/// (E^2 - l^2) / 2 is a positive integer and l^2 < E^2, checked in integer arithmetic.
bool is_integral(const LatticePoint& p, int E);

}  // namespace pq::bs
