#include "pseudoquant/bohrsommerfeld/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pseudoquant/symcore/scalar.hpp"

namespace pq::bs {

namespace {

void check_scale(int E) {
  if (E < 1) throw DomainError("symplectic scale E must be >= 1, got " + std::to_string(E));
  if (E > 1'000'000) throw DomainError("symplectic scale E too large");
}

}  // namespace

double LatticePoint::value() const { return sign * std::sqrt(static_cast<double>(l_squared)); }

int standard_dim(int E) {
  check_scale(E);
  return 2 * E - 1;
}

LatticeReport folded_points(int E) {
  check_scale(E);
  const std::int64_t e2 = static_cast<std::int64_t>(E) * E;
  LatticeReport r;
  r.E = E;
  r.standard_dim = standard_dim(E);
  for (std::int64_t k = 1; 2 * k <= e2; ++k) {
    const std::int64_t l2 = e2 - 2 * k;
    if (l2 == 0) {
      r.folded_points.push_back({0, 0});
    } else {
      r.folded_points.push_back({-1, l2});
      r.folded_points.push_back({1, l2});
    }
  }
  std::sort(r.folded_points.begin(), r.folded_points.end(), [](const LatticePoint& a, const LatticePoint& b) {
    if (a.sign != b.sign) return a.sign < b.sign;
    return a.sign < 0 ? a.l_squared > b.l_squared : a.l_squared < b.l_squared;
  });
  r.folded_dim = static_cast<int>(r.folded_points.size());
  return r;
}

bool is_integral(const LatticePoint& p, int E) {
  const std::int64_t e2 = static_cast<std::int64_t>(E) * E;
  if (p.l_squared < 0 || p.l_squared >= e2) return false;
  if ((p.sign == 0) != (p.l_squared == 0)) return false;
  return (e2 - p.l_squared) % 2 == 0;
}

}  // namespace pq::bs
