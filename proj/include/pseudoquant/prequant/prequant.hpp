#pragma once

#include "pseudoquant/prequant/operator.hpp"
#include "pseudoquant/symcore/forms.hpp"

namespace pq {

/// Connection d - (i/hbar) Theta in a fixed trivialisation, together with its
/// curvature Omega = d Theta and the chart's own symplectic form.
class ConnectionData {
 public:
  explicit ConnectionData(OneForm theta);

  /// Theta = sum_i alpha_i d beta_i (curvature equals omega).
  static ConnectionData standard(const ChartPtr& chart);

  const ChartPtr& chart() const { return theta_.chart(); }
  const OneForm& theta() const { return theta_; }
  const TwoForm& curvature() const { return curvature_; }
  const TwoForm& base_omega() const { return base_omega_; }
  /// Curvature coincides with the chart's symplectic form.
  bool is_prequantum() const { return curvature_ == base_omega_; }

 private:
  OneForm theta_;
  TwoForm curvature_;
  TwoForm base_omega_;
};

/// A-breve = -i hbar X_A - Theta(X_A) + A.
FormalOperator quantise(const Poly& a, const ConnectionData& c);

/// -i hbar [ -i hbar X_p - Theta(X_p) - Omega(X_A, X_B) + 2 p ],  p = {A, B}.
/// Closed form of the commutator of two quantised observables.
FormalOperator commutator_rhs(const Poly& a, const Poly& b, const ConnectionData& c);

/// Pulled-back prequantum data on the source chart of a polynomial map.
class PullbackSetup {
 public:
  PullbackSetup(SmoothMap map, ConnectionData target);

  const SmoothMap& map() const { return map_; }
  const ConnectionData& target_connection() const { return target_; }
  /// Theta = f* Theta_N, curvature f* Omega_N, over the source chart.
  const ConnectionData& induced() const { return induced_; }

 private:
  SmoothMap map_;
  ConnectionData target_;
  ConnectionData induced_;
};

/// Pseudo-prequantisation of f* A with respect to the induced connection.
FormalOperator pullback_quantise(const Poly& a, const PullbackSetup& s);

/// -i hbar ( -i hbar X_p - (f*theta)(X_p) + p (2 - sum_i c_i) ) with
/// p = {f*A, f*B} and c_i = {f* alpha'_i, f* beta'_i}, brackets on the source.
///
/// In one degree of freedom this coincides with the commutator of the
/// pullback_quantise operators for any polynomial map. For n > 1 the term
/// p * sum_i c_i differs from Omega(X_A, X_B) in general; the formula is
/// reproduced as stated and callers should compare against commutator().
FormalOperator theorem_commutator(const Poly& a, const Poly& b, const PullbackSetup& s);

}  // namespace pq
