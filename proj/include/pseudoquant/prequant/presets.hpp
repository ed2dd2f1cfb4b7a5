#pragma once

#include <vector>

#include "pseudoquant/prequant/prequant.hpp"

namespace pq::presets {

/// Theta = sum_i p_i dq_i on the chart (p1..pn, q1..qn).
ConnectionData standard(int n);

/// Theta = (1/2) p1^2 dq1 + sum_{i>=2} p_i dq_i, curvature
/// p1 dp1^dq1 + sum_{i>=2} dp_i^dq_i (folding hypersurface p1 = 0).
ConnectionData folded(int n);

/// Theta = theta + q1 dq2 on (p1, p2, q1, q2).
ConnectionData coupled_q1dq2();

/// Theta = theta + p1 dp2 on (p1, p2, q1, q2).
ConnectionData coupled_p1dp2();

/// Theta = sum_i (p_i/2 - f_i) dq_i - (q_i/2 - g_i) dp_i, with f_i, g_i on a
/// canonical chart (p1..pn, q1..qn) of n = f.size().
ConnectionData simple_coupling(const std::vector<Poly>& f, const std::vector<Poly>& g);

/// Theta = (1 + f) sum_i alpha_i d beta_i.
ConnectionData scaled(const Poly& f);

/// Squeezed cylinder: source (l, phi_l), target (z, phi_z) with standard
/// prequantum data, map z = l / lambda, phi_z = phi_l.
PullbackSetup squeezed_cylinder(const Rational& lambda);

/// Numeric shadow of the cylinder commutator for real lambda: returns the
/// factor c with [z, phi_z] = -i hbar c, computed from the Poisson brackets
/// of the linear map in floating point.
double squeezed_cylinder_factor(double lambda);

}  // namespace pq::presets
