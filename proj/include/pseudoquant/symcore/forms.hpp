#pragma once

#include <vector>

#include "pseudoquant/symcore/poly.hpp"

namespace pq {

/// sum_c coeff[c] dx_c over the chart coordinates.
class OneForm {
 public:
  explicit OneForm(ChartPtr chart);
  OneForm(ChartPtr chart, std::vector<Poly> coeffs);

  const ChartPtr& chart() const { return chart_; }
  const Poly& operator[](int coord) const { return coeffs_.at(static_cast<std::size_t>(coord)); }
  Poly& operator[](int coord) { return coeffs_.at(static_cast<std::size_t>(coord)); }
  const std::vector<Poly>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  OneForm& operator+=(const OneForm& o);
  OneForm& operator-=(const OneForm& o);
  friend OneForm operator+(OneForm a, const OneForm& b) { return a += b; }
  friend OneForm operator-(OneForm a, const OneForm& b) { return a -= b; }
  friend OneForm operator*(const Poly& f, const OneForm& w);
  friend bool operator==(const OneForm& a, const OneForm& b);

 private:
  ChartPtr chart_;
  std::vector<Poly> coeffs_;
};

/// sum_{a<b} coeff(a,b) dx_a ^ dx_b, stored only on the ordered basis.
class TwoForm {
 public:
  explicit TwoForm(ChartPtr chart);

  const ChartPtr& chart() const { return chart_; }
  /// Coefficient of dx_a ^ dx_b; antisymmetric in (a, b), zero on the diagonal.
  Poly get(int a, int b) const;
  /// Adds `value` * dx_a ^ dx_b, folding into the ordered basis.
  void add(int a, int b, const Poly& value);
  bool is_zero() const;

  TwoForm& operator+=(const TwoForm& o);
  TwoForm& operator-=(const TwoForm& o);
  friend TwoForm operator+(TwoForm a, const TwoForm& b) { return a += b; }
  friend TwoForm operator-(TwoForm a, const TwoForm& b) { return a -= b; }
  friend TwoForm operator*(const Poly& f, const TwoForm& w);
  friend bool operator==(const TwoForm& a, const TwoForm& b);

 private:
  std::size_t slot(int a, int b) const;

  ChartPtr chart_;
  std::vector<Poly> coeffs_;
};

/// sum_c comp[c] d/dx_c.
class VectorField {
 public:
  explicit VectorField(ChartPtr chart);
  VectorField(ChartPtr chart, std::vector<Poly> comps);

  const ChartPtr& chart() const { return chart_; }
  const Poly& operator[](int coord) const { return comps_.at(static_cast<std::size_t>(coord)); }
  Poly& operator[](int coord) { return comps_.at(static_cast<std::size_t>(coord)); }
  const std::vector<Poly>& comps() const { return comps_; }
  bool is_zero() const;

  VectorField& operator+=(const VectorField& o);
  VectorField& operator-=(const VectorField& o);
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
  friend VectorField operator*(const Poly& f, const VectorField& x);
  friend bool operator==(const VectorField& a, const VectorField& b);

 private:
  ChartPtr chart_;
  std::vector<Poly> comps_;
};

OneForm exterior_d(const Poly& f);
TwoForm exterior_d(const OneForm& w);
TwoForm wedge(const OneForm& a, const OneForm& b);

/// Pointwise pairing w(X).
Poly contract(const OneForm& w, const VectorField& x);
/// Omega(X, Y) = sum_{a<b} c_ab (X_a Y_b - X_b Y_a).
Poly evaluate(const TwoForm& omega, const VectorField& x, const VectorField& y);

/// X(f), the derivative of f along X.
Poly apply(const VectorField& x, const Poly& f);
VectorField lie_bracket(const VectorField& x, const VectorField& y);

/// X_A = sum_i (dA/d alpha_i) d/d beta_i - (dA/d beta_i) d/d alpha_i.
VectorField hamiltonian_vf(const Poly& a);
/// {A, B} = omega(X_A, X_B) = X_A(B).
Poly poisson(const Poly& a, const Poly& b);

/// omega = sum_i d alpha_i ^ d beta_i.
TwoForm standard_omega(const ChartPtr& chart);
/// theta = sum_i alpha_i d beta_i, so that d theta = omega.
OneForm standard_theta(const ChartPtr& chart);

/// Polynomial map between charts: one component (over the source chart)
/// per target coordinate, in target coordinate order.
class SmoothMap {
 public:
  SmoothMap(ChartPtr source, ChartPtr target, std::vector<Poly> components);
  static SmoothMap identity(const ChartPtr& chart);

  const ChartPtr& source() const { return source_; }
  const ChartPtr& target() const { return target_; }
  const std::vector<Poly>& components() const { return components_; }
  const Poly& component(int target_coord) const { return components_.at(static_cast<std::size_t>(target_coord)); }

 private:
  ChartPtr source_;
  ChartPtr target_;
  std::vector<Poly> components_;
};

Poly pullback(const SmoothMap& m, const Poly& f);
OneForm pullback(const SmoothMap& m, const OneForm& w);
TwoForm pullback(const SmoothMap& m, const TwoForm& w);

}  // namespace pq
