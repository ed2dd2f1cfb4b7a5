#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pseudoquant/symcore/forms.hpp"

namespace pq {

/// Finite sum  sum_k c_k(x, hbar) d^k  of polynomial coefficients times mixed
/// partial derivatives, normal ordered (coefficient to the left). Acts on
/// formal sections of the trivialised line bundle.
class FormalOperator {
 public:
  /// Derivative multi-index over the 2n chart coordinates.
  using Index = std::vector<std::uint32_t>;
  using Terms = std::map<Index, Poly>;

  explicit FormalOperator(ChartPtr chart);

  static FormalOperator identity(const ChartPtr& chart);
  static FormalOperator multiplication(const Poly& f);
  /// First-order operator X = sum_c X_c d/dx_c.
  static FormalOperator derivation(const VectorField& x);

  const ChartPtr& chart() const { return chart_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int order() const;

  /// Coefficient of d^k, zero if absent.
  Poly coefficient(const Index& k) const;
  /// Coefficient of the identity term.
  Poly zeroth() const;
  /// Whether the operator is multiplication by a polynomial.
  bool is_multiplication() const { return order() <= 0; }

  void add_term(const Index& k, const Poly& c);

  FormalOperator operator-() const;
  FormalOperator& operator+=(const FormalOperator& o);
  FormalOperator& operator-=(const FormalOperator& o);
  friend FormalOperator operator+(FormalOperator a, const FormalOperator& b) { return a += b; }
  friend FormalOperator operator-(FormalOperator a, const FormalOperator& b) { return a -= b; }
  /// Composition with full Leibniz expansion.
  friend FormalOperator operator*(const FormalOperator& a, const FormalOperator& b);
  friend FormalOperator operator*(const Poly& f, const FormalOperator& a);
  friend FormalOperator operator*(const Scalar& s, const FormalOperator& a);
  friend bool operator==(const FormalOperator& a, const FormalOperator& b);

  /// Applies the operator to a polynomial section.
  Poly apply(const Poly& section) const;

 private:
  ChartPtr chart_;
  Terms terms_;
};

/// A B - B A.
FormalOperator commutator(const FormalOperator& a, const FormalOperator& b);

/// Exact division of every coefficient by -i*hbar ("formal" commutator values).
FormalOperator divide_by_minus_i_hbar(const FormalOperator& op);

/// Canonical text, e.g. "-i*hbar*d_q1 + (q1 - p1)". Derivatives print as d_<coord>.
std::string to_string(const FormalOperator& op);

}  // namespace pq
