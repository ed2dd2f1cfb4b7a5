#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pseudoquant/symcore/chart.hpp"
#include "pseudoquant/symcore/scalar.hpp"

namespace pq {

/// Sparse multivariate polynomial over the Gaussian rationals in the chart
/// coordinates and the formal parameter hbar.
///
/// Exponent vectors have 2n+1 entries: slot 0 is hbar, slot 1 + c is the
/// chart coordinate c. Zero coefficients are never stored, so equality is
/// plain term-map equality.
class Poly {
 public:
  using Exponents = std::vector<std::uint32_t>;
  using Terms = std::map<Exponents, Scalar>;

  explicit Poly(ChartPtr chart);
  Poly(ChartPtr chart, const Scalar& constant);

  static Poly coordinate(ChartPtr chart, int coord);
  static Poly coordinate(ChartPtr chart, std::string_view name);
  static Poly hbar(ChartPtr chart);
  static Poly monomial(ChartPtr chart, Exponents exps, const Scalar& coeff = Scalar(1));

  const ChartPtr& chart() const { return chart_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_term() const;

  int degree() const;
  /// Total degree in the chart coordinates only (hbar excluded).
  int coordinate_degree() const;
  bool depends_on(int coord) const;
  bool depends_on_hbar() const;

  void add_term(const Exponents& exps, const Scalar& coeff);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Scalar& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
  friend Poly operator*(const Scalar& s, Poly a) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b);

  /// Numeric evaluation at coordinate values (length 2n) and a numeric hbar.
  std::complex<double> evaluate(std::span<const double> coords, double hbar) const;

 private:
  ChartPtr chart_;
  Terms terms_;
};

Poly partial(const Poly& p, int coord);
/// Partial derivative by coordinate label, or by "hbar".
Poly partial(const Poly& p, std::string_view name);
Poly partial_hbar(const Poly& p);

Poly pow(const Poly& p, unsigned e);

/// Substitutes every chart coordinate of `p` by a polynomial on another chart
/// (`replacements` has one entry per coordinate of p's chart). hbar maps to hbar.
Poly compose(const Poly& p, const std::vector<Poly>& replacements, const ChartPtr& target);

/// Exact division by hbar^k; throws DomainError if some term has a smaller hbar power.
Poly divide_by_hbar(const Poly& p, unsigned k = 1);

/// Canonical text form, parseable by parse_poly.
std::string to_string(const Poly& p);

}  // namespace pq
