#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pseudoquant/symcore/poly.hpp"
#include "pseudoquant/symcore/scalar.hpp"

namespace pq::bks {

enum class DeformationKind { None, Momentum, Position };
std::string to_string(DeformationKind k);
DeformationKind parse_deformation_kind(const std::string& s);

/// f = (lambda/2) alpha^n for Momentum, f = beta^n for Position, f = 0 for None.
struct DeformationSpec {
  DeformationKind kind = DeformationKind::None;
  int n = 1;
  Rational lambda = 1;
  double hbar = 1.0;

  /// Throws DomainError unless n >= 1, hbar > 0 and lambda != 0 for a real deformation.
  void validate() const;
};

enum class TermClass { Diverges, FiniteCandidate, Vanishes };
std::string to_string(TermClass c);

/// Sign of the derivative exponent decides the tau -> 0 limit.
TermClass classify_exponent(const Rational& e);

/// e(n, m, j) = -1/2 + m - 1/(2n) + j n / (2 + n)
Rational exponent(int n, int m, int j);
/// j'(n, m) = (n + 2)(n - 2mn + 1) / (2 n^2), the unique zero of e(n, m, .)
Rational critical_j(int n, int m);
bool is_integer(const Rational& r);

/// Exponent rebuilt from alpha = mu tau^(-1/(n+2)) through TauMonomial bookkeeping:
///   -1/2 + m - 1/(n+2) + j n/(n+2).
Rational rederived_exponent(int n, int m, int j);

/// tau^tau_power mu^mu_power, the unit of the limit bookkeeping.
struct TauMonomial {
  Rational tau_power = 0;
  int mu_power = 0;
  friend TauMonomial operator*(const TauMonomial& a, const TauMonomial& b) {
    return {a.tau_power + b.tau_power, a.mu_power + b.mu_power};
  }
  friend bool operator==(const TauMonomial&, const TauMonomial&) = default;
};
TauMonomial pow(const TauMonomial& t, int k);

struct BKSTermReport {
  int n = 0, m = 0, j = 0;
  Rational exponent;
  Rational j_critical;
  bool j_critical_integral = false;
  TermClass classification = TermClass::Diverges;
  /// Integral of mu^(2j) exp(i lambda mu^(n+2) / (2 hbar)); set when defined.
  std::optional<std::complex<double>> mu_moment;
  Rational rederived_exponent;
  TermClass rederived_classification = TermClass::Diverges;
};

struct PairingClassification {
  std::vector<BKSTermReport> terms;
  /// False as soon as one term diverges.
  bool converges = true;
  /// Terms where literal and rederived classifications differ.
  int disagreements = 0;
};

/// Term table for 0 <= m <= m_max and 0 <= j <= max(0, floor j'(n, m)) + 1.
/// Requires kind == Momentum.
PairingClassification classify_pairing(const DeformationSpec& d, int m_max);

/// How one tau^P mu^k term of an expanded pairing behaves under -d/dtau at tau -> 0.
enum class LimitStatus { ConstantInTau, OddMoment, Diverges, Finite, Vanishes };
std::string to_string(LimitStatus s);
LimitStatus limit_status(const TauMonomial& t);

struct SeriesTerm {
  int lambda = 0;  ///< order of the Taylor term of the section
  std::string source;  ///< which factor produced the remaining powers
  TauMonomial power;
  LimitStatus status = LimitStatus::ConstantInTau;
};

struct PairingResult {
  bool converges = false;
  /// sqrt(2 pi hbar) e^(i pi / 4) for unit phase; divided out of the equation.
  std::complex<double> normalization;
  /// Coefficient of psi'' in  i hbar psi_t = -(normalization) (K psi'' + U psi).
  std::function<std::complex<double>(double)> effective_coefficient;
  /// (beta, K(beta)) at the requested samples.
  std::vector<std::pair<double, std::complex<double>>> samples;
  /// U for the standard check; zero for the position pairing.
  std::function<std::complex<double>(double)> potential;
  std::vector<SeriesTerm> terms;
};

/// Position deformation f = beta^n. Rejects samples with 1 + 2 beta^n <= 0.
PairingResult position_pairing(int n, const std::vector<double>& beta_samples, double hbar);

/// Undeformed pairing of the flow of alpha^2/2 + V(beta) against flat sections.
/// V must be a polynomial in the first position coordinate only.
PairingResult standard_schrodinger_check(const Poly& v, double hbar);

}  // namespace pq::bks
