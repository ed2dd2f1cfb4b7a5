#include "pseudoquant/bks/bks.hpp"

#include <cmath>
#include <map>
#include <numbers>

#include "pseudoquant/bks/oscillatory.hpp"

namespace pq::bks {

namespace {

constexpr int kSectionOrder = 4;  // Taylor terms of the section kept in the expansion
constexpr int kSeriesOrder = 2;   // powers of the phase series kept

Rational q(long num, long den = 1) { return make_rational(num, den); }

double factorial(int k) { return std::tgamma(k + 1.0); }

struct Contribution {
  int lambda;
  std::string source;
  TauMonomial power;
  std::complex<double> coeff;
};

// Power series in tau and mu with complex coefficients.
using Series = std::map<std::pair<Rational, int>, std::complex<double>>;

Series multiply(const Series& a, const Series& b, const Rational& cutoff) {
  Series out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      Rational t = ka.first + kb.first;
      if (t > cutoff) continue;
      out[{t, ka.second + kb.second}] += ca * cb;
    }
  }
  return out;
}

Series exp_series(const Series& s, const Rational& cutoff) {
  Series out{{{Rational(0), 0}, 1.0}};
  Series power = out;
  for (int r = 1; r <= kSeriesOrder; ++r) {
    power = multiply(power, s, cutoff);
    for (const auto& [k, c] : power) out[k] += c / factorial(r);
  }
  return out;
}

// psi(beta - tau alpha) with alpha = mu tau^(-1/2): (-1)^l mu^l tau^(l/2) / l!
std::vector<Contribution> attach_section(const Series& phase, const std::string& source) {
  std::vector<Contribution> out;
  for (int l = 0; l <= kSectionOrder; ++l) {
    TauMonomial sec{q(l, 2), l};
    double sign = (l % 2 == 0) ? 1.0 : -1.0;
    for (const auto& [k, c] : phase) {
      bool from_phase = k.first != 0;
      out.push_back({l, from_phase ? source : "section", sec * TauMonomial{k.first, k.second},
                     sign / factorial(l) * c});
    }
  }
  return out;
}

std::complex<double> mu_moment(int mu_power, double a) {
  if (mu_power % 2 != 0) return 0.0;
  return oscillatory_moment(mu_power / 2, 2, a);
}

std::complex<double> unit_normalization(double hbar) { return oscillatory_moment(0, 2, 1.0 / (2.0 * hbar)); }

void check_hbar(double hbar) {
  if (!(hbar > 0.0) || !std::isfinite(hbar)) throw DomainError("hbar must be a positive real");
}

// Finite terms feed  i hbar psi_t = -G0 (sum_l K_l psi^(l))  with
// K_l = -i hbar / G0 * (-P coeff moment) at P = 1.
std::complex<double> coefficient_of(const std::vector<Contribution>& terms, int lambda, double a,
                                    std::complex<double> g0, double hbar) {
  std::complex<double> rate = 0.0;
  for (const auto& t : terms) {
    if (t.lambda != lambda || limit_status(t.power) != LimitStatus::Finite) continue;
    rate -= to_double(t.power.tau_power) * t.coeff * mu_moment(t.power.mu_power, a);
  }
  return std::complex<double>(0.0, -hbar) / g0 * rate;
}

std::vector<SeriesTerm> describe(const std::vector<Contribution>& terms) {
  std::vector<SeriesTerm> out;
  for (const auto& t : terms) out.push_back({t.lambda, t.source, t.power, limit_status(t.power)});
  return out;
}

bool all_bounded(const std::vector<SeriesTerm>& terms) {
  for (const auto& t : terms)
    if (t.status == LimitStatus::Diverges) return false;
  return true;
}

}  // namespace

std::string to_string(DeformationKind k) {
  switch (k) {
    case DeformationKind::None: return "none";
    case DeformationKind::Momentum: return "momentum";
    case DeformationKind::Position: return "position";
  }
  return "unknown";
}

DeformationKind parse_deformation_kind(const std::string& s) {
  if (s == "none") return DeformationKind::None;
  if (s == "momentum") return DeformationKind::Momentum;
  if (s == "position") return DeformationKind::Position;
  throw DomainError("unknown deformation kind '" + s + "'");
}

void DeformationSpec::validate() const {
  if (n < 1) throw DomainError("deformation order n must be >= 1");
  if (!(hbar > 0.0)) throw DomainError("hbar must be positive");
  if (kind != DeformationKind::None && lambda == 0) throw DomainError("lambda must be nonzero");
}

std::string to_string(TermClass c) {
  switch (c) {
    case TermClass::Diverges: return "Diverges";
    case TermClass::FiniteCandidate: return "FiniteCandidate";
    case TermClass::Vanishes: return "Vanishes";
  }
  return "unknown";
}

TermClass classify_exponent(const Rational& e) {
  int s = sgn(e);
  if (s < 0) return TermClass::Diverges;
  if (s == 0) return TermClass::FiniteCandidate;
  return TermClass::Vanishes;
}

Rational exponent(int n, int m, int j) {
  if (n < 1 || m < 0 || j < 0) throw DomainError("exponent needs n >= 1, m >= 0, j >= 0");
  Rational e = q(-1, 2) + m - q(1, 2L * n) + q(static_cast<long>(j) * n, n + 2L);
  e.canonicalize();
  return e;
}

Rational critical_j(int n, int m) {
  if (n < 1 || m < 0) throw DomainError("critical_j needs n >= 1, m >= 0");
  return q((n + 2L) * (n - 2L * m * n + 1), 2L * n * n);
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

TauMonomial pow(const TauMonomial& t, int k) {
  TauMonomial out;
  for (int i = 0; i < k; ++i) out = out * t;
  return out;
}

Rational rederived_exponent(int n, int m, int j) {
  if (n < 1 || m < 0 || j < 0) throw DomainError("exponent needs n >= 1, m >= 0, j >= 0");
  const Rational shift = q(-1, n + 2L);    // alpha = mu tau^shift
  TauMonomial weight{q(1, 2) + m, 0};      // half-form factor and tau^m of the flow expansion
  TauMonomial jacobian{shift, 0};          // d alpha = tau^shift d mu
  TauMonomial quadratic{1 + 2 * shift, 2}; // tau alpha^2
  TauMonomial total = weight * jacobian * pow(quadratic, j);
  Rational e = total.tau_power - 1;        // d/dtau
  e.canonicalize();
  return e;
}

PairingClassification classify_pairing(const DeformationSpec& d, int m_max) {
  d.validate();
  if (d.kind != DeformationKind::Momentum) throw DomainError("classify_pairing needs a momentum deformation");
  if (m_max < 0) throw DomainError("m_max must be non-negative");
  PairingClassification out;
  const double a = to_double(d.lambda) / (2.0 * d.hbar);
  for (int m = 0; m <= m_max; ++m) {
    Rational jc = critical_j(d.n, m);
    long top = 0;
    if (jc > 0) top = mpz_class(jc.get_num() / jc.get_den()).get_si();
    for (int j = 0; j <= top + 1; ++j) {
      BKSTermReport r;
      r.n = d.n;
      r.m = m;
      r.j = j;
      r.exponent = exponent(d.n, m, j);
      r.j_critical = jc;
      r.j_critical_integral = is_integer(jc);
      r.classification = classify_exponent(r.exponent);
      r.mu_moment = oscillatory_moment(j, d.n + 2, a);
      r.rederived_exponent = rederived_exponent(d.n, m, j);
      r.rederived_classification = classify_exponent(r.rederived_exponent);
      if (r.classification == TermClass::Diverges) out.converges = false;
      if (r.classification != r.rederived_classification) ++out.disagreements;
      out.terms.push_back(std::move(r));
    }
  }
  return out;
}

std::string to_string(LimitStatus s) {
  switch (s) {
    case LimitStatus::ConstantInTau: return "constant";
    case LimitStatus::OddMoment: return "odd-moment";
    case LimitStatus::Diverges: return "diverges";
    case LimitStatus::Finite: return "finite";
    case LimitStatus::Vanishes: return "vanishes";
  }
  return "unknown";
}

LimitStatus limit_status(const TauMonomial& t) {
  if (t.tau_power == 0) return LimitStatus::ConstantInTau;
  if (t.mu_power % 2 != 0) return LimitStatus::OddMoment;
  int s = sgn(Rational(t.tau_power - 1));
  if (s < 0) return LimitStatus::Diverges;
  if (s == 0) return LimitStatus::Finite;
  return LimitStatus::Vanishes;
}

PairingResult position_pairing(int n, const std::vector<double>& beta_samples, double hbar) {
  if (n < 1) throw DomainError("deformation order n must be >= 1");
  check_hbar(hbar);
  for (double b : beta_samples) {
    if (!(1.0 + 2.0 * std::pow(b, n) > 0.0))
      throw DomainError("singular sample beta = " + std::to_string(b) + ": 1 + 2 beta^n <= 0");
  }

  // Remaining phase after the quadratic part is absorbed into mu:
  // sum_j c_j beta^(n-j) mu^j tau^(j/2 + 1), j = 1..n.
  auto expansion = [n, hbar](double beta) {
    Series s;
    const Rational cutoff = q(kSectionOrder, 2) + 3;
    for (int j = 1; j <= n; ++j) {
      double c = factorial(n) / (factorial(n - j) * factorial(j + 1)) * std::pow(beta, n - j);
      if (j % 2 != 0) c = -c;
      s[{q(j, 2) + 1, j}] += std::complex<double>(0.0, c / hbar);
    }
    return attach_section(exp_series(s, cutoff), "phase-series");
  };

  PairingResult out;
  out.normalization = unit_normalization(hbar);
  out.terms = describe(expansion(1.0));
  out.converges = all_bounded(out.terms);

  const auto g0 = out.normalization;
  out.effective_coefficient = [n, hbar, g0, expansion](double beta) {
    double w = 1.0 + 2.0 * std::pow(beta, n);
    if (!(w > 0.0)) throw DomainError("singular point beta = " + std::to_string(beta));
    return coefficient_of(expansion(beta), 2, w / (2.0 * hbar), g0, hbar);
  };
  out.potential = [](double) { return std::complex<double>(0.0); };
  for (double b : beta_samples) out.samples.emplace_back(b, out.effective_coefficient(b));
  return out;
}

PairingResult standard_schrodinger_check(const Poly& v, double hbar) {
  check_hbar(hbar);
  const auto chart = v.chart();
  if (v.depends_on_hbar()) throw DomainError("potential must not depend on hbar");
  for (int c = 0; c < chart->dim(); ++c) {
    if (c != chart->beta(0) && v.depends_on(c))
      throw DomainError("potential must depend on " + chart->name(chart->beta(0)) + " only");
  }

  // e^(-i tau V / hbar) contributes (-i V / hbar)^r tau^r / r!
  auto expansion = [v, hbar, chart](double beta) {
    std::vector<double> coords(static_cast<std::size_t>(chart->dim()), 0.0);
    coords[static_cast<std::size_t>(chart->beta(0))] = beta;
    std::complex<double> val = v.evaluate(coords, hbar);
    Series s;
    s[{Rational(1), 0}] = std::complex<double>(0.0, -1.0 / hbar) * val;
    return attach_section(exp_series(s, Rational(kSectionOrder)), "potential");
  };

  PairingResult out;
  out.normalization = unit_normalization(hbar);
  out.terms = describe(expansion(1.0));
  out.converges = all_bounded(out.terms);
  const double a = 1.0 / (2.0 * hbar);
  const auto g0 = out.normalization;
  out.effective_coefficient = [expansion, a, g0, hbar](double beta) {
    return coefficient_of(expansion(beta), 2, a, g0, hbar);
  };
  out.potential = [expansion, a, g0, hbar](double beta) { return coefficient_of(expansion(beta), 0, a, g0, hbar); };
  out.samples.emplace_back(0.0, out.effective_coefficient(0.0));
  return out;
}

}  // namespace pq::bks
