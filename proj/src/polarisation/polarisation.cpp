#include "pseudoquant/polarisation/polarisation.hpp"

#include "pseudoquant/prequant/presets.hpp"

namespace pq {

namespace {

bool alpha_free(const Poly& p) {
  const auto& chart = *p.chart();
  for (int i = 0; i < chart.n(); ++i)
    if (p.depends_on(chart.alpha(i))) return false;
  return true;
}

VectorField x_beta(const ChartPtr& chart, int i) { return hamiltonian_vf(Poly::coordinate(chart, chart->beta(i))); }

Poly minus_i_hbar(const ChartPtr& chart) { return Poly::hbar(chart) * Scalar(0, -1); }

}  // namespace

Polarisation::Polarisation(const ConnectionData& c) : chart_(c.chart()) {
  for (int i = 0; i < chart_->n(); ++i) {
    if (!contract(c.theta(), x_beta(chart_, i)).is_zero()) {
      throw NonAdaptedGauge("connection is not adapted to the vertical polarisation along " +
                            chart_->name(chart_->alpha(i)));
    }
    flat_.push_back(i);
  }
}

bool FlatSectionAction::alpha_free(const Chart& chart) const {
  for (const auto& [k, c] : coeffs) {
    for (int i = 0; i < chart.n(); ++i)
      if (c.depends_on(chart.alpha(i))) return false;
  }
  return true;
}

FlatSectionAction flat_action(const FormalOperator& op, const Polarisation& p) {
  require_same_chart(op.chart(), p.chart());
  const auto& chart = *p.chart();
  FlatSectionAction out;
  for (const auto& [k, c] : op.terms()) {
    bool hits_leaf = false;
    for (int i = 0; i < chart.n(); ++i) hits_leaf |= k[static_cast<std::size_t>(chart.alpha(i))] != 0;
    if (hits_leaf) continue;  // F does not depend on alpha
    FlatSectionAction::Index key;
    for (int i : p.flat_coords()) key.push_back(k[static_cast<std::size_t>(chart.beta(i))]);
    out.coeffs.emplace(std::move(key), c);
  }
  return out;
}

std::string to_string(ScalingCase c) {
  switch (c) {
    case ScalingCase::Standard: return "standard";
    case ScalingCase::PolarisedScaled: return "polarised-scaled";
    case ScalingCase::GeneralScaled: return "general-scaled";
  }
  return "unknown";
}

ScalingCase parse_scaling_case(const std::string& s) {
  if (s == "standard") return ScalingCase::Standard;
  if (s == "polarised-scaled") return ScalingCase::PolarisedScaled;
  if (s == "general-scaled") return ScalingCase::GeneralScaled;
  throw DomainError("unknown case tag '" + s + "'");
}

ScalingCase infer_case(const ConnectionData& c) {
  if (c.is_prequantum()) return ScalingCase::Standard;
  const auto& chart = *c.chart();
  Poly scale = c.curvature().get(chart.alpha(0), chart.beta(0));
  TwoForm expected = scale * c.base_omega();
  if (!(expected == c.curvature())) return ScalingCase::GeneralScaled;
  return alpha_free(scale) ? ScalingCase::PolarisedScaled : ScalingCase::GeneralScaled;
}

PreservationReport preserves(const Poly& a, const ConnectionData& c, const Polarisation& p) {
  return preserves(a, c, p, infer_case(c));
}

PreservationReport preserves(const Poly& a, const ConnectionData& c, const Polarisation& p, ScalingCase tag) {
  require_same_chart(a.chart(), c.chart());
  require_same_chart(a.chart(), p.chart());
  PreservationReport report{a, true, {}, tag};
  const VectorField xa = hamiltonian_vf(a);
  for (int i : p.flat_coords()) {
    Poly beta = Poly::coordinate(c.chart(), c.chart()->beta(i));
    FormalOperator l = quantise(poisson(a, beta), c) -
                       FormalOperator::multiplication(evaluate(c.curvature(), xa, x_beta(c.chart(), i)));
    FlatSectionAction r = flat_action(l, p);
    report.preserves = report.preserves && r.is_zero();
    report.residuals.push_back(std::move(r));
  }
  return report;
}

std::vector<FlatSectionAction> cohomologous_residuals(const Poly& a, const ConnectionData& c, const OneForm& gamma,
                                                      const Polarisation& p) {
  TwoForm dgamma = exterior_d(gamma);
  if (!(dgamma == c.base_omega() - c.curvature())) throw DomainError("gamma does not satisfy d gamma = omega - Omega");
  const auto& chart = c.chart();
  const VectorField xa = hamiltonian_vf(a);
  std::vector<FlatSectionAction> out;
  for (int i : p.flat_coords()) {
    Poly pb = poisson(a, Poly::coordinate(chart, chart->beta(i)));
    VectorField xp = hamiltonian_vf(pb);
    FormalOperator op = minus_i_hbar(chart) * FormalOperator::derivation(xp) +
                        FormalOperator::multiplication(evaluate(dgamma, xa, x_beta(chart, i)) -
                                                       contract(c.theta(), xp));
    out.push_back(flat_action(op, p));
  }
  return out;
}

std::vector<MonomialVerdict> classify_monomials(int m_max, int n_max, const Poly& deformation, ScalingCase tag) {
  if (m_max < 0 || n_max < 0) throw DomainError("grid bounds must be non-negative");
  if (tag == ScalingCase::Standard && !deformation.is_zero()) throw DomainError("standard case needs f = 0");
  if (tag == ScalingCase::PolarisedScaled && !alpha_free(deformation))
    throw DomainError("polarised-scaled case needs f = f(beta)");

  const auto& chart = deformation.chart();
  ConnectionData conn = presets::scaled(deformation);
  Polarisation pol(conn);
  Poly alpha = Poly::coordinate(chart, chart->alpha(0));
  Poly beta = Poly::coordinate(chart, chart->beta(0));

  std::vector<MonomialVerdict> table;
  for (int m = 0; m <= m_max; ++m) {
    for (int n = 0; n <= n_max; ++n) {
      Poly a = pow(alpha, static_cast<unsigned>(m)) * pow(beta, static_cast<unsigned>(n));
      table.push_back({m, n, preserves(a, conn, pol, tag)});
    }
  }
  return table;
}

FlatSectionAction general_scaled_display_residual(const Poly& a, const Poly& f) {
  require_same_chart(a.chart(), f.chart());
  const auto& chart = a.chart();
  if (chart->n() != 1) throw DomainError("displayed general-scaled condition is checked in one degree of freedom");
  Poly alpha = Poly::coordinate(chart, chart->alpha(0));
  Poly beta = Poly::coordinate(chart, chart->beta(0));
  Poly p = poisson(a, beta);
  Poly p_alpha = partial(p, chart->alpha(0));
  Poly one(chart, Scalar(1));

  FlatSectionAction out;
  Poly c0 = p_alpha * (one + f + partial(f, chart->alpha(0))) * alpha + f * p;
  Poly c1 = Poly::hbar(chart) * Scalar::i() * p_alpha;
  if (!c0.is_zero()) out.coeffs.emplace(FlatSectionAction::Index{0}, c0);
  if (!c1.is_zero()) out.coeffs.emplace(FlatSectionAction::Index{1}, c1);
  return out;
}

}  // namespace pq
