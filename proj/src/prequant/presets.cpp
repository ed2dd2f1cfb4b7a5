#include "pseudoquant/prequant/presets.hpp"

namespace pq::presets {

ConnectionData standard(int n) { return ConnectionData::standard(canonical_chart(n)); }

ConnectionData folded(int n) {
  auto chart = canonical_chart(n);
  OneForm theta = standard_theta(chart);
  Poly p1 = Poly::coordinate(chart, chart->alpha(0));
  theta[chart->beta(0)] = p1 * p1 * Scalar(make_rational(1, 2));
  return ConnectionData(std::move(theta));
}

ConnectionData coupled_q1dq2() {
  auto chart = canonical_chart(2);
  OneForm theta = standard_theta(chart);
  theta[chart->beta(1)] += Poly::coordinate(chart, chart->beta(0));
  return ConnectionData(std::move(theta));
}

ConnectionData coupled_p1dp2() {
  auto chart = canonical_chart(2);
  OneForm theta = standard_theta(chart);
  theta[chart->alpha(1)] += Poly::coordinate(chart, chart->alpha(0));
  return ConnectionData(std::move(theta));
}

ConnectionData simple_coupling(const std::vector<Poly>& f, const std::vector<Poly>& g) {
  if (f.empty() || f.size() != g.size()) throw DomainError("simple coupling needs matching f_i, g_i");
  auto chart = f.front().chart();
  if (chart->n() != static_cast<int>(f.size())) throw DomainError("one f_i, g_i pair per degree of freedom");
  OneForm theta(chart);
  const Scalar half(make_rational(1, 2));
  for (int i = 0; i < chart->n(); ++i) {
    auto idx = static_cast<std::size_t>(i);
    require_same_chart(f[idx].chart(), chart);
    require_same_chart(g[idx].chart(), chart);
    Poly p = Poly::coordinate(chart, chart->alpha(i));
    Poly q = Poly::coordinate(chart, chart->beta(i));
    theta[chart->beta(i)] += p * half - f[idx];
    theta[chart->alpha(i)] -= q * half - g[idx];
  }
  return ConnectionData(std::move(theta));
}

ConnectionData scaled(const Poly& f) {
  const auto& chart = f.chart();
  return ConnectionData((Poly(chart, Scalar(1)) + f) * standard_theta(chart));
}

PullbackSetup squeezed_cylinder(const Rational& lambda) {
  if (sgn(lambda) <= 0) throw DomainError("squeeze parameter must be positive");
  auto source = make_chart({"l"}, {"phi_l"});
  auto target = make_chart({"z"}, {"phi_z"});
  Poly l = Poly::coordinate(source, "l");
  Poly phi = Poly::coordinate(source, "phi_l");
  SmoothMap map(source, target, {l * Scalar(Rational(1) / lambda), phi});
  return {std::move(map), ConnectionData::standard(target)};
}

double squeezed_cylinder_factor(double lambda) {
  // f(l, phi) = (l / lambda, phi): Jacobian entries in floating point
  const double dz_dl = 1.0 / lambda, dz_dphi = 0.0;
  const double dphi_dl = 0.0, dphi_dphi = 1.0;
  auto bracket = [](double a_l, double a_phi, double b_l, double b_phi) { return a_l * b_phi - a_phi * b_l; };
  const double p = bracket(dz_dl, dz_dphi, dphi_dl, dphi_dphi);  // {f*z, f*phi_z}
  const double c = p;                                            // one canonical pair
  return p * (2.0 - c);
}

}  // namespace pq::presets
