#include "pseudoquant/prequant/prequant.hpp"

namespace pq {

namespace {

Scalar minus_i() { return Scalar(0, -1); }

Poly minus_i_hbar(const ChartPtr& chart) { return Poly::hbar(chart) * minus_i(); }

}  // namespace

ConnectionData::ConnectionData(OneForm theta)
    : theta_(std::move(theta)), curvature_(exterior_d(theta_)), base_omega_(standard_omega(theta_.chart())) {}

ConnectionData ConnectionData::standard(const ChartPtr& chart) { return ConnectionData(standard_theta(chart)); }

FormalOperator quantise(const Poly& a, const ConnectionData& c) {
  require_same_chart(a.chart(), c.chart());
  VectorField x = hamiltonian_vf(a);
  return minus_i_hbar(a.chart()) * FormalOperator::derivation(x) +
         FormalOperator::multiplication(a - contract(c.theta(), x));
}

FormalOperator commutator_rhs(const Poly& a, const Poly& b, const ConnectionData& c) {
  require_same_chart(a.chart(), c.chart());
  require_same_chart(b.chart(), c.chart());
  const auto& chart = c.chart();
  Poly p = poisson(a, b);
  VectorField xp = hamiltonian_vf(p);
  Poly zeroth = -contract(c.theta(), xp) - evaluate(c.curvature(), hamiltonian_vf(a), hamiltonian_vf(b)) +
                p * Scalar(2);
  FormalOperator inner = minus_i_hbar(chart) * FormalOperator::derivation(xp) + FormalOperator::multiplication(zeroth);
  return minus_i_hbar(chart) * inner;
}

PullbackSetup::PullbackSetup(SmoothMap map, ConnectionData target)
    : map_(std::move(map)), target_(std::move(target)), induced_(pullback(map_, target_.theta())) {
  require_same_chart(map_.target(), target_.chart());
}

FormalOperator pullback_quantise(const Poly& a, const PullbackSetup& s) {
  require_same_chart(a.chart(), s.map().target());
  return quantise(pullback(s.map(), a), s.induced());
}

FormalOperator theorem_commutator(const Poly& a, const Poly& b, const PullbackSetup& s) {
  require_same_chart(a.chart(), s.map().target());
  require_same_chart(b.chart(), s.map().target());
  const auto& source = s.map().source();
  const auto& target = *s.map().target();

  Poly p = poisson(pullback(s.map(), a), pullback(s.map(), b));
  Poly c_sum(source);
  for (int i = 0; i < target.n(); ++i) {
    c_sum += poisson(s.map().component(target.alpha(i)), s.map().component(target.beta(i)));
  }
  VectorField xp = hamiltonian_vf(p);
  Poly zeroth = -contract(s.induced().theta(), xp) + p * (Poly(source, Scalar(2)) - c_sum);
  FormalOperator inner = minus_i_hbar(source) * FormalOperator::derivation(xp) + FormalOperator::multiplication(zeroth);
  return minus_i_hbar(source) * inner;
}

}  // namespace pq
