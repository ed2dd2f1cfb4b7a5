#include "pseudoquant/symcore/forms.hpp"

namespace pq {

namespace {

std::vector<Poly> zeros(const ChartPtr& chart, std::size_t count) { return std::vector<Poly>(count, Poly(chart)); }

void require_coeff_charts(const ChartPtr& chart, const std::vector<Poly>& polys, std::size_t expected) {
  if (polys.size() != expected) throw DomainError("wrong number of coefficients for chart");
  for (const auto& p : polys) require_same_chart(p.chart(), chart);
}

}  // namespace

// --- OneForm ---------------------------------------------------------------

OneForm::OneForm(ChartPtr chart) : chart_(std::move(chart)), coeffs_(zeros(chart_, static_cast<std::size_t>(chart_->dim()))) {}

OneForm::OneForm(ChartPtr chart, std::vector<Poly> coeffs) : chart_(std::move(chart)), coeffs_(std::move(coeffs)) {
  require_coeff_charts(chart_, coeffs_, static_cast<std::size_t>(chart_->dim()));
}

bool OneForm::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

OneForm& OneForm::operator+=(const OneForm& o) {
  require_same_chart(chart_, o.chart_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

OneForm& OneForm::operator-=(const OneForm& o) {
  require_same_chart(chart_, o.chart_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

OneForm operator*(const Poly& f, const OneForm& w) {
  OneForm r(w.chart_);
  for (std::size_t k = 0; k < w.coeffs_.size(); ++k) r.coeffs_[k] = f * w.coeffs_[k];
  return r;
}

bool operator==(const OneForm& a, const OneForm& b) { return same_chart(a.chart_, b.chart_) && a.coeffs_ == b.coeffs_; }

// --- TwoForm ---------------------------------------------------------------

TwoForm::TwoForm(ChartPtr chart) : chart_(std::move(chart)) {
  auto d = static_cast<std::size_t>(chart_->dim());
  coeffs_ = zeros(chart_, d * (d - 1) / 2);
}

std::size_t TwoForm::slot(int a, int b) const {
  // a < b, row-major over the strict upper triangle
  auto d = static_cast<std::size_t>(chart_->dim());
  auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b);
  return ua * d - ua * (ua + 1) / 2 + (ub - ua - 1);
}

Poly TwoForm::get(int a, int b) const {
  if (a < 0 || b < 0 || a >= chart_->dim() || b >= chart_->dim()) throw DomainError("two-form index out of range");
  if (a == b) return Poly(chart_);
  return a < b ? coeffs_[slot(a, b)] : -coeffs_[slot(b, a)];
}

void TwoForm::add(int a, int b, const Poly& value) {
  require_same_chart(chart_, value.chart());
  if (a == b) return;
  if (a < b)
    coeffs_[slot(a, b)] += value;
  else
    coeffs_[slot(b, a)] -= value;
}

bool TwoForm::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

TwoForm& TwoForm::operator+=(const TwoForm& o) {
  require_same_chart(chart_, o.chart_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

TwoForm& TwoForm::operator-=(const TwoForm& o) {
  require_same_chart(chart_, o.chart_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

TwoForm operator*(const Poly& f, const TwoForm& w) {
  TwoForm r(w.chart_);
  for (std::size_t k = 0; k < w.coeffs_.size(); ++k) r.coeffs_[k] = f * w.coeffs_[k];
  return r;
}

bool operator==(const TwoForm& a, const TwoForm& b) { return same_chart(a.chart_, b.chart_) && a.coeffs_ == b.coeffs_; }

// --- VectorField -----------------------------------------------------------

VectorField::VectorField(ChartPtr chart) : chart_(std::move(chart)), comps_(zeros(chart_, static_cast<std::size_t>(chart_->dim()))) {}

VectorField::VectorField(ChartPtr chart, std::vector<Poly> comps) : chart_(std::move(chart)), comps_(std::move(comps)) {
  require_coeff_charts(chart_, comps_, static_cast<std::size_t>(chart_->dim()));
}

bool VectorField::is_zero() const {
  for (const auto& c : comps_)
    if (!c.is_zero()) return false;
  return true;
}

VectorField& VectorField::operator+=(const VectorField& o) {
  require_same_chart(chart_, o.chart_);
  for (std::size_t k = 0; k < comps_.size(); ++k) comps_[k] += o.comps_[k];
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
  require_same_chart(chart_, o.chart_);
  for (std::size_t k = 0; k < comps_.size(); ++k) comps_[k] -= o.comps_[k];
  return *this;
}

VectorField operator*(const Poly& f, const VectorField& x) {
  VectorField r(x.chart_);
  for (std::size_t k = 0; k < x.comps_.size(); ++k) r.comps_[k] = f * x.comps_[k];
  return r;
}

bool operator==(const VectorField& a, const VectorField& b) { return same_chart(a.chart_, b.chart_) && a.comps_ == b.comps_; }

// --- calculus ---------------------------------------------------------------

OneForm exterior_d(const Poly& f) {
  OneForm w(f.chart());
  for (int c = 0; c < f.chart()->dim(); ++c) w[c] = partial(f, c);
  return w;
}

TwoForm exterior_d(const OneForm& w) {
  // d(sum_b w_b dx_b) = sum_{a,b} d_a w_b dx_a ^ dx_b
  TwoForm r(w.chart());
  const int d = w.chart()->dim();
  for (int b = 0; b < d; ++b) {
    if (w[b].is_zero()) continue;
    for (int a = 0; a < d; ++a) {
      if (a != b) r.add(a, b, partial(w[b], a));
    }
  }
  return r;
}

TwoForm wedge(const OneForm& u, const OneForm& v) {
  require_same_chart(u.chart(), v.chart());
  TwoForm r(u.chart());
  const int d = u.chart()->dim();
  for (int a = 0; a < d; ++a) {
    for (int b = a + 1; b < d; ++b) r.add(a, b, u[a] * v[b] - u[b] * v[a]);
  }
  return r;
}

Poly contract(const OneForm& w, const VectorField& x) {
  require_same_chart(w.chart(), x.chart());
  Poly r(w.chart());
  for (int c = 0; c < w.chart()->dim(); ++c) {
    if (!w[c].is_zero() && !x[c].is_zero()) r += w[c] * x[c];
  }
  return r;
}

Poly evaluate(const TwoForm& omega, const VectorField& x, const VectorField& y) {
  require_same_chart(omega.chart(), x.chart());
  require_same_chart(omega.chart(), y.chart());
  Poly r(omega.chart());
  const int d = omega.chart()->dim();
  for (int a = 0; a < d; ++a) {
    for (int b = a + 1; b < d; ++b) {
      Poly c = omega.get(a, b);
      if (c.is_zero()) continue;
      r += c * (x[a] * y[b] - x[b] * y[a]);
    }
  }
  return r;
}

Poly apply(const VectorField& x, const Poly& f) {
  require_same_chart(x.chart(), f.chart());
  Poly r(f.chart());
  for (int c = 0; c < f.chart()->dim(); ++c) {
    if (!x[c].is_zero()) r += x[c] * partial(f, c);
  }
  return r;
}

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
  require_same_chart(x.chart(), y.chart());
  VectorField r(x.chart());
  for (int c = 0; c < x.chart()->dim(); ++c) r[c] = apply(x, y[c]) - apply(y, x[c]);
  return r;
}

VectorField hamiltonian_vf(const Poly& a) {
  const auto& chart = a.chart();
  VectorField x(chart);
  for (int i = 0; i < chart->n(); ++i) {
    x[chart->beta(i)] = partial(a, chart->alpha(i));
    x[chart->alpha(i)] = -partial(a, chart->beta(i));
  }
  return x;
}

Poly poisson(const Poly& a, const Poly& b) {
  require_same_chart(a.chart(), b.chart());
  const auto& chart = a.chart();
  Poly r(chart);
  for (int i = 0; i < chart->n(); ++i) {
    r += partial(a, chart->alpha(i)) * partial(b, chart->beta(i));
    r -= partial(a, chart->beta(i)) * partial(b, chart->alpha(i));
  }
  return r;
}

TwoForm standard_omega(const ChartPtr& chart) {
  TwoForm w(chart);
  for (int i = 0; i < chart->n(); ++i) w.add(chart->alpha(i), chart->beta(i), Poly(chart, Scalar(1)));
  return w;
}

OneForm standard_theta(const ChartPtr& chart) {
  OneForm w(chart);
  for (int i = 0; i < chart->n(); ++i) w[chart->beta(i)] = Poly::coordinate(chart, chart->alpha(i));
  return w;
}

// --- pullback ---------------------------------------------------------------

SmoothMap::SmoothMap(ChartPtr source, ChartPtr target, std::vector<Poly> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  require_coeff_charts(source_, components_, static_cast<std::size_t>(target_->dim()));
}

SmoothMap SmoothMap::identity(const ChartPtr& chart) {
  std::vector<Poly> comps;
  for (int c = 0; c < chart->dim(); ++c) comps.push_back(Poly::coordinate(chart, c));
  return {chart, chart, std::move(comps)};
}

Poly pullback(const SmoothMap& m, const Poly& f) {
  require_same_chart(f.chart(), m.target());
  return compose(f, m.components(), m.source());
}

OneForm pullback(const SmoothMap& m, const OneForm& w) {
  require_same_chart(w.chart(), m.target());
  OneForm r(m.source());
  for (int a = 0; a < m.target()->dim(); ++a) {
    if (w[a].is_zero()) continue;
    r += pullback(m, w[a]) * exterior_d(m.component(a));
  }
  return r;
}

TwoForm pullback(const SmoothMap& m, const TwoForm& w) {
  require_same_chart(w.chart(), m.target());
  TwoForm r(m.source());
  const int d = m.target()->dim();
  std::vector<OneForm> differentials;
  for (int a = 0; a < d; ++a) differentials.push_back(exterior_d(m.component(a)));
  for (int a = 0; a < d; ++a) {
    for (int b = a + 1; b < d; ++b) {
      Poly c = w.get(a, b);
      if (c.is_zero()) continue;
      r += pullback(m, c) * wedge(differentials[a], differentials[b]);
    }
  }
  return r;
}

}  // namespace pq
