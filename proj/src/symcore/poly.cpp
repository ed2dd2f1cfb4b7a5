#include "pseudoquant/symcore/poly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace pq {

namespace {

std::size_t slot_count(const ChartPtr& chart) { return static_cast<std::size_t>(chart->dim()) + 1; }

void require_chart(const ChartPtr& chart) {
  if (!chart) throw DomainError("polynomial without chart");
}

}  // namespace

Poly::Poly(ChartPtr chart) : chart_(std::move(chart)) { require_chart(chart_); }

Poly::Poly(ChartPtr chart, const Scalar& constant) : Poly(std::move(chart)) {
  add_term(Exponents(slot_count(chart_), 0), constant);
}

Poly Poly::coordinate(ChartPtr chart, int coord) {
  require_chart(chart);
  if (coord < 0 || coord >= chart->dim()) throw DomainError("unknown coordinate id " + std::to_string(coord));
  Exponents e(slot_count(chart), 0);
  e[static_cast<std::size_t>(coord) + 1] = 1;
  return monomial(std::move(chart), std::move(e));
}

Poly Poly::coordinate(ChartPtr chart, std::string_view name) {
  require_chart(chart);
  auto c = chart->find(name);
  if (!c) throw DomainError("unknown coordinate '" + std::string(name) + "'");
  return coordinate(std::move(chart), *c);
}

Poly Poly::hbar(ChartPtr chart) {
  require_chart(chart);
  Exponents e(slot_count(chart), 0);
  e[0] = 1;
  return monomial(std::move(chart), std::move(e));
}

Poly Poly::monomial(ChartPtr chart, Exponents exps, const Scalar& coeff) {
  Poly p(std::move(chart));
  if (exps.size() != slot_count(p.chart_)) throw DomainError("exponent vector has wrong length");
  p.add_term(exps, coeff);
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
}

Scalar Poly::constant_term() const {
  auto it = terms_.find(Exponents(slot_count(chart_), 0));
  return it == terms_.end() ? Scalar() : it->second;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(std::accumulate(e.begin(), e.end(), 0u)));
  return d;
}

int Poly::coordinate_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(std::accumulate(e.begin() + 1, e.end(), 0u)));
  return d;
}

bool Poly::depends_on(int coord) const {
  auto slot = static_cast<std::size_t>(coord) + 1;
  return std::any_of(terms_.begin(), terms_.end(), [slot](const auto& t) { return t.first[slot] != 0; });
}

bool Poly::depends_on_hbar() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first[0] != 0; });
}

void Poly::add_term(const Exponents& exps, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  require_same_chart(chart_, o.chart_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_same_chart(chart_, o.chart_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_chart(a.chart_, b.chart_);
  Poly r(a.chart_);
  Poly::Exponents e(slot_count(a.chart_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

bool operator==(const Poly& a, const Poly& b) { return same_chart(a.chart_, b.chart_) && a.terms_ == b.terms_; }

std::complex<double> Poly::evaluate(std::span<const double> coords, double hbar) const {
  if (coords.size() != static_cast<std::size_t>(chart_->dim())) throw DomainError("wrong number of coordinate values");
  std::complex<double> sum = 0.0;
  for (const auto& [e, c] : terms_) {
    double m = std::pow(hbar, e[0]);
    for (std::size_t k = 0; k < coords.size(); ++k) m *= std::pow(coords[k], e[k + 1]);
    sum += c.to_complex() * m;
  }
  return sum;
}

namespace {

Poly differentiate_slot(const Poly& p, std::size_t slot) {
  Poly r(p.chart());
  for (const auto& [e, c] : p.terms()) {
    if (e[slot] == 0) continue;
    auto d = e;
    d[slot] -= 1;
    r.add_term(d, c * Scalar(static_cast<long>(e[slot])));
  }
  return r;
}

}  // namespace

Poly partial(const Poly& p, int coord) {
  if (coord < 0 || coord >= p.chart()->dim()) throw DomainError("unknown coordinate id " + std::to_string(coord));
  return differentiate_slot(p, static_cast<std::size_t>(coord) + 1);
}

Poly partial(const Poly& p, std::string_view name) {
  if (name == kHbarName) return partial_hbar(p);
  auto c = p.chart()->find(name);
  if (!c) throw DomainError("unknown coordinate '" + std::string(name) + "'");
  return partial(p, *c);
}

Poly partial_hbar(const Poly& p) { return differentiate_slot(p, 0); }

Poly pow(const Poly& p, unsigned e) {
  Poly result(p.chart(), Scalar(1));
  Poly base = p;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

Poly compose(const Poly& p, const std::vector<Poly>& replacements, const ChartPtr& target) {
  const auto dim = static_cast<std::size_t>(p.chart()->dim());
  if (replacements.size() != dim) throw DomainError("substitution needs one polynomial per coordinate");
  for (const auto& r : replacements) require_same_chart(r.chart(), target);

  // powers[k][e] = replacements[k]^e, filled lazily
  std::vector<std::vector<Poly>> powers(dim);
  auto power_of = [&](std::size_t k, std::uint32_t e) -> const Poly& {
    auto& cache = powers[k];
    if (cache.empty()) cache.emplace_back(target, Scalar(1));
    while (cache.size() <= e) cache.push_back(cache.back() * replacements[k]);
    return cache[e];
  };

  Poly out(target);
  Poly::Exponents hexp(static_cast<std::size_t>(target->dim()) + 1, 0);
  for (const auto& [e, c] : p.terms()) {
    hexp[0] = e[0];
    Poly term = Poly::monomial(target, hexp, c);
    for (std::size_t k = 0; k < dim; ++k) {
      if (e[k + 1] != 0) term *= power_of(k, e[k + 1]);
    }
    out += term;
  }
  return out;
}

Poly divide_by_hbar(const Poly& p, unsigned k) {
  Poly r(p.chart());
  for (const auto& [e, c] : p.terms()) {
    if (e[0] < k) throw DomainError("polynomial is not divisible by hbar^" + std::to_string(k) + ": " + to_string(p));
    auto d = e;
    d[0] -= k;
    r.add_term(d, c);
  }
  return r;
}

namespace {

std::string rational_magnitude(const Rational& r) {
  Rational a = abs(r);
  if (a.get_den() == 1) return a.get_num().get_str();
  return "(" + a.get_str() + ")";
}

std::string monomial_text(const Poly::Exponents& e, const Chart& chart) {
  std::string out;
  auto factor = [&](const std::string& name, std::uint32_t k) {
    if (k == 0) return;
    if (!out.empty()) out += "*";
    out += name;
    if (k > 1) out += "^" + std::to_string(k);
  };
  factor(std::string(kHbarName), e[0]);
  for (int c = 0; c < chart.dim(); ++c) factor(chart.name(c), e[static_cast<std::size_t>(c) + 1]);
  return out;
}

}  // namespace

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  // highest exponent vectors first
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono = monomial_text(e, *p.chart());
    bool negative = false;
    std::string coeff;
    if (c.is_real()) {
      negative = sgn(c.re()) < 0;
      bool unit = abs(c.re()) == 1;
      coeff = unit && !mono.empty() ? "" : rational_magnitude(c.re());
    } else if (sgn(c.re()) == 0) {
      negative = sgn(c.im()) < 0;
      coeff = abs(c.im()) == 1 ? "i" : rational_magnitude(c.im()) + "*i";
    } else {
      std::string im = abs(c.im()) == 1 ? "i" : rational_magnitude(c.im()) + "*i";
      coeff = "(" + (sgn(c.re()) < 0 ? "-" : std::string()) + rational_magnitude(c.re()) +
              (sgn(c.im()) < 0 ? " - " : " + ") + im + ")";
    }
    std::string term = coeff;
    if (!mono.empty()) term = coeff.empty() ? mono : coeff + "*" + mono;
    if (first) {
      out = (negative ? "-" : "") + term;
      first = false;
    } else {
      out += (negative ? " - " : " + ") + term;
    }
  }
  return out;
}

}  // namespace pq
