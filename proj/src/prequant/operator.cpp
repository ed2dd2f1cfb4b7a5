#include "pseudoquant/prequant/operator.hpp"

#include <algorithm>
#include <numeric>

namespace pq {

namespace {

std::size_t index_size(const ChartPtr& chart) { return static_cast<std::size_t>(chart->dim()); }

Poly nth_partial(Poly p, const FormalOperator::Index& k) {
  for (std::size_t c = 0; c < k.size() && !p.is_zero(); ++c) {
    for (std::uint32_t r = 0; r < k[c] && !p.is_zero(); ++r) p = partial(p, static_cast<int>(c));
  }
  return p;
}

Rational binomial(std::uint32_t n, std::uint32_t k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

}  // namespace

FormalOperator::FormalOperator(ChartPtr chart) : chart_(std::move(chart)) {
  if (!chart_) throw DomainError("operator without chart");
}

FormalOperator FormalOperator::identity(const ChartPtr& chart) { return multiplication(Poly(chart, Scalar(1))); }

FormalOperator FormalOperator::multiplication(const Poly& f) {
  FormalOperator op(f.chart());
  op.add_term(Index(index_size(f.chart()), 0), f);
  return op;
}

FormalOperator FormalOperator::derivation(const VectorField& x) {
  FormalOperator op(x.chart());
  for (int c = 0; c < x.chart()->dim(); ++c) {
    Index k(index_size(x.chart()), 0);
    k[static_cast<std::size_t>(c)] = 1;
    op.add_term(k, x[c]);
  }
  return op;
}

int FormalOperator::order() const {
  int o = -1;
  for (const auto& [k, c] : terms_) o = std::max(o, static_cast<int>(std::accumulate(k.begin(), k.end(), 0u)));
  return o;
}

Poly FormalOperator::coefficient(const Index& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Poly(chart_) : it->second;
}

Poly FormalOperator::zeroth() const { return coefficient(Index(index_size(chart_), 0)); }

void FormalOperator::add_term(const Index& k, const Poly& c) {
  require_same_chart(chart_, c.chart());
  if (k.size() != index_size(chart_)) throw DomainError("derivative index has wrong length");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FormalOperator FormalOperator::operator-() const {
  FormalOperator r(chart_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

FormalOperator& FormalOperator::operator+=(const FormalOperator& o) {
  require_same_chart(chart_, o.chart_);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

FormalOperator& FormalOperator::operator-=(const FormalOperator& o) {
  require_same_chart(chart_, o.chart_);
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

FormalOperator operator*(const FormalOperator& a, const FormalOperator& b) {
  // (f d^k)(g d^l) = f sum_{j <= k} C(k, j) (d^j g) d^{k - j + l}
  require_same_chart(a.chart_, b.chart_);
  FormalOperator r(a.chart_);
  const std::size_t dim = index_size(a.chart_);
  for (const auto& [k, f] : a.terms_) {
    for (const auto& [l, g] : b.terms_) {
      FormalOperator::Index j(dim, 0);
      for (;;) {
        Rational weight = 1;
        for (std::size_t c = 0; c < dim; ++c) weight *= binomial(k[c], j[c]);
        Poly dg = nth_partial(g, j);
        if (!dg.is_zero()) {
          FormalOperator::Index out(dim);
          for (std::size_t c = 0; c < dim; ++c) out[c] = k[c] - j[c] + l[c];
          r.add_term(out, f * dg * Scalar(weight));
        }
        // odometer over 0 <= j <= k
        std::size_t c = 0;
        while (c < dim && j[c] == k[c]) j[c++] = 0;
        if (c == dim) break;
        ++j[c];
      }
    }
  }
  return r;
}

FormalOperator operator*(const Poly& f, const FormalOperator& a) { return FormalOperator::multiplication(f) * a; }

FormalOperator operator*(const Scalar& s, const FormalOperator& a) {
  FormalOperator r(a.chart_);
  for (const auto& [k, c] : a.terms_) r.add_term(k, c * s);
  return r;
}

bool operator==(const FormalOperator& a, const FormalOperator& b) {
  return same_chart(a.chart_, b.chart_) && a.terms_ == b.terms_;
}

Poly FormalOperator::apply(const Poly& section) const {
  require_same_chart(chart_, section.chart());
  Poly r(chart_);
  for (const auto& [k, c] : terms_) r += c * nth_partial(section, k);
  return r;
}

FormalOperator commutator(const FormalOperator& a, const FormalOperator& b) { return a * b - b * a; }

FormalOperator divide_by_minus_i_hbar(const FormalOperator& op) {
  // 1/(-i) = i
  FormalOperator r(op.chart());
  for (const auto& [k, c] : op.terms()) r.add_term(k, divide_by_hbar(c) * Scalar::i());
  return r;
}

std::string to_string(const FormalOperator& op) {
  if (op.is_zero()) return "0";
  std::string out;
  const auto& chart = *op.chart();
  // highest derivative order first, identity term last
  std::vector<const FormalOperator::Terms::value_type*> ordered;
  for (const auto& t : op.terms()) ordered.push_back(&t);
  std::stable_sort(ordered.begin(), ordered.end(), [](auto* x, auto* y) {
    auto ox = std::accumulate(x->first.begin(), x->first.end(), 0u);
    auto oy = std::accumulate(y->first.begin(), y->first.end(), 0u);
    return ox > oy;
  });
  for (const auto* term : ordered) {
    const auto& [k, c] = *term;
    std::string deriv;
    for (int coord = 0; coord < chart.dim(); ++coord) {
      auto e = k[static_cast<std::size_t>(coord)];
      if (e == 0) continue;
      if (!deriv.empty()) deriv += "*";
      deriv += "d_" + chart.name(coord);
      if (e > 1) deriv += "^" + std::to_string(e);
    }
    std::string coeff = to_string(c);
    std::string piece;
    if (deriv.empty())
      piece = c.size() == 1 ? coeff : "(" + coeff + ")";
    else if (coeff == "1")
      piece = deriv;
    else if (coeff == "-1")
      piece = "-" + deriv;
    else
      piece = (c.size() == 1 ? coeff : "(" + coeff + ")") + "*" + deriv;
    if (out.empty()) {
      out = piece;
    } else if (piece.front() == '-') {
      out += " - " + piece.substr(1);
    } else {
      out += " + " + piece;
    }
  }
  return out;
}

}  // namespace pq
