#include "pseudoquant/symcore/random.hpp"

namespace pq {

Rational PolyGenerator::rational() {
  long num = uniform(-options_.max_numerator, options_.max_numerator);
  long den = uniform(1, options_.max_denominator);
  return make_rational(num, den);
}

Poly PolyGenerator::operator()(const ChartPtr& chart) {
  Poly p(chart);
  const long terms = uniform(1, options_.max_terms);
  const auto slots = static_cast<std::size_t>(chart->dim()) + 1;
  for (long t = 0; t < terms; ++t) {
    Poly::Exponents e(slots, 0);
    const long degree = uniform(0, options_.max_degree);
    for (long k = 0; k < degree; ++k) e[static_cast<std::size_t>(uniform(1, chart->dim()))] += 1;
    if (options_.allow_hbar && uniform(0, 3) == 0) e[0] = 1;
    Scalar c(rational(), options_.complex_coefficients && uniform(0, 2) == 0 ? rational() : Rational(0));
    p.add_term(e, c);
  }
  return p;
}

}  // namespace pq
