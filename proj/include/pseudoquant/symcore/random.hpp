#pragma once

#include <cstdint>
#include <random>

#include "pseudoquant/symcore/poly.hpp"

namespace pq {

/// Random polynomial generator for property sweeps. Draws are taken with
/// plain modular reduction of the engine output so that a given seed yields
/// the same polynomials on every standard library.
class PolyGenerator {
 public:
  struct Options {
    int max_degree = 3;    ///< total degree in the chart coordinates
    int max_terms = 4;
    int max_numerator = 3;
    int max_denominator = 3;
    bool complex_coefficients = false;
    bool allow_hbar = false;
  };

  explicit PolyGenerator(std::uint64_t seed) : engine_(seed) {}
  PolyGenerator(std::uint64_t seed, Options options) : engine_(seed), options_(options) {}

  Poly operator()(const ChartPtr& chart);

 private:
  long uniform(long lo, long hi) {
    return lo + static_cast<long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  Rational rational();

  std::mt19937_64 engine_;
  Options options_;
};

}  // namespace pq
