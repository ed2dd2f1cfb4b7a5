#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "pseudoquant/bks/bks.hpp"
#include "pseudoquant/bks/oscillatory.hpp"
#include "pseudoquant/symcore/parse.hpp"

using namespace pq;
using namespace pq::bks;

namespace {

Rational r(long a, long b = 1) { return make_rational(a, b); }

}  // namespace

TEST(Exponent, WorkedValues) {
  EXPECT_EQ(exponent(1, 0, 0), r(-1));
  EXPECT_EQ(exponent(2, 1, 0), r(1, 4));
  EXPECT_EQ(critical_j(1, 0), r(3));
  EXPECT_EQ(critical_j(2, 0), r(3, 2));
  EXPECT_EQ(exponent(1, 2, 0), r(1));
  EXPECT_EQ(classify_exponent(exponent(1, 2, 0)), TermClass::Vanishes);
  EXPECT_EQ(classify_exponent(exponent(1, 0, 0)), TermClass::Diverges);
  EXPECT_EQ(classify_exponent(exponent(1, 0, 3)), TermClass::FiniteCandidate);
}

TEST(Exponent, CriticalJIsTheZero) {
  for (int n = 1; n <= 8; ++n) {
    for (int m = 0; m <= 4; ++m) {
      Rational jc = critical_j(n, m);
      // e is affine in j with slope n/(n+2)
      Rational e0 = exponent(n, m, 0);
      Rational slope = r(n, n + 2);
      Rational at = e0 + slope * jc;
      EXPECT_EQ(sgn(at), 0) << "n=" << n << " m=" << m;
      if (is_integer(jc) && jc >= 0) {
        EXPECT_EQ(exponent(n, m, static_cast<int>(jc.get_num().get_si())), r(0));
      }
    }
  }
}

TEST(Exponent, IncreasesWithJAndM) {
  for (int n = 1; n <= 6; ++n)
    for (int m = 0; m <= 3; ++m)
      for (int j = 0; j < 6; ++j) {
        EXPECT_LT(exponent(n, m, j), exponent(n, m, j + 1));
        EXPECT_LT(exponent(n, m, j), exponent(n, m + 1, j));
      }
}

TEST(Exponent, RederivedBookkeeping) {
  for (int n = 1; n <= 6; ++n)
    for (int m = 0; m <= 2; ++m)
      for (int j = 0; j <= 4; ++j) {
        Rational expect = r(-1, 2) + m - r(1, n + 2) + r(static_cast<long>(j) * n, n + 2);
        EXPECT_EQ(rederived_exponent(n, m, j), expect);
      }
  // the two bookkeepings agree only at n = 2
  EXPECT_EQ(exponent(2, 0, 0), rederived_exponent(2, 0, 0));
  EXPECT_NE(exponent(1, 0, 0), rederived_exponent(1, 0, 0));
  EXPECT_EQ(rederived_exponent(1, 0, 0), r(-5, 6));
}

TEST(Exponent, RejectsBadIndices) {
  EXPECT_THROW(exponent(0, 0, 0), DomainError);
  EXPECT_THROW(exponent(1, -1, 0), DomainError);
  EXPECT_THROW(critical_j(1, -2), DomainError);
}

TEST(TauMonomialAlgebra, PowersAndProducts) {
  TauMonomial a{r(1, 3), 2};
  EXPECT_EQ(pow(a, 3), (TauMonomial{r(1), 6}));
  EXPECT_EQ(pow(a, 0), TauMonomial{});
  EXPECT_EQ(limit_status({r(0), 4}), LimitStatus::ConstantInTau);
  EXPECT_EQ(limit_status({r(1, 2), 1}), LimitStatus::OddMoment);
  EXPECT_EQ(limit_status({r(1, 2), 2}), LimitStatus::Diverges);
  EXPECT_EQ(limit_status({r(1), 2}), LimitStatus::Finite);
  EXPECT_EQ(limit_status({r(3, 2), 0}), LimitStatus::Vanishes);
}

TEST(Classification, MomentumTableShape) {
  DeformationSpec d{DeformationKind::Momentum, 1, 1, 1.0};
  auto t = classify_pairing(d, 2);
  EXPECT_FALSE(t.converges);
  // m = 0: j' = 3 gives j = 0..4; m = 1: j' = 0 gives 0..1; m = 2: j' < 0 gives 0..1
  EXPECT_EQ(t.terms.size(), 5u + 2u + 2u);
  for (const auto& term : t.terms) {
    EXPECT_EQ(term.classification, classify_exponent(term.exponent));
    ASSERT_TRUE(term.mu_moment.has_value());
  }
  DeformationSpec bad = d;
  bad.kind = DeformationKind::Position;
  EXPECT_THROW(classify_pairing(bad, 1), DomainError);
  bad = d;
  bad.lambda = 0;
  EXPECT_THROW(classify_pairing(bad, 1), DomainError);
}

TEST(Classification, DeformationKindNames) {
  for (auto k : {DeformationKind::None, DeformationKind::Momentum, DeformationKind::Position})
    EXPECT_EQ(parse_deformation_kind(to_string(k)), k);
  EXPECT_THROW(parse_deformation_kind("folded"), DomainError);
}

// --- oscillatory moments ---------------------------------------------------

TEST(Oscillatory, FresnelClosedForms) {
  const double pi = std::numbers::pi;
  // integral exp(i mu^2) = sqrt(pi) e^(i pi/4)
  auto g = oscillatory_moment(0, 2, 1.0);
  EXPECT_NEAR(g.real(), std::sqrt(pi / 2), 1e-14);
  EXPECT_NEAR(g.imag(), std::sqrt(pi / 2), 1e-14);
  // conjugate for negative a
  auto h = oscillatory_moment(0, 2, -1.0);
  EXPECT_NEAR(h.imag(), -std::sqrt(pi / 2), 1e-14);
  // integral exp(i a mu^3) = 2 Gamma(1/3) / 3 a^(-1/3) cos(pi/6), purely real
  auto c = oscillatory_moment(0, 3, 2.0);
  EXPECT_NEAR(c.real(), 2.0 * std::tgamma(1.0 / 3) / 3.0 * std::pow(2.0, -1.0 / 3) * std::cos(pi / 6), 1e-14);
  EXPECT_NEAR(c.imag(), 0.0, 1e-15);
}

TEST(Oscillatory, GaussianDerivativeRelation) {
  // d/da of the k = 2 moment is i times the next moment
  for (int j = 0; j <= 3; ++j) {
    const double a = 0.8, h = 1e-5;
    auto d = (oscillatory_moment(j, 2, a + h) - oscillatory_moment(j, 2, a - h)) / (2 * h);
    auto rhs = std::complex<double>(0, 1) * oscillatory_moment(j + 1, 2, a);
    EXPECT_NEAR(std::abs(d - rhs), 0.0, 1e-7 * std::abs(rhs)) << j;
  }
}

TEST(Oscillatory, RejectsInvalidArguments) {
  EXPECT_THROW(oscillatory_moment(-1, 2, 1.0), DomainError);
  EXPECT_THROW(oscillatory_moment(0, 1, 1.0), DomainError);
  EXPECT_THROW(oscillatory_moment(0, 2, 0.0), DomainError);
  EXPECT_THROW(oscillatory_moment(0, 2, std::nan("")), DomainError);
}

class OscillatoryOracle : public ::testing::TestWithParam<std::tuple<int, int, double>> {};

TEST_P(OscillatoryOracle, MatchesRegulatedQuadrature) {
  auto [j, k, a] = GetParam();
  auto exact = oscillatory_moment(j, k, a);
  auto ref = oracle::extrapolated_moment(j, k, a);
  double scale = std::max(std::abs(ref), 1e-3);
  EXPECT_LT(std::abs(exact - ref) / scale, 1e-8) << "exact " << exact << " oracle " << ref;
}

INSTANTIATE_TEST_SUITE_P(Grid, OscillatoryOracle,
                         ::testing::Combine(::testing::Values(0, 1, 2, 3), ::testing::Values(2, 3, 4, 5, 6),
                                            ::testing::Values(0.5, 1.0, 2.0, -1.0)));

// --- pairings ---------------------------------------------------------------

TEST(PositionPairing, WeightedKineticCoefficient) {
  for (int n : {1, 2, 3, 4}) {
    for (double hbar : {1.0, 0.3}) {
      auto res = position_pairing(n, {0.0, 0.5, 1.0}, hbar);
      EXPECT_TRUE(res.converges);
      for (auto [b, k] : res.samples) {
        double expect = -0.5 * hbar * hbar * std::pow(1.0 + 2.0 * std::pow(b, n), -1.5);
        EXPECT_NEAR(k.real(), expect, 1e-12) << "n=" << n << " beta=" << b;
        EXPECT_NEAR(k.imag(), 0.0, 1e-12);
      }
    }
  }
}

TEST(PositionPairing, RatioAtOne) {
  auto res = position_pairing(2, {0.0, 1.0}, 1.0);
  double ratio = res.samples[1].second.real() / res.samples[0].second.real();
  EXPECT_NEAR(ratio, std::pow(3.0, -1.5), 1e-12);
}

TEST(PositionPairing, RejectsSingularSamples) {
  EXPECT_THROW(position_pairing(1, {-0.5}, 1.0), DomainError);
  EXPECT_THROW(position_pairing(3, {-1.0}, 1.0), DomainError);
  EXPECT_NO_THROW(position_pairing(2, {-1.0}, 1.0));
  EXPECT_THROW(position_pairing(2, {0.0}, -1.0), DomainError);
  auto res = position_pairing(1, {}, 1.0);
  EXPECT_THROW(res.effective_coefficient(-0.6), DomainError);
}

TEST(StandardCheck, FreeAndLinearPotential) {
  auto c = canonical_chart(1);
  for (const char* v : {"0", "q1", "q1^2 - 3", "(1/2)*q1^4"}) {
    Poly vp = parse_poly(v, c);
    auto res = standard_schrodinger_check(vp, 1.0);
    EXPECT_TRUE(res.converges) << v;
    for (double b : {-1.0, 0.0, 2.0}) {
      EXPECT_NEAR(std::abs(res.effective_coefficient(b) - std::complex<double>(-0.5)), 0.0, 1e-13);
      std::vector<double> x{0.0, b};
      EXPECT_NEAR(std::abs(res.potential(b) - vp.evaluate(x, 1.0)), 0.0, 1e-12) << v << " at " << b;
    }
  }
}

TEST(StandardCheck, TermStatuses) {
  auto c = canonical_chart(1);
  auto res = standard_schrodinger_check(parse_poly("q1", c), 1.0);
  for (const auto& t : res.terms) {
    if (t.power.mu_power % 2 != 0 && t.power.tau_power != 0) {
      EXPECT_EQ(t.status, LimitStatus::OddMoment);
    }
    if (t.lambda >= 3 && t.power.mu_power % 2 == 0) {
      EXPECT_EQ(t.status, LimitStatus::Vanishes);
    }
  }
  EXPECT_THROW(standard_schrodinger_check(parse_poly("p1", c), 1.0), DomainError);
  EXPECT_THROW(standard_schrodinger_check(parse_poly("hbar*q1", c), 1.0), DomainError);
}
