#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "pseudoquant/dynamics/dynamics.hpp"

using namespace pq;
using namespace pq::dyn;

namespace {

double max_error_vs_free(const WaveState& s, const Grid1D& g, double t, double sigma) {
  double err = 0.0;
  for (int i = 1; i + 1 < g.points(); ++i)
    err = std::max(err, std::abs(s.samples[static_cast<std::size_t>(i)] -
                                 oracle::free_gaussian(g.node(i), t, 0.0, 1.0, sigma, 1.0)));
  return err;
}

WaveState evolve_free(int points, double dt, double t_end, double sigma) {
  Grid1D g(-10.0, 10.0, points);
  EvolutionConfig cfg;
  cfg.dt = dt;
  cfg.steps = static_cast<int>(std::lround(t_end / dt));
  WaveState s = gaussian_state(g, 0.0, 1.0, sigma, 1.0);
  Propagator prop(cfg, g);
  for (int k = 0; k < cfg.steps; ++k) prop.step(s);
  return s;
}

}  // namespace

TEST(Grid, ValidatesInput) {
  EXPECT_THROW(Grid1D(0, 1, 2), DomainError);
  EXPECT_THROW(Grid1D(1, 1, 10), DomainError);
  Grid1D g(-1, 1, 5);
  EXPECT_DOUBLE_EQ(g.spacing(), 0.5);
  EXPECT_DOUBLE_EQ(g.node(4), 1.0);
}

TEST(Config, ValidatesInput) {
  EvolutionConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.dt = 0;
  EXPECT_THROW(cfg.validate(), DomainError);
  cfg = {};
  cfg.hbar = -1;
  EXPECT_THROW(cfg.validate(), DomainError);
  cfg = {};
  cfg.absorb_fraction = 0.7;
  EXPECT_THROW(cfg.validate(), DomainError);
  EXPECT_EQ(parse_boundary(to_string(Boundary::AbsorbingLayer)), Boundary::AbsorbingLayer);
  EXPECT_THROW(parse_boundary("periodic"), DomainError);
}

TEST(Hamiltonian, ZeroStateStaysZero) {
  Grid1D g(-3, 3, 61);
  EvolutionConfig cfg;
  cfg.n = 2;
  WaveState z{std::vector<cplx>(61, 0.0), 0.0};
  for (auto v : apply_hamiltonian(z, cfg, g).samples) EXPECT_EQ(v, cplx(0.0));
  WaveState s = z;
  Propagator(cfg, g).step(s);
  for (auto v : s.samples) EXPECT_EQ(v, cplx(0.0));
  EXPECT_DOUBLE_EQ(s.time, cfg.dt);
}

TEST(Hamiltonian, ConstantInteriorIsAnnihilated) {
  Grid1D g(-2, 2, 41);
  EvolutionConfig cfg;
  cfg.n = 2;
  WaveState one{std::vector<cplx>(41, 1.0), 0.0};
  auto h = apply_hamiltonian(one, cfg, g);
  for (int i = 1; i < 40; ++i) EXPECT_EQ(h.samples[static_cast<std::size_t>(i)], cplx(0.0));
}

TEST(Hamiltonian, SecondOrderAccurate) {
  // H sin(k q) = (hbar^2 k^2 / 2) w^(-1) sin(k q)
  auto error = [](int points, int n) {
    Grid1D g(-1.0, 1.0, points);
    EvolutionConfig cfg;
    cfg.n = n;
    cfg.hbar = 0.8;
    const double k = 2.0;
    WaveState s;
    for (int i = 0; i < points; ++i) s.samples.emplace_back(std::sin(k * g.node(i)));
    auto h = apply_hamiltonian(s, cfg, g);
    double err = 0.0;
    for (int i = 1; i + 1 < points; ++i) {
      double exact = 0.5 * cfg.hbar * cfg.hbar * k * k * inverse_weight(g.node(i), n) * std::sin(k * g.node(i));
      err = std::max(err, std::abs(h.samples[static_cast<std::size_t>(i)] - exact));
    }
    return err;
  };
  for (int n : {0, 2}) {
    double ratio = error(101, n) / error(201, n);
    EXPECT_GT(ratio, 3.8) << n;
    EXPECT_LT(ratio, 4.2) << n;
  }
}

TEST(Weights, SingularNodesThrow) {
  EXPECT_EQ(inverse_weight(123.0, 0), 1.0);
  EXPECT_DOUBLE_EQ(weight(1.0, 2), std::pow(3.0, 1.5));
  EXPECT_DOUBLE_EQ(weight(0.5, 1) * inverse_weight(0.5, 1), 1.0);
  EXPECT_THROW(inverse_weight(-0.5, 1), DomainError);
  EXPECT_THROW(weight(-1.0, 3), DomainError);
}

TEST(FreeEvolution, WidthMatchesClosedForm) {
  Grid1D g(-10.0, 10.0, 2048);
  EvolutionConfig cfg;
  cfg.dt = 1e-3;
  cfg.steps = 1000;
  const double sigma = 0.5;
  auto res = evolve(gaussian_state(g, 0.0, 0.0, sigma, 1.0), cfg, g, 100);
  ASSERT_EQ(res.series.size(), 11u);
  for (const auto& smp : res.series) {
    double width = std::sqrt(smp.var_q);
    EXPECT_NEAR(width, oracle::free_gaussian_width(sigma, 1.0, smp.t), 1e-4) << smp.t;
  }
  EXPECT_NEAR(res.series.back().t, 1.0, 1e-12);
  EXPECT_TRUE(res.warnings.empty());
  EXPECT_DOUBLE_EQ(free_width(sigma, 1.0, 1.0), oracle::free_gaussian_width(sigma, 1.0, 1.0));
}

TEST(FreeEvolution, ConvergesAtSecondOrder) {
  const double sigma = 0.7, t = 0.5;
  double e1 = max_error_vs_free(evolve_free(401, 0.02, t, sigma), Grid1D(-10, 10, 401), t, sigma);
  double e2 = max_error_vs_free(evolve_free(801, 0.01, t, sigma), Grid1D(-10, 10, 801), t, sigma);
  double ratio = e1 / e2;
  EXPECT_GE(ratio, 3.0) << e1 << " " << e2;
  EXPECT_LE(ratio, 5.0) << e1 << " " << e2;
}

TEST(FreeEvolution, MatchesPlainStepBitForBit) {
  Grid1D g(-5.0, 5.0, 257);
  EvolutionConfig cfg;
  cfg.dt = 2e-3;
  cfg.hbar = 0.9;
  WaveState s = gaussian_state(g, 0.3, 1.5, 0.6, cfg.hbar);
  std::vector<cplx> plain = s.samples;
  Propagator prop(cfg, g);
  for (int k = 0; k < 50; ++k) {
    prop.step(s);
    oracle::plain_free_cn_step(plain, g.spacing(), cfg.dt, cfg.hbar);
  }
  for (std::size_t i = 0; i < plain.size(); ++i) {
    EXPECT_EQ(s.samples[i].real(), plain[i].real()) << i;
    EXPECT_EQ(s.samples[i].imag(), plain[i].imag()) << i;
  }
}

TEST(DeformedEvolution, WeightedNormIsConserved) {
  Grid1D g(-6.0, 6.0, 801);
  EvolutionConfig cfg;
  cfg.n = 2;
  cfg.dt = 1e-3;
  cfg.steps = 1000;
  auto init = gaussian_state(g, 0.5, 1.0, 0.5, 1.0);
  auto res = evolve(init, cfg, g, 1);
  const double w0 = res.series.front().weighted_norm;
  const double l0 = res.series.front().l2_norm;
  double worst_step = 0.0;
  for (std::size_t k = 1; k < res.series.size(); ++k)
    worst_step = std::max(worst_step, std::abs(res.series[k].weighted_norm - res.series[k - 1].weighted_norm) / w0);
  EXPECT_LT(std::abs(res.series.back().weighted_norm - w0) / w0, 1e-8);
  EXPECT_LT(worst_step, 1e-10);
  // the plain L2 norm is not an invariant of the deformed flow
  EXPECT_GT(std::abs(res.series.back().l2_norm - l0) / l0, 1e-6);
}

class WeightedNormProperty : public ::testing::TestWithParam<int> {};

TEST_P(WeightedNormProperty, HoldsForRandomPackets) {
  const int n = GetParam();
  std::mt19937_64 rng(600 + n);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Grid1D base(-4.0, 4.0, 401);
  auto clip = clip_to_domain(base, n);
  EvolutionConfig cfg;
  cfg.n = n;
  cfg.steps = 200;
  for (int k = 0; k < 5; ++k) {
    double q0 = 0.5 + 0.5 * u(rng), p0 = 2.0 * u(rng), sigma = 0.4 + 0.1 * u(rng);
    auto res = evolve(gaussian_state(clip.grid, q0, p0, sigma, 1.0), cfg, clip.grid, 50);
    double w0 = res.series.front().weighted_norm;
    EXPECT_LT(std::abs(res.series.back().weighted_norm - w0) / w0, 1e-10) << "n=" << n << " k=" << k;
  }
}

INSTANTIATE_TEST_SUITE_P(Orders, WeightedNormProperty, ::testing::Values(0, 1, 2, 3, 4));

TEST(Domain, OddOrdersAreClipped) {
  Grid1D g(-2.0, 2.0, 401);
  auto c1 = clip_to_domain(g, 1);
  EXPECT_TRUE(c1.clipped);
  EXPECT_DOUBLE_EQ(c1.singular_point, -0.5);
  EXPECT_NEAR(c1.grid.q_min(), -0.5 + 0.4, 1e-12);
  EXPECT_NEAR(c1.grid.spacing(), g.spacing(), 1e-3);
  auto c2 = clip_to_domain(g, 2);
  EXPECT_FALSE(c2.clipped);
  EXPECT_EQ(c2.grid.points(), 401);
  EXPECT_FALSE(clip_to_domain(Grid1D(0.0, 1.0, 11), 3).clipped);
  EXPECT_THROW(clip_to_domain(Grid1D(-3.0, -0.9, 11), 1), DomainError);
  EvolutionConfig cfg;
  cfg.n = 1;
  EXPECT_THROW(Propagator(cfg, g), DomainError);
}

TEST(Boundary, WarnsWhenPacketReachesEdge) {
  Grid1D g(-3.0, 3.0, 301);
  EvolutionConfig cfg;
  cfg.steps = 400;
  cfg.dt = 5e-3;
  auto res = evolve(gaussian_state(g, 1.0, 6.0, 0.3, 1.0), cfg, g, 20);
  ASSERT_EQ(res.warnings.size(), 1u);
  EXPECT_NE(res.warnings[0].find("boundary"), std::string::npos);
}

TEST(Boundary, AbsorbingLayerRemovesOutgoingMass) {
  Grid1D g(-6.0, 6.0, 601);
  EvolutionConfig cfg;
  cfg.steps = 600;
  cfg.dt = 5e-3;
  auto init = gaussian_state(g, 2.0, 5.0, 0.4, 1.0);
  auto closed = evolve(init, cfg, g, 600);
  cfg.boundary = Boundary::AbsorbingLayer;
  cfg.absorb_strength = 5.0;
  auto open = evolve(init, cfg, g, 600);
  EXPECT_NEAR(closed.series.back().l2_norm, closed.series.front().l2_norm, 1e-10);
  EXPECT_LT(open.series.back().l2_norm, 0.5 * open.series.front().l2_norm);
}

TEST(Snapshot, LittleEndianPairs) {
  WaveState s{{cplx(1.5, -2.0), cplx(0.25, 8.0)}, 0.0};
  std::ostringstream out;
  write_snapshot(out, s);
  std::string bytes = out.str();
  ASSERT_EQ(bytes.size(), 32u);
  const double expect[4] = {1.5, -2.0, 0.25, 8.0};
  for (int k = 0; k < 4; ++k) {
    std::uint64_t bits = 0;
    for (int b = 7; b >= 0; --b) bits = (bits << 8) | static_cast<unsigned char>(bytes[static_cast<std::size_t>(8 * k + b)]);
    double v;
    std::memcpy(&v, &bits, 8);
    EXPECT_EQ(v, expect[k]);
  }
}

TEST(Snapshot, OneRowPerRecord) {
  Grid1D g(-1.0, 1.0, 11);
  EvolutionConfig cfg;
  cfg.steps = 10;
  std::ostringstream snap, csv;
  auto res = evolve(gaussian_state(g, 0.0, 0.0, 0.3, 1.0), cfg, g, 5, &snap);
  EXPECT_EQ(res.series.size(), 3u);
  EXPECT_EQ(snap.str().size(), 3u * 11u * 16u);
  write_csv(csv, res.series);
  std::istringstream lines(csv.str());
  std::string first;
  std::getline(lines, first);
  EXPECT_EQ(first, "t,weighted_norm,l2_norm,mean_q,var_q");
}

TEST(Moments, ZeroStateRejected) {
  Grid1D g(-1.0, 1.0, 11);
  WaveState z{std::vector<cplx>(11, 0.0), 0.0};
  EXPECT_THROW(position_moments(z, EvolutionConfig{}, g), DomainError);
  EXPECT_EQ(boundary_mass(z, g), 0.0);
  WaveState bad{std::vector<cplx>(5, 0.0), 0.0};
  EXPECT_THROW(l2_norm(bad, g), DomainError);
}
