#include "pseudoquant/dynamics/dynamics.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <numbers>
#include <ostream>
#include <sstream>

namespace pq::dyn {

namespace {

template <class F>
double trapezoid(const Grid1D& g, F&& f) {
  const int m = g.points();
  double sum = 0.5 * (f(0) + f(m - 1));
  for (int i = 1; i < m - 1; ++i) sum += f(i);
  return sum * g.spacing();
}

void check_state(const WaveState& s, const Grid1D& g) {
  if (static_cast<int>(s.samples.size()) != g.points())
    throw DomainError("state has " + std::to_string(s.samples.size()) + " samples, grid has " +
                      std::to_string(g.points()));
}

// Complex absorbing potential ramping quadratically over the outer layers.
double absorber(const EvolutionConfig& cfg, const Grid1D& g, int i) {
  if (cfg.boundary != Boundary::AbsorbingLayer) return 0.0;
  const double len = g.q_max() - g.q_min();
  const double width = cfg.absorb_fraction * len;
  const double q = g.node(i);
  double depth = std::max(g.q_min() + width - q, q - (g.q_max() - width));
  if (depth <= 0.0) return 0.0;
  double x = depth / width;
  return cfg.absorb_strength * x * x;
}

}  // namespace

Grid1D::Grid1D(double q_min, double q_max, int points) : q_min_(q_min), q_max_(q_max), points_(points) {
  if (points < 3) throw DomainError("grid needs at least 3 points");
  if (!std::isfinite(q_min) || !std::isfinite(q_max) || !(q_max > q_min))
    throw DomainError("grid needs finite bounds with q_max > q_min");
}

ClipResult clip_to_domain(const Grid1D& g, int n, double margin_fraction) {
  if (n < 0) throw DomainError("deformation order must be non-negative");
  if (n == 0 || n % 2 == 0) return {g, false, 0.0, 0.0};
  const double singular = -std::pow(0.5, 1.0 / n);
  const double margin = margin_fraction * (g.q_max() - g.q_min());
  const double lower = singular + margin;
  if (g.q_min() > lower) return {g, false, singular, margin};
  if (lower >= g.q_max()) throw DomainError("grid lies entirely inside the singular margin");
  int points = static_cast<int>(std::lround((g.q_max() - lower) / g.spacing())) + 1;
  return {Grid1D(lower, g.q_max(), std::max(points, 3)), true, singular, margin};
}

std::string to_string(Boundary b) { return b == Boundary::DirichletZero ? "dirichlet" : "absorbing"; }

Boundary parse_boundary(const std::string& s) {
  if (s == "dirichlet") return Boundary::DirichletZero;
  if (s == "absorbing") return Boundary::AbsorbingLayer;
  throw DomainError("unknown boundary '" + s + "'");
}

void EvolutionConfig::validate() const {
  if (n < 0) throw DomainError("deformation order must be non-negative");
  if (!(hbar > 0.0)) throw DomainError("hbar must be positive");
  if (!(dt > 0.0)) throw DomainError("dt must be positive");
  if (steps < 0) throw DomainError("steps must be non-negative");
  if (absorb_fraction <= 0.0 || absorb_fraction >= 0.5) throw DomainError("absorbing fraction must be in (0, 0.5)");
}

double inverse_weight(double q, int n) {
  if (n == 0) return 1.0;
  double base = 1.0 + 2.0 * std::pow(q, n);
  if (!(base > 0.0)) throw DomainError("singular node q = " + std::to_string(q) + " (1 + 2 q^n <= 0)");
  return std::pow(base, -1.5);
}

double weight(double q, int n) {
  if (n == 0) return 1.0;
  double base = 1.0 + 2.0 * std::pow(q, n);
  if (!(base > 0.0)) throw DomainError("singular node q = " + std::to_string(q) + " (1 + 2 q^n <= 0)");
  return std::pow(base, 1.5);
}

WaveState apply_hamiltonian(const WaveState& s, const EvolutionConfig& cfg, const Grid1D& g) {
  check_state(s, g);
  const int m = g.points();
  const double h = g.spacing();
  const double kinetic = -0.5 * cfg.hbar * cfg.hbar / (h * h);
  WaveState out{std::vector<cplx>(static_cast<std::size_t>(m), 0.0), s.time};
  const auto& psi = s.samples;
  for (int i = 1; i < m - 1; ++i) {
    const auto u = static_cast<std::size_t>(i);
    double c = kinetic * inverse_weight(g.node(i), cfg.n);
    out.samples[u] = c * (psi[u - 1] - 2.0 * psi[u] + psi[u + 1]) - cplx(0.0, absorber(cfg, g, i)) * psi[u];
  }
  return out;
}

Propagator::Propagator(const EvolutionConfig& cfg, const Grid1D& g) : cfg_(cfg), grid_(g) {
  cfg_.validate();
  const int m = g.points();
  const double h = g.spacing();
  const double kinetic = -0.5 * cfg.hbar * cfg.hbar / (h * h);
  const cplx ik(0.0, cfg.dt / (2.0 * cfg.hbar));
  const auto size = static_cast<std::size_t>(m);
  diag_.assign(size, 0.0);
  off_lo_.assign(size, 0.0);
  off_hi_.assign(size, 0.0);
  c_prime_.assign(size, 0.0);
  denom_.assign(size, 1.0);
  for (int i = 1; i < m - 1; ++i) {
    const auto u = static_cast<std::size_t>(i);
    double c = kinetic * inverse_weight(g.node(i), cfg.n);
    off_lo_[u] = c;
    off_hi_[u] = c;
    diag_[u] = -2.0 * c - cplx(0.0, absorber(cfg, g, i));
  }
  // forward sweep of (I + i k H) restricted to the interior
  for (int i = 1; i < m - 1; ++i) {
    const auto u = static_cast<std::size_t>(i);
    cplx lower = (i > 1) ? ik * off_lo_[u] : cplx(0.0);
    cplx d = 1.0 + ik * diag_[u] - lower * c_prime_[u - 1];
    if (d == cplx(0.0)) throw SolveError("zero pivot in tridiagonal solve at node " + std::to_string(i));
    denom_[u] = d;
    c_prime_[u] = (i < m - 2) ? ik * off_hi_[u] / d : cplx(0.0);
  }
}

void Propagator::step(WaveState& s) const {
  check_state(s, grid_);
  const int m = grid_.points();
  const cplx ik(0.0, cfg_.dt / (2.0 * cfg_.hbar));
  auto& psi = s.samples;
  std::vector<cplx> rhs(psi.size(), 0.0);
  for (int i = 1; i < m - 1; ++i) {
    const auto u = static_cast<std::size_t>(i);
    cplx h = off_lo_[u] * psi[u - 1] + diag_[u] * psi[u] + off_hi_[u] * psi[u + 1];
    rhs[u] = psi[u] - ik * h;
  }
  for (int i = 1; i < m - 1; ++i) {
    const auto u = static_cast<std::size_t>(i);
    cplx lower = (i > 1) ? ik * off_lo_[u] : cplx(0.0);
    rhs[u] = (rhs[u] - lower * rhs[u - 1]) / denom_[u];
  }
  psi.front() = 0.0;
  psi.back() = 0.0;
  for (int i = m - 2; i >= 1; --i) {
    const auto u = static_cast<std::size_t>(i);
    psi[u] = rhs[u] - c_prime_[u] * psi[u + 1];
  }
  s.time += cfg_.dt;
}

WaveState step(const WaveState& s, const EvolutionConfig& cfg, const Grid1D& g) {
  WaveState out = s;
  Propagator(cfg, g).step(out);
  return out;
}

double weighted_norm(const WaveState& s, const EvolutionConfig& cfg, const Grid1D& g) {
  check_state(s, g);
  return trapezoid(g, [&](int i) { return std::norm(s.samples[static_cast<std::size_t>(i)]) * weight(g.node(i), cfg.n); });
}

double l2_norm(const WaveState& s, const Grid1D& g) {
  check_state(s, g);
  return trapezoid(g, [&](int i) { return std::norm(s.samples[static_cast<std::size_t>(i)]); });
}

WaveState gaussian_state(const Grid1D& g, double q0, double p0, double sigma, double hbar) {
  if (!(sigma > 0.0)) throw DomainError("sigma must be positive");
  if (!(hbar > 0.0)) throw DomainError("hbar must be positive");
  WaveState s;
  s.samples.resize(static_cast<std::size_t>(g.points()));
  const double amp = std::pow(2.0 * std::numbers::pi * sigma * sigma, -0.25);
  for (int i = 0; i < g.points(); ++i) {
    const double q = g.node(i);
    const double d = q - q0;
    s.samples[static_cast<std::size_t>(i)] = amp * std::exp(cplx(-d * d / (4.0 * sigma * sigma), p0 * q / hbar));
  }
  s.samples.front() = 0.0;
  s.samples.back() = 0.0;
  return s;
}

double free_width(double sigma, double hbar, double t) {
  const double r = hbar * t / (2.0 * sigma * sigma);
  return sigma * std::sqrt(1.0 + r * r);
}

Moments position_moments(const WaveState& s, const EvolutionConfig& cfg, const Grid1D& g) {
  const double total = weighted_norm(s, cfg, g);
  if (!(total > 0.0)) throw DomainError("moments of a zero state");
  auto rho = [&](int i) { return std::norm(s.samples[static_cast<std::size_t>(i)]) * weight(g.node(i), cfg.n); };
  const double mean = trapezoid(g, [&](int i) { return g.node(i) * rho(i); }) / total;
  const double var = trapezoid(g, [&](int i) {
                       double d = g.node(i) - mean;
                       return d * d * rho(i);
                     }) / total;
  return {mean, var};
}

double boundary_mass(const WaveState& s, const Grid1D& g, int nodes) {
  const double total = l2_norm(s, g);
  if (!(total > 0.0)) return 0.0;
  const int m = g.points();
  nodes = std::min(nodes, m / 2);
  double edge = 0.0;
  for (int i = 0; i < nodes; ++i) {
    edge += std::norm(s.samples[static_cast<std::size_t>(i)]);
    edge += std::norm(s.samples[static_cast<std::size_t>(m - 1 - i)]);
  }
  return edge * g.spacing() / total;
}

EvolutionResult evolve(const WaveState& initial, const EvolutionConfig& cfg, const Grid1D& g, int record_every,
                       std::ostream* snapshot) {
  if (record_every < 1) throw DomainError("record interval must be >= 1");
  Propagator prop(cfg, g);
  EvolutionResult out{initial, {}, {}};
  bool warned = false;
  auto record = [&](const WaveState& s) {
    Moments mo = position_moments(s, cfg, g);
    out.series.push_back({s.time, weighted_norm(s, cfg, g), l2_norm(s, g), mo.mean, mo.variance});
    if (snapshot) write_snapshot(*snapshot, s);
    double edge = boundary_mass(s, g);
    if (!warned && edge > 1e-6) {
      std::ostringstream msg;
      msg << "packet mass " << edge << " within 5 nodes of the boundary at t = " << s.time;
      out.warnings.push_back(msg.str());
      warned = true;
    }
  };
  record(out.final_state);
  for (int k = 1; k <= cfg.steps; ++k) {
    prop.step(out.final_state);
    if (k % record_every == 0 || k == cfg.steps) record(out.final_state);
  }
  return out;
}

void write_csv(std::ostream& out, const std::vector<Sample>& series) {
  out << "t,weighted_norm,l2_norm,mean_q,var_q\n";
  out.precision(17);
  for (const auto& s : series)
    out << s.t << ',' << s.weighted_norm << ',' << s.l2_norm << ',' << s.mean_q << ',' << s.var_q << '\n';
}

void write_snapshot(std::ostream& out, const WaveState& s) {
  static_assert(sizeof(double) == 8);
  auto put = [&out](double x) {
    auto bits = std::bit_cast<std::uint64_t>(x);
    if constexpr (std::endian::native == std::endian::big) bits = __builtin_bswap64(bits);
    char buf[8];
    std::memcpy(buf, &bits, 8);
    out.write(buf, 8);
  };
  for (const auto& z : s.samples) {
    put(z.real());
    put(z.imag());
  }
}

}  // namespace pq::dyn
