#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pseudoquant/symcore/scalar.hpp"

namespace pq::dyn {

using cplx = std::complex<double>;

class SolveError : public Error {
 public:
  using Error::Error;
};

/// Uniform grid on [q_min, q_max] with `points` nodes.
class Grid1D {
 public:
  Grid1D(double q_min, double q_max, int points);

  double q_min() const { return q_min_; }
  double q_max() const { return q_max_; }
  int points() const { return points_; }
  double spacing() const { return (q_max_ - q_min_) / (points_ - 1); }
  double node(int i) const { return q_min_ + i * spacing(); }

 private:
  double q_min_, q_max_;
  int points_;
};

struct ClipResult {
  Grid1D grid;
  bool clipped = false;
  double singular_point = 0.0;  ///< -(1/2)^(1/n) for odd n
  double margin = 0.0;          ///< distance kept from the singular point
};

/// For odd n moves q_min above -(1/2)^(1/n) + margin_fraction * (q_max - q_min),
/// keeping the spacing as close as possible. Even n and n = 0 pass through.
ClipResult clip_to_domain(const Grid1D& g, int n, double margin_fraction = 0.1);

enum class Boundary { DirichletZero, AbsorbingLayer };
std::string to_string(Boundary b);
Boundary parse_boundary(const std::string& s);

struct EvolutionConfig {
  int n = 0;  ///< deformation order; 0 is the free equation
  double hbar = 1.0;
  double dt = 1e-3;
  int steps = 1000;
  Boundary boundary = Boundary::DirichletZero;
  double absorb_strength = 1.0;  ///< peak of the complex absorbing potential
  double absorb_fraction = 0.1;  ///< fraction of the domain covered at each end

  void validate() const;
};

struct WaveState {
  std::vector<cplx> samples;
  double time = 0.0;
};

/// (1 + 2 q^n)^(-3/2), exactly 1 for n = 0. Throws DomainError at singular nodes.
double inverse_weight(double q, int n);
/// (1 + 2 q^n)^(3/2)
double weight(double q, int n);

/// H psi = -(hbar^2/2) (1 + 2 q^n)^(-3/2) psi'' by centred differences; zero at the end nodes.
WaveState apply_hamiltonian(const WaveState& s, const EvolutionConfig& cfg, const Grid1D& g);

/// Crank-Nicolson stepper with the tridiagonal factors precomputed.
class Propagator {
 public:
  Propagator(const EvolutionConfig& cfg, const Grid1D& g);
  void step(WaveState& s) const;
  const Grid1D& grid() const { return grid_; }

 private:
  EvolutionConfig cfg_;
  Grid1D grid_;
  std::vector<cplx> diag_, off_lo_, off_hi_;  // H entries per node
  std::vector<cplx> c_prime_;                 // Thomas forward sweep factors for I + i k H
  std::vector<cplx> denom_;
};

/// One implicit trapezoidal step of i hbar psi_t = H psi.
WaveState step(const WaveState& s, const EvolutionConfig& cfg, const Grid1D& g);

/// Trapezoid sum of |psi|^2 (1 + 2 q^n)^(3/2).
double weighted_norm(const WaveState& s, const EvolutionConfig& cfg, const Grid1D& g);
/// Trapezoid sum of |psi|^2.
double l2_norm(const WaveState& s, const Grid1D& g);

/// (2 pi sigma^2)^(-1/4) exp(-(q - q0)^2 / (4 sigma^2) + i p0 q / hbar), end nodes zeroed.
WaveState gaussian_state(const Grid1D& g, double q0, double p0, double sigma, double hbar);

/// Free-particle width sigma sqrt(1 + (hbar t / (2 sigma^2))^2).
double free_width(double sigma, double hbar, double t);

struct Moments {
  double mean = 0.0;
  double variance = 0.0;
};
/// Mean and variance of q under the normalised weighted density.
Moments position_moments(const WaveState& s, const EvolutionConfig& cfg, const Grid1D& g);

/// Probability within `nodes` nodes of either end, relative to the total L2 mass.
double boundary_mass(const WaveState& s, const Grid1D& g, int nodes = 5);

struct Sample {
  double t = 0.0;
  double weighted_norm = 0.0;
  double l2_norm = 0.0;
  double mean_q = 0.0;
  double var_q = 0.0;
};

struct EvolutionResult {
  WaveState final_state;
  std::vector<Sample> series;
  std::vector<std::string> warnings;
};

/// Runs cfg.steps steps, recording every `record_every` steps (and the endpoints).
/// `snapshot` receives each recorded state when non-null.
EvolutionResult evolve(const WaveState& initial, const EvolutionConfig& cfg, const Grid1D& g, int record_every = 1,
                       std::ostream* snapshot = nullptr);

void write_csv(std::ostream& out, const std::vector<Sample>& series);
/// One row per state: little-endian float64 re, im interleaved per node.
void write_snapshot(std::ostream& out, const WaveState& s);

}  // namespace pq::dyn
