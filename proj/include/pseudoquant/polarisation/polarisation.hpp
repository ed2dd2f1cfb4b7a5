#pragma once

#include <map>
#include <string>
#include <vector>

#include "pseudoquant/prequant/prequant.hpp"

namespace pq {

class NonAdaptedGauge : public Error {
 public:
  using Error::Error;
};

/// Vertical polarisation spanned by X_{beta_i} = -d/d alpha_i in a gauge
/// adapted to it (Theta(X_{beta_i}) = 0), so flat sections are functions
/// F(beta) of the positions alone.
class Polarisation {
 public:
  /// Verifies the adapted-gauge condition exactly; throws NonAdaptedGauge.
  explicit Polarisation(const ConnectionData& c);

  const ChartPtr& chart() const { return chart_; }
  /// Pair indices i whose beta_i the flat sections depend on (all of them).
  const std::vector<int>& flat_coords() const { return flat_; }

 private:
  ChartPtr chart_;
  std::vector<int> flat_;
};

/// Action on flat sections:  Op F(beta) = sum_k c_k(alpha, beta) d_beta^k F,
/// keyed by multi-indices over the flat coordinates.
struct FlatSectionAction {
  using Index = std::vector<std::uint32_t>;
  std::map<Index, Poly> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  /// Every coefficient is free of the leaf (alpha) coordinates.
  bool alpha_free(const Chart& chart) const;
  friend bool operator==(const FlatSectionAction&, const FlatSectionAction&) = default;
};

FlatSectionAction flat_action(const FormalOperator& op, const Polarisation& p);

enum class ScalingCase { Standard, PolarisedScaled, GeneralScaled };
std::string to_string(ScalingCase c);
ScalingCase parse_scaling_case(const std::string& s);

/// Classifies a connection: Standard when Omega = omega, PolarisedScaled when
/// Omega = (1 + f) omega with f free of alpha, GeneralScaled otherwise.
ScalingCase infer_case(const ConnectionData& c);

struct PreservationReport {
  Poly observable;
  bool preserves = false;
  /// Flat action of L_i = quantise({A, beta_i}) - Omega(X_A, X_{beta_i}) per flat index i.
  std::vector<FlatSectionAction> residuals;
  ScalingCase scaling = ScalingCase::Standard;
};

/// Decides whether A-breve maps flat sections to flat sections: every L_i
/// must annihilate all flat sections, i.e. its flat action vanishes.
PreservationReport preserves(const Poly& a, const ConnectionData& c, const Polarisation& p);
PreservationReport preserves(const Poly& a, const ConnectionData& c, const Polarisation& p, ScalingCase tag);

/// Residual of  -i hbar nabla_{X_{A,beta_i}} + d gamma(X_A, X_{beta_i})  on
/// flat sections, for Omega = omega - d gamma (cohomologous curvature).
std::vector<FlatSectionAction> cohomologous_residuals(const Poly& a, const ConnectionData& c, const OneForm& gamma,
                                                      const Polarisation& p);

struct MonomialVerdict {
  int m = 0;  ///< power of alpha_1
  int n = 0;  ///< power of beta_1
  PreservationReport report;
};

/// Preservation of A = alpha_1^m beta_1^n for 0 <= m <= m_max, 0 <= n <= n_max
/// under Theta = (1 + f) theta. The deformation must match the case tag:
/// zero for Standard, alpha-free for PolarisedScaled.
std::vector<MonomialVerdict> classify_monomials(int m_max, int n_max, const Poly& deformation, ScalingCase tag);

/// One-degree-of-freedom residual of the displayed general-scaled condition
///   p_alpha ((1 + f + f_alpha) alpha F + i hbar F') + f p F,   p = {A, beta},
/// kept as an independent cross-check of the verdict of preserves().
FlatSectionAction general_scaled_display_residual(const Poly& a, const Poly& f);

}  // namespace pq
