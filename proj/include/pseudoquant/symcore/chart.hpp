#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pq {

/// A single canonical chart with coordinates (alpha_1..alpha_n, beta_1..beta_n)
/// and symplectic form omega = sum_i d alpha_i ^ d beta_i.
///
/// Coordinates are addressed by a flat index: alpha_i -> i, beta_i -> n + i.
/// The formal parameter hbar is not a coordinate; polynomials carry it as an
/// extra variable.
class Chart {
 public:
  Chart(std::vector<std::string> alpha, std::vector<std::string> beta,
        std::string orientation = "dalpha^dbeta");

  int n() const { return static_cast<int>(alpha_.size()); }
  int dim() const { return 2 * n(); }

  const std::vector<std::string>& alpha_names() const { return alpha_; }
  const std::vector<std::string>& beta_names() const { return beta_; }
  const std::string& orientation() const { return orientation_; }

  int alpha(int i) const { return i; }
  int beta(int i) const { return n() + i; }
  bool is_alpha(int coord) const { return coord < n(); }
  /// Index of the canonical pair a coordinate belongs to.
  int pair_of(int coord) const { return coord % n(); }

  const std::string& name(int coord) const;
  std::optional<int> find(std::string_view name) const;

  friend bool operator==(const Chart& a, const Chart& b) {
    return a.alpha_ == b.alpha_ && a.beta_ == b.beta_ && a.orientation_ == b.orientation_;
  }

 private:
  std::vector<std::string> alpha_;
  std::vector<std::string> beta_;
  std::string orientation_;
};

using ChartPtr = std::shared_ptr<const Chart>;

ChartPtr make_chart(std::vector<std::string> alpha, std::vector<std::string> beta);

/// Chart with coordinates p1..pn (momenta) and q1..qn (positions).
ChartPtr canonical_chart(int n, const std::string& momentum = "p", const std::string& position = "q");

bool same_chart(const ChartPtr& a, const ChartPtr& b);
void require_same_chart(const ChartPtr& a, const ChartPtr& b);

/// Reserved symbol for the formal Planck parameter.
inline constexpr std::string_view kHbarName = "hbar";

}  // namespace pq
