#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "pseudoquant/prequant/prequant.hpp"

namespace pq::cli {

/// Malformed problem file; the message names the offending JSON path.
class ProblemError : public Error {
 public:
  using Error::Error;
};

struct PullbackSpec {
  ChartPtr target_chart;
  /// One component per target coordinate, over the problem chart.
  std::vector<Poly> components;
  OneForm target_theta;
};

/// Chart, connection and named observables of one computation.
struct ProblemFile {
  ChartPtr chart;
  OneForm theta;
  std::map<std::string, Poly> observables;
  std::optional<PullbackSpec> pullback;
  /// Labels of the flat coordinates; only the full set of positions is supported.
  std::optional<std::vector<std::string>> polarisation;

  const Poly* observable(const std::string& name) const;
  ConnectionData connection() const { return ConnectionData(theta); }
};

bool operator==(const ProblemFile& a, const ProblemFile& b);

/// Standard prequantum data on (p1..pn, q1..qn) with observables p_i, q_i.
ProblemFile standard_problem(int n = 1);

ProblemFile parse_problem(const nlohmann::json& j);
ProblemFile parse_problem_text(const std::string& text);
ProblemFile load_problem(const std::string& path);
nlohmann::json emit_problem(const ProblemFile& p);

/// Resolves an observable name or, failing that, parses the text as an expression.
Poly resolve_expression(const ProblemFile& p, const std::string& text);

nlohmann::json to_json(const FormalOperator& op);

}  // namespace pq::cli
