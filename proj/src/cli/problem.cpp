#include "pseudoquant/cli/problem.hpp"

#include <fstream>
#include <sstream>

#include "pseudoquant/symcore/parse.hpp"

namespace pq::cli {

using pq::to_string;

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ProblemError(path + ": " + what);
}

const json& field(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, "missing field '" + key + "'");
  return *it;
}

std::vector<std::string> labels(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of labels");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) fail(path + "[" + std::to_string(i) + "]", "expected a string");
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

ChartPtr parse_chart(const json& j, const std::string& path) {
  auto alpha = labels(field(j, "alpha", path), path + ".alpha");
  auto beta = labels(field(j, "beta", path), path + ".beta");
  if (j.contains("n")) {
    const json& n = j["n"];
    if (!n.is_number_integer() || n.get<long>() != static_cast<long>(alpha.size()))
      fail(path + ".n", "does not match the number of alpha labels");
  }
  try {
    return make_chart(std::move(alpha), std::move(beta));
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

json emit_chart(const Chart& c) {
  return {{"n", c.n()}, {"alpha", c.alpha_names()}, {"beta", c.beta_names()}};
}

Poly parse_expr(const json& j, const ChartPtr& chart, const std::string& path) {
  std::string text;
  if (j.is_string()) {
    text = j.get<std::string>();
  } else if (j.is_number_integer()) {
    text = std::to_string(j.get<long>());
  } else {
    fail(path, "expected an expression string");
  }
  try {
    return parse_poly(text, chart);
  } catch (const ParseError& e) {
    fail(path, e.what());
  }
}

OneForm parse_form(const json& j, const ChartPtr& chart, const std::string& path) {
  if (!j.is_array()) fail(path, "expected a list of [coefficient, covector] pairs");
  std::vector<std::pair<std::string, std::string>> entries;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = path + "[" + std::to_string(i) + "]";
    const json& e = j[i];
    if (!e.is_array() || e.size() != 2 || !e[1].is_string()) fail(at, "expected [coefficient, \"dX\"]");
    // validate the coefficient separately for a precise location
    Poly coeff = parse_expr(e[0], chart, at + "[0]");
    entries.emplace_back(to_string(coeff), e[1].get<std::string>());
  }
  try {
    return parse_one_form(entries, chart);
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

json emit_form(const OneForm& w) {
  json out = json::array();
  for (const auto& [c, d] : one_form_entries(w)) out.push_back({c, d});
  return out;
}

}  // namespace

const Poly* ProblemFile::observable(const std::string& name) const {
  auto it = observables.find(name);
  return it == observables.end() ? nullptr : &it->second;
}

bool operator==(const ProblemFile& a, const ProblemFile& b) {
  if (!(*a.chart == *b.chart) || !(a.theta == b.theta) || a.observables.size() != b.observables.size()) return false;
  for (auto x = a.observables.begin(), y = b.observables.begin(); x != a.observables.end(); ++x, ++y) {
    if (x->first != y->first || !(x->second == y->second)) return false;
  }
  if (a.pullback.has_value() != b.pullback.has_value()) return false;
  if (a.pullback) {
    const auto& x = *a.pullback;
    const auto& y = *b.pullback;
    if (!(*x.target_chart == *y.target_chart) || x.components.size() != y.components.size()) return false;
    for (std::size_t i = 0; i < x.components.size(); ++i)
      if (to_string(x.components[i]) != to_string(y.components[i])) return false;
    if (one_form_entries(x.target_theta) != one_form_entries(y.target_theta)) return false;
  }
  return a.polarisation == b.polarisation;
}

ProblemFile standard_problem(int n) {
  ChartPtr chart = canonical_chart(n);
  ProblemFile p{chart, standard_theta(chart), {}, std::nullopt, std::nullopt};
  for (int i = 0; i < n; ++i) {
    p.observables.emplace(chart->name(chart->alpha(i)), Poly::coordinate(chart, chart->alpha(i)));
    p.observables.emplace(chart->name(chart->beta(i)), Poly::coordinate(chart, chart->beta(i)));
  }
  return p;
}

ProblemFile parse_problem(const json& j) {
  if (!j.is_object()) fail("$", "problem must be a JSON object");
  ChartPtr chart = parse_chart(field(j, "chart", "$"), "$.chart");
  ProblemFile p{chart, parse_form(field(j, "theta", "$"), chart, "$.theta"), {}, std::nullopt, std::nullopt};

  if (j.contains("observables")) {
    const json& obs = j["observables"];
    if (!obs.is_object()) fail("$.observables", "expected an object of name -> expression");
    for (const auto& [name, expr] : obs.items()) {
      p.observables.emplace(name, parse_expr(expr, chart, "$.observables." + name));
    }
  }

  if (j.contains("pullback")) {
    const json& pb = j["pullback"];
    ChartPtr target = parse_chart(field(pb, "target_chart", "$.pullback"), "$.pullback.target_chart");
    const json& comps = field(pb, "components", "$.pullback");
    if (!comps.is_object()) fail("$.pullback.components", "expected an object of target label -> expression");
    std::vector<Poly> components;
    for (int c = 0; c < target->dim(); ++c) {
      const std::string& label = target->name(c);
      const std::string at = "$.pullback.components." + label;
      if (!comps.contains(label)) fail("$.pullback.components", "missing component '" + label + "'");
      components.push_back(parse_expr(comps[label], chart, at));
    }
    if (comps.size() != static_cast<std::size_t>(target->dim()))
      fail("$.pullback.components", "has entries that are not target coordinates");
    OneForm ttheta = pb.contains("target_theta") ? parse_form(pb["target_theta"], target, "$.pullback.target_theta")
                                                 : standard_theta(target);
    p.pullback = PullbackSpec{target, std::move(components), std::move(ttheta)};
  }

  if (j.contains("polarisation")) {
    auto flat = labels(j["polarisation"], "$.polarisation");
    if (flat != chart->beta_names())
      fail("$.polarisation", "only the vertical polarisation with every beta coordinate flat is supported");
    p.polarisation = std::move(flat);
  }
  return p;
}

ProblemFile parse_problem_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ProblemError(std::string("invalid JSON at byte ") + std::to_string(e.byte) + ": " + e.what());
  }
  return parse_problem(j);
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ProblemError("cannot open problem file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_problem_text(buf.str());
}

json emit_problem(const ProblemFile& p) {
  json j;
  j["chart"] = emit_chart(*p.chart);
  j["theta"] = emit_form(p.theta);
  json obs = json::object();
  for (const auto& [name, v] : p.observables) obs[name] = to_string(v);
  j["observables"] = obs;
  if (p.pullback) {
    json comps = json::object();
    for (int c = 0; c < p.pullback->target_chart->dim(); ++c)
      comps[p.pullback->target_chart->name(c)] = to_string(p.pullback->components[static_cast<std::size_t>(c)]);
    j["pullback"] = {{"target_chart", emit_chart(*p.pullback->target_chart)},
                     {"components", comps},
                     {"target_theta", emit_form(p.pullback->target_theta)}};
  }
  if (p.polarisation) j["polarisation"] = *p.polarisation;
  return j;
}

Poly resolve_expression(const ProblemFile& p, const std::string& text) {
  if (const Poly* v = p.observable(text)) return *v;
  return parse_poly(text, p.chart);
}

json to_json(const FormalOperator& op) {
  json terms = json::array();
  const auto& chart = *op.chart();
  for (auto it = op.terms().rbegin(); it != op.terms().rend(); ++it) {
    json d = json::object();
    for (int c = 0; c < chart.dim(); ++c) {
      auto k = it->first[static_cast<std::size_t>(c)];
      if (k != 0) d[chart.name(c)] = k;
    }
    terms.push_back({{"derivative", d}, {"coefficient", to_string(it->second)}});
  }
  return {{"operator", to_string(op)}, {"order", op.order()}, {"terms", terms}};
}

}  // namespace pq::cli
