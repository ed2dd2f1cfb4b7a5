#include "pseudoquant/cli/run.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "pseudoquant/bks/bks.hpp"
#include "pseudoquant/bohrsommerfeld/lattice.hpp"
#include "pseudoquant/cli/problem.hpp"
#include "pseudoquant/cli/verify.hpp"
#include "pseudoquant/dynamics/dynamics.hpp"
#include "pseudoquant/polarisation/polarisation.hpp"
#include "pseudoquant/symcore/parse.hpp"

namespace pq::cli {

using pq::to_string;

namespace {

using nlohmann::json;

struct Globals {
  std::string problem;
  bool json = false;
  std::string csv;
  bool strict = false;
  std::uint64_t seed = 20240601;
  bool formal = false;
  bool emit_problem = false;
};

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(17);
  s << x;
  return s.str();
}

/// --csv <path> redirects tabular output to a file.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw Error("cannot open '" + path + "' for writing");
      out_ = file_.get();
    }
  }
  std::ostream& operator*() { return *out_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* out_;
};

std::vector<double> parse_range(const std::string& text) {
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw DomainError("bad number '" + item + "' in range '" + text + "'");
    }
  }
  return parts;
}

std::vector<double> sample_range(const std::string& text) {
  auto p = parse_range(text);
  if (p.size() == 1) return p;
  if (p.size() != 3 || !(p[2] > 0.0) || p[1] < p[0]) throw DomainError("range must be start:stop:step with step > 0");
  std::vector<double> out;
  const long count = std::lround(std::floor((p[1] - p[0]) / p[2] + 1e-9));
  for (long k = 0; k <= count; ++k) out.push_back(p[0] + static_cast<double>(k) * p[2]);
  return out;
}

std::pair<int, int> int_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw DomainError("bad integer range '" + text + "' (expected N or A..B)");
  }
}

ProblemFile load(const Globals& g) { return g.problem.empty() ? standard_problem(1) : load_problem(g.problem); }

void header(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& params) {
  out << '#';
  for (const auto& [k, v] : params) out << ' ' << k << '=' << v;
  out << '\n';
}

// --- commutator / quantise --------------------------------------------------

struct CommutatorArgs {
  std::string a, b;
  bool pullback = false;
  bool theorem = false;
};

int cmd_commutator(const Globals& g, const CommutatorArgs& args, std::ostream& out) {
  ProblemFile p = load(g);
  FormalOperator op(p.chart);
  if (args.pullback || args.theorem) {
    if (!p.pullback) throw DomainError("problem has no pullback map");
    PullbackSetup s(SmoothMap(p.chart, p.pullback->target_chart, p.pullback->components),
                    ConnectionData(p.pullback->target_theta));
    Poly a = parse_poly(args.a, p.pullback->target_chart);
    Poly b = parse_poly(args.b, p.pullback->target_chart);
    op = args.theorem ? theorem_commutator(a, b, s) : commutator(pullback_quantise(a, s), pullback_quantise(b, s));
  } else {
    auto conn = p.connection();
    op = commutator(quantise(resolve_expression(p, args.a), conn), quantise(resolve_expression(p, args.b), conn));
  }
  if (g.formal) op = divide_by_minus_i_hbar(op);
  if (g.json) {
    json j = to_json(op);
    j["a"] = args.a;
    j["b"] = args.b;
    j["formal"] = g.formal;
    out << j.dump(2) << '\n';
  } else {
    out << (op.is_zero() ? "0" : to_string(op)) << '\n';
  }
  return kOk;
}

int cmd_quantise(const Globals& g, const std::string& a, std::ostream& out) {
  ProblemFile p = load(g);
  FormalOperator op = quantise(resolve_expression(p, a), p.connection());
  if (g.json) {
    json j = to_json(op);
    j["observable"] = a;
    out << j.dump(2) << '\n';
  } else {
    out << (op.is_zero() ? "0" : to_string(op)) << '\n';
  }
  return kOk;
}

// --- preserve ----------------------------------------------------------------

struct PreserveArgs {
  std::string a;
  std::string tag;
  std::string grid;
  std::string f = "0";
};

json report_json(const PreservationReport& r) {
  json res = json::array();
  for (const auto& fa : r.residuals) {
    json terms = json::array();
    for (const auto& [k, c] : fa.coeffs) terms.push_back({{"d_beta", k}, {"coefficient", to_string(c)}});
    res.push_back(terms);
  }
  return {{"observable", to_string(r.observable)},
          {"preserves", r.preserves},
          {"case", to_string(r.scaling)},
          {"residuals", res}};
}

int cmd_preserve(const Globals& g, const PreserveArgs& args, std::ostream& out) {
  if (!args.grid.empty()) {
    auto x = args.grid.find_first_of("x,");
    if (x == std::string::npos) throw DomainError("grid must be MxN");
    int mm = 0, nn = 0;
    try {
      mm = std::stoi(args.grid.substr(0, x)) - 1;
      nn = std::stoi(args.grid.substr(x + 1)) - 1;
    } catch (const std::exception&) {
      throw DomainError("grid must be MxN");
    }
    ChartPtr chart = g.problem.empty() ? canonical_chart(1) : load(g).chart;
    Poly f = parse_poly(args.f, chart);
    ScalingCase tag = args.tag.empty() ? infer_case(ConnectionData((Poly(chart, Scalar(1)) + f) * standard_theta(chart)))
                                       : parse_scaling_case(args.tag);
    auto table = classify_monomials(mm, nn, f, tag);
    Sink sink(g.csv, out);
    header(*sink, {{"f", to_string(f)}, {"case", to_string(tag)}});
    *sink << "m,n,preserves\n";
    for (const auto& v : table) *sink << v.m << ',' << v.n << ',' << (v.report.preserves ? 1 : 0) << '\n';
    return kOk;
  }
  if (args.a.empty()) throw DomainError("preserve needs --a or --grid");
  ProblemFile p = load(g);
  auto conn = p.connection();
  Polarisation pol(conn);
  Poly a = resolve_expression(p, args.a);
  auto rep = args.tag.empty() ? preserves(a, conn, pol) : preserves(a, conn, pol, parse_scaling_case(args.tag));
  if (g.json) {
    out << report_json(rep).dump(2) << '\n';
  } else {
    out << (rep.preserves ? "preserves" : "does not preserve") << " (" << to_string(rep.scaling) << ")\n";
    for (std::size_t i = 0; i < rep.residuals.size(); ++i) {
      for (const auto& [k, c] : rep.residuals[i].coeffs) {
        out << "  L" << i + 1 << " d_beta^[";
        for (std::size_t t = 0; t < k.size(); ++t) out << (t ? "," : "") << k[t];
        out << "]: " << to_string(c) << '\n';
      }
    }
  }
  return kOk;
}

// --- bks -----------------------------------------------------------------------

struct BksArgs {
  int n = 1;
  int m_max = 3;
  std::string lambda = "1";
  double hbar = 1.0;
  std::string kind = "position";
  std::string beta = "0:2:0.1";
  std::string potential = "0";
};

int cmd_bks_classify(const Globals& g, const BksArgs& a, std::ostream& out) {
  bks::DeformationSpec d{bks::DeformationKind::Momentum, a.n, parse_rational(a.lambda), a.hbar};
  auto table = bks::classify_pairing(d, a.m_max);
  if (g.json) {
    json terms = json::array();
    for (const auto& t : table.terms) {
      json row = {{"n", t.n},
                  {"m", t.m},
                  {"j", t.j},
                  {"exponent", to_string(t.exponent)},
                  {"j_critical", to_string(t.j_critical)},
                  {"j_critical_integral", t.j_critical_integral},
                  {"classification", to_string(t.classification)},
                  {"rederived_exponent", to_string(t.rederived_exponent)},
                  {"rederived_classification", to_string(t.rederived_classification)}};
      if (t.mu_moment) row["mu_moment"] = {t.mu_moment->real(), t.mu_moment->imag()};
      terms.push_back(row);
    }
    out << json{{"n", a.n},     {"m_max", a.m_max},          {"lambda", a.lambda},
                {"hbar", a.hbar}, {"converges", table.converges}, {"disagreements", table.disagreements},
                {"terms", terms}}
               .dump(2)
        << '\n';
    return kOk;
  }
  Sink sink(g.csv, out);
  header(*sink, {{"n", std::to_string(a.n)}, {"m_max", std::to_string(a.m_max)}, {"lambda", a.lambda},
                 {"hbar", fmt(a.hbar)}, {"converges", table.converges ? "true" : "false"}});
  *sink << "n,m,j,exponent,j_critical,j_critical_integral,classification,mu_moment_re,mu_moment_im,"
           "rederived_exponent,rederived_classification\n";
  for (const auto& t : table.terms) {
    *sink << t.n << ',' << t.m << ',' << t.j << ',' << to_string(t.exponent) << ',' << to_string(t.j_critical) << ','
          << (t.j_critical_integral ? 1 : 0) << ',' << to_string(t.classification) << ','
          << (t.mu_moment ? fmt(t.mu_moment->real()) : "") << ',' << (t.mu_moment ? fmt(t.mu_moment->imag()) : "")
          << ',' << to_string(t.rederived_exponent) << ',' << to_string(t.rederived_classification) << '\n';
  }
  return kOk;
}

int cmd_bks_pair(const Globals& g, const BksArgs& a, std::ostream& out) {
  auto betas = sample_range(a.beta);
  auto kind = bks::parse_deformation_kind(a.kind);
  bks::PairingResult res;
  if (kind == bks::DeformationKind::Position) {
    res = bks::position_pairing(a.n, betas, a.hbar);
  } else if (kind == bks::DeformationKind::None) {
    ChartPtr chart = canonical_chart(1);
    res = bks::standard_schrodinger_check(parse_poly(a.potential, chart), a.hbar);
    res.samples.clear();
    for (double b : betas) res.samples.emplace_back(b, res.effective_coefficient(b));
  } else {
    throw DomainError("momentum deformations do not converge; use 'bks classify'");
  }
  Sink sink(g.csv, out);
  header(*sink, {{"kind", a.kind}, {"n", std::to_string(a.n)}, {"hbar", fmt(a.hbar)},
                 {"normalization", fmt(res.normalization.real()) + (res.normalization.imag() < 0 ? "" : "+") +
                                       fmt(res.normalization.imag()) + "i"},
                 {"converges", res.converges ? "true" : "false"}});
  *sink << "beta,coefficient_re,coefficient_im,potential_re,potential_im,scaled_re\n";
  for (const auto& [b, c] : res.samples) {
    auto u = res.potential(b);
    double scale = kind == bks::DeformationKind::Position ? std::pow(1.0 + 2.0 * std::pow(b, a.n), 1.5) : 1.0;
    *sink << fmt(b) << ',' << fmt(c.real()) << ',' << fmt(c.imag()) << ',' << fmt(u.real()) << ',' << fmt(u.imag())
          << ',' << fmt(c.real() * scale) << '\n';
  }
  return kOk;
}

// --- evolve --------------------------------------------------------------------

struct EvolveArgs {
  int n = 2;
  double hbar = 1.0;
  std::string grid = "-10:10:2048";
  double dt = 1e-3;
  int steps = 1000;
  std::string init = "gaussian:q0=0,p0=2,sigma=0.5";
  std::string boundary = "dirichlet";
  int record_every = 10;
  std::string snapshot;
  double margin = 0.1;
};

std::map<std::string, double> parse_init(const std::string& text) {
  const std::string prefix = "gaussian:";
  if (text.rfind(prefix, 0) != 0) throw DomainError("only gaussian:q0=..,p0=..,sigma=.. initial states are supported");
  std::map<std::string, double> kv{{"q0", 0.0}, {"p0", 0.0}, {"sigma", 0.5}};
  std::stringstream ss(text.substr(prefix.size()));
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw DomainError("bad initial-state parameter '" + item + "'");
    std::string key = item.substr(0, eq);
    if (!kv.count(key)) throw DomainError("unknown initial-state parameter '" + key + "'");
    try {
      kv[key] = std::stod(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw DomainError("bad value in '" + item + "'");
    }
  }
  return kv;
}

int cmd_evolve(const Globals& g, const EvolveArgs& a, std::ostream& out, std::ostream& err) {
  auto gp = parse_range(a.grid);
  if (gp.size() != 3) throw DomainError("grid must be q_min:q_max:points");
  dyn::Grid1D grid(gp[0], gp[1], static_cast<int>(std::lround(gp[2])));
  auto clip = dyn::clip_to_domain(grid, a.n, a.margin);
  if (clip.clipped)
    err << "note: grid clipped to q >= " << clip.grid.q_min() << " (singular point " << clip.singular_point
        << ", margin " << clip.margin << ")\n";
  dyn::EvolutionConfig cfg;
  cfg.n = a.n;
  cfg.hbar = a.hbar;
  cfg.dt = a.dt;
  cfg.steps = a.steps;
  cfg.boundary = dyn::parse_boundary(a.boundary);
  cfg.validate();
  auto init = parse_init(a.init);
  auto psi = dyn::gaussian_state(clip.grid, init["q0"], init["p0"], init["sigma"], a.hbar);

  std::unique_ptr<std::ofstream> snap;
  if (!a.snapshot.empty()) {
    snap = std::make_unique<std::ofstream>(a.snapshot, std::ios::binary);
    if (!*snap) throw Error("cannot open '" + a.snapshot + "' for writing");
  }
  auto res = dyn::evolve(psi, cfg, clip.grid, a.record_every, snap.get());
  for (const auto& w : res.warnings) err << "warning: " << w << '\n';

  Sink sink(g.csv, out);
  header(*sink, {{"n", std::to_string(a.n)},
                 {"hbar", fmt(a.hbar)},
                 {"grid", fmt(clip.grid.q_min()) + ":" + fmt(clip.grid.q_max()) + ":" +
                              std::to_string(clip.grid.points())},
                 {"dt", fmt(a.dt)},
                 {"steps", std::to_string(a.steps)},
                 {"init", a.init},
                 {"boundary", a.boundary},
                 {"record_every", std::to_string(a.record_every)}});
  dyn::write_csv(*sink, res.series);
  return kOk;
}

// --- bs-count -------------------------------------------------------------------

int cmd_bs(const Globals& g, const std::string& range, bool points, std::ostream& out) {
  auto [lo, hi] = int_range(range);
  if (lo < 1 || hi < lo) throw DomainError("E range must satisfy 1 <= A <= B");
  Sink sink(g.csv, out);
  if (g.json) {
    json rows = json::array();
    for (int e = lo; e <= hi; ++e) {
      auto r = bs::folded_points(e);
      json row = {{"E", e}, {"standard_dim", r.standard_dim}, {"folded_dim", r.folded_dim}};
      if (points) {
        json pts = json::array();
        for (const auto& p : r.folded_points) pts.push_back({{"sign", p.sign}, {"l_squared", p.l_squared}});
        row["folded_points"] = pts;
      }
      rows.push_back(row);
    }
    *sink << rows.dump(2) << '\n';
    return kOk;
  }
  if (points) {
    *sink << "E,lattice,l,l_squared\n";
    for (int e = lo; e <= hi; ++e) {
      for (int k = 0; k < bs::standard_dim(e); ++k) *sink << e << ",standard," << fmt(-(e - 1) + k) << ",\n";
      for (const auto& p : bs::folded_points(e).folded_points)
        *sink << e << ",folded," << fmt(p.value()) << ',' << p.l_squared << '\n';
    }
    return kOk;
  }
  *sink << "E,standard_dim,folded_dim\n";
  for (int e = lo; e <= hi; ++e) *sink << e << ',' << bs::standard_dim(e) << ',' << bs::folded_points(e).folded_dim << '\n';
  return kOk;
}

// --- verify-paper -----------------------------------------------------------------

int cmd_verify(const Globals& g, std::ostream& out) {
  auto report = run_verification(g.seed);
  if (g.json) {
    json j = to_json(report);
    j["seed"] = g.seed;
    out << j.dump(2) << '\n';
  } else {
    out << "# seed=" << g.seed << '\n' << to_text(report);
  }
  return report.exit_code(g.strict);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"pseudoquant: pseudo-prequantum operators, polarisations, pairings and evolution"};
  app.name("pseudoquant");
  app.require_subcommand(0, 1);
  Globals g;
  auto add_globals = [&g](CLI::App* a) {
    a->add_option("--problem", g.problem, "problem JSON file (default: standard chart p1, q1)");
    a->add_flag("--json", g.json, "JSON output");
    a->add_option("--csv", g.csv, "write tabular output to this path");
    a->add_flag("--strict", g.strict, "flagged discrepancies exit with code 3");
    a->add_option("--seed", g.seed, "seed of the random sweeps");
    a->add_flag("--emit-problem", g.emit_problem, "print the loaded problem as JSON and exit");
  };
  add_globals(&app);

  CommutatorArgs ca;
  auto* comm = app.add_subcommand("commutator", "commutator of two quantised observables");
  comm->add_option("--a", ca.a, "observable name or expression")->required();
  comm->add_option("--b", ca.b, "observable name or expression")->required();
  comm->add_flag("--formal", g.formal, "divide by -i*hbar");
  comm->add_flag("--pullback", ca.pullback, "quantise pulled-back observables of the problem's map");
  comm->add_flag("--theorem", ca.theorem, "closed form with the c_i brackets of the problem's map");
  add_globals(comm);

  std::string qa;
  auto* quant = app.add_subcommand("quantise", "pseudo-prequantum operator of an observable");
  quant->add_option("--a", qa, "observable name or expression")->required();
  add_globals(quant);

  PreserveArgs pa;
  auto* pres = app.add_subcommand("preserve", "polarisation preservation");
  pres->add_option("--a,--observable", pa.a, "observable name or expression");
  pres->add_option("--case", pa.tag, "standard | polarised-scaled | general-scaled");
  pres->add_option("--grid", pa.grid, "monomial grid MxN (or M,N) under Theta = (1 + f) theta");
  pres->add_option("--f", pa.f, "scaling deformation f for --grid");
  add_globals(pres);

  BksArgs ba;
  auto* bks_cmd = app.add_subcommand("bks", "pairing analysis");
  bks_cmd->require_subcommand(1);
  auto* classify = bks_cmd->add_subcommand("classify", "term table under a momentum deformation");
  classify->add_option("--n", ba.n, "deformation order");
  classify->add_option("--m-max", ba.m_max, "largest m");
  classify->add_option("--lambda", ba.lambda, "rational deformation magnitude");
  classify->add_option("--hbar", ba.hbar, "numeric hbar");
  add_globals(classify);
  auto* pair = bks_cmd->add_subcommand("pair", "effective coefficient profile");
  pair->add_option("--kind", ba.kind, "position | none");
  pair->add_option("--n", ba.n, "deformation order");
  pair->add_option("--beta", ba.beta, "samples start:stop:step");
  pair->add_option("--hbar", ba.hbar, "numeric hbar");
  pair->add_option("--V", ba.potential, "potential in q1 for --kind none");
  add_globals(pair);

  EvolveArgs ea;
  auto* evo = app.add_subcommand("evolve", "evolve the deformed Schroedinger equation");
  evo->add_option("--n", ea.n, "deformation order, 0 for the free equation");
  evo->add_option("--hbar", ea.hbar, "hbar");
  evo->add_option("--grid", ea.grid, "q_min:q_max:points");
  evo->add_option("--dt", ea.dt, "time step");
  evo->add_option("--steps", ea.steps, "number of steps");
  evo->add_option("--init", ea.init, "gaussian:q0=..,p0=..,sigma=..");
  evo->add_option("--boundary", ea.boundary, "dirichlet | absorbing");
  evo->add_option("--record-every", ea.record_every, "steps between CSV rows");
  evo->add_option("--snapshot", ea.snapshot, "binary state snapshots (float64 re/im per node, row per record)");
  evo->add_option("--margin", ea.margin, "odd-n clipping margin as a fraction of the domain");
  add_globals(evo);

  std::string erange = "1..20";
  bool points = false;
  auto* bs_cmd = app.add_subcommand("bs-count", "integral points on the sphere");
  bs_cmd->add_option("--E", erange, "E or A..B");
  bs_cmd->add_flag("--points", points, "list the lattice points");
  add_globals(bs_cmd);

  auto* ver = app.add_subcommand("verify-paper", "run every anchored check");
  add_globals(ver);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  if (app.get_subcommands().empty() && !g.emit_problem) {
    err << "a subcommand is required\nRun with --help for more information.\n";
    return kInputError;
  }

  try {
    if (g.emit_problem) {
      out << emit_problem(load(g)).dump(2) << '\n';
      return kOk;
    }
    if (*comm) return cmd_commutator(g, ca, out);
    if (*quant) return cmd_quantise(g, qa, out);
    if (*pres) return cmd_preserve(g, pa, out);
    if (*classify) return cmd_bks_classify(g, ba, out);
    if (*pair) return cmd_bks_pair(g, ba, out);
    if (*evo) return cmd_evolve(g, ea, out, err);
    if (*bs_cmd) return cmd_bs(g, erange, points, out);
    if (*ver) return cmd_verify(g, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace pq::cli
