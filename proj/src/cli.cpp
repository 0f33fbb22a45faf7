#include "hcdirac/cli.hpp"

#include "hcdirac/field_io.hpp"
#include "hcdirac/report.hpp"
#include "hcdirac/spectral_checks.hpp"
#include "hcdirac/verifier.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace hcdirac {

namespace {

constexpr double kAngularTolerance = 1e-6;
constexpr double kDerivativeTolerance = 1e-6;

std::string fmt(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

int dimension(const RunConfig& c) { return c.n.value_or(c.command == "magnetic-verify" ? 2 : 3); }

std::string fmt_optional(const std::optional<double>& v) { return v ? fmt(*v) : "none"; }

void define_options(CLI::App& app, RunConfig& c) {
  app.add_option("command", c.command, "check-weights | verify | thm5-constant | angular-check | magnetic-verify")
      ->required()
      ->check(CLI::IsMember(command_names()));
  app.add_option("--ineq", c.ineq, "catalogue inequality id");
  app.add_option("--tau", c.tau, "weight parameter tau");
  app.add_option("--alpha", c.alpha, "exponent alpha (example_4.2)");
  app.add_option("--phi", c.phi, "phase for thm3.1: linear | quadratic | log | power:<p>");
  app.add_option("--n", c.n, "spatial dimension")->check(CLI::Range(1, 12));
  app.add_option("--points", c.points, "grid points per axis");
  app.add_option("--box", c.box, "box half-width R");
  app.add_option("--r-min", c.r_min, "inner annulus radius");
  app.add_option("--r-max", c.r_max, "outer annulus radius");
  app.add_option("--trials", c.trials, "number of seeded test fields");
  app.add_option("--seed", c.seed, "base seed");
  app.add_option("--slack", c.slack, "multiplicative discretization slack");
  app.add_option("--massive", c.massive, "include the mass term beta (true/false)");
  app.add_option("--resolution-check", c.resolution_check, "re-run the minimizing trial on a doubled grid");
  app.add_option("--phase", c.phase, "gauge phase family: gaussian | zero")
      ->check(CLI::IsMember({"gaussian", "zero"}));
  app.add_option("--sample-lo", c.sample_lo, "lower end of the sampled radius interval");
  app.add_option("--sample-hi", c.sample_hi, "upper end of the sampled radius interval");
  app.add_option("--samples-per-decade", c.samples_per_decade, "log-spaced samples per decade");
  app.add_option("--sigma", c.sigma, "Gaussian envelope width of angular test fields");
  app.add_option("--form", c.form, "angular identity form: stated | corrected")
      ->check(CLI::IsMember({"stated", "corrected"}));
  app.add_option("--json-out", c.json_out, "JSON report path");
  app.add_option("--csv-out", c.csv_out, "CSV output path");
  app.add_option("--field-out", c.field_out, "snapshot of the minimizing test field (.bin or CSV)");
  app.set_config("--config", "", "flat key = value config file");
}

std::ofstream open_output(const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw PreconditionError("cannot open output path '" + path + "' for writing");
  return os;
}

struct Outputs {
  std::string json_path;
  std::string csv_path;
  std::ofstream json;
  std::ofstream csv;
};

Outputs open_outputs(const RunConfig& c, const std::string& stem) {
  Outputs o;
  const std::string dir = default_output_dir();
  o.json_path = c.json_out.empty() ? dir + "/" + stem + ".json" : c.json_out;
  o.csv_path = c.csv_out.empty() ? dir + "/" + stem + ".csv" : c.csv_out;
  o.json = open_output(o.json_path);
  o.csv = open_output(o.csv_path);
  return o;
}

void finish(std::ofstream& os, const std::string& path) {
  os.flush();
  if (!os) throw PreconditionError("failed writing '" + path + "'");
}

CaseRequest case_request(const RunConfig& c, const Annulus& annulus) {
  if (c.ineq.empty()) throw PreconditionError(c.command + " requires --ineq");
  CaseRequest req;
  req.id = c.ineq;
  req.tau = c.tau;
  req.alpha = c.alpha;
  req.phi = c.phi;
  req.n = dimension(c);
  req.annulus = annulus;
  req.massive = c.massive;
  return req;
}

GridSpec grid_for(const RunConfig& c, int default_n_points) {
  GridSpec g;
  g.n = dimension(c);
  g.points_per_axis = c.points.value_or(default_n_points);
  g.box_halfwidth = c.box;
  return g;
}

CliffordRepd representation(int n) {
  try {
    return build_clifford(n);
  } catch (const std::invalid_argument& e) {
    throw PreconditionError(e.what());
  }
}

std::string stem_for(const RunConfig& c) { return c.ineq.empty() ? c.command : c.command + "-" + c.ineq; }

ExitCode exit_for(const std::string& verdict) { return verdict == "fail" ? ExitCode::fail : ExitCode::pass; }

ExitCode run_check_weights(const RunConfig& c, std::ostream& out) {
  const Annulus annulus{c.r_min.value_or(1.0), c.r_max.value_or(2.0)};
  const InequalityCase ic = make_case(case_request(c, annulus));
  if (!(c.sample_lo > 0) || !(c.sample_hi > c.sample_lo)) throw PreconditionError("need 0 < sample-lo < sample-hi");
  const auto radii = log_spaced_per_decade(c.sample_lo, c.sample_hi, c.samples_per_decade);
  const CliffordRepd rep = representation(dimension(c));
  Outputs o = open_outputs(c, stem_for(c));

  const auto dirs = sample_directions(dimension(c), 16, c.seed);
  const ConditionResult matrix = matrix_condition_M(rep, ic.pair, radii, dirs, ic.include_mass);
  double m_lo = std::numeric_limits<double>::infinity(), m_hi = -m_lo;
  for (double r : radii) {
    const double m = radial_M(ic.pair, r);
    m_lo = std::min(m_lo, m);
    m_hi = std::max(m_hi, m);
  }
  const auto gate_radii = log_spaced_per_decade(std::max(c.sample_lo, kDerivativeGateMinRadius),
                                                std::max(c.sample_hi, 10 * kDerivativeGateMinRadius),
                                                c.samples_per_decade);
  const auto da = check_derivatives(ic.pair.a, gate_radii);
  const auto db = check_derivatives(ic.pair.b, gate_radii);
  const bool gate = da.passes(kDerivativeTolerance) && db.passes(kDerivativeTolerance);

  Json j;
  j["command"] = c.command;
  j["inequality_id"] = ic.id;
  Json params = Json::object();
  for (const auto& [k, v] : ic.params) params[k] = v;
  j["params"] = params;
  j["weight_a"] = ic.pair.a.label();
  j["weight_b"] = ic.pair.b.label();
  j["pairing"] = to_string(ic.pair.pairing);
  j["operator"] = ic.include_mass ? "H" : "H0";
  j["paper_constant"] = ic.predicted_constant ? Json(*ic.predicted_constant) : Json(nullptr);
  j["radial_M"] = Json{{"min", m_lo}, {"max", m_hi}};
  j["matrix_condition"] = to_json(matrix);
  j["d_constant"] = ic.pair.pairing == Pairing::half_power ? to_json(d_constant(rep, ic.pair, radii)) : Json(nullptr);
  j["radial_c"] = to_json(radial_c_condition(ic.pair.b, radii));
  j["certificate"] = ic.certificate ? to_json(*ic.certificate) : Json(nullptr);
  auto deriv = [](const DerivativeCheck<double>& d) {
    return Json{{"worst_d1", d.worst_d1}, {"worst_d2", d.worst_d2}, {"worst_r_d1", d.worst_r_d1},
                {"worst_r_d2", d.worst_r_d2}};
  };
  j["derivative_check"] = Json{{"tolerance", kDerivativeTolerance},
                               {"sampled_interval", Json::array({gate_radii.front(), gate_radii.back()})},
                               {"a", deriv(da)},
                               {"b", deriv(db)},
                               {"passes", gate}};
  const bool ok = matrix.satisfied && gate;
  j["verdict"] = ok ? "pass" : "fail";

  o.json << render(j);
  finish(o.json, o.json_path);
  write_radial_csv(o.csv, ic.pair, radii);
  finish(o.csv, o.csv_path);
  out << ic.id << " check-weights M in [" << m_lo << ", " << m_hi << "] criterion " << to_string(matrix.criterion)
      << " = " << matrix.value << " on [" << matrix.r_lo << ", " << matrix.r_hi << "] verdict "
      << (ok ? "pass" : "fail") << '\n';
  return ok ? ExitCode::pass : ExitCode::fail;
}

void print_report_summary(std::ostream& out, const InequalityReport& r) {
  out << r.inequality_id << " " << r.op << " paper_constant=" << fmt_optional(r.predicted_constant)
      << " observed_min=" << r.observed_min_quotient << " verdict=" << r.verdict << '\n';
}

ExitCode run_verify(const RunConfig& c, std::ostream& out) {
  const Annulus annulus{c.r_min.value_or(1.0), c.r_max.value_or(2.0)};
  const InequalityCase ic = make_case(case_request(c, annulus));
  const CliffordRepd rep = representation(dimension(c));
  VerifyOptions opt;
  opt.grid = grid_for(c, default_points(dimension(c)));
  opt.annulus = annulus;
  opt.trials = c.trials.value_or(25);
  opt.seed = c.seed;
  opt.slack = c.slack;
  opt.resolution_check = c.resolution_check.value_or(true);
  Outputs o = open_outputs(c, stem_for(c));

  const InequalityReport r = verify_inequality(rep, ic, opt);
  o.json << render(to_json(r));
  finish(o.json, o.json_path);
  write_trials_csv(o.csv, r);
  finish(o.csv, o.csv_path);
  if (!c.field_out.empty()) {
    auto best = std::min_element(r.trials.begin(), r.trials.end(),
                                 [](const TrialResult& a, const TrialResult& b) { return a.quotient < b.quotient; });
    try {
      save_field(c.field_out, make_annulus_bump(SpectralGrid::make(opt.grid), rep.m, annulus, best->seed));
    } catch (const std::runtime_error& e) {
      throw PreconditionError(e.what());
    }
  }
  print_report_summary(out, r);
  return exit_for(r.verdict);
}

ExitCode run_magnetic(const RunConfig& c, std::ostream& out) {
  const Annulus annulus{c.r_min.value_or(0.5), c.r_max.value_or(2.5)};
  const InequalityCase ic = make_case(case_request(c, annulus));
  const CliffordRepd rep = representation(dimension(c));
  VerifyOptions opt;
  opt.grid = grid_for(c, 512);
  opt.annulus = annulus;
  opt.trials = c.trials.value_or(10);
  opt.seed = c.seed;
  opt.slack = c.slack;
  opt.resolution_check = false;
  Outputs o = open_outputs(c, stem_for(c));

  const InequalityReport r =
      magnetic_reduction_check(rep, ic, opt, c.phase == "zero" ? zero_phase() : gaussian_phases());
  o.json << render(to_json(r));
  finish(o.json, o.json_path);
  write_trials_csv(o.csv, r);
  finish(o.csv, o.csv_path);
  print_report_summary(out, r);
  out << "  max relative deviation " << r.magnetic->max_relative_deviation << ", verdicts "
      << (r.magnetic->verdicts_match ? "match" : "differ") << '\n';
  return exit_for(r.verdict);
}

ExitCode run_thm5(const RunConfig& c, std::ostream& out) {
  if (!c.tau) throw PreconditionError("thm5-constant requires --tau");
  const int n = dimension(c);
  if (n < 2) throw PreconditionError("thm5-constant requires n >= 2");
  const PowerWeightCase p = thm5_constant(*c.tau, n);
  if (p.degenerate) {
    std::ostringstream os;
    os << "thm5.1 requires tau != 2k - n for every integer k (here tau = " << *c.tau << " = 2*" << p.k_star << " - " << n
       << ")";
    throw PreconditionError(os.str());
  }
  Outputs o = open_outputs(c, stem_for(c));
  Json j = to_json(p);
  o.json << render(j);
  finish(o.json, o.json_path);
  o.csv << "tau,n,nu,k_star,d,c,tie\n"
        << fmt(p.tau) << ',' << p.n << ',' << fmt(p.nu) << ',' << p.k_star << ',' << fmt(p.d) << ',' << fmt(p.c) << ','
        << (p.tie ? "true" : "false") << '\n';
  finish(o.csv, o.csv_path);
  out << "thm5.1 tau=" << p.tau << " n=" << p.n << " nu=" << p.nu << " k_star=" << p.k_star << " d=" << p.d
      << " c = " << p.c << (p.tie ? " (tie, smaller k)" : "") << '\n';
  return ExitCode::pass;
}

ExitCode run_angular(const RunConfig& c, std::ostream& out) {
  const CliffordRepd rep = representation(dimension(c));
  const GridSpec g = grid_for(c, default_points(dimension(c)));
  Outputs o = open_outputs(c, stem_for(c));
  const AngularReport r = angular_identity_check(rep, g, {0, 1, 2}, c.sigma, c.seed);
  const double worst = c.form == "stated" ? r.worst_stated : r.worst_corrected;
  const bool ok = worst <= kAngularTolerance;
  Json j = to_json(r);
  j["form"] = c.form;
  j["tolerance"] = kAngularTolerance;
  j["verdict"] = ok ? "pass" : "fail";
  o.json << render(j);
  finish(o.json, o.json_path);
  write_angular_csv(o.csv, r);
  finish(o.csv, o.csv_path);
  out << "angular identity (" << c.form << " form) n=" << dimension(c) << " worst residual " << worst << " verdict "
      << (ok ? "pass" : "fail") << '\n';
  return ok ? ExitCode::pass : ExitCode::fail;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"check-weights", "verify", "thm5-constant", "angular-check",
                                              "magnetic-verify"};
  return names;
}

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out) {
  RunConfig c;
  CLI::App app{"Numerical checks of weighted Dirac-operator inequalities", "hcdirac"};
  define_options(app, c);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw std::invalid_argument(e.what());
  }
  return c;
}

std::string format_config(const RunConfig& c) {
  std::ostringstream os;
  auto line = [&os](const char* key, const std::string& v) { os << key << " = " << v << '\n'; };
  auto quoted = [](const std::string& s) { return '"' + s + '"'; };
  line("command", c.command);
  if (!c.ineq.empty()) line("ineq", c.ineq);
  if (c.tau) line("tau", fmt(*c.tau));
  if (c.alpha) line("alpha", fmt(*c.alpha));
  line("phi", c.phi);
  if (c.n) line("n", std::to_string(*c.n));
  if (c.points) line("points", std::to_string(*c.points));
  line("box", fmt(c.box));
  if (c.r_min) line("r-min", fmt(*c.r_min));
  if (c.r_max) line("r-max", fmt(*c.r_max));
  if (c.trials) line("trials", std::to_string(*c.trials));
  line("seed", std::to_string(c.seed));
  line("slack", fmt(c.slack));
  line("massive", c.massive ? "true" : "false");
  if (c.resolution_check) line("resolution-check", *c.resolution_check ? "true" : "false");
  line("phase", c.phase);
  line("sample-lo", fmt(c.sample_lo));
  line("sample-hi", fmt(c.sample_hi));
  line("samples-per-decade", std::to_string(c.samples_per_decade));
  line("sigma", fmt(c.sigma));
  line("form", c.form);
  if (!c.json_out.empty()) line("json-out", quoted(c.json_out));
  if (!c.csv_out.empty()) line("csv-out", quoted(c.csv_out));
  if (!c.field_out.empty()) line("field-out", quoted(c.field_out));
  return os.str();
}

std::string default_output_dir() {
  const char* env = std::getenv("HCDIRAC_OUTPUT_DIR");
  return env && *env ? std::string(env) : std::string(".");
}

ExitCode run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    if (c.command == "check-weights") return run_check_weights(c, out);
    if (c.command == "verify") return run_verify(c, out);
    if (c.command == "thm5-constant") return run_thm5(c, out);
    if (c.command == "angular-check") return run_angular(c, out);
    if (c.command == "magnetic-verify") return run_magnetic(c, out);
    err << "error: unknown command '" << c.command << "'\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
  }
  return ExitCode::precondition;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::optional<RunConfig> config;
  try {
    config = parse_args(argc, argv, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::precondition);
  }
  if (!config) return static_cast<int>(ExitCode::pass);
  return static_cast<int>(run(*config, out, err));
}

}  // namespace hcdirac
