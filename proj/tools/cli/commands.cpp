#include "cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "brl/annulus_green.hpp"
#include "brl/ansatz.hpp"
#include "brl/bubbles.hpp"
#include "brl/critical_search.hpp"
#include "brl/errors.hpp"
#include "brl/interaction.hpp"
#include "brl/linalg.hpp"
#include "brl/reduced_system.hpp"
#include "brl/ring_analysis.hpp"
#include "brl/symmetry.hpp"
#include "cli/config_file.hpp"
#include "cli/run_record.hpp"

namespace brl::cli {

namespace {

// Flag values; unset ones leave the file or default value in place.
struct Flags {
  std::string config_path;
  std::optional<double> rho;
  std::optional<int> max_terms;
  std::optional<double> target_tol;
  std::optional<unsigned> workers;
  std::optional<std::string> out;

  std::string x, y;
  std::optional<double> r;

  std::vector<std::string> points;
  std::optional<std::size_t> ring_k, sample_k;
  std::optional<double> ring_r, sep;
  std::optional<std::uint64_t> seed;

  std::optional<std::size_t> k, grid_points;
  std::optional<double> golden_tol;
  std::optional<double> rho_lo, rho_hi, tol;

  std::string epsilons;
  std::optional<double> hessian_step;
  std::optional<double> x1_min, x1_max, x2_min, x2_max;
  std::optional<std::size_t> n1, n2;
};

template <typename T>
void take(const std::optional<T>& flag, T& field) {
  if (flag) field = *flag;
}

enum class PointSource { None, Explicit, Ring, Sample };

struct Resolved {
  ExperimentConfig cfg;
  PointSource source = PointSource::None;
};

PointSource point_source(const ExperimentConfig& cfg) {
  const int count = (cfg.points.empty() ? 0 : 1) + (cfg.ring_k > 0 ? 1 : 0) + (cfg.sample_k > 0 ? 1 : 0);
  if (count > 1)
    throw DomainError("give exactly one of explicit points, a ring, or a sampled configuration");
  if (!cfg.points.empty()) return PointSource::Explicit;
  if (cfg.ring_k > 0) return PointSource::Ring;
  if (cfg.sample_k > 0) return PointSource::Sample;
  return PointSource::None;
}

Resolved resolve(const Flags& f) {
  Resolved res;
  ExperimentConfig& cfg = res.cfg;
  if (!f.config_path.empty()) apply_config_file(f.config_path, cfg);

  take(f.rho, cfg.rho_in);
  take(f.max_terms, cfg.series.max_terms);
  take(f.target_tol, cfg.series.target_tol);
  take(f.workers, cfg.workers);
  take(f.out, cfg.out);

  // A point source on the command line replaces the one from the file.
  if (!f.points.empty() || f.ring_k || f.sample_k) {
    cfg.points.clear();
    cfg.ring_k = 0;
    cfg.sample_k = 0;
  }
  for (const std::string& p : f.points) cfg.points.push_back(parse_point(p));
  take(f.ring_k, cfg.ring_k);
  take(f.ring_r, cfg.ring_r);
  take(f.sample_k, cfg.sample_k);
  take(f.seed, cfg.seed);
  take(f.sep, cfg.sep);

  take(f.k, cfg.k);
  take(f.grid_points, cfg.grid_points);
  take(f.golden_tol, cfg.golden_tol);
  take(f.rho_lo, cfg.rho_lo);
  take(f.rho_hi, cfg.rho_hi);
  take(f.tol, cfg.threshold_tol);
  if (!f.epsilons.empty()) cfg.epsilons = parse_number_list(f.epsilons);
  take(f.hessian_step, cfg.hessian_step);
  take(f.x1_min, cfg.x1_min);
  take(f.x1_max, cfg.x1_max);
  take(f.x2_min, cfg.x2_min);
  take(f.x2_max, cfg.x2_max);
  take(f.n1, cfg.n1);
  take(f.n2, cfg.n2);

  res.source = point_source(cfg);
  return res;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw DomainError(message);
}

void validate_common(const ExperimentConfig& cfg) {
  require(cfg.rho_in > 0.0 && cfg.rho_in < 1.0, "rho_in must lie in (0, 1)");
  cfg.series.validate();
}

AnnulusOracle make_oracle(const ExperimentConfig& cfg) {
  return AnnulusOracle(AnnulusGeometry(cfg.rho_in), cfg.series);
}

Configuration build_configuration(const Resolved& res, const AnnulusOracle& oracle) {
  const ExperimentConfig& cfg = res.cfg;
  require(cfg.sep >= 0.0, "sep must be nonnegative");
  Configuration config;
  switch (res.source) {
    case PointSource::Explicit:
      config.points = cfg.points;
      config.sep = cfg.sep;
      break;
    case PointSource::Ring:
      require(cfg.ring_r > 0.0, "ring_r must be positive");
      config = RingConfig{cfg.ring_k, cfg.ring_r}.configuration(cfg.sep);
      break;
    case PointSource::Sample:
      config = sample_annulus_configuration(cfg.sample_k, oracle.geometry(), cfg.sep, cfg.seed);
      break;
    case PointSource::None:
      throw DomainError("no configuration: give --point, --ring-k/--ring-r or --sample-k");
  }
  require_admissible(config, oracle);
  return config;
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw DomainError("cannot open output file '" + path + "'");
  return os;
}

void close_output(std::ofstream& os, const std::string& path) {
  os.close();
  if (!os) throw DomainError("failed writing output file '" + path + "'");
}

void write_json_file(const std::string& path, const json& doc) {
  std::ofstream os = open_output(path);
  os << doc.dump(2) << '\n';
  close_output(os, path);
}

// JSON documents go to --out when given, else to stdout.
void emit_json(const json& doc, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << doc.dump(2) << '\n';
  } else {
    write_json_file(path, doc);
    out << "wrote " << path << '\n';
  }
}

json points_json(const std::vector<Vec4>& pts) {
  json arr = json::array();
  for (const Vec4& p : pts) arr.push_back({p[0], p[1], p[2], p[3]});
  return arr;
}

json eval_json(const char* command, const EvalResult& r) {
  return json{{"schema_version", kSchemaVersion}, {"command", command},
              {"value", r.value},                 {"tail_bound", r.tail_bound},
              {"terms_used", r.terms_used},       {"degraded", r.degraded}};
}

// ---- green / robin --------------------------------------------------------

int cmd_green(const Flags& f, std::ostream& out) {
  const Resolved res = resolve(f);
  validate_common(res.cfg);
  require(!f.x.empty() && !f.y.empty(), "green needs --x and --y");
  const AnnulusOracle oracle = make_oracle(res.cfg);
  const EvalResult r = oracle.green(parse_point(f.x), parse_point(f.y));
  out << eval_json("green", r).dump(2) << '\n';
  return kExitOk;
}

int cmd_robin(const Flags& f, std::ostream& out) {
  const Resolved res = resolve(f);
  validate_common(res.cfg);
  require(f.x.empty() != !f.r.has_value(), "robin needs exactly one of --x or --r");
  const Vec4 x = f.r ? Vec4(*f.r, 0.0, 0.0, 0.0) : parse_point(f.x);
  const AnnulusOracle oracle = make_oracle(res.cfg);
  const EvalResult r = oracle.robin(x);
  out << eval_json("robin", r).dump(2) << '\n';
  return kExitOk;
}

// ---- ring-scan --------------------------------------------------------------

json perpendicular_json(const PerpendicularReport& rep) {
  return json{{"max_abs_difference", rep.max_abs_difference},
              {"max_rel_difference", rep.max_rel_difference},
              {"shortcut_agrees", rep.shortcut_agrees},
              {"min_lambda1_series", rep.min_lambda1_series},
              {"argmin_series", rep.argmin_series},
              {"min_lambda1_shortcut", rep.min_lambda1_shortcut},
              {"argmin_shortcut", rep.argmin_shortcut},
              {"positivity_confirmed", rep.positivity_confirmed},
              {"summary", rep.summary}};
}

int cmd_ring_scan(const Flags& f, std::ostream& out, std::ostream& err) {
  const Resolved res = resolve(f);
  const ExperimentConfig& cfg = res.cfg;
  validate_common(cfg);
  require(cfg.k >= 1, "k must be at least 1");
  require(cfg.grid_points >= 3, "grid_points must be at least 3");
  require(cfg.golden_tol > 0.0, "golden_tol must be positive");
  require(!cfg.out.empty(), "ring-scan needs --out for the CSV file");

  RunRecord record("ring-scan", to_json(cfg));
  const AnnulusGeometry geom(cfg.rho_in);
  ScanOptions opts;
  opts.grid_points = cfg.grid_points;
  opts.workers = cfg.workers;
  opts.golden_tol = cfg.golden_tol;
  const RingScan scan = min_over_r(cfg.k, geom, cfg.series, opts);
  const bool perp = !scan.g_perp_series.empty();

  std::ofstream csv = open_output(cfg.out);
  csv << "r";
  for (std::size_t l = 1; l <= scan.k; ++l) csv << ",lambda_" << l;
  csv << ",tail_bound";
  if (perp) csv << ",g_perp_series,g_perp_shortcut,lambda1_shortcut";
  csv << '\n';
  for (std::size_t i = 0; i < scan.r_grid.size(); ++i) {
    csv << num(scan.r_grid[i]);
    for (std::size_t l = 0; l < scan.k; ++l) csv << ',' << num(scan.lambda_by_ell[l][i]);
    csv << ',' << num(scan.tail_bound[i]);
    if (perp)
      csv << ',' << num(scan.g_perp_series[i]) << ',' << num(scan.g_perp_shortcut[i]) << ','
          << num(scan.lambda1_shortcut[i]);
    csv << '\n';
  }
  close_output(csv, cfg.out);
  record.add_output(cfg.out);

  json side{{"schema_version", kSchemaVersion},
            {"kind", "ring_scan"},
            {"k", scan.k},
            {"rho_in", scan.rho_in},
            {"rows", scan.r_grid.size()},
            {"argmin_r", scan.argmin_r},
            {"min_lambda1", scan.min_value},
            {"min_tail_bound", scan.min_tail},
            {"grid_argmin", scan.grid_argmin},
            {"degraded_points", scan.degraded_points}};
  if (scan.degraded_points > 0)
    err << "warning: " << scan.degraded_points << " grid points did not reach target_tol\n";
  if (cfg.k == 4) {
    const PerpendicularReport rep = perpendicular_report(scan, geom, cfg.series);
    side["perpendicular"] = perpendicular_json(rep);
    err << rep.summary << '\n';
  }
  side["run"] = record.to_json();
  const std::string side_path = cfg.out + ".json";
  write_json_file(side_path, side);
  out << "wrote " << cfg.out << " and " << side_path << '\n';
  out << "min lambda_1 = " << num(scan.min_value) << " at r = " << num(scan.argmin_r) << '\n';
  return kExitOk;
}

// ---- threshold --------------------------------------------------------------

int cmd_threshold(const Flags& f, std::ostream& out, std::ostream& err) {
  const Resolved res = resolve(f);
  const ExperimentConfig& cfg = res.cfg;
  cfg.series.validate();
  require(cfg.k >= 1, "k must be at least 1");
  require(cfg.rho_lo > 0.0 && cfg.rho_lo < cfg.rho_hi && cfg.rho_hi < 1.0,
          "threshold range must satisfy 0 < rho_lo < rho_hi < 1");
  require(cfg.threshold_tol > 0.0, "tol must be positive");
  require(cfg.grid_points >= 3, "grid_points must be at least 3");

  RunRecord record("threshold", to_json(cfg));
  ThresholdOptions opts;
  opts.rho_lo = cfg.rho_lo;
  opts.rho_hi = cfg.rho_hi;
  opts.tol = cfg.threshold_tol;
  opts.scan.grid_points = cfg.grid_points;
  opts.scan.workers = cfg.workers;
  opts.scan.golden_tol = cfg.golden_tol;
  const ThresholdResult t = threshold_rho(cfg.k, cfg.series, opts);

  json samples = json::array();
  for (const ThresholdSample& s : t.samples)
    samples.push_back({{"rho", s.rho},
                       {"min_lambda1", s.min_value},
                       {"min_tail_bound", s.min_tail},
                       {"argmin_r", s.argmin_r},
                       {"sign_certain", s.sign_certain}});
  json doc{{"schema_version", kSchemaVersion},
           {"kind", "threshold"},
           {"k", t.k},
           {"one_signed", t.one_signed},
           {"samples", samples},
           {"warnings", t.warnings}};
  if (t.one_signed) {
    doc["sign"] = t.sign;
  } else {
    doc["rho_star"] = t.rho_star;
    doc["bracket"] = {t.bracket_lo, t.bracket_hi};
    doc["bracket_width"] = t.bracket_width;
    doc["min_at_lo"] = t.min_at_lo;
    doc["min_at_hi"] = t.min_at_hi;
  }
  for (const std::string& w : t.warnings) err << "warning: " << w << '\n';
  doc["run"] = record.to_json();
  emit_json(doc, cfg.out, out);
  return kExitOk;
}

// ---- reduce -----------------------------------------------------------------

std::vector<std::vector<double>> identity_basis(std::size_t n) {
  std::vector<std::vector<double>> basis(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) basis[i][i] = 1.0;
  return basis;
}

std::vector<double> spectrum(const Matrix& h) { return symmetric_eigen(h).values; }

int cmd_reduce(const Flags& f, std::ostream& out, std::ostream& err) {
  const Resolved res = resolve(f);
  const ExperimentConfig& cfg = res.cfg;
  validate_common(cfg);
  require(!cfg.epsilons.empty(), "at least one epsilon is required");
  for (double e : cfg.epsilons) require(e > 0.0, "epsilon values must be positive");
  require(cfg.hessian_step > 0.0, "hessian_step must be positive");

  RunRecord record("reduce", to_json(cfg));
  const AnnulusOracle oracle = make_oracle(cfg);
  const Configuration config = build_configuration(res, oracle);
  const std::size_t k = config.size();
  const ReducedSolution sol = solve_d_lambda(config, oracle);

  json doc{{"schema_version", kSchemaVersion},
           {"kind", "reduce"},
           {"k", k},
           {"rho_in", cfg.rho_in},
           {"points", points_json(config.points)},
           {"lambda", sol.lambda},
           {"d", sol.d},
           {"perron_vector", sol.spectral.eigvec},
           {"spectrum", sol.spectral.spectrum},
           {"gap", sol.spectral.gap},
           {"eig_residual", sol.eig_residual},
           {"eigvec_mismatch", sol.eigvec_mismatch},
           {"worst_tail_bound", sol.worst_tail},
           {"degraded", sol.degraded}};
  if (k > 1) {
    const SchurReport schur = schur_det_check(config, sol, oracle);
    doc["schur"] = {{"det_d_lambda", schur.det_d_lambda},
                    {"formula", schur.formula},
                    {"column_sign", schur.column_sign},
                    {"relative_error", schur.relative_error}};
  }

  // Rates exist only for a positive eigenvalue; otherwise the sweep is
  // reported empty with a warning instead of failing the whole command.
  json sweep = json::array();
  if (!(sol.lambda > 0.0)) {
    err << "warning: lambda <= 0, concentration rates are undefined\n";
    doc["warnings"] = {"lambda <= 0, concentration rates are undefined"};
  }
  for (double eps : sol.lambda > 0.0 ? cfg.epsilons : std::vector<double>{}) {
    const RateResult rate = rates(eps, sol.lambda, sol.d);
    const ResidualReport rr = residual_c0(config, sol.d, sol.lambda, eps, oracle);
    json ci = json::array();
    for (const auto& row : rr.ci) ci.push_back(row);
    sweep.push_back({{"epsilon", eps},
                     {"deltas", rate.deltas},
                     {"log_deltas", rate.log_deltas},
                     {"underflow", rate.underflow},
                     {"c0", rr.c0},
                     {"c_axis", ci}});
  }
  doc["epsilon_sweep"] = sweep;

  const std::vector<Vec4> grad = lambda1_gradient_by_point(config, oracle);
  double gnorm = 0.0;
  for (const Vec4& g : grad) gnorm += norm2(g);
  doc["gradient"] = points_json(grad);
  doc["gradient_norm"] = std::sqrt(gnorm);

  const Matrix h_full = fd_hessian(config, oracle, identity_basis(4 * k), cfg.hessian_step);
  const std::vector<double> full = spectrum(h_full);
  const double threshold = SearchControls{}.eigen_threshold;
  doc["hessian_spectrum"] = full;
  doc["stability"] = to_string(classify_spectrum(full, threshold));

  if (res.source == PointSource::Ring) {
    // Radial component along the unit invariant breathing direction.
    double radial = 0.0;
    for (std::size_t i = 0; i < k; ++i) radial += dot(grad[i], config.points[i]) / norm(config.points[i]);
    doc["gradient_radial"] = radial / std::sqrt(static_cast<double>(k));
    const SymmetryGroup group = SymmetryGroup::ring(k);
    const std::vector<double> reduced =
        spectrum(fd_hessian(config, oracle, group.invariant_basis(), cfg.hessian_step));
    doc["hessian_spectrum_invariant"] = reduced;
    doc["stability_invariant"] = to_string(classify_spectrum(reduced, threshold));
  }
  doc["run"] = record.to_json();
  emit_json(doc, cfg.out, out);
  return kExitOk;
}

// ---- profile ----------------------------------------------------------------

int cmd_profile(const Flags& f, std::ostream& out, std::ostream& err) {
  const Resolved res = resolve(f);
  const ExperimentConfig& cfg = res.cfg;
  validate_common(cfg);
  require(!cfg.epsilons.empty() && cfg.epsilons.front() > 0.0, "epsilon must be positive");
  require(cfg.x1_min <= cfg.x1_max && cfg.x2_min <= cfg.x2_max, "grid ranges must be ordered");
  require(cfg.n1 >= 1 && cfg.n2 >= 1, "grid sizes must be positive");
  require(!cfg.out.empty(), "profile needs --out for the CSV file");
  const double eps = cfg.epsilons.front();

  RunRecord record("profile", to_json(cfg));
  const AnnulusOracle oracle = make_oracle(cfg);
  const Configuration config = build_configuration(res, oracle);
  const ReducedSolution sol = solve_d_lambda(config, oracle);
  const SliceGrid grid{cfg.x1_min, cfg.x1_max, cfg.x2_min, cfg.x2_max, cfg.n1, cfg.n2};
  const AnsatzProfile prof = ansatz_profile(config, sol, eps, oracle, grid, cfg.workers);

  std::ofstream csv = open_output(cfg.out);
  csv << "x1,x2,x3,x4,W\n";
  for (std::size_t i = 0; i < prof.points.size(); ++i) {
    const Vec4& p = prof.points[i];
    csv << num(p[0]) << ',' << num(p[1]) << ',' << num(p[2]) << ',' << num(p[3]) << ','
        << num(prof.values[i]) << '\n';
  }
  close_output(csv, cfg.out);
  record.add_output(cfg.out);

  json bubbles = json::array();
  for (const BubbleParams& b : prof.bubbles)
    bubbles.push_back({{"delta", b.delta}, {"center", {b.center[0], b.center[1], b.center[2], b.center[3]}}});
  if (prof.large_delta) err << "warning: some delta exceeds 0.05; the two-term projection is coarse\n";
  json side{{"schema_version", kSchemaVersion},
            {"kind", "profile"},
            {"epsilon", prof.epsilon},
            {"lambda", prof.lambda},
            {"d", prof.d},
            {"deltas", prof.deltas},
            {"underflow", prof.underflow},
            {"bubbles", bubbles},
            {"rows", prof.points.size()},
            {"skipped", prof.skipped},
            {"large_delta", prof.large_delta},
            {"run", record.to_json()}};
  const std::string side_path = cfg.out + ".json";
  write_json_file(side_path, side);
  out << "wrote " << cfg.out << " and " << side_path << '\n';
  return kExitOk;
}

// ---- option wiring ----------------------------------------------------------

void add_common(CLI::App* app, Flags& f) {
  app->add_option("--config", f.config_path, "INI-style config file; flags override it")
      ->check(CLI::ExistingFile);
  app->add_option("--rho", f.rho, "inner radius of the annulus");
  app->add_option("--max-terms", f.max_terms, "series truncation (overrides BRL_MAX_TERMS)");
  app->add_option("--target-tol", f.target_tol, "requested tail bound");
  app->add_option("--workers", f.workers, "worker threads, 0 = all cores");
  app->add_option("--out", f.out, "output path");
}

void add_points(CLI::App* app, Flags& f) {
  app->add_option("--point", f.points, "point x1,x2,x3,x4 (repeatable)");
  app->add_option("--ring-k", f.ring_k, "ring with this many points");
  app->add_option("--ring-r", f.ring_r, "ring radius");
  app->add_option("--sample-k", f.sample_k, "sample this many admissible points");
  app->add_option("--seed", f.seed, "sampling seed");
  app->add_option("--sep", f.sep, "separation radius of the admissible set");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Green's function and reduced-energy experiments on the 4D annulus", "brl"};
  app.require_subcommand(1);
  Flags f;

  CLI::App* green = app.add_subcommand("green", "Dirichlet Green's function G(x, y)");
  add_common(green, f);
  green->add_option("--x", f.x, "first point x1,x2,x3,x4")->required();
  green->add_option("--y", f.y, "second point x1,x2,x3,x4")->required();

  CLI::App* robin = app.add_subcommand("robin", "Robin function tau(x)");
  add_common(robin, f);
  robin->add_option("--x", f.x, "point x1,x2,x3,x4");
  robin->add_option("--r", f.r, "radius; shorthand for the point (r,0,0,0)");

  CLI::App* scan = app.add_subcommand("ring-scan", "Lambda_l(r) on a ring scan, CSV + JSON sidecar");
  add_common(scan, f);
  scan->add_option("--k", f.k, "points on the ring");
  scan->add_option("--grid-points", f.grid_points, "radii in the scan");
  scan->add_option("--golden-tol", f.golden_tol, "tolerance of the minimizer refinement");

  CLI::App* thr = app.add_subcommand("threshold", "bisection for the positivity threshold in rho");
  add_common(thr, f);
  thr->add_option("--k", f.k, "points on the ring");
  thr->add_option("--rho-lo", f.rho_lo, "lower end of the search range");
  thr->add_option("--rho-hi", f.rho_hi, "upper end of the search range");
  thr->add_option("--tol", f.tol, "bracket width");
  thr->add_option("--grid-points", f.grid_points, "radii per scan");
  thr->add_option("--golden-tol", f.golden_tol, "tolerance of each minimizer refinement");

  CLI::App* red = app.add_subcommand("reduce", "reduced system, rates and stability at a configuration");
  add_common(red, f);
  add_points(red, f);
  red->add_option("--epsilon", f.epsilons, "comma-separated epsilon values");
  red->add_option("--hessian-step", f.hessian_step, "finite-difference step of the Hessian");

  CLI::App* prof = app.add_subcommand("profile", "ansatz profile on the (x1, x2) plane, CSV + JSON sidecar");
  add_common(prof, f);
  add_points(prof, f);
  prof->add_option("--epsilon", f.epsilons, "epsilon value (the first one of a list is used)");
  prof->add_option("--x1-min", f.x1_min);
  prof->add_option("--x1-max", f.x1_max);
  prof->add_option("--x2-min", f.x2_min);
  prof->add_option("--x2-max", f.x2_max);
  prof->add_option("--n1", f.n1, "grid points along x1");
  prof->add_option("--n2", f.n2, "grid points along x2");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (green->parsed()) return cmd_green(f, out);
    if (robin->parsed()) return cmd_robin(f, out);
    if (scan->parsed()) return cmd_ring_scan(f, out, err);
    if (thr->parsed()) return cmd_threshold(f, out, err);
    if (red->parsed()) return cmd_reduce(f, out, err);
    if (prof->parsed()) return cmd_profile(f, out, err);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitUsage;
}

}  // namespace brl::cli
