#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <utility>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "rqit/distinguishability.hpp"
#include "rqit/entanglement.hpp"
#include "rqit/errors.hpp"
#include "rqit/parallel.hpp"
#include "rqit/state_geometry.hpp"
#include "rqit/teleportation.hpp"
#include "svg.hpp"

namespace rqit::cli {
namespace {

struct Table {
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  bool failed = false;  // a built-in check did not pass
};

std::string num(double v) { return fmt::format("{:.12g}", v); }

std::vector<double> column(const Table& t, std::size_t index) {
  std::vector<double> out;
  out.reserve(t.rows.size());
  for (const auto& row : t.rows) out.push_back(row[index]);
  return out;
}

void add_config(Table& t, const RunConfig& c) {
  t.meta.emplace_back("command", to_string(c.command));
  t.meta.emplace_back("r", fmt::format("{}", c.r));
  t.meta.emplace_back("xi_grid", format_grid(c.xi_grid));
  if (c.command == Command::kCurvature) t.meta.emplace_back("theta_grid", format_grid(c.theta_grid));
  t.meta.emplace_back("cutoff_tol", fmt::format("{}", c.cutoff_tol));
  t.meta.emplace_back("samples", fmt::format("{}", c.samples));
  t.meta.emplace_back("seed", fmt::format("{}", c.seed));
  t.meta.emplace_back("output_path", c.output_path);
  if (!c.svg_path.empty()) t.meta.emplace_back("svg_path", c.svg_path);
  if (c.command == Command::kFig2) t.meta.emplace_back("conditioned", c.conditioned ? "true" : "false");
}

FockCutoff cutoff_for(const RunConfig& c, Table& t) {
  const auto cutoff = FockCutoff::for_acceleration(AccelerationParam(c.r), c.cutoff_tol);
  t.meta.emplace_back("n_max", fmt::format("{}", cutoff.n_max()));
  t.meta.emplace_back("fock_levels", fmt::format("{}", cutoff.levels()));
  return cutoff;
}

void note_three_level_family(Table& t) {
  t.meta.emplace_back("n_max", "none");
  t.meta.emplace_back("state_family", "three_level_small_r");
}

Table fig1(const RunConfig& c) {
  Table t;
  add_config(t, c);
  const AccelerationParam r(c.r);
  const auto cutoff = cutoff_for(c, t);
  t.columns = {"xi", "log_negativity"};
  for (const auto& res : negativity_sweep(r, c.xi_grid.values(), cutoff, c.cutoff_tol)) t.rows.push_back({res.xi, res.log_negativity});
  return t;
}

Table fig2(const RunConfig& c) {
  if (c.samples < 2) throw ArgumentError("--samples must be at least 2");
  Table t;
  add_config(t, c);
  const AccelerationParam r(c.r);
  const auto cutoff = cutoff_for(c, t);
  t.meta.emplace_back("sample_block", fmt::format("{}", kSampleBlock));
  t.columns = {"xi", "fidelity_mc", "std_err", "fidelity_exact"};
  if (c.conditioned) {
    t.columns.insert(t.columns.end(), {"conditioned_mc", "conditioned_std_err", "conditioned_quadrature"});
  }
  for (double xi : c.xi_grid.values()) {
    // Every grid point reuses the same seed, so neighbouring points share
    // their random inputs.
    const auto channel = ProtocolChannel::build(OrthogonalityParam(xi), r, cutoff, c.cutoff_tol);
    const auto mc = average_fidelity_mc(channel, c.samples, c.seed);
    std::vector<double> row{xi, mc.mean, mc.std_error, average_fidelity_exact(channel)};
    if (c.conditioned) {
      const auto cond = conditioned_fidelity_mc(channel, c.samples, c.seed);
      row.insert(row.end(), {cond.mean, cond.std_error, conditioned_fidelity_quadrature(channel)});
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table fig3(const RunConfig& c) {
  Table t;
  add_config(t, c);
  const AccelerationParam r(c.r);
  const auto cutoff = cutoff_for(c, t);
  t.columns = {"xi", "theta"};
  for (const auto& res : angle_sweep(r, c.xi_grid.values(), cutoff, c.cutoff_tol)) t.rows.push_back({res.xi, res.theta});
  return t;
}

Table metric(const RunConfig& c, std::ostream& err) {
  if (c.samples < 1) throw ArgumentError("--samples must be positive");
  if (c.r > kSmallRLimit) err << "warning: r above 0.3 leaves the small-acceleration regime\n";
  Table t;
  add_config(t, c);
  note_three_level_family(t);
  t.meta.emplace_back("max_bloch_radius", "0.7");
  t.columns = {"x", "y", "z"};
  const char* names[] = {"xx", "xy", "xz", "yy", "yz", "zz"};
  for (const char* n : names) t.columns.push_back(fmt::format("numeric_{}", n));
  for (const char* n : names) t.columns.push_back(fmt::format("closed_form_{}", n));
  t.columns.push_back("max_rel_err");

  const AccelerationParam r(c.r);
  std::mt19937_64 rng(c.seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<BlochVector> points;
  while (static_cast<std::int64_t>(points.size()) < c.samples) {
    const BlochVector b{u(rng), u(rng), u(rng)};
    if (std::sqrt(b.norm_squared()) <= 0.7) points.push_back(b);
  }
  const auto rows = parallel_map(points.size(), [&](std::size_t i) {
    const auto& b = points[i];
    const Eigen::Matrix3d num_t = numeric_metric(b, r).tensor;
    const Eigen::Matrix3d cf = metric_cartesian(b, r).tensor;
    std::vector<double> row{b.x, b.y, b.z};
    const int idx[6][2] = {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}};
    double worst = 0.0;
    for (const auto& p : idx) row.push_back(num_t(p[0], p[1]));
    for (const auto& p : idx) {
      row.push_back(cf(p[0], p[1]));
      worst = std::max(worst, std::abs(num_t(p[0], p[1]) - cf(p[0], p[1])) / std::abs(cf(p[0], p[1])));
    }
    row.push_back(worst);
    return row;
  });
  t.rows = rows;
  return t;
}

Table curvature(const RunConfig& c, std::ostream& err) {
  if (c.r > kSmallRLimit) err << "warning: r above 0.3 leaves the small-acceleration regime\n";
  Table t;
  add_config(t, c);
  note_three_level_family(t);
  const auto sel = select_h_reading();
  t.meta.emplace_back("h_reading", std::string(to_string(sel.selected)));
  t.meta.emplace_back("h_rms_discrepancy_radial_coordinate", num(sel.radial_discrepancy));
  t.meta.emplace_back("h_rms_discrepancy_acceleration_parameter", num(sel.acceleration_discrepancy));
  t.columns = {"xi_c", "theta", "numeric_R", "closed_form_R", "discrepancy"};
  const AccelerationParam r(c.r);
  std::vector<std::pair<double, double>> points;
  for (double xi : c.xi_grid.values())
    for (double th : c.theta_grid.values()) points.emplace_back(xi, th);
  const auto rows = parallel_map(points.size(), [&](std::size_t i) {
    const auto res = compare_curvature(points[i].first, points[i].second, r);
    return std::vector<double>{res.xi_c, res.theta, res.numeric_R, res.closed_form_R, res.discrepancy};
  });
  t.rows = rows;
  return t;
}

Table validate(const RunConfig& c) {
  Table t;
  add_config(t, c);
  const AccelerationParam r(c.r);
  const auto cutoff = cutoff_for(c, t);
  t.columns = {"check", "value", "reference", "abs_error", "tolerance", "pass"};

  struct Check {
    std::string name;
    double value;
    double reference;
    double tolerance;
  };
  std::vector<Check> checks;
  const AccelerationParam rest(0.0);
  const FockCutoff small(2);
  checks.push_back({"bell_log_negativity", log_negativity(entangled_state(OrthogonalityParam(0.0), rest, small)),
                    1.0, 1e-10});
  checks.push_back({"orthogonal_bures_angle", angle_sweep(rest, {0.0}, small)[0].theta, std::numbers::pi / 2,
                    1e-10});
  checks.push_back({"ideal_teleportation_fidelity",
                    average_fidelity_exact(OrthogonalityParam(0.0), rest, small), 1.0, 1e-12});
  checks.push_back({"rest_metric_origin",
                    numeric_metric({0, 0, 0}, rest).tensor(0, 0), 0.25, 1e-6});
  checks.push_back({"rest_curvature", scalar_curvature_numeric(0.5, 1.0, rest), 24.0, 1e-3});
  const auto doubled = cutoff.doubled();
  checks.push_back({"log_negativity_cutoff_doubling",
                    negativity_sweep(r, {0.0}, cutoff, c.cutoff_tol)[0].log_negativity,
                    negativity_sweep(r, {0.0}, doubled, c.cutoff_tol)[0].log_negativity, 1e-8});
  checks.push_back({"bures_angle_cutoff_doubling", angle_sweep(r, {0.0}, cutoff, c.cutoff_tol)[0].theta,
                    angle_sweep(r, {0.0}, doubled, c.cutoff_tol)[0].theta, 1e-8});
  const OrthogonalityParam xi0(0.0);
  checks.push_back({"fidelity_cutoff_doubling",
                    average_fidelity_exact(ProtocolChannel::build(xi0, r, cutoff, c.cutoff_tol)),
                    average_fidelity_exact(ProtocolChannel::build(xi0, r, doubled, c.cutoff_tol)), 1e-8});

  for (std::size_t i = 0; i < checks.size(); ++i) {
    const auto& ch = checks[i];
    const double e = std::abs(ch.value - ch.reference);
    t.meta.emplace_back(fmt::format("check_{}", i), ch.name);
    const bool pass = e <= ch.tolerance;
    t.failed = t.failed || !pass;
    t.rows.push_back({static_cast<double>(i), ch.value, ch.reference, e, ch.tolerance, pass ? 1.0 : 0.0});
  }
  return t;
}

std::string render_csv(const Table& t) {
  std::string out;
  for (const auto& [k, v] : t.meta) out += fmt::format("# {}={}\n", k, v);
  for (std::size_t i = 0; i < t.columns.size(); ++i) out += (i ? "," : "") + t.columns[i];
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += num(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string render_plot(const RunConfig& c, const Table& t) {
  std::vector<Series> series;
  std::string title;
  switch (c.command) {
    case Command::kFig1:
      title = fmt::format("log negativity, r = {}", c.r);
      series.push_back({"log_negativity", column(t, 1)});
      break;
    case Command::kFig2:
      title = fmt::format("average teleportation fidelity, r = {}", c.r);
      series.push_back({"fidelity_mc", column(t, 1)});
      series.push_back({"fidelity_exact", column(t, 3)});
      if (c.conditioned) series.push_back({"conditioned_quadrature", column(t, 6)});
      break;
    case Command::kFig3:
      title = fmt::format("Bures angle, r = {}", c.r);
      series.push_back({"theta", column(t, 1)});
      break;
    default:
      throw ArgumentError("--svg is available for fig1, fig2 and fig3");
  }
  return render_svg(title, "xi", column(t, 0), series);
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) return false;
  f << text;
  f.flush();
  return static_cast<bool>(f);
}

}  // namespace

std::string to_string(Command command) {
  switch (command) {
    case Command::kFig1: return "fig1";
    case Command::kFig2: return "fig2";
    case Command::kFig3: return "fig3";
    case Command::kMetric: return "metric";
    case Command::kCurvature: return "curvature";
    case Command::kValidate: return "validate";
  }
  return "unknown";
}

RunConfig defaults_for(Command command) {
  RunConfig c;
  c.command = command;
  switch (command) {
    case Command::kFig1: c.r = 0.6; c.xi_grid = {0.0, 0.95, 0.01}; break;
    case Command::kFig2: c.r = 0.6; c.xi_grid = {0.0, 0.95, 0.05}; c.samples = 200000; break;
    case Command::kFig3: c.r = 0.85; c.xi_grid = {0.0, 0.95, 0.01}; break;
    case Command::kMetric: c.r = 0.05; c.samples = 20; break;
    case Command::kCurvature: c.r = 0.1; c.xi_grid = {0.2, 0.8, 0.15}; break;
    case Command::kValidate: c.r = 0.6; break;
  }
  return c;
}

Grid parse_grid(const std::string& text) {
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw ArgumentError("grid must be min:max:step, got '" + text + "'");
    }
    if (used != item.size() || !std::isfinite(v)) throw ArgumentError("grid must be min:max:step, got '" + text + "'");
    parts.push_back(v);
  }
  if (parts.size() != 3) throw ArgumentError("grid must be min:max:step, got '" + text + "'");
  Grid g{parts[0], parts[1], parts[2]};
  g.values();  // validates
  return g;
}

std::string format_grid(const Grid& grid) { return fmt::format("{}:{}:{}", grid.min, grid.max, grid.step); }

int run(const RunConfig& config, std::ostream& err) {
  std::string csv, svg;
  bool failed = false;
  try {
    if (!(config.cutoff_tol > 0.0 && config.cutoff_tol < 1.0)) throw ArgumentError("--cutoff-tol must lie in (0, 1)");
    Table t;
    switch (config.command) {
      case Command::kFig1: t = fig1(config); break;
      case Command::kFig2: t = fig2(config); break;
      case Command::kFig3: t = fig3(config); break;
      case Command::kMetric: t = metric(config, err); break;
      case Command::kCurvature: t = curvature(config, err); break;
      case Command::kValidate: t = validate(config); break;
    }
    if (!config.svg_path.empty()) svg = render_plot(config, t);
    csv = render_csv(t);
    failed = t.failed;
  } catch (const TruncationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const NotPsdError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const SizeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kExitArgument;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumeric;
  }

  if (config.output_path == "-") {
    std::cout << csv << std::flush;
    if (!std::cout) return kExitIo;
  } else if (!write_file(config.output_path, csv)) {
    err << "error: cannot write " << config.output_path << '\n';
    return kExitIo;
  }
  if (!svg.empty() && !write_file(config.svg_path, svg)) {
    err << "error: cannot write " << config.svg_path << '\n';
    return kExitIo;
  }
  if (failed) {
    err << "error: validation checks failed\n";
    return kExitNumeric;
  }
  return kExitOk;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement, teleportation and state geometry under the Unruh channel"};
  app.require_subcommand(1);

  struct Options {
    double r = 0.0;
    std::string xi, theta;
    double cutoff_tol = 1e-12;
    std::int64_t samples = 0;
    std::uint64_t seed = 0;
    std::string output = "-";
    std::string svg;
    bool conditioned = false;
  } opt;

  struct Entry {
    Command command;
    const char* help;
    CLI::App* app = nullptr;
  };
  std::vector<Entry> entries{
      {Command::kFig1, "Log negativity against xi. Columns: xi,log_negativity"},
      {Command::kFig2,
       "Average teleportation overlap against xi. Columns: xi,fidelity_mc,std_err,fidelity_exact "
       "[,conditioned_mc,conditioned_std_err,conditioned_quadrature with --conditioned]"},
      {Command::kFig3, "Bures angle between the accelerated |+> and |phi> against xi. Columns: xi,theta"},
      {Command::kMetric,
       "Numeric vs closed-form metric at --samples random Bloch points (|n| <= 0.7). Columns: x,y,z,"
       "numeric_{xx,xy,xz,yy,yz,zz},closed_form_{xx,...},max_rel_err"},
      {Command::kCurvature,
       "Scalar curvature over xi_c (--xi) and theta (--theta). Columns: xi_c,theta,numeric_R,closed_form_R,"
       "discrepancy"},
      {Command::kValidate, "Built-in consistency checks. Columns: check,value,reference,abs_error,tolerance,pass"},
  };

  std::vector<std::pair<CLI::App*, std::vector<CLI::Option*>>> tracked;
  for (auto& e : entries) {
    const auto defaults = defaults_for(e.command);
    e.app = app.add_subcommand(to_string(e.command), e.help);
    std::vector<CLI::Option*> opts;
    opts.push_back(e.app->add_option("--r", opt.r, "acceleration parameter r >= 0")
                       ->default_str(fmt::format("{}", defaults.r)));
    opts.push_back(e.app->add_option("--xi", opt.xi, "xi grid min:max:step")->default_str(format_grid(defaults.xi_grid)));
    opts.push_back(e.app->add_option("--cutoff-tol", opt.cutoff_tol, "Fock truncation tolerance")
                       ->default_str(fmt::format("{}", defaults.cutoff_tol)));
    opts.push_back(e.app->add_option("--samples", opt.samples, "Monte-Carlo samples or random points")
                       ->default_str(fmt::format("{}", defaults.samples)));
    opts.push_back(e.app->add_option("--seed", opt.seed, "random seed")->default_str(fmt::format("{}", defaults.seed)));
    opts.push_back(e.app->add_option("-o,--output", opt.output, "CSV path, '-' for stdout")->default_str("-"));
    opts.push_back(e.app->add_option("--svg", opt.svg, "also write a line plot to this path"));
    if (e.command == Command::kCurvature) {
      opts.push_back(e.app->add_option("--theta", opt.theta, "theta grid min:max:step")
                         ->default_str(format_grid(defaults.theta_grid)));
    }
    if (e.command == Command::kFig2) {
      opts.push_back(e.app->add_flag("--conditioned", opt.conditioned,
                                     "add the overlap conditioned on Rob's qubit levels"));
    }
    tracked.emplace_back(e.app, std::move(opts));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitArgument;
  }

  for (const auto& e : entries) {
    if (!e.app->parsed()) continue;
    RunConfig c = defaults_for(e.command);
    try {
      if (e.app->count("--r")) c.r = opt.r;
      if (e.app->count("--xi")) c.xi_grid = parse_grid(opt.xi);
      if (e.command == Command::kCurvature && e.app->count("--theta")) c.theta_grid = parse_grid(opt.theta);
      if (e.app->count("--cutoff-tol")) c.cutoff_tol = opt.cutoff_tol;
      if (e.app->count("--samples")) c.samples = opt.samples;
      if (e.app->count("--seed")) c.seed = opt.seed;
      c.output_path = opt.output;
      c.svg_path = opt.svg;
      c.conditioned = opt.conditioned;
    } catch (const ArgumentError& ex) {
      err << "error: " << ex.what() << '\n';
      return kExitArgument;
    }
    return run(c, err);
  }
  return kExitArgument;
}

}  // namespace rqit::cli
