#include "eulerl2/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "eulerl2/error.hpp"
#include "eulerl2/ode.hpp"
#include "eulerl2/variational.hpp"

namespace eulerl2::cli {
namespace {

using nlohmann::json;

const std::vector<double> kDefaultGrid{-3.0, -2.0, -1.5, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5, 2.0, 3.0};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool is_config_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidSpec:
    case ErrorCode::DomainViolation:
    case ErrorCode::UnsupportedAlpha:
    case ErrorCode::InvalidEndpoints:
    case ErrorCode::NonpositiveScale:
    case ErrorCode::Precondition:
      return true;
    default:
      return false;
  }
}

OutputFormat format_of(const RunConfig& cfg) {
  if (cfg.format) return *cfg.format;
  switch (cfg.command) {
    case Command::Generate:
    case Command::Sweep:
    case Command::Glue:
      return OutputFormat::Csv;
    default:
      return OutputFormat::Json;
  }
}

// Curve selected by --family or --circle, with its domain.
ParamCurve selected_curve(const RunConfig& cfg) {
  if (cfg.family) {
    const Interval domain = cfg.domain.value_or(default_family_domain(*cfg.family, cfg.alpha));
    return family_curve(make_family(*cfg.family, cfg.alpha, cfg.c, domain));
  }
  const CircleSelector& sel = *cfg.circle;
  const CircleSpec spec{sel.kind, sel.center, sel.radius, sel.branch};
  return circle_curve(spec, cfg.domain.value_or(Interval{-2.0, 2.0}));
}

struct Row {
  double s, x, y, rho, phi, kappa, residual;
  ConeRegion region;
  CausalCharacter causal;
};

Row sample_row(const ParamCurve& c, double alpha, double s) {
  const Vec2L p = c.eval(s);
  const HyperbolicPolar h = to_polar(p);
  const FrameData f = frame_at(c, s);
  return {s,      p.x(),   p.y(), h.rho, h.phi, f.kappa, stationarity_residual_at(c, alpha, s),
          h.region, classify(c.deriv1(s))};
}

const char* kCsvHeader = "s,x,y,rho,phi,kappa,residual,region,causal";

std::string csv_fields(const Row& r) {
  std::string line;
  for (double v : {r.s, r.x, r.y, r.rho, r.phi, r.kappa, r.residual}) {
    line += fmt(v);
    line += ',';
  }
  line += to_string(r.region);
  line += ',';
  line += to_string(r.causal);
  return line;
}

json row_json(const Row& r) {
  return {{"s", r.s},         {"x", r.x},
          {"y", r.y},         {"rho", r.rho},
          {"phi", r.phi},     {"kappa", r.kappa},
          {"residual", r.residual}, {"region", std::string(to_string(r.region))},
          {"causal", std::string(to_string(r.causal))}};
}

json report_json(const ResidualReport& rep, double alpha) {
  json samples = json::array();
  for (const auto& s : rep.samples) {
    samples.push_back({{"s", s.s},
                       {"residual", s.residual},
                       {"causal", std::string(to_string(s.causal))},
                       {"region", std::string(to_string(s.region))}});
  }
  return {{"alpha", alpha},
          {"max_abs_residual", rep.max_abs_residual},
          {"tolerance", rep.tolerance},
          {"verdict", rep.verdict},
          {"samples", samples}};
}

std::string curve_csv(const ParamCurve& c, double alpha, const std::vector<double>& s) {
  std::string out = std::string(kCsvHeader) + "\n";
  for (double t : s) out += csv_fields(sample_row(c, alpha, t)) + "\n";
  return out;
}

std::string curve_json(const ParamCurve& c, double alpha, const std::vector<double>& s) {
  json rows = json::array();
  for (double t : s) rows.push_back(row_json(sample_row(c, alpha, t)));
  return json{{"alpha", alpha}, {"rows", rows}}.dump(2) + "\n";
}

struct Outcome {
  std::string text;
  int code = 0;
};

Outcome do_generate(const RunConfig& cfg) {
  const ParamCurve c = selected_curve(cfg);
  const auto s = sample_parameters(c.domain, static_cast<std::size_t>(cfg.samples));
  return {format_of(cfg) == OutputFormat::Csv ? curve_csv(c, cfg.alpha, s)
                                              : curve_json(c, cfg.alpha, s),
          0};
}

Outcome verify_curve(const RunConfig& cfg, const ParamCurve& c, double alpha, json extra) {
  const auto s = sample_parameters(c.domain, static_cast<std::size_t>(cfg.samples));
  const ResidualReport rep = stationary_residual(c, alpha, s, cfg.tolerance);
  const int code = rep.verdict ? 0 : 1;
  if (format_of(cfg) == OutputFormat::Csv) return {curve_csv(c, alpha, s), code};
  json j = report_json(rep, alpha);
  for (auto& [k, v] : extra.items()) j[k] = v;
  return {j.dump(2) + "\n", code};
}

Outcome do_verify(const RunConfig& cfg) {
  return verify_curve(cfg, selected_curve(cfg), cfg.alpha, json::object());
}

std::string_view op_name(TransformOp op) {
  switch (op) {
    case TransformOp::Swap: return "swap";
    case TransformOp::Inversion: return "inversion";
    case TransformOp::Boost: return "boost";
    case TransformOp::Dilate: return "dilate";
    case TransformOp::ReflectX: return "reflect-x";
    case TransformOp::ReflectY: return "reflect-y";
  }
  return "?";
}

Outcome do_transform(const RunConfig& cfg) {
  const ParamCurve c = selected_curve(cfg);
  double alpha_out = cfg.alpha;
  ParamCurve mapped;
  switch (cfg.op) {
    case TransformOp::Swap: mapped = map_curve(c, swap_linear_map()); break;
    case TransformOp::Boost: mapped = map_curve(c, boost_map(cfg.param.value_or(0.5))); break;
    case TransformOp::Dilate: mapped = map_curve(c, dilation_map(cfg.param.value_or(2.0))); break;
    case TransformOp::ReflectX: mapped = map_curve(c, reflect_x_map()); break;
    case TransformOp::ReflectY: mapped = map_curve(c, reflect_y_map()); break;
    case TransformOp::Inversion: {
      const double mid = 0.5 * (c.domain.lo + c.domain.hi);
      const PolarOde kind = polar_ode_for(classify(c.deriv1(mid)), region_of(c.eval(mid)));
      alpha_out = inversion_alpha_map(cfg.alpha, kind);
      mapped = invert_curve(c);
      break;
    }
  }
  json extra{{"op", std::string(op_name(cfg.op))}, {"alpha_in", cfg.alpha}};
  return verify_curve(cfg, mapped, alpha_out, extra);
}

Outcome do_sweep(const RunConfig& cfg) {
  const std::vector<double>& grid = cfg.alphas.empty() ? kDefaultGrid : cfg.alphas;
  struct Point {
    std::string status = "ok";
    double max_abs = 0.0;
    bool verdict = false;
  };
  std::vector<std::future<Point>> jobs;
  for (double alpha : grid) {
    jobs.push_back(std::async(std::launch::async, [&cfg, alpha] {
      Point p;
      if (alpha == critical_alpha(*cfg.family) && !cfg.c) {
        p.status = "skipped";
        p.verdict = true;
        return p;
      }
      try {
        const Interval domain = cfg.domain.value_or(default_family_domain(*cfg.family, alpha));
        const ParamCurve c = family_curve(make_family(*cfg.family, alpha, cfg.c, domain));
        const auto s = sample_parameters(c.domain, static_cast<std::size_t>(cfg.samples));
        const ResidualReport rep = stationary_residual(c, alpha, s, cfg.tolerance);
        p.max_abs = rep.max_abs_residual;
        p.verdict = rep.verdict;
      } catch (const Error& e) {
        p.status = std::string(to_string(e.code()));
      }
      return p;
    }));
  }
  bool all = true;
  std::string csv = "alpha,max_abs_residual,verdict,status\n";
  json rows = json::array();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Point p = jobs[i].get();
    all = all && p.verdict;
    csv += fmt(grid[i]) + "," + fmt(p.max_abs) + "," + (p.verdict ? "true" : "false") + "," +
           p.status + "\n";
    rows.push_back({{"alpha", grid[i]},
                    {"max_abs_residual", p.max_abs},
                    {"verdict", p.verdict},
                    {"status", p.status}});
  }
  const int code = all ? 0 : 1;
  if (format_of(cfg) == OutputFormat::Csv) return {csv, code};
  return {json{{"family", std::string(to_string(*cfg.family))}, {"points", rows}}.dump(2) + "\n",
          code};
}

Outcome do_maximize(const RunConfig& cfg) {
  const EndpointPair pair = EndpointPair::make(cfg.p1, cfg.p2);
  const ComparisonReport rep = maximizer_check(pair, cfg.alpha, cfg.competitors, cfg.seed);
  const int code = rep.verdict ? 0 : 1;
  if (format_of(cfg) == OutputFormat::Csv) {
    std::string csv = "index,energy,excess\n";
    for (std::size_t i = 0; i < rep.competitor_energies.size(); ++i) {
      csv += std::to_string(i) + "," + fmt(rep.competitor_energies[i]) + "," +
             fmt(rep.competitor_energies[i] - rep.segment_energy) + "\n";
    }
    for (const auto& [eps, e] : rep.divergence) csv += "divergence," + fmt(eps) + "," + fmt(e) + "\n";
    return {csv, code};
  }
  json div = json::array();
  for (const auto& [eps, e] : rep.divergence) div.push_back({{"eps", eps}, {"energy", e}});
  json j{{"alpha", rep.alpha},
         {"p1", {cfg.p1.x(), cfg.p1.y()}},
         {"p2", {cfg.p2.x(), cfg.p2.y()}},
         {"origin_between", pair.origin_between},
         {"segment_energy", std::isfinite(rep.segment_energy) ? json(rep.segment_energy)
                                                              : json("inf")},
         {"competitor_energies", rep.competitor_energies},
         {"rejected", rep.rejected},
         {"max_excess", rep.competitor_energies.empty() ? json(nullptr) : json(rep.max_excess)},
         {"outcome", std::string(to_string(rep.outcome))},
         {"verdict", rep.verdict},
         {"divergence", div},
         {"seed", cfg.seed}};
  return {j.dump(2) + "\n", code};
}

Outcome do_glue(const RunConfig& cfg) {
  const PiecewiseCurve g = glued_mixed_curve(cfg.alpha);
  // Hyperbolic-angle window kept well inside the region where the frames
  // are accurate; the pieces approach the junction as sigma grows.
  const Interval sigma = cfg.alpha < 0.0 ? Interval{-1.5, 1.5} : Interval{0.1, 1.0};
  const auto sig = sample_parameters(sigma, static_cast<std::size_t>(cfg.samples));
  std::string csv = std::string("piece,") + kCsvHeader + "\n";
  json pieces = json::array();
  for (std::size_t i = 0; i < g.pieces.size(); ++i) {
    const ParamCurve& c = g.pieces[i].curve;
    const bool negative = c.domain.hi < 0.0;
    json rows = json::array();
    double worst = 0.0;
    for (double t : sig) {
      const double s = negative ? -std::exp(-t) : std::exp(-t);
      const Row r = sample_row(c, cfg.alpha, s);
      worst = std::max(worst, std::abs(r.residual));
      csv += std::to_string(i) + "," + csv_fields(r) + "\n";
      rows.push_back(row_json(r));
    }
    pieces.push_back({{"causal", std::string(to_string(g.pieces[i].causal))},
                      {"region", std::string(to_string(g.pieces[i].region))},
                      {"max_abs_residual", worst},
                      {"rows", rows}});
  }
  if (format_of(cfg) == OutputFormat::Csv) return {csv, 0};
  json junctions = json::array();
  for (const Vec2L& j : g.junctions) junctions.push_back({j.x(), j.y()});
  return {json{{"alpha", cfg.alpha},
               {"closed", g.closed},
               {"closure_gap", closure_gap(g)},
               {"junctions", junctions},
               {"pieces", pieces}}
                  .dump(2) + "\n",
          0};
}

std::filesystem::path resolve_output(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("EULERL2_OUTPUT_DIR"); dir && *dir) {
      return std::filesystem::path(dir) / p;
    }
  }
  return p;
}

void emit_error(std::ostream& err, std::string_view code, const std::string& message) {
  err << json{{"error", std::string(code)}, {"message", message}}.dump() << "\n";
}

}  // namespace

Interval parse_interval(const std::string& text) {
  const auto colon = text.find(':', 1);
  if (colon == std::string::npos) throw ConfigError("interval must look like a:b, got " + text);
  try {
    std::size_t used_a = 0;
    std::size_t used_b = 0;
    const std::string a = text.substr(0, colon);
    const std::string b = text.substr(colon + 1);
    const double lo = std::stod(a, &used_a);
    const double hi = std::stod(b, &used_b);
    if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument(text);
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
      throw ConfigError("interval needs finite a < b, got " + text);
    }
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw ConfigError("cannot parse interval " + text);
  }
}

Vec2L parse_point(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ConfigError("point must look like x,y, got " + text);
  try {
    std::size_t ux = 0;
    std::size_t uy = 0;
    const std::string xs = text.substr(0, comma);
    const std::string ys = text.substr(comma + 1);
    const double x = std::stod(xs, &ux);
    const double y = std::stod(ys, &uy);
    if (ux != xs.size() || uy != ys.size() || !std::isfinite(x) || !std::isfinite(y)) {
      throw std::invalid_argument(text);
    }
    return {x, y};
  } catch (const std::logic_error&) {
    throw ConfigError("cannot parse point " + text);
  }
}

void validate(const RunConfig& cfg) {
  if (cfg.samples < 2) throw ConfigError("--samples must be at least 2");
  if (!(cfg.tolerance > 0.0)) throw ConfigError("--tol must be positive");
  if (!std::isfinite(cfg.alpha)) throw ConfigError("--alpha must be finite");
  const bool needs_curve = cfg.command == Command::Generate || cfg.command == Command::Verify ||
                           cfg.command == Command::Transform;
  if (needs_curve && cfg.family.has_value() == cfg.circle.has_value()) {
    throw ConfigError("give exactly one of --family or --circle");
  }
  if (!needs_curve && cfg.circle) throw ConfigError("--circle is not used by this command");
  if (cfg.command == Command::Sweep && !cfg.family) throw ConfigError("sweep needs --family");
  if ((cfg.command == Command::Maximize || cfg.command == Command::Glue) && cfg.family) {
    throw ConfigError("--family is not used by this command");
  }
  if (cfg.circle && !(cfg.circle->radius > 0.0)) throw ConfigError("--radius must be positive");
  if (cfg.command == Command::Maximize && cfg.competitors < 1) {
    throw ConfigError("--competitors must be at least 1");
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Outcome result;
  try {
    validate(config);
    switch (config.command) {
      case Command::Generate: result = do_generate(config); break;
      case Command::Verify: result = do_verify(config); break;
      case Command::Transform: result = do_transform(config); break;
      case Command::Sweep: result = do_sweep(config); break;
      case Command::Maximize: result = do_maximize(config); break;
      case Command::Glue: result = do_glue(config); break;
    }
  } catch (const ConfigError& e) {
    emit_error(err, "ConfigError", e.what());
    return 2;
  } catch (const Error& e) {
    emit_error(err, to_string(e.code()), e.what());
    return is_config_error(e.code()) ? 2 : 1;
  }
  if (config.output_path.empty()) {
    out << result.text;
    out.flush();
  } else {
    const auto path = resolve_output(config.output_path);
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
      emit_error(err, "IoError", "cannot open " + path.string());
      return 2;
    }
    file << result.text;
  }
  return result.code;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stationary curves of the Euler energy in the Lorentz-Minkowski plane", "eulerl2"};
  app.require_subcommand(1, 1);

  RunConfig cfg;
  std::string family;
  std::string circle;
  std::string center = "0,0";
  std::string branch = "plus";
  std::string domain;
  std::string format;
  std::string op = "swap";
  std::vector<double> alphas;
  std::string p1 = "1,0";
  std::string p2 = "2,0";
  double radius = 1.0;
  double c = 0.0;
  double param = 0.0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--alpha", cfg.alpha, "Exponent alpha");
    sub->add_option("--samples", cfg.samples, "Number of samples");
    sub->add_option("--tol", cfg.tolerance, "Residual tolerance");
    sub->add_option("--output,-o", cfg.output_path, "Output file (default stdout)");
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--seed", cfg.seed, "Random seed");
  };
  auto add_family = [&](CLI::App* sub) {
    sub->add_option("--family", family, "Family class")
        ->check(CLI::IsMember({"spacelike-cminus", "spacelike-cplus", "timelike-cplus",
                               "timelike-cminus"}));
    sub->add_option("--c", c, "Exponential-branch constant at the critical alpha");
    sub->add_option("--domain", domain, "Parameter interval a:b");
  };
  auto add_circle = [&](CLI::App* sub) {
    sub->add_option("--circle", circle, "Circle kind")
        ->check(CLI::IsMember({"hyperbolic", "pseudo"}));
    sub->add_option("--center", center, "Circle center x,y");
    sub->add_option("--radius", radius, "Circle radius");
    sub->add_option("--branch", branch, "Circle branch")->check(CLI::IsMember({"plus", "minus"}));
  };

  struct Sub {
    Command command;
    CLI::App* app;
  };
  std::vector<Sub> subs;
  auto* generate = app.add_subcommand("generate", "Sample a curve with frames and residuals");
  auto* verify = app.add_subcommand("verify", "Check the stationarity residual of a curve");
  auto* transform = app.add_subcommand("transform", "Map a curve and re-verify it");
  auto* sweep = app.add_subcommand("sweep", "Verify a family across an alpha grid");
  auto* maximize = app.add_subcommand("maximize", "Compare the segment with random competitors");
  auto* glue = app.add_subcommand("glue", "Sample the glued mixed-causal curve");
  subs = {{Command::Generate, generate}, {Command::Verify, verify},
          {Command::Transform, transform}, {Command::Sweep, sweep},
          {Command::Maximize, maximize}, {Command::Glue, glue}};
  for (auto* sub : {generate, verify, transform}) {
    add_common(sub);
    add_family(sub);
    add_circle(sub);
  }
  add_common(sweep);
  add_family(sweep);
  sweep->add_option("--alphas", alphas, "Alpha grid")->delimiter(',');
  add_common(maximize);
  maximize->add_option("--competitors", cfg.competitors, "Number of competitors");
  maximize->add_option("--p1", p1, "First endpoint x,y");
  maximize->add_option("--p2", p2, "Second endpoint x,y");
  add_common(glue);
  transform
      ->add_option("--op", op, "Map to apply")
      ->check(CLI::IsMember({"swap", "inversion", "boost", "dilate", "reflect-x", "reflect-y"}));
  transform->add_option("--param", param, "Boost rapidity or dilation factor");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    emit_error(err, "ConfigError", e.what());
    return 2;
  }

  try {
    for (const Sub& s : subs) {
      if (s.app->parsed()) cfg.command = s.command;
    }
    const CLI::App* chosen = app.get_subcommands().front();
    auto given = [chosen](const std::string& name) {
      const CLI::Option* opt = chosen->get_option_no_throw(name);
      return opt != nullptr && opt->count() > 0;
    };
    if (!family.empty()) cfg.family = parse_family_class(family);
    if (given("--c")) cfg.c = c;
    if (!domain.empty()) cfg.domain = parse_interval(domain);
    if (given("--circle")) {
      CircleSelector sel;
      sel.kind = circle == "hyperbolic" ? CircleKind::HyperbolicCircle : CircleKind::Pseudocircle;
      sel.center = parse_point(center);
      sel.radius = radius;
      sel.branch = branch == "plus" ? CircleBranch::Plus : CircleBranch::Minus;
      cfg.circle = sel;
    }
    if (!format.empty()) cfg.format = format == "csv" ? OutputFormat::Csv : OutputFormat::Json;
    if (cfg.command == Command::Transform) {
      if (op == "swap") cfg.op = TransformOp::Swap;
      if (op == "inversion") cfg.op = TransformOp::Inversion;
      if (op == "boost") cfg.op = TransformOp::Boost;
      if (op == "dilate") cfg.op = TransformOp::Dilate;
      if (op == "reflect-x") cfg.op = TransformOp::ReflectX;
      if (op == "reflect-y") cfg.op = TransformOp::ReflectY;
      if (given("--param")) cfg.param = param;
    }
    cfg.alphas = alphas;
    if (cfg.command == Command::Maximize) {
      cfg.p1 = parse_point(p1);
      cfg.p2 = parse_point(p2);
    }
  } catch (const ConfigError& e) {
    emit_error(err, "ConfigError", e.what());
    return 2;
  } catch (const Error& e) {
    emit_error(err, "ConfigError", e.what());
    return 2;
  }
  return run(cfg, out, err);
}

}  // namespace eulerl2::cli
