// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. argv[1] is the path of the CLI binary.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "eulerl2/error.hpp"
#include "eulerl2/families.hpp"
#include "eulerl2/ode.hpp"
#include "eulerl2/variational.hpp"
#include "order_problems.hpp"

using namespace eulerl2;

namespace {

constexpr FamilyClass kFamilies[] = {FamilyClass::SpacelikeCMinus, FamilyClass::SpacelikeCPlus,
                                     FamilyClass::TimelikeCPlus, FamilyClass::TimelikeCMinus};
constexpr double kGrid[] = {-3.0, -2.0, -1.5, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5, 2.0, 3.0};

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// Representative exponential-branch constant at the critical alpha.
std::optional<double> critical_c(FamilyClass f, double alpha) {
  if (alpha != critical_alpha(f)) return std::nullopt;
  return family_ode(f) == PolarOde::K1 ? 0.5 : 2.0;
}

ResidualReport residual_of(const ParamCurve& c, double alpha, int n = 200) {
  return stationary_residual(c, alpha, sample_parameters(c.domain, static_cast<std::size_t>(n)));
}

Outcome closed_form_ode() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  int cases = 0;
  for (FamilyClass f : kFamilies) {
    for (double alpha : kGrid) {
      if (alpha == critical_alpha(f)) continue;
      const FamilySpec spec = make_family(f, alpha);
      for (double s : sample_parameters(spec.domain, 200)) {
        const RhoJet j = family_rho(spec, s);
        worst = std::max(worst, polar_ode_relative_residual(family_ode(f), alpha, j.rho, j.rho1,
                                                            j.rho2));
      }
      ++cases;
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {worst <= 1e-10 && secs < 5.0 && cases == 40,
          std::to_string(cases) + " (family, alpha) cases, max relative residual " + fmt(worst) +
              ", " + fmt(secs) + " s"};
}

Outcome stationarity_residual() {
  int passed = 0;
  int total = 0;
  double worst = 0.0;
  auto expect_pass = [&](const ParamCurve& c, double alpha) {
    const ResidualReport r = residual_of(c, alpha);
    worst = std::max(worst, r.max_abs_residual);
    ++total;
    passed += r.verdict;
  };
  for (FamilyClass f : kFamilies) {
    for (double alpha : kGrid) {
      expect_pass(family_curve(make_family(f, alpha, critical_c(f, alpha))), alpha);
    }
  }
  for (double alpha : {1.0, 2.0, -2.0}) {
    for (const CircleSpec& spec : classified_circles(alpha)) {
      expect_pass(circle_curve(spec, circle_arc_domain(spec)), alpha);
    }
  }
  const auto lines = inverse_line_curves();
  expect_pass(lines[0], 2.0);
  expect_pass(lines[1], -2.0);

  // Controls: exponent, radius or center off by 1e-2.
  int rejected = 0;
  auto expect_fail = [&](const ParamCurve& c, double alpha) {
    rejected += !residual_of(c, alpha).verdict;
  };
  const CircleSpec h1{CircleKind::HyperbolicCircle, {}, 1.0, CircleBranch::Plus};
  const CircleSpec p1{CircleKind::Pseudocircle, {0.01, 0.0}, 1.0, CircleBranch::Plus};
  expect_fail(family_curve(make_family(FamilyClass::SpacelikeCMinus, 2.0)), 2.01);
  expect_fail(family_curve(make_family(FamilyClass::SpacelikeCPlus, -2.0)), -1.99);
  expect_fail(family_curve(make_family(FamilyClass::TimelikeCPlus, 0.5)), 0.51);
  expect_fail(family_curve(make_family(FamilyClass::TimelikeCMinus, 3.0)), 3.01);
  expect_fail(circle_curve(h1, {-1.0, 1.0}), 1.01);
  expect_fail(circle_curve(p1, {-1.0, 1.0}), 1.0);
  for (double alpha : {2.0, -2.0}) {
    CircleSpec spec = classified_circles(alpha).front();
    const Interval arc = circle_arc_domain(spec);
    spec.radius = 1.01;
    expect_fail(circle_curve(spec, arc), alpha);
  }
  {
    CircleSpec spec = classified_circles(2.0).back();
    const Interval arc = circle_arc_domain(spec);
    spec.center = spec.center + Vec2L{0.0, 0.01};
    expect_fail(circle_curve(spec, arc), 2.0);
  }
  expect_fail(lines[0], 2.01);
  return {passed == total && rejected == 10,
          std::to_string(passed) + "/" + std::to_string(total) +
              " stationary curves pass (max residual " + fmt(worst) + "), " +
              std::to_string(rejected) + "/10 controls rejected"};
}

Outcome rk4_against_closed_form() {
  int pairs = 0;
  int good = 0;
  double worst = 0.0;
  for (FamilyClass f : kFamilies) {
    for (double alpha : {-3.0, -2.0, -0.5, 0.5, 2.0, 3.0}) {
      const FamilySpec spec = make_family(f, alpha);
      const Interval d = spec.domain;
      const double lo = std::max(d.lo, 0.5 * (d.lo + d.hi) - 0.5);
      const ShootReport r = shoot_match(spec, {lo, std::min(d.hi, lo + 1.0)}, 1e-3);
      worst = std::max(worst, r.max_abs_error);
      ++pairs;
      good += r.max_abs_error <= 1e-6;
    }
  }
  double omin = 1e9;
  double omax = -1e9;
  for (const OdeProblem& p : oracle::order_problems(0.1)) {
    const double order = empirical_order(p);
    omin = std::min(omin, order);
    omax = std::max(omax, order);
  }
  return {good >= 12 && good == pairs && omin >= 3.7 && omax <= 4.3,
          std::to_string(good) + "/" + std::to_string(pairs) +
              " unit windows within 1e-6 (max error " + fmt(worst) + "), order in [" +
              fmt(omin) + ", " + fmt(omax) + "]"};
}

Outcome transform_invariance() {
  double worst = 0.0;
  int total = 0;
  int passed = 0;
  for (FamilyClass f : {FamilyClass::SpacelikeCMinus, FamilyClass::SpacelikeCPlus}) {
    for (double alpha : kGrid) {
      const ParamCurve c = family_curve(make_family(f, alpha, critical_c(f, alpha)));
      const ResidualReport swapped = residual_of(map_curve(c, swap_linear_map()), alpha);
      const bool timelike = swapped.samples.front().causal == CausalCharacter::Timelike;
      const double dual = f == FamilyClass::SpacelikeCMinus ? 2.0 - alpha : -2.0 - alpha;
      const ResidualReport inverted = residual_of(invert_curve(c), dual);
      worst = std::max({worst, swapped.max_abs_residual, inverted.max_abs_residual});
      total += 2;
      passed += (swapped.verdict && timelike) + inverted.verdict;
    }
  }
  return {passed == total && worst <= 1e-8,
          std::to_string(passed) + "/" + std::to_string(total) +
              " swap/inversion images stationary, max residual " + fmt(worst)};
}

Outcome asymptotics() {
  const FamilySpec two = make_family(FamilyClass::SpacelikeCMinus, 2.0);
  const double gap = std::abs(null_coordinates(two, 20.0).minus - 0.5);

  const FamilySpec half = make_family(FamilyClass::SpacelikeCMinus, 0.5);
  const ParamCurve hc = family_curve(half);
  const double end = std::max((hc.eval(40.0) - Vec2L{2.0, 2.0}).norm_inf(),
                              (hc.eval(-40.0) - Vec2L{-2.0, 2.0}).norm_inf());

  // Tangential contact (0 < alpha < 1) approaches with slope +1 at (a, a);
  // orthogonal contact (alpha < 0) with slope -1.
  const FamilySpec neg = make_family(FamilyClass::SpacelikeCMinus, -2.0);
  const double tang = std::abs(tangent_slope(half, 40.0) - 1.0);
  const double orth = std::abs(tangent_slope(neg, 40.0) + 1.0);
  const bool kinds = asymptote_data(half).contacts.front().kind == ContactKind::Tangential &&
                     asymptote_data(neg).contacts.front().kind == ContactKind::Orthogonal;
  return {gap <= 1e-6 && end <= 1e-6 && tang <= 1e-4 && orth <= 1e-4 && kinds,
          "|y - x - 1/2| = " + fmt(gap) + ", contact distance " + fmt(end) +
              ", slope errors " + fmt(tang) + " / " + fmt(orth)};
}

Outcome first_variation_suite() {
  const auto lines = inverse_line_curves();
  const Interval arc{-1.0, 1.0};
  const ParamCurve h1{[](double s) { return Vec2L{std::sinh(s), std::cosh(s)}; },
                      [](double s) { return Vec2L{std::cosh(s), std::sinh(s)}; },
                      [](double s) { return Vec2L{std::sinh(s), std::cosh(s)}; }, arc};
  const ParamCurve fam =
      family_curve(make_family(FamilyClass::SpacelikeCMinus, 2.0, std::nullopt, arc));
  const ParamCurve inv{lines[0].eval, lines[0].deriv1, lines[0].deriv2, arc};
  struct Arc {
    const char* name;
    ParamCurve curve;
    double alpha;
  };
  const Arc arcs[] = {{"hyperbola", h1, 1.0}, {"family", fam, 2.0}, {"inverse-line", inv, 2.0}};
  const auto suite = bump_suite(arc, 20, 1);

  double worst = 0.0;
  bool decay = true;
  double worst_dual = 0.0;
  bool decay_dual = true;
  for (const Arc& a : arcs) {
    for (const PerturbationSpec& p : suite) {
      const LadderReport r = first_variation_ladder(a.curve, a.alpha, p);
      worst = std::max(worst, std::abs(r.values.back().second));
      decay = decay && r.quadratic_decay;
      const LadderReport d = first_variation_ladder(a.curve, -a.alpha, p);
      worst_dual = std::max(worst_dual, std::abs(d.values.back().second));
      decay_dual = decay_dual && d.quadratic_decay;
    }
  }
  // Non-stationary control: the hyperbola at alpha = 3, every bump.
  double control = 1e300;
  for (const PerturbationSpec& p : suite) {
    control = std::min(control, std::abs(first_variation(h1, 3.0, p, 1e-5)));
  }
  return {worst <= 1e-5 && decay && control >= 1e-4,
          "E_alpha: max |dE/deps| " + fmt(worst) + (decay ? ", decays" : ", no decay") +
              "; min control " + fmt(control) + "; diagnostic E_-alpha: max " + fmt(worst_dual) +
              (decay_dual ? ", decays" : ", no decay")};
}

Outcome maximizer_checks() {
  bool ok = true;
  double excess = -1e300;
  int runs = 0;
  for (std::uint64_t seed : {1u, 2u}) {
    for (double alpha : {-0.5, 0.0, 1.0, 2.0}) {
      const ComparisonReport r = maximizer_check(EndpointPair::make({1, 0}, {2, 0}), alpha, 100,
                                                 seed);
      ok = ok && r.verdict && r.competitor_energies.size() == 100;
      excess = std::max(excess, r.max_excess);
      ++runs;
    }
    for (double alpha : {-0.5, 0.0, 2.0}) {
      const ComparisonReport r = maximizer_check(EndpointPair::make({1, 0}, {-2, 0}), alpha,
                                                 100, seed);
      ok = ok && r.verdict && r.competitor_energies.size() == 100;
      excess = std::max(excess, r.max_excess);
      ++runs;
    }
  }
  const std::vector<double> eps{1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
  bool increasing = true;
  double at_min = 0.0;
  for (double alpha : {-1.0, -2.0}) {
    const auto probe = divergence_probe(alpha, eps);
    for (std::size_t i = 1; i < probe.size(); ++i) {
      increasing = increasing && probe[i].second > probe[i - 1].second;
    }
    if (alpha == -1.0) at_min = probe.back().second;
  }
  return {ok && increasing && at_min >= 13.8,
          std::to_string(runs) + " comparisons, max excess " + fmt(excess) +
              "; divergence at 1e-6 (alpha=-1) " + fmt(at_min)};
}

Outcome far_from_cone_instance() {
  auto sample = [](double alpha, double half) {
    const ParamCurve c =
        family_curve(make_family(FamilyClass::SpacelikeCMinus, alpha, std::nullopt,
                                 Interval{-half, half}));
    std::vector<Vec2L> pts;
    for (double s : sample_parameters(c.domain, 2001)) pts.push_back(c.eval(s));
    return pts;
  };
  bool ok = true;
  std::string detail = "delta:";
  for (double alpha : {1.5, 2.0, 3.0}) {
    const auto delta = certify_cone_offset(sample(alpha, 8.0));
    ok = ok && delta && *delta > 0.0;
    detail += " " + fmt(alpha) + "->" + (delta ? fmt(*delta) : std::string("none"));
  }
  for (double alpha : {0.5, -1.0}) {
    const auto pts = sample(alpha, 12.0);
    bool any = false;
    for (double delta = 1.0; delta >= 0.99e-6; delta /= 10.0) {
      any = any || far_from_cone(pts, ConeOffset(delta));
    }
    ok = ok && !any;
    detail += " " + fmt(alpha) + (any ? "->certified(unexpected)" : "->none");
  }
  return {ok, detail};
}

Outcome glued_curve() {
  const PiecewiseCurve g = glued_mixed_curve(-2.0);
  const double a = std::exp2(-2.0 / 3.0);
  const ParamCurve& first = g.pieces[0].curve;
  const ParamCurve& second = g.pieces[1].curve;
  const double junction = std::max((first.eval(first.domain.hi) - Vec2L{a, a}).norm_inf(),
                                   (second.eval(second.domain.lo) - Vec2L{a, a}).norm_inf());
  const double gap = closure_gap(g);
  double worst = 0.0;
  for (const CurvePiece& p : g.pieces) {
    const ParamCurve& c = p.curve;
    const bool before = c.domain.hi <= 0.0;
    std::vector<double> s;
    for (double sigma : sample_parameters({-1.0, 1.0}, 100)) {
      s.push_back(glued_parameter(sigma, before));
    }
    // Mirrored pieces run with the parameter negated.
    if (!c.domain.contains(s.front())) {
      for (double& t : s) t = -t;
    }
    worst = std::max(worst, stationary_residual(c, -2.0, s).max_abs_residual);
  }
  return {junction <= 1e-10 && gap <= 1e-9 && worst <= 1e-8,
          "junction error " + fmt(junction) + ", closure gap " + fmt(gap) +
              ", piece residual " + fmt(worst)};
}

struct Run {
  int code;
  std::string out;
};

Run run_tool(const std::string& tool, const std::string& args) {
  const std::string cmd = "\"" + tool + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Outcome cli_contract(const std::string& tool) {
  const std::string invocations[] = {
      "verify --family spacelike-cminus --alpha 2 --domain -3:3 --samples 200 --tol 1e-8",
      "verify --circle hyperbolic --center 0,0 --radius 1 --alpha 2 --tol 1e-8",
      "transform --op inversion --family spacelike-cminus --alpha 0.5"};
  const int expected[] = {0, 1, 0};
  bool ok = true;
  std::string codes;
  for (int i = 0; i < 3; ++i) {
    const Run a = run_tool(tool, invocations[i]);
    const Run b = run_tool(tool, invocations[i]);
    ok = ok && a.code == expected[i] && a.code == b.code && a.out == b.out && !a.out.empty();
    codes += (i ? "," : "") + std::to_string(a.code) + (a.out == b.out ? "" : "(differs)");
  }
  return {ok, "exit codes {" + codes + "}, repeated runs byte-identical"};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <path-to-eulerl2>\n", argv[0]);
    return 2;
  }
  const std::string tool = argv[1];
  struct Criterion {
    const char* name;
    std::function<Outcome()> check;
  };
  const std::vector<Criterion> criteria{
      {"closed-form ODE satisfaction", closed_form_ode},
      {"stationarity residual", stationarity_residual},
      {"RK4 vs closed form", rk4_against_closed_form},
      {"swap and inversion images", transform_invariance},
      {"asymptotics", asymptotics},
      {"first variation", first_variation_suite},
      {"segment maximizes energy", maximizer_checks},
      {"far from the cone", far_from_cone_instance},
      {"glued mixed-causal curve", glued_curve},
      {"CLI contract", [&] { return cli_contract(tool); }},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("[%s] %2zu %-28s %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
