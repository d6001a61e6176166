#include "eulerl2/ode.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eulerl2/error.hpp"

namespace eulerl2 {
namespace {

struct State {
  double rho;
  double rho1;
};

State rk4_step(PolarOde kind, double alpha, State y, double h) {
  auto f = [&](State v) {
    return State{v.rho1, polar_ode_acceleration(kind, alpha, v.rho, v.rho1)};
  };
  const State k1 = f(y);
  const State k2 = f({y.rho + 0.5 * h * k1.rho, y.rho1 + 0.5 * h * k1.rho1});
  const State k3 = f({y.rho + 0.5 * h * k2.rho, y.rho1 + 0.5 * h * k2.rho1});
  const State k4 = f({y.rho + h * k3.rho, y.rho1 + h * k3.rho1});
  return {y.rho + h / 6.0 * (k1.rho + 2.0 * k2.rho + 2.0 * k3.rho + k4.rho),
          y.rho1 + h / 6.0 * (k1.rho1 + 2.0 * k2.rho1 + 2.0 * k3.rho1 + k4.rho1)};
}

std::size_t step_count(const OdeProblem& p, double step) {
  return static_cast<std::size_t>(std::max(1.0, std::ceil(std::abs(p.s_end - p.s0) / step - 1e-9)));
}

std::vector<TrajectoryNode> march(const OdeProblem& p, std::size_t n, const IntegrateOptions& opts) {
  const double h = (p.s_end - p.s0) / static_cast<double>(n);
  std::vector<TrajectoryNode> nodes;
  nodes.reserve(n + 1);
  State y{p.rho0, p.rho1_0};
  nodes.push_back({p.s0, y.rho, y.rho1});
  for (std::size_t i = 1; i <= n; ++i) {
    y = rk4_step(p.kind, p.alpha, y, h);
    const double s = p.s0 + h * static_cast<double>(i);
    if (!std::isfinite(y.rho) || !std::isfinite(y.rho1) || y.rho < opts.floor ||
        y.rho > opts.cap) {
      throw Error(ErrorCode::BlowUp, "rho left [floor, cap] near s = " + std::to_string(s));
    }
    nodes.push_back({s, y.rho, y.rho1});
  }
  nodes.back().s = p.s_end;
  return nodes;
}

void check_problem(const OdeProblem& p, const IntegrateOptions& opts) {
  if (!std::isfinite(p.alpha) || !std::isfinite(p.rho0) || !std::isfinite(p.rho1_0) ||
      !std::isfinite(p.s0) || !std::isfinite(p.s_end)) {
    throw Error(ErrorCode::NonFinite, "ODE problem has non-finite data");
  }
  if (!(p.rho0 > opts.floor)) throw Error(ErrorCode::Precondition, "rho0 must exceed the floor");
  if (!(p.step > 0.0)) throw Error(ErrorCode::Precondition, "step must be positive");
  if (p.s_end == p.s0) throw Error(ErrorCode::Precondition, "empty integration range");
}

struct OrderProbe {
  double d1;
  double d2;
  double scale;
};

// Three-step Richardson in the sup norm over the coarse nodes.
OrderProbe probe(const OdeProblem& p, const IntegrateOptions& opts,
                 const std::vector<TrajectoryNode>* coarse) {
  const std::size_t n = step_count(p, p.step);
  const auto y1 = coarse ? *coarse : march(p, n, opts);
  const auto y2 = march(p, 2 * n, opts);
  const auto y4 = march(p, 4 * n, opts);
  OrderProbe o{0.0, 0.0, 0.0};
  for (std::size_t i = 0; i <= n; ++i) {
    o.d1 = std::max(o.d1, std::abs(y1[i].rho - y2[2 * i].rho));
    o.d2 = std::max(o.d2, std::abs(y2[2 * i].rho - y4[4 * i].rho));
    o.scale = std::max(o.scale, 1.0 + std::abs(y4[4 * i].rho));
  }
  return o;
}

}  // namespace

double polar_ode_acceleration(PolarOde kind, double alpha, double rho, double rho1) {
  if (kind == PolarOde::K1) {
    return ((2.0 - alpha) * rho1 * rho1 + (alpha - 1.0) * rho * rho) / rho;
  }
  return ((alpha + 2.0) * rho1 * rho1 - (1.0 + alpha) * rho * rho) / rho;
}

Trajectory integrate(const OdeProblem& problem, const IntegrateOptions& opts) {
  check_problem(problem, opts);
  Trajectory t;
  t.kind = problem.kind;
  t.alpha = problem.alpha;
  t.step = problem.step;
  t.nodes = march(problem, step_count(problem, problem.step), opts);
  if (opts.verify_order) {
    const OrderProbe o = probe(problem, opts, &t.nodes);
    if (o.d1 > 0.0 && o.d2 > 0.0) t.order_estimate = std::log2(o.d1 / o.d2);
    if (o.d1 > 1e-9 * o.scale && !(t.order_estimate && *t.order_estimate >= 3.7)) {
      throw Error(ErrorCode::StepTooLarge,
                  "step " + std::to_string(problem.step) + " is outside the RK4 asymptotic range");
    }
  }
  return t;
}

double empirical_order(const OdeProblem& problem) {
  IntegrateOptions opts;
  opts.verify_order = false;
  check_problem(problem, opts);
  const OrderProbe o = probe(problem, opts, nullptr);
  if (!(o.d1 > 0.0) || !(o.d2 > 0.0)) {
    throw Error(ErrorCode::Precondition, "empirical_order: differences at roundoff level");
  }
  return std::log2(o.d1 / o.d2);
}

ShootReport shoot_match(const FamilySpec& spec, Interval range, double step) {
  validate(spec);
  const RhoJet start = family_rho(spec, range.lo);
  OdeProblem p{family_ode(spec.family), spec.alpha, start.rho, start.rho1,
               range.lo,                range.hi,   step};
  IntegrateOptions opts;
  opts.floor = std::min(opts.floor, 0.5 * start.rho);
  ShootReport report;
  report.trajectory = integrate(p, opts);
  for (const auto& node : report.trajectory.nodes) {
    const double exact = family_rho(spec, node.s).rho;
    const double err = std::abs(node.rho - exact);
    report.max_abs_error = std::max(report.max_abs_error, err);
    report.max_rel_error = std::max(report.max_rel_error, err / exact);
  }
  report.nodes = report.trajectory.nodes.size();
  return report;
}

double inversion_alpha_map(double alpha, RegionSign region) {
  return region == RegionSign::CMinus ? 2.0 - alpha : -2.0 - alpha;
}

double inversion_alpha_map(double alpha, PolarOde kind) {
  return kind == PolarOde::K1 ? 2.0 - alpha : -2.0 - alpha;
}

PolarOde polar_ode_for(CausalCharacter causal, ConeRegion region) {
  if (region == ConeRegion::OnCone || causal == CausalCharacter::Lightlike) {
    throw Error(ErrorCode::InvalidRegion, "no polar equation on the cone or for null curves");
  }
  const bool spacelike = causal == CausalCharacter::Spacelike;
  return in_cminus(region) == spacelike ? PolarOde::K1 : PolarOde::K2;
}

Trajectory reciprocal_trajectory(const Trajectory& t) {
  Trajectory out;
  out.kind = t.kind;
  out.alpha = inversion_alpha_map(t.alpha, t.kind);
  out.step = t.step;
  out.nodes.reserve(t.nodes.size());
  for (const auto& n : t.nodes) {
    out.nodes.push_back({n.s, 1.0 / n.rho, -n.rho1 / (n.rho * n.rho)});
  }
  return out;
}

double reciprocal_residual(const Trajectory& original) {
  const Trajectory inv = reciprocal_trajectory(original);
  double worst = 0.0;
  for (std::size_t i = 0; i < original.nodes.size(); ++i) {
    const auto& n = original.nodes[i];
    const double r2 = polar_ode_acceleration(original.kind, original.alpha, n.rho, n.rho1);
    // (1/rho)'' = -rho''/rho^2 + 2 rho'^2/rho^3
    const double q2 = -r2 / (n.rho * n.rho) + 2.0 * n.rho1 * n.rho1 / (n.rho * n.rho * n.rho);
    const auto& m = inv.nodes[i];
    worst = std::max(worst, polar_ode_relative_residual(inv.kind, inv.alpha, m.rho, m.rho1, q2));
  }
  return worst;
}

}  // namespace eulerl2
