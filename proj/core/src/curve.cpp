#include "eulerl2/curve.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <utility>

#include "eulerl2/error.hpp"

namespace eulerl2 {
namespace {

constexpr double kConeFloor = 1e-9;

double inf_distance(Vec2L a, Vec2L b) { return (a - b).norm_inf(); }

}  // namespace

bool Interval::contains(double s) const {
  const bool above = open_lo ? s > lo : s >= lo;
  const bool below = open_hi ? s < hi : s <= hi;
  return above && below;
}

std::vector<double> sample_parameters(const Interval& domain, std::size_t n) {
  if (n < 2) throw Error(ErrorCode::Precondition, "sample_parameters: need n >= 2");
  const double spacing = domain.length() / static_cast<double>(n - 1);
  const double a = domain.open_lo ? domain.lo + 0.5 * spacing : domain.lo;
  const double b = domain.open_hi ? domain.hi - 0.5 * spacing : domain.hi;
  std::vector<double> s(n);
  for (std::size_t i = 0; i < n; ++i) {
    s[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  s.back() = b;
  return s;
}

double derivative_audit(const ParamCurve& c, std::span<const double> s, double h) {
  double worst = 0.0;
  for (double t : s) {
    const Vec2L d1 = c.deriv1(t);
    const Vec2L d2 = c.deriv2(t);
    const Vec2L fd1 = (c.eval(t + h) - c.eval(t - h)) / (2.0 * h);
    const Vec2L fd2 = (c.deriv1(t + h) - c.deriv1(t - h)) / (2.0 * h);
    worst = std::max(worst, inf_distance(fd1, d1) / (1.0 + d1.norm_inf()));
    worst = std::max(worst, inf_distance(fd2, d2) / (1.0 + d2.norm_inf()));
  }
  return worst;
}

ParamCurve segment_curve(Vec2L from, Vec2L to) {
  const Vec2L dir = to - from;
  return {[from, dir](double t) { return from + t * dir; },
          [dir](double) { return dir; },
          [](double) { return Vec2L{}; },
          Interval{0.0, 1.0}};
}

ParamCurve line_curve(Vec2L point, Vec2L direction, Interval domain) {
  return {[point, direction](double t) { return point + t * direction; },
          [direction](double) { return direction; },
          [](double) { return Vec2L{}; },
          domain};
}

ParamCurve map_curve(const ParamCurve& c, const LinearMap2& m) {
  return {[f = c.eval, m](double s) { return m(f(s)); },
          [f = c.deriv1, m](double s) { return m(f(s)); },
          [f = c.deriv2, m](double s) { return m(f(s)); },
          c.domain};
}

// In null components u = x + y, v = x - y the inversion is u -> 1/v,
// v -> 1/u, which avoids forming <gamma, gamma> and its derivatives.
ParamCurve invert_curve(const ParamCurve& c) {
  auto from_null = [](double u, double v) { return Vec2L{0.5 * (u + v), 0.5 * (u - v)}; };
  auto eval = [f = c.eval](double s) { return inversion(f(s)); };
  auto d1 = [c, from_null](double s) {
    const Vec2L g = c.eval(s);
    const Vec2L g1 = c.deriv1(s);
    const double u = g.x() + g.y();
    const double v = g.x() - g.y();
    return from_null(-(g1.x() - g1.y()) / (v * v), -(g1.x() + g1.y()) / (u * u));
  };
  auto d2 = [c, from_null](double s) {
    const Vec2L g = c.eval(s);
    const Vec2L g1 = c.deriv1(s);
    const Vec2L g2 = c.deriv2(s);
    const double u = g.x() + g.y();
    const double v = g.x() - g.y();
    const double u1 = g1.x() + g1.y();
    const double v1 = g1.x() - g1.y();
    const double u2 = g2.x() + g2.y();
    const double v2 = g2.x() - g2.y();
    return from_null(-v2 / (v * v) + 2.0 * v1 * v1 / (v * v * v),
                     -u2 / (u * u) + 2.0 * u1 * u1 / (u * u * u));
  };
  return {eval, d1, d2, c.domain};
}

ParamCurve reparametrize(const ParamCurve& c, std::function<double(double)> phi,
                         std::function<double(double)> dphi,
                         std::function<double(double)> ddphi, Interval new_domain) {
  auto eval = [f = c.eval, phi](double t) { return f(phi(t)); };
  auto d1 = [f = c.deriv1, phi, dphi](double t) { return f(phi(t)) * dphi(t); };
  auto d2 = [f1 = c.deriv1, f2 = c.deriv2, phi, dphi, ddphi](double t) {
    const double u = phi(t);
    const double du = dphi(t);
    return f2(u) * (du * du) + f1(u) * ddphi(t);
  };
  return {eval, d1, d2, new_domain};
}

ParamCurve reverse_curve(const ParamCurve& c) {
  const Interval d{-c.domain.hi, -c.domain.lo, c.domain.open_hi, c.domain.open_lo};
  return reparametrize(
      c, [](double t) { return -t; }, [](double) { return -1.0; },
      [](double) { return 0.0; }, d);
}

FrameData frame_at(const ParamCurve& c, double s) {
  const Vec2L v = c.deriv1(s);
  const double q = lorentz_square(v);
  if (std::abs(q) <= default_cone_tolerance(v)) {
    throw Error(ErrorCode::LightlikeTangent, "lightlike tangent at s = " + std::to_string(s));
  }
  const double speed = std::sqrt(std::abs(q));
  FrameData frame;
  frame.epsilon = q > 0.0 ? 1.0 : -1.0;
  frame.tangent = v / speed;
  frame.normal = swap_map(frame.tangent);
  // Only the normal component of gamma'' survives, so the chain-rule term
  // along the tangent drops out.
  frame.kappa = -lorentz_dot(frame.normal, c.deriv2(s)) / std::abs(q);
  return frame;
}

double polar_curvature(double rho, double rho1, double rho2, ConeRegion region) {
  if (!(rho > 0.0)) throw Error(ErrorCode::Precondition, "polar_curvature: rho <= 0");
  const double speed2 = std::abs((rho - rho1) * (rho + rho1));
  if (speed2 <= 1e-12 * std::max(rho * rho, rho1 * rho1)) {
    throw Error(ErrorCode::DegenerateSpeed, "rho^2 - rho'^2 vanishes");
  }
  const double numerator = rho * (rho2 + rho) - 2.0 * rho1 * rho1;
  const double base = numerator / (speed2 * std::sqrt(speed2));
  switch (region) {
    case ConeRegion::CMinusUpper: return base;
    case ConeRegion::CMinusLower: return -base;
    case ConeRegion::CPlusRight: return -base;
    case ConeRegion::CPlusLeft: return base;
    case ConeRegion::OnCone: break;
  }
  throw Error(ErrorCode::InvalidRegion, "polar_curvature: no chart on the cone");
}

namespace {

std::array<double, 3> polar_ode_terms(PolarOde kind, double alpha, double rho, double rho1,
                                      double rho2) {
  if (kind == PolarOde::K1) {
    return {rho * rho2, (alpha - 2.0) * rho1 * rho1, (1.0 - alpha) * rho * rho};
  }
  return {rho * rho2, -(alpha + 2.0) * rho1 * rho1, (1.0 + alpha) * rho * rho};
}

}  // namespace

double polar_ode_residual(PolarOde kind, double alpha, double rho, double rho1, double rho2) {
  const auto t = polar_ode_terms(kind, alpha, rho, rho1, rho2);
  return t[0] + t[1] + t[2];
}

double polar_ode_relative_residual(PolarOde kind, double alpha, double rho, double rho1,
                                   double rho2) {
  const auto t = polar_ode_terms(kind, alpha, rho, rho1, rho2);
  const double scale = std::abs(t[0]) + std::abs(t[1]) + std::abs(t[2]);
  const double sum = t[0] + t[1] + t[2];
  return scale > 0.0 ? std::abs(sum) / scale : std::abs(sum);
}

bool clear_of_cone(Vec2L p) {
  const double n = p.norm_inf();
  return n > 0.0 && std::abs(lorentz_square(p)) >= kConeFloor * n * n;
}

double energy(const ParamCurve& c, double alpha, const QuadratureSpec& quad) {
  if (c.domain.lo == c.domain.hi) return 0.0;
  auto integrand = [&](double s) {
    const Vec2L g = c.eval(s);
    if (!clear_of_cone(g)) {
      throw Error(ErrorCode::ConeContact, "energy: node too close to the cone at s = " +
                                              std::to_string(s));
    }
    const double speed2 = lorentz_square(c.deriv1(s));
    if (!(speed2 > 0.0)) {
      throw Error(ErrorCode::NotSpacelike, "energy: non-spacelike tangent at s = " +
                                               std::to_string(s));
    }
    return std::exp(0.5 * alpha * std::log(std::abs(lorentz_square(g)))) * std::sqrt(speed2);
  };
  return integrate(integrand, c.domain.lo, c.domain.hi, quad).value;
}

double stationarity_residual_at(const ParamCurve& c, double alpha, double s) {
  const Vec2L g = c.eval(s);
  if (!clear_of_cone(g)) {
    throw Error(ErrorCode::ConeContact, "residual: sample on the cone at s = " +
                                            std::to_string(s));
  }
  const FrameData f = frame_at(c, s);
  return f.kappa + alpha * lorentz_dot(f.normal, g) / std::abs(lorentz_square(g));
}

ResidualReport stationary_residual(const ParamCurve& c, double alpha,
                                   std::span<const double> s_samples, double tol) {
  if (s_samples.empty()) throw Error(ErrorCode::Precondition, "stationary_residual: no samples");
  ResidualReport report;
  report.tolerance = tol;
  report.samples.reserve(s_samples.size());
  bool uniform = true;
  for (double s : s_samples) {
    if (!c.domain.contains(s)) {
      throw Error(ErrorCode::DomainViolation, "sample outside the curve domain: " +
                                                  std::to_string(s));
    }
    ResidualSample sample;
    sample.s = s;
    sample.residual = stationarity_residual_at(c, alpha, s);
    sample.causal = classify(c.deriv1(s));
    sample.region = region_of(c.eval(s));
    if (!report.samples.empty()) {
      uniform = uniform && sample.causal == report.samples.front().causal &&
                sample.region == report.samples.front().region;
    }
    report.max_abs_residual = std::max(report.max_abs_residual, std::abs(sample.residual));
    report.samples.push_back(sample);
  }
  report.verdict = uniform && report.max_abs_residual <= tol;
  return report;
}

double graph_el_residual(const std::function<double(double)>& y,
                         const std::function<double(double)>& y1,
                         const std::function<double(double)>& y2, double alpha, double x) {
  const double yv = y(x);
  const double slope = y1(x);
  const double w2 = 1.0 - slope * slope;
  if (!(w2 > 0.0)) throw Error(ErrorCode::NotSpacelikeGraph, "graph slope y'^2 >= 1");
  const double gap = (yv - x) * (yv + x);
  if (!(gap > 0.0)) throw Error(ErrorCode::WrongRegion, "graph point not in C-");
  const double w = std::sqrt(w2);
  return alpha * (x * slope - yv) / w + gap * y2(x) / (w2 * w);
}

}  // namespace eulerl2
