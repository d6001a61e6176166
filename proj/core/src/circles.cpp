#include <cmath>

#include "eulerl2/error.hpp"
#include "eulerl2/families.hpp"

namespace eulerl2 {
namespace {

// Unit vector of the circle at angle theta: <E,E> = -1 for hyperbolic
// circles and +1 for pseudocircles.
Vec2L unit(CircleKind kind, double theta) {
  if (kind == CircleKind::HyperbolicCircle) return {std::sinh(theta), std::cosh(theta)};
  return {std::cosh(theta), -std::sinh(theta)};
}

Vec2L unit_prime(CircleKind kind, double theta) {
  if (kind == CircleKind::HyperbolicCircle) return {std::cosh(theta), std::sinh(theta)};
  return {std::sinh(theta), -std::cosh(theta)};
}

void check(const CircleSpec& spec) {
  if (!(spec.radius > 0.0) || !std::isfinite(spec.radius)) {
    throw Error(ErrorCode::InvalidSpec, "circle radius must be positive");
  }
}

}  // namespace

ParamCurve circle_curve(const CircleSpec& spec, Interval domain) {
  check(spec);
  const double sign = spec.branch == CircleBranch::Plus ? 1.0 : -1.0;
  const double r = spec.radius;
  const Vec2L p0 = spec.center;
  const CircleKind kind = spec.kind;
  return {[=](double s) { return p0 + (sign * r) * unit(kind, s / r); },
          [=](double s) { return sign * unit_prime(kind, s / r); },
          [=](double s) { return (sign / r) * unit(kind, s / r); },
          domain};
}

double circle_level(const CircleSpec& spec, Vec2L p) { return lorentz_square(p - spec.center); }

std::optional<double> origin_crossing(const CircleSpec& spec) {
  check(spec);
  const double r = spec.radius;
  const double sign = spec.branch == CircleBranch::Plus ? 1.0 : -1.0;
  // Solve p0 + sign r E(theta) = 0 for theta.
  const Vec2L e = (-sign / r) * spec.center;
  double theta = 0.0;
  if (spec.kind == CircleKind::HyperbolicCircle) {
    if (!(e.y() > 0.0)) return std::nullopt;
    theta = std::asinh(e.x());
  } else {
    if (!(e.x() > 0.0)) return std::nullopt;
    theta = -std::asinh(e.y());
  }
  if ((unit(spec.kind, theta) - e).norm_inf() > 1e-12 * (1.0 + e.norm_inf())) {
    return std::nullopt;
  }
  return r * theta;
}

Interval circle_arc_domain(const CircleSpec& spec) {
  const double r = spec.radius;
  if (const auto s0 = origin_crossing(spec)) return {*s0 + 0.1 * r, *s0 + 2.1 * r};
  return {-r, r};
}

std::vector<CircleSpec> classified_circles(double alpha, double radius, double center_angle) {
  using K = CircleKind;
  using B = CircleBranch;
  if (alpha == 1.0) {
    return {{K::HyperbolicCircle, {}, radius, B::Plus},
            {K::HyperbolicCircle, {}, radius, B::Minus},
            {K::Pseudocircle, {}, radius, B::Plus},
            {K::Pseudocircle, {}, radius, B::Minus}};
  }
  if (alpha != 2.0 && alpha != -2.0) return {};
  const B branch = alpha == 2.0 ? B::Plus : B::Minus;
  const double t = center_angle;
  const Vec2L hyperbolic_center = radius * Vec2L{std::sinh(t), std::cosh(t)};
  const Vec2L pseudo_center = radius * Vec2L{std::cosh(t), std::sinh(t)};
  return {{K::HyperbolicCircle, hyperbolic_center, radius, branch},
          {K::Pseudocircle, pseudo_center, radius, branch}};
}

}  // namespace eulerl2
