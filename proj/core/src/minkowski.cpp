#include "eulerl2/minkowski.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eulerl2/error.hpp"

namespace eulerl2 {

Vec2L::Vec2L(double x, double y) : x_(x), y_(y) {
  if (!std::isfinite(x) || !std::isfinite(y)) {
    throw Error(ErrorCode::NonFinite,
                "Vec2L(" + std::to_string(x) + ", " + std::to_string(y) + ")");
  }
}

double Vec2L::norm_inf() const { return std::max(std::abs(x_), std::abs(y_)); }

std::string_view to_string(CausalCharacter c) {
  switch (c) {
    case CausalCharacter::Spacelike: return "spacelike";
    case CausalCharacter::Timelike: return "timelike";
    case CausalCharacter::Lightlike: return "lightlike";
  }
  return "?";
}

std::string_view to_string(ConeRegion r) {
  switch (r) {
    case ConeRegion::CMinusUpper: return "cminus-upper";
    case ConeRegion::CMinusLower: return "cminus-lower";
    case ConeRegion::CPlusRight: return "cplus-right";
    case ConeRegion::CPlusLeft: return "cplus-left";
    case ConeRegion::OnCone: return "on-cone";
  }
  return "?";
}

double lorentz_dot(Vec2L u, Vec2L v) { return u.x() * v.x() - u.y() * v.y(); }

double lorentz_square(Vec2L v) { return (v.x() - v.y()) * (v.x() + v.y()); }

double default_cone_tolerance(Vec2L v) {
  const double n = v.norm_inf();
  return 1e-12 * n * n;
}

CausalCharacter classify(Vec2L v, double tol) {
  if (!(tol >= 0.0)) throw Error(ErrorCode::Precondition, "classify: tol < 0");
  const double q = lorentz_square(v);
  if (std::abs(q) <= tol) return CausalCharacter::Lightlike;
  return q > 0.0 ? CausalCharacter::Spacelike : CausalCharacter::Timelike;
}

CausalCharacter classify(Vec2L v) { return classify(v, default_cone_tolerance(v)); }

ConeRegion region_of(Vec2L p, double tol) {
  if (!(tol >= 0.0)) throw Error(ErrorCode::Precondition, "region_of: tol < 0");
  const double q = lorentz_square(p);
  if (std::abs(q) <= tol) return ConeRegion::OnCone;
  if (q < 0.0) return p.y() > 0.0 ? ConeRegion::CMinusUpper : ConeRegion::CMinusLower;
  return p.x() > 0.0 ? ConeRegion::CPlusRight : ConeRegion::CPlusLeft;
}

ConeRegion region_of(Vec2L p) { return region_of(p, default_cone_tolerance(p)); }

HyperbolicPolar to_polar(Vec2L p) {
  const ConeRegion region = region_of(p);
  const double x = p.x();
  const double y = p.y();
  // (u, w) are the two null coordinates with u = rho e^phi, w = rho e^-phi.
  double u = 0.0;
  double w = 0.0;
  switch (region) {
    case ConeRegion::CMinusUpper: u = y + x; w = y - x; break;
    case ConeRegion::CMinusLower: u = x - y; w = -x - y; break;
    case ConeRegion::CPlusRight: u = x + y; w = x - y; break;
    case ConeRegion::CPlusLeft: u = y - x; w = -x - y; break;
    case ConeRegion::OnCone:
      throw Error(ErrorCode::OnCone, "to_polar: point on the lightlike cone");
  }
  return {std::sqrt(u * w), 0.5 * std::log(u / w), region};
}

Vec2L from_polar(const HyperbolicPolar& h) {
  if (!(h.rho > 0.0)) throw Error(ErrorCode::Precondition, "from_polar: rho <= 0");
  const double ch = h.rho * std::cosh(h.phi);
  const double sh = h.rho * std::sinh(h.phi);
  switch (h.region) {
    case ConeRegion::CMinusUpper: return {sh, ch};
    case ConeRegion::CMinusLower: return {sh, -ch};
    case ConeRegion::CPlusRight: return {ch, sh};
    case ConeRegion::CPlusLeft: return {-ch, sh};
    case ConeRegion::OnCone: break;
  }
  throw Error(ErrorCode::InvalidRegion, "from_polar: OnCone has no polar chart");
}

LinearMap2 LinearMap2::then(const LinearMap2& next) const {
  return {next.a * a + next.b * c, next.a * b + next.b * d,
          next.c * a + next.d * c, next.c * b + next.d * d};
}

LinearMap2 boost_map(double t) {
  const double ch = std::cosh(t);
  const double sh = std::sinh(t);
  return {ch, sh, sh, ch};
}

LinearMap2 dilation_map(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw Error(ErrorCode::NonpositiveScale, "dilation factor must be positive");
  }
  return {lambda, 0.0, 0.0, lambda};
}

LinearMap2 reflect_x_map() { return {1.0, 0.0, 0.0, -1.0}; }
LinearMap2 reflect_y_map() { return {-1.0, 0.0, 0.0, 1.0}; }
LinearMap2 swap_linear_map() { return {0.0, 1.0, 1.0, 0.0}; }

Vec2L boost(Vec2L p, double t) { return boost_map(t)(p); }
Vec2L dilate(Vec2L p, double lambda) { return dilation_map(lambda)(p); }
Vec2L reflect_x(Vec2L p) { return {p.x(), -p.y()}; }
Vec2L reflect_y(Vec2L p) { return {-p.x(), p.y()}; }
Vec2L swap_map(Vec2L p) { return {p.y(), p.x()}; }

Vec2L inversion(Vec2L p) {
  if (region_of(p) == ConeRegion::OnCone) {
    throw Error(ErrorCode::OnCone, "inversion undefined on the lightlike cone");
  }
  return p / lorentz_square(p);
}

ConeOffset::ConeOffset(double delta) : delta_(delta) {
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw Error(ErrorCode::Precondition, "cone offset must be positive");
  }
}

bool ConeOffset::contains_future(Vec2L p) const {
  return p.y() - delta_ > std::abs(p.x());
}

bool ConeOffset::contains_past(Vec2L p) const {
  return -(p.y() + delta_) > std::abs(p.x());
}

bool far_from_cone(std::span<const Vec2L> points, ConeOffset offset) {
  if (points.empty()) throw Error(ErrorCode::Precondition, "far_from_cone: empty set");
  const bool future = std::all_of(points.begin(), points.end(),
                                  [&](Vec2L p) { return offset.contains_future(p); });
  if (future) return true;
  return std::all_of(points.begin(), points.end(),
                     [&](Vec2L p) { return offset.contains_past(p); });
}

std::optional<double> certify_cone_offset(std::span<const Vec2L> points,
                                          double delta_floor, int iterations) {
  if (points.empty()) throw Error(ErrorCode::Precondition, "certify_cone_offset: empty set");
  if (!far_from_cone(points, ConeOffset(delta_floor))) return std::nullopt;
  double lo = delta_floor;
  double hi = delta_floor;
  for (const Vec2L& p : points) hi = std::max(hi, std::abs(p.y()));
  hi *= 2.0;
  for (int i = 0; i < iterations; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (far_from_cone(points, ConeOffset(mid))) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace eulerl2
