#pragma once

// The Lorentz-Minkowski plane: points with the indefinite product
// <u, v> = u.x v.x - u.y v.y, causal classification, the four components of
// the complement of the lightlike cone, hyperbolic polar charts and the maps
// (boosts, reflections, dilations, swap, inversion) that act on curves.

#include <optional>
#include <span>
#include <string_view>

namespace eulerl2 {

class Vec2L {
 public:
  constexpr Vec2L() = default;
  // Throws Error(NonFinite) for NaN or infinite components.
  Vec2L(double x, double y);

  [[nodiscard]] constexpr double x() const { return x_; }
  [[nodiscard]] constexpr double y() const { return y_; }

  // Max-norm of the Euclidean coordinates; used to scale tolerances.
  [[nodiscard]] double norm_inf() const;

  friend Vec2L operator+(Vec2L a, Vec2L b) { return {a.x_ + b.x_, a.y_ + b.y_}; }
  friend Vec2L operator-(Vec2L a, Vec2L b) { return {a.x_ - b.x_, a.y_ - b.y_}; }
  friend Vec2L operator-(Vec2L a) { return {-a.x_, -a.y_}; }
  friend Vec2L operator*(double k, Vec2L a) { return {k * a.x_, k * a.y_}; }
  friend Vec2L operator*(Vec2L a, double k) { return k * a; }
  friend Vec2L operator/(Vec2L a, double k) { return {a.x_ / k, a.y_ / k}; }
  friend bool operator==(Vec2L a, Vec2L b) = default;

 private:
  double x_ = 0.0;
  double y_ = 0.0;
};

enum class CausalCharacter { Spacelike, Timelike, Lightlike };

// CMinus* have <p,p> < 0 and are split by the sign of y; CPlus* have
// <p,p> > 0 and are split by the sign of x.
enum class ConeRegion { CMinusUpper, CMinusLower, CPlusRight, CPlusLeft, OnCone };

std::string_view to_string(CausalCharacter c);
std::string_view to_string(ConeRegion r);

[[nodiscard]] constexpr bool in_cminus(ConeRegion r) {
  return r == ConeRegion::CMinusUpper || r == ConeRegion::CMinusLower;
}
[[nodiscard]] constexpr bool in_cplus(ConeRegion r) {
  return r == ConeRegion::CPlusRight || r == ConeRegion::CPlusLeft;
}

[[nodiscard]] double lorentz_dot(Vec2L u, Vec2L v);
// <v, v> evaluated as (x - y)(x + y), which keeps full relative accuracy near
// the cone.
[[nodiscard]] double lorentz_square(Vec2L v);

// 1e-12 * |v|_inf^2. Scales exactly with dilations.
[[nodiscard]] double default_cone_tolerance(Vec2L v);

[[nodiscard]] CausalCharacter classify(Vec2L v, double tol);
[[nodiscard]] CausalCharacter classify(Vec2L v);
[[nodiscard]] ConeRegion region_of(Vec2L p, double tol);
[[nodiscard]] ConeRegion region_of(Vec2L p);

// Hyperbolic polar coordinates:
//   CMinusUpper  p = rho (sinh phi,  cosh phi)
//   CMinusLower  p = rho (sinh phi, -cosh phi)
//   CPlusRight   p = rho ( cosh phi, sinh phi)
//   CPlusLeft    p = rho (-cosh phi, sinh phi)
struct HyperbolicPolar {
  double rho = 1.0;
  double phi = 0.0;
  ConeRegion region = ConeRegion::CMinusUpper;
};

// Throws Error(OnCone) when p is lightlike within default_cone_tolerance.
[[nodiscard]] HyperbolicPolar to_polar(Vec2L p);
// Throws Error(InvalidRegion) for OnCone and Error(Precondition) for rho <= 0.
[[nodiscard]] Vec2L from_polar(const HyperbolicPolar& h);

// 2x2 linear map acting on column vectors (x, y).
struct LinearMap2 {
  double a = 1.0, b = 0.0;
  double c = 0.0, d = 1.0;

  [[nodiscard]] Vec2L operator()(Vec2L p) const {
    return {a * p.x() + b * p.y(), c * p.x() + d * p.y()};
  }
  [[nodiscard]] LinearMap2 then(const LinearMap2& next) const;
};

[[nodiscard]] LinearMap2 boost_map(double t);
// Throws Error(NonpositiveScale) for lambda <= 0.
[[nodiscard]] LinearMap2 dilation_map(double lambda);
[[nodiscard]] LinearMap2 reflect_x_map();
[[nodiscard]] LinearMap2 reflect_y_map();
[[nodiscard]] LinearMap2 swap_linear_map();

// R_t(x, y) = (cosh t x + sinh t y, sinh t x + cosh t y).
[[nodiscard]] Vec2L boost(Vec2L p, double t);
[[nodiscard]] Vec2L dilate(Vec2L p, double lambda);
// (x, y) -> (x, -y)
[[nodiscard]] Vec2L reflect_x(Vec2L p);
// (x, y) -> (-x, y)
[[nodiscard]] Vec2L reflect_y(Vec2L p);
// (x, y) -> (y, x). Flips the sign of <p, p> exactly.
[[nodiscard]] Vec2L swap_map(Vec2L p);
// p / <p, p>. Throws Error(OnCone) on the cone. Keeps the two components of
// C+ in place; on C- the denominator is negative, so the two components are
// exchanged (rho -> 1/rho, phi -> -phi, Upper <-> Lower).
[[nodiscard]] Vec2L inversion(Vec2L p);

// Vertical cone offset delta > 0 describing C_delta = {x^2 - (y - delta)^2 < 0}.
class ConeOffset {
 public:
  explicit ConeOffset(double delta);
  [[nodiscard]] double delta() const { return delta_; }

  // Future component {y - delta > |x|}.
  [[nodiscard]] bool contains_future(Vec2L p) const;
  // Mirror image under (x, y) -> (x, -y): {-(y + delta) > |x|}.
  [[nodiscard]] bool contains_past(Vec2L p) const;

 private:
  double delta_;
};

// True iff every point lies in the future component of C_delta, or every
// point lies in its mirrored past component. Throws Error(Precondition) on an
// empty list.
[[nodiscard]] bool far_from_cone(std::span<const Vec2L> points, ConeOffset offset);

// Bisection for the largest delta in [delta_floor, max|y|] certifying
// far_from_cone. Returns nullopt when not even delta_floor works.
[[nodiscard]] std::optional<double> certify_cone_offset(
    std::span<const Vec2L> points, double delta_floor = 1e-6, int iterations = 80);

}  // namespace eulerl2
