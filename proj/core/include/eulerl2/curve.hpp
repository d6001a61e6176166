#pragma once

// Curve evaluation in the Lorentz-Minkowski plane: Frenet-type frames,
// curvature, the energy E_alpha[gamma] = int |<gamma,gamma>|^(alpha/2) ds and
// the pointwise stationarity residual
//
//   residual(s) = kappa + alpha <N, gamma> / |<gamma, gamma>|.

#include <functional>
#include <span>
#include <vector>

#include "eulerl2/minkowski.hpp"
#include "eulerl2/quadrature.hpp"

namespace eulerl2 {

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
  bool open_lo = false;
  bool open_hi = false;

  [[nodiscard]] bool contains(double s) const;
  [[nodiscard]] double length() const { return hi - lo; }
};

// A curve with analytic first and second derivatives. The parameter need not
// be arc length.
struct ParamCurve {
  std::function<Vec2L(double)> eval;
  std::function<Vec2L(double)> deriv1;
  std::function<Vec2L(double)> deriv2;
  Interval domain;
};

// n parameters spread uniformly over the domain; open ends are inset by half
// a spacing so the samples stay strictly inside.
[[nodiscard]] std::vector<double> sample_parameters(const Interval& domain, std::size_t n);

// Max relative discrepancy between the supplied derivatives and centered
// differences (deriv1 against eval, deriv2 against deriv1).
[[nodiscard]] double derivative_audit(const ParamCurve& c, std::span<const double> s,
                                      double h = 1e-5);

// Curve builders and pushforwards.
[[nodiscard]] ParamCurve segment_curve(Vec2L from, Vec2L to);
[[nodiscard]] ParamCurve line_curve(Vec2L point, Vec2L direction, Interval domain);
[[nodiscard]] ParamCurve map_curve(const ParamCurve& c, const LinearMap2& m);
// Pointwise inversion p -> p / <p,p> with chain-rule derivatives.
[[nodiscard]] ParamCurve invert_curve(const ParamCurve& c);
// c(phi(t)) for t in new_domain, where phi has derivatives dphi and ddphi.
[[nodiscard]] ParamCurve reparametrize(const ParamCurve& c, std::function<double(double)> phi,
                                       std::function<double(double)> dphi,
                                       std::function<double(double)> ddphi,
                                       Interval new_domain);
// t -> c(-t) on the mirrored domain.
[[nodiscard]] ParamCurve reverse_curve(const ParamCurve& c);

// Unit tangent T, normal N = swap(T), curvature kappa = -<N, d^2 gamma/ds^2>
// (s arc length) and epsilon = sign <gamma', gamma'>. With this normal a
// spacelike graph (x, y(x)) gets N = (y', 1)/sqrt(1 - y'^2) and a timelike
// graph (x(y), y) gets N = (1, x')/sqrt(1 - x'^2).
struct FrameData {
  Vec2L tangent;
  Vec2L normal;
  double kappa = 0.0;
  double epsilon = 1.0;
};

// Throws Error(LightlikeTangent) when |<gamma', gamma'>| is within the
// default cone tolerance of gamma'.
[[nodiscard]] FrameData frame_at(const ParamCurve& c, double s);

// Curvature of rho(s) E(s) in the chart of `region` (see HyperbolicPolar).
// Upper/Right charts:
//   C-: kappa =  (rho(rho'' + rho) - 2 rho'^2) / |rho^2 - rho'^2|^(3/2)
//   C+: kappa = -(rho(rho'' + rho) - 2 rho'^2) / |rho^2 - rho'^2|^(3/2)
// The Lower/Left charts are reflections and flip the sign.
// Throws Error(DegenerateSpeed) when rho^2 - rho'^2 vanishes.
[[nodiscard]] double polar_curvature(double rho, double rho1, double rho2, ConeRegion region);

// The stationarity equation written for rho(s):
//   K1: rho rho'' + (alpha - 2) rho'^2 + (1 - alpha) rho^2 = 0
//   K2: rho rho'' - (alpha + 2) rho'^2 + (1 + alpha) rho^2 = 0
// K1 governs spacelike curves in C- and timelike curves in C+; K2 the other two.
enum class PolarOde { K1, K2 };

[[nodiscard]] double polar_ode_residual(PolarOde kind, double alpha, double rho, double rho1,
                                        double rho2);
// Residual divided by the sum of the absolute values of its three terms.
[[nodiscard]] double polar_ode_relative_residual(PolarOde kind, double alpha, double rho,
                                                 double rho1, double rho2);

// Samples with |<p,p>| below 1e-9 |p|_inf^2 are treated as touching the cone.
[[nodiscard]] bool clear_of_cone(Vec2L p);

// E_alpha over the whole domain. Throws Error(ConeContact) or
// Error(NotSpacelike) if a quadrature node violates the preconditions.
[[nodiscard]] double energy(const ParamCurve& c, double alpha, const QuadratureSpec& quad = {});

struct ResidualSample {
  double s = 0.0;
  double residual = 0.0;
  CausalCharacter causal = CausalCharacter::Spacelike;
  ConeRegion region = ConeRegion::CMinusUpper;
};

struct ResidualReport {
  std::vector<ResidualSample> samples;
  double max_abs_residual = 0.0;
  double tolerance = 0.0;
  // max_abs_residual <= tolerance and causal character/region constant.
  bool verdict = false;
};

[[nodiscard]] double stationarity_residual_at(const ParamCurve& c, double alpha, double s);

[[nodiscard]] ResidualReport stationary_residual(const ParamCurve& c, double alpha,
                                                 std::span<const double> s_samples,
                                                 double tol = 1e-8);

// Euler-Lagrange residual for a spacelike graph y(x) over C-:
//   alpha (x y' - y)/sqrt(1 - y'^2) + (y^2 - x^2) y''/(1 - y'^2)^(3/2).
// Equals (y^2 - x^2) times the stationarity residual of the same curve.
[[nodiscard]] double graph_el_residual(const std::function<double(double)>& y,
                                       const std::function<double(double)>& y1,
                                       const std::function<double(double)>& y2, double alpha,
                                       double x);

}  // namespace eulerl2
