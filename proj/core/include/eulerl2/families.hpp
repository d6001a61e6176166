#pragma once

// Closed-form alpha-stationary curves. Every family is written in a hyperbolic
// polar chart, gamma(s) = rho(s) E(s), with
//
//   E(s) = (sinh s, cosh s)   for SpacelikeCMinus and TimelikeCMinus,
//   E(s) = (cosh s, sinh s)   for SpacelikeCPlus  and TimelikeCPlus,
//
// and rho one of
//
//   rho_A(s) = cosh((alpha - 1) s)^(1/(alpha - 1))      (K1 families)
//   rho_B(s) = sinh((alpha + 1) s)^(-1/(alpha + 1))     (K2 families)
//   rho(s)   = exp(c s)                                  (critical alpha)
//
// The critical value is alpha = 1 for the K1 families and alpha = -1 for the
// K2 families. Up to a linear isometry and a dilation these exhaust the
// stationary curves of each class.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eulerl2/curve.hpp"
#include "eulerl2/minkowski.hpp"

namespace eulerl2 {

enum class FamilyClass { SpacelikeCMinus, SpacelikeCPlus, TimelikeCPlus, TimelikeCMinus };

std::string_view to_string(FamilyClass f);
// Accepts the CLI tokens spacelike-cminus, spacelike-cplus, timelike-cplus,
// timelike-cminus.
std::optional<FamilyClass> parse_family_class(std::string_view token);

[[nodiscard]] ConeRegion family_region(FamilyClass f);
[[nodiscard]] CausalCharacter family_causal(FamilyClass f);
[[nodiscard]] PolarOde family_ode(FamilyClass f);
// 1 for the K1 families, -1 for the K2 families.
[[nodiscard]] double critical_alpha(FamilyClass f);

struct FamilySpec {
  double alpha = 2.0;
  FamilyClass family = FamilyClass::SpacelikeCMinus;
  // Exponential-branch constant; read only at the critical alpha.
  std::optional<double> c;
  Interval domain{-3.0, 3.0};
};

[[nodiscard]] bool uses_exponential_branch(const FamilySpec& spec);

// A domain on which the closed form is defined and stays clear of the cone.
[[nodiscard]] Interval default_family_domain(FamilyClass f, double alpha);

[[nodiscard]] FamilySpec make_family(FamilyClass f, double alpha,
                                     std::optional<double> c = std::nullopt,
                                     std::optional<Interval> domain = std::nullopt);

// Throws Error(InvalidSpec) for a missing or out-of-range c and
// Error(DomainViolation) when the domain reaches where the base of the
// fractional power is not positive.
void validate(const FamilySpec& spec);

struct RhoJet {
  double rho = 0.0;
  double rho1 = 0.0;
  double rho2 = 0.0;
};

[[nodiscard]] double family_log_rho(const FamilySpec& spec, double s);
[[nodiscard]] RhoJet family_rho(const FamilySpec& spec, double s);
[[nodiscard]] ParamCurve family_curve(const FamilySpec& spec);

// rho e^{+s} and rho e^{-s}, computed in log space. In the C- chart these are
// y + x and y - x; in the C+ chart x + y and x - y. They stay accurate far out
// along the asymptotes where the Cartesian coordinates cancel.
struct NullCoordinates {
  double plus = 0.0;
  double minus = 0.0;
};
[[nodiscard]] NullCoordinates null_coordinates(const FamilySpec& spec, double s);

// dy/dx of the family curve, evaluated through the null coordinates with
// 1 +/- rho'/rho formed without cancellation.
[[nodiscard]] double tangent_slope(const FamilySpec& spec, double s);

// Line y = slope * x + intercept, or x = intercept when vertical.
struct AsymptoteLine {
  double slope = 0.0;
  double intercept = 0.0;
  bool vertical = false;
};

enum class ContactKind { Tangential, Orthogonal, Transversal };
std::string_view to_string(ContactKind k);

// Limit point on the cone (as s -> s_limit) with the limiting tangent slope.
struct ConeContactPoint {
  Vec2L point;
  ContactKind kind = ContactKind::Tangential;
  double limit_slope = 0.0;
  double s_limit = 0.0;
};

struct AsymptoteDescription {
  std::vector<AsymptoteLine> lines;
  std::vector<ConeContactPoint> contacts;
  bool is_circle = false;
  bool reaches_origin = false;
  // Slope of the branch entering the origin, when it does.
  std::optional<double> origin_slope;
  std::string summary;
};

// Case table of the asymptotic behaviour for the family, indexed by alpha.
[[nodiscard]] AsymptoteDescription asymptote_data(const FamilySpec& spec);

// ---------------------------------------------------------------------------
// Hyperbolic circles and pseudocircles.

enum class CircleKind { HyperbolicCircle, Pseudocircle };
// Plus is p0 + r E, Minus is p0 - r E (the point reflection through p0).
enum class CircleBranch { Plus, Minus };

struct CircleSpec {
  CircleKind kind = CircleKind::HyperbolicCircle;
  Vec2L center;
  double radius = 1.0;
  CircleBranch branch = CircleBranch::Plus;
};

// Unit-speed parametrization oriented so that kappa = 1/r with
//   N = (p - p0)/r   for hyperbolic circles,
//   N = -(p - p0)/r  for pseudocircles.
[[nodiscard]] ParamCurve circle_curve(const CircleSpec& spec, Interval domain);
// <p - p0, p - p0>: -r^2 on hyperbolic circles, +r^2 on pseudocircles.
[[nodiscard]] double circle_level(const CircleSpec& spec, Vec2L p);
// Arc-length parameter at which the branch passes through the origin.
[[nodiscard]] std::optional<double> origin_crossing(const CircleSpec& spec);
// An arc of length about 2r that avoids the origin.
[[nodiscard]] Interval circle_arc_domain(const CircleSpec& spec);

// All stationary hyperbolic circles and pseudocircles for alpha, with
// representative radius and center angle: for alpha = 1 the four
// origin-centred branches; for alpha = 2 and -2 the branches of circles with
// <p0,p0> = -r^2 (hyperbolic) or +r^2 (pseudo); empty for any other alpha.
[[nodiscard]] std::vector<CircleSpec> classified_circles(double alpha, double radius = 1.0,
                                                         double center_angle = 0.0);

// Inverses of spacelike lines: (cosh s sinh s, cosh^2 s) in C- (2-stationary)
// and (-sinh s cosh s, -sinh^2 s) in C+ ((-2)-stationary, s > 0).
[[nodiscard]] std::vector<ParamCurve> inverse_line_curves();

// ---------------------------------------------------------------------------
// Mixed causal character.

struct CurvePiece {
  ParamCurve curve;
  CausalCharacter causal = CausalCharacter::Spacelike;
  ConeRegion region = ConeRegion::CMinusUpper;
};

struct PiecewiseCurve {
  double alpha = -2.0;
  std::vector<CurvePiece> pieces;
  // Cone points where consecutive pieces meet.
  std::vector<Vec2L> junctions;
  bool closed = false;
};

// alpha = -2: the spacelike C- curve glued on the cone at (2^(-2/3), 2^(-2/3))
// to the timelike C+ curve, both reparametrized by s -> -log(-s) and
// s -> -log(s); with `symmetrize` the mirror images about both axes close the
// trace. alpha = 2: the spacelike C+ curve glued to the timelike C- curve;
// its far ends are asymptotic to the x- and y-axes and `symmetrize` is
// ignored. `depth` bounds the hyperbolic-angle parameter of each piece.
// Throws Error(UnsupportedAlpha) otherwise.
[[nodiscard]] PiecewiseCurve glued_mixed_curve(double alpha, bool symmetrize = true,
                                               double depth = 40.0);

// Glued parameter for a hyperbolic-angle parameter sigma of the piece before
// (s < 0) or after (s > 0) the junction.
[[nodiscard]] double glued_parameter(double sigma, bool before_junction);

// Largest end-to-start gap between consecutive pieces (and last-to-first
// when closed).
[[nodiscard]] double closure_gap(const PiecewiseCurve& curve);

}  // namespace eulerl2
