#include <algorithm>
#include <cmath>

#include "eulerl2/error.hpp"
#include "eulerl2/families.hpp"

namespace eulerl2 {
namespace {

// Smallest hyperbolic angle kept on the alpha = 2 pieces, whose rho blows up
// at sigma = 0.
constexpr double kSigmaFloor = 0.1;

// c(sigma) with sigma = -log(-s) (before the junction, s < 0) or
// sigma = -log(s) (after, s > 0). Both have d sigma/ds = -1/s.
ParamCurve glue_reparametrize(const ParamCurve& c, bool before, double sigma_lo,
                              double sigma_hi) {
  const double near = std::exp(-sigma_hi);
  const double far = std::exp(-sigma_lo);
  Interval domain = before ? Interval{-far, -near} : Interval{near, far};
  auto phi = [before](double s) { return before ? -std::log(-s) : -std::log(s); };
  return reparametrize(
      c, phi, [](double s) { return -1.0 / s; }, [](double s) { return 1.0 / (s * s); },
      domain);
}

CurvePiece mirrored(const CurvePiece& piece, const LinearMap2& m) {
  CurvePiece out;
  out.curve = map_curve(reverse_curve(piece.curve), m);
  out.causal = piece.causal;
  // Classify at sigma = 0 (s = -1 or 1), well away from both ends.
  const double s0 = piece.curve.domain.contains(-1.0) ? -1.0 : 1.0;
  out.region = region_of(out.curve.eval(-s0));
  return out;
}

}  // namespace

double glued_parameter(double sigma, bool before_junction) {
  return before_junction ? -std::exp(-sigma) : std::exp(-sigma);
}

PiecewiseCurve glued_mixed_curve(double alpha, bool symmetrize, double depth) {
  if (!(depth > 1.0) || !std::isfinite(depth)) {
    throw Error(ErrorCode::Precondition, "glued_mixed_curve: depth must exceed 1");
  }
  PiecewiseCurve out;
  out.alpha = alpha;
  const double a = std::exp2(-2.0 / 3.0);
  if (alpha == -2.0) {
    const Interval sigma{-depth, depth};
    const auto spacelike = make_family(FamilyClass::SpacelikeCMinus, alpha, std::nullopt, sigma);
    const auto timelike = make_family(FamilyClass::TimelikeCPlus, alpha, std::nullopt, sigma);
    CurvePiece first{glue_reparametrize(family_curve(spacelike), true, -depth, depth),
                     CausalCharacter::Spacelike, ConeRegion::CMinusUpper};
    CurvePiece second{glue_reparametrize(family_curve(timelike), false, -depth, depth),
                      CausalCharacter::Timelike, ConeRegion::CPlusRight};
    out.pieces = {first, second};
    out.junctions = {Vec2L{a, a}};
    if (symmetrize) {
      out.pieces.push_back(mirrored(first, reflect_x_map()));
      out.pieces.push_back(mirrored(second, reflect_y_map()));
      out.junctions.push_back(Vec2L{a, -a});
      out.junctions.push_back(Vec2L{-a, -a});
      out.junctions.push_back(Vec2L{-a, a});
      out.closed = true;
    }
    return out;
  }
  if (alpha == 2.0) {
    const Interval sigma{kSigmaFloor, depth};
    const auto spacelike = make_family(FamilyClass::SpacelikeCPlus, alpha, std::nullopt, sigma);
    const auto timelike = make_family(FamilyClass::TimelikeCMinus, alpha, std::nullopt, sigma);
    out.pieces = {
        {glue_reparametrize(family_curve(spacelike), true, kSigmaFloor, depth),
         CausalCharacter::Spacelike, ConeRegion::CPlusRight},
        {glue_reparametrize(family_curve(timelike), false, kSigmaFloor, depth),
         CausalCharacter::Timelike, ConeRegion::CMinusUpper}};
    out.junctions = {Vec2L{a, a}};
    return out;
  }
  throw Error(ErrorCode::UnsupportedAlpha, "glued curves exist only for alpha = 2 and -2");
}

double closure_gap(const PiecewiseCurve& curve) {
  double gap = 0.0;
  const std::size_t n = curve.pieces.size();
  const std::size_t links = curve.closed ? n : (n == 0 ? 0 : n - 1);
  for (std::size_t i = 0; i < links; ++i) {
    const ParamCurve& from = curve.pieces[i].curve;
    const ParamCurve& to = curve.pieces[(i + 1) % n].curve;
    gap = std::max(gap, (from.eval(from.domain.hi) - to.eval(to.domain.lo)).norm_inf());
  }
  return gap;
}

}  // namespace eulerl2
