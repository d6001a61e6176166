#include "eulerl2/families.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "eulerl2/error.hpp"

namespace eulerl2 {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double log_cosh(double x) {
  const double a = std::abs(x);
  return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
}

// x > 0
double log_sinh(double x) { return x + std::log(-std::expm1(-2.0 * x)) - std::numbers::ln2; }

bool uses_cminus_chart(FamilyClass f) {
  return f == FamilyClass::SpacelikeCMinus || f == FamilyClass::TimelikeCMinus;
}

bool is_rho_a(FamilyClass f) {
  return f == FamilyClass::SpacelikeCMinus || f == FamilyClass::TimelikeCPlus;
}

// log rho = lead + rest with lead in {0, s, -s}, so that log rho +- s can
// be formed without cancellation; t = rho'/rho, 1 + t, 1 - t and rho''/rho.
struct LogJet {
  double log_rho = 0.0;
  double lead = 0.0;
  double rest = 0.0;
  double t = 0.0;
  double one_plus_t = 1.0;
  double one_minus_t = 1.0;
  double r2 = 0.0;
};

LogJet log_jet(const FamilySpec& spec, double s) {
  LogJet j;
  if (uses_exponential_branch(spec)) {
    const double c = *spec.c;
    j.log_rho = c * s;
    j.rest = j.log_rho;
    j.t = c;
    j.one_plus_t = 1.0 + c;
    j.one_minus_t = 1.0 - c;
    j.r2 = c * c;
    return j;
  }
  if (is_rho_a(spec.family)) {
    const double k = spec.alpha - 1.0;
    const double x = k * s;
    const double sech = 1.0 / std::cosh(x);
    // log cosh x = |x| + log1p(e^-2|x|) - log 2 and |x| / k = sign(k) |s|.
    j.lead = k > 0.0 ? std::abs(s) : -std::abs(s);
    j.rest = (std::log1p(std::exp(-2.0 * std::abs(x))) - std::numbers::ln2) / k;
    j.log_rho = log_cosh(x) / k;
    j.t = std::tanh(x);
    j.one_plus_t = 2.0 / (1.0 + std::exp(-2.0 * x));
    j.one_minus_t = 2.0 / (1.0 + std::exp(2.0 * x));
    j.r2 = j.t * j.t + k * sech * sech;
    return j;
  }
  const double m = spec.alpha + 1.0;
  const double x = m * s;
  if (!(x > 0.0)) {
    throw Error(ErrorCode::DomainViolation,
                "sinh((alpha+1) s) <= 0 at s = " + std::to_string(s));
  }
  const double csch = 1.0 / std::sinh(x);
  // -log sinh(x) / m = -s - (log(1 - e^-2x) - log 2) / m
  j.lead = -s;
  j.rest = -(std::log(-std::expm1(-2.0 * x)) - std::numbers::ln2) / m;
  j.log_rho = -log_sinh(x) / m;
  j.t = -1.0 / std::tanh(x);
  j.one_plus_t = -2.0 / std::expm1(2.0 * x);
  j.one_minus_t = -2.0 / std::expm1(-2.0 * x);
  j.r2 = j.t * j.t + m * csch * csch;
  return j;
}

// Point, first and second derivative from the null coordinates
// P = rho e^s and M = rho e^-s.
struct Jet3 {
  Vec2L p, d1, d2;
};

Jet3 chart_jet(const FamilySpec& spec, double s) {
  const LogJet j = log_jet(spec, s);
  const double P = std::exp((j.lead + s) + j.rest);
  const double M = std::exp((j.lead - s) + j.rest);
  const double P1 = P * j.one_plus_t;
  const double M1 = -M * j.one_minus_t;
  const double P2 = P * (j.r2 + 2.0 * j.t + 1.0);
  const double M2 = M * (j.r2 - 2.0 * j.t + 1.0);
  if (uses_cminus_chart(spec.family)) {
    return {{0.5 * (P - M), 0.5 * (P + M)},
            {0.5 * (P1 - M1), 0.5 * (P1 + M1)},
            {0.5 * (P2 - M2), 0.5 * (P2 + M2)}};
  }
  return {{0.5 * (P + M), 0.5 * (P - M)},
          {0.5 * (P1 + M1), 0.5 * (P1 - M1)},
          {0.5 * (P2 + M2), 0.5 * (P2 - M2)}};
}

AsymptoteDescription swapped(AsymptoteDescription d) {
  for (auto& line : d.lines) {
    if (line.vertical) {
      line = {0.0, line.intercept, false};
    } else if (line.slope == 0.0) {
      line = {0.0, line.intercept, true};
    } else {
      line = {1.0 / line.slope, -line.intercept / line.slope, false};
    }
  }
  for (auto& c : d.contacts) {
    c.point = swap_map(c.point);
    c.limit_slope = c.limit_slope == 0.0 ? kInf : 1.0 / c.limit_slope;
  }
  if (d.origin_slope) {
    *d.origin_slope = *d.origin_slope == 0.0 ? kInf : 1.0 / *d.origin_slope;
  }
  d.summary += " (mirrored in the line y = x)";
  return d;
}

AsymptoteDescription cminus_spacelike_asymptotes(const FamilySpec& spec) {
  AsymptoteDescription d;
  const double alpha = spec.alpha;
  if (uses_exponential_branch(spec)) {
    d.lines = {{1.0, 0.0}, {-1.0, 0.0}};
    d.is_circle = *spec.c == 0.0;
    d.summary = d.is_circle ? "hyperbola <p,p> = -1, asymptotic to the cone"
                            : "asymptotic to both lines of the cone";
    return d;
  }
  if (alpha > 1.0) {
    const double b = std::exp2(1.0 / (1.0 - alpha));
    d.lines = {{1.0, b}, {-1.0, b}};
    d.summary = "asymptotic to the cone translated up by " + std::to_string(b);
    return d;
  }
  const double a = std::exp2(alpha / (1.0 - alpha));
  if (alpha == 0.0) {
    d.lines = {{0.0, 1.0}};
    d.contacts = {{Vec2L{1.0, 1.0}, ContactKind::Transversal, 0.0, kInf},
                  {Vec2L{-1.0, 1.0}, ContactKind::Transversal, 0.0, -kInf}};
    d.summary = "the line y = 1, crossing the cone";
    return d;
  }
  if (alpha > 0.0) {
    d.contacts = {{Vec2L{a, a}, ContactKind::Tangential, 1.0, kInf},
                  {Vec2L{-a, a}, ContactKind::Tangential, -1.0, -kInf}};
    d.summary = "meets the cone tangentially at (+-a, a), a = " + std::to_string(a);
    return d;
  }
  d.contacts = {{Vec2L{a, a}, ContactKind::Orthogonal, -1.0, kInf},
                {Vec2L{-a, a}, ContactKind::Orthogonal, 1.0, -kInf}};
  d.summary = "meets the cone orthogonally at (+-a, a), a = " + std::to_string(a);
  return d;
}

AsymptoteDescription cplus_spacelike_asymptotes(const FamilySpec& spec) {
  AsymptoteDescription d;
  const double alpha = spec.alpha;
  if (uses_exponential_branch(spec)) {
    const double c = *spec.c;
    d.reaches_origin = true;
    d.origin_slope = c > 1.0 ? -1.0 : 1.0;
    d.contacts = {{Vec2L{}, ContactKind::Tangential, *d.origin_slope, c > 1.0 ? -kInf : kInf}};
    d.summary = "spirals into the origin tangentially to the cone";
    return d;
  }
  const double m = alpha + 1.0;
  if (m < 0.0) {
    d.lines = {{-1.0, std::exp2(1.0 / m)}};
    d.reaches_origin = true;
    d.origin_slope = 0.0;
    d.contacts = {{Vec2L{}, ContactKind::Transversal, 0.0, 0.0}};
    d.summary = "enters the origin tangent to the x-axis; asymptotic to y = -x + " +
                std::to_string(std::exp2(1.0 / m));
    return d;
  }
  const double a = std::exp2(-alpha / m);
  if (alpha == 0.0) {
    d.lines = {{0.0, 1.0}};
    d.contacts = {{Vec2L{1.0, 1.0}, ContactKind::Transversal, 0.0, kInf}};
    d.summary = "the line y = 1, crossing the cone";
    return d;
  }
  if (alpha > 0.0) {
    d.lines = {{0.0, 0.0}};
    d.contacts = {{Vec2L{a, a}, ContactKind::Orthogonal, -1.0, kInf}};
    d.summary = "asymptotic to the x-axis; meets the cone orthogonally at (a, a), a = " +
                std::to_string(a);
    return d;
  }
  d.contacts = {{Vec2L{a, a}, ContactKind::Tangential, 1.0, kInf}};
  d.summary = "unbounded; meets the cone tangentially at (a, a), a = " + std::to_string(a);
  return d;
}

}  // namespace

std::string_view to_string(FamilyClass f) {
  switch (f) {
    case FamilyClass::SpacelikeCMinus: return "spacelike-cminus";
    case FamilyClass::SpacelikeCPlus: return "spacelike-cplus";
    case FamilyClass::TimelikeCPlus: return "timelike-cplus";
    case FamilyClass::TimelikeCMinus: return "timelike-cminus";
  }
  return "?";
}

std::optional<FamilyClass> parse_family_class(std::string_view token) {
  for (FamilyClass f : {FamilyClass::SpacelikeCMinus, FamilyClass::SpacelikeCPlus,
                        FamilyClass::TimelikeCPlus, FamilyClass::TimelikeCMinus}) {
    if (token == to_string(f)) return f;
  }
  return std::nullopt;
}

std::string_view to_string(ContactKind k) {
  switch (k) {
    case ContactKind::Tangential: return "tangential";
    case ContactKind::Orthogonal: return "orthogonal";
    case ContactKind::Transversal: return "transversal";
  }
  return "?";
}

ConeRegion family_region(FamilyClass f) {
  return uses_cminus_chart(f) ? ConeRegion::CMinusUpper : ConeRegion::CPlusRight;
}

CausalCharacter family_causal(FamilyClass f) {
  return (f == FamilyClass::SpacelikeCMinus || f == FamilyClass::SpacelikeCPlus)
             ? CausalCharacter::Spacelike
             : CausalCharacter::Timelike;
}

PolarOde family_ode(FamilyClass f) { return is_rho_a(f) ? PolarOde::K1 : PolarOde::K2; }

double critical_alpha(FamilyClass f) { return is_rho_a(f) ? 1.0 : -1.0; }

bool uses_exponential_branch(const FamilySpec& spec) {
  return spec.alpha == critical_alpha(spec.family);
}

Interval default_family_domain(FamilyClass f, double alpha) {
  // The tangent turns null as |(alpha -+ 1) s| grows, and Cartesian frames
  // lose digits there; stop while 1 -+ rho'/rho is still above ~e^-6. |s|
  // is also capped at 3: beyond that the null coordinates rho e^s and
  // rho e^-s differ by more than e^6 and the smaller one's derivatives no
  // longer survive the trip through x and y.
  if (alpha == critical_alpha(f)) return {-3.0, 3.0};
  if (is_rho_a(f)) {
    const double half = std::min(3.0, 3.0 / std::abs(alpha - 1.0));
    return {-half, half};
  }
  const double m = alpha + 1.0;
  const double outer = std::max(std::min(3.0, 3.0 / std::abs(m)), 0.4 / std::abs(m));
  return m > 0.0 ? Interval{0.2 / m, outer} : Interval{-outer, 0.2 / m};
}

FamilySpec make_family(FamilyClass f, double alpha, std::optional<double> c,
                       std::optional<Interval> domain) {
  FamilySpec spec{alpha, f, c, domain.value_or(default_family_domain(f, alpha))};
  validate(spec);
  return spec;
}

void validate(const FamilySpec& spec) {
  if (!std::isfinite(spec.alpha)) throw Error(ErrorCode::InvalidSpec, "alpha must be finite");
  const Interval& d = spec.domain;
  if (!std::isfinite(d.lo) || !std::isfinite(d.hi) || !(d.lo < d.hi)) {
    throw Error(ErrorCode::InvalidSpec, "domain must be a finite interval with lo < hi");
  }
  if (uses_exponential_branch(spec)) {
    if (!spec.c || !std::isfinite(*spec.c)) {
      throw Error(ErrorCode::InvalidSpec, "critical alpha needs a finite constant c");
    }
    const double c2 = *spec.c * *spec.c;
    // Spacelike in C- and timelike in C+ both need rho^2 > rho'^2; the
    // other two need the opposite inequality.
    if (is_rho_a(spec.family) ? !(c2 < 1.0) : !(c2 > 1.0)) {
      throw Error(ErrorCode::InvalidSpec,
                  std::string("c out of range for ") + std::string(to_string(spec.family)) +
                      (is_rho_a(spec.family) ? ": need c^2 < 1" : ": need c^2 > 1"));
    }
    return;
  }
  if (is_rho_a(spec.family)) return;
  const double m = spec.alpha + 1.0;
  const bool ok = m > 0.0 ? (d.lo > 0.0 || (d.lo == 0.0 && d.open_lo))
                          : (d.hi < 0.0 || (d.hi == 0.0 && d.open_hi));
  if (!ok) {
    throw Error(ErrorCode::DomainViolation,
                "domain must satisfy (alpha+1) s > 0 for " + std::string(to_string(spec.family)));
  }
}

double family_log_rho(const FamilySpec& spec, double s) { return log_jet(spec, s).log_rho; }

RhoJet family_rho(const FamilySpec& spec, double s) {
  const LogJet j = log_jet(spec, s);
  const double rho = std::exp(j.log_rho);
  return {rho, rho * j.t, rho * j.r2};
}

ParamCurve family_curve(const FamilySpec& spec) {
  validate(spec);
  return {[spec](double s) { return chart_jet(spec, s).p; },
          [spec](double s) { return chart_jet(spec, s).d1; },
          [spec](double s) { return chart_jet(spec, s).d2; },
          spec.domain};
}

NullCoordinates null_coordinates(const FamilySpec& spec, double s) {
  const LogJet j = log_jet(spec, s);
  return {std::exp((j.lead + s) + j.rest), std::exp((j.lead - s) + j.rest)};
}

double tangent_slope(const FamilySpec& spec, double s) {
  const LogJet j = log_jet(spec, s);
  // P' = rho A and M' = -rho B with A = e^s (1 + t), B = e^-s (1 - t);
  // rescale both by the larger magnitude before combining.
  const double la = s + std::log(std::abs(j.one_plus_t));
  const double lb = -s + std::log(std::abs(j.one_minus_t));
  const double top = std::max(la, lb);
  const double A = std::copysign(std::exp(la - top), j.one_plus_t);
  const double B = std::copysign(std::exp(lb - top), j.one_minus_t);
  if (uses_cminus_chart(spec.family)) return (A - B) / (A + B);
  return (A + B) / (A - B);
}

AsymptoteDescription asymptote_data(const FamilySpec& spec) {
  validate(spec);
  switch (spec.family) {
    case FamilyClass::SpacelikeCMinus: return cminus_spacelike_asymptotes(spec);
    case FamilyClass::SpacelikeCPlus: return cplus_spacelike_asymptotes(spec);
    case FamilyClass::TimelikeCPlus: {
      FamilySpec mirror = spec;
      mirror.family = FamilyClass::SpacelikeCMinus;
      return swapped(cminus_spacelike_asymptotes(mirror));
    }
    case FamilyClass::TimelikeCMinus: {
      FamilySpec mirror = spec;
      mirror.family = FamilyClass::SpacelikeCPlus;
      return swapped(cplus_spacelike_asymptotes(mirror));
    }
  }
  throw Error(ErrorCode::InvalidSpec, "unknown family");
}

std::vector<ParamCurve> inverse_line_curves() {
  ParamCurve in_cminus{
      [](double s) { return Vec2L{std::cosh(s) * std::sinh(s), std::cosh(s) * std::cosh(s)}; },
      [](double s) { return Vec2L{std::cosh(2.0 * s), std::sinh(2.0 * s)}; },
      [](double s) { return Vec2L{2.0 * std::sinh(2.0 * s), 2.0 * std::cosh(2.0 * s)}; },
      Interval{-3.0, 3.0}};
  ParamCurve in_cplus{
      [](double s) {
        return Vec2L{-std::sinh(s) * std::cosh(s), -std::sinh(s) * std::sinh(s)};
      },
      [](double s) { return Vec2L{-std::cosh(2.0 * s), -std::sinh(2.0 * s)}; },
      [](double s) { return Vec2L{-2.0 * std::sinh(2.0 * s), -2.0 * std::cosh(2.0 * s)}; },
      Interval{0.0, 3.0, true, false}};
  return {in_cminus, in_cplus};
}

}  // namespace eulerl2
