#include <gtest/gtest.h>

#include <cmath>

#include "eulerl2/error.hpp"
#include "eulerl2/families.hpp"
#include "eulerl2/variational.hpp"
#include "oracles.hpp"

using namespace eulerl2;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no eulerl2::Error thrown";
  return ErrorCode::Precondition;
}

ParamCurve unit_hyperbola() {
  return {[](double s) { return Vec2L{std::sinh(s), std::cosh(s)}; },
          [](double s) { return Vec2L{std::cosh(s), std::sinh(s)}; },
          [](double s) { return Vec2L{std::sinh(s), std::cosh(s)}; },
          Interval{-1.0, 1.0}};
}

// d/d eps E_alpha[c + eps V] at eps = 0 without integrating by parts:
//   int alpha |q|^(alpha/2 - 1) sgn(q) <c, V> |c'| + f <c', V'> / |c'| dt
double first_variation_oracle(const ParamCurve& c, double alpha, const PerturbationSpec& p) {
  const Vec2L d = p.amplitude * p.direction;
  auto integrand = [&](double t) {
    const double u = (t - p.bump_center) / p.bump_width;
    if (std::abs(u) >= 1.0) return 0.0;
    const double b = std::pow(1.0 - u * u, 4);
    const double b1 = -8.0 * u * std::pow(1.0 - u * u, 3) / p.bump_width;
    const Vec2L g = c.eval(t);
    const Vec2L g1 = c.deriv1(t);
    const double q = g.x() * g.x() - g.y() * g.y();
    const double speed = std::sqrt(g1.x() * g1.x() - g1.y() * g1.y());
    const double f = std::pow(std::abs(q), 0.5 * alpha);
    const double gv = b * (g.x() * d.x() - g.y() * d.y());
    const double g1v1 = b1 * (g1.x() * d.x() - g1.y() * d.y());
    return alpha * f / q * gv * speed + f * g1v1 / speed;
  };
  return oracle::integrate(integrand, p.bump_center - p.bump_width,
                           p.bump_center + p.bump_width);
}

}  // namespace

TEST(Bump, JetMatchesFiniteDifferences) {
  const double h = 1e-5;
  for (double u : {-0.9, -0.3, 0.0, 0.45, 0.8}) {
    const auto j = bump_jet(u);
    EXPECT_NEAR(j[1], (bump_jet(u + h)[0] - bump_jet(u - h)[0]) / (2 * h), 1e-8);
    EXPECT_NEAR(j[2], (bump_jet(u + h)[1] - bump_jet(u - h)[1]) / (2 * h), 1e-7);
  }
  EXPECT_EQ(bump_jet(0.0)[0], 1.0);
  EXPECT_EQ(bump_jet(1.0)[0], 0.0);
  EXPECT_EQ(bump_jet(-3.0)[2], 0.0);
}

TEST(Perturbation, LeavesCurveOutsideSupport) {
  const ParamCurve c = unit_hyperbola();
  const PerturbationSpec p{0.2, 0.3, 2.0, {1.0, 0.5}, 0};
  const ParamCurve q = perturbed_curve(c, p, 0.1);
  EXPECT_EQ(q.eval(-0.5), c.eval(-0.5));
  EXPECT_EQ(q.eval(0.9), c.eval(0.9));
  EXPECT_NEAR(q.eval(0.2).x(), c.eval(0.2).x() + 0.2, 1e-15);
  EXPECT_LE(derivative_audit(q, sample_parameters({-0.9, 0.9}, 31)), 1e-6);

  const PerturbationSpec outside{0.9, 0.3, 1.0, {1.0, 0.0}, 0};
  EXPECT_EQ(code_of([&] { (void)perturbed_curve(c, outside, 0.1); }), ErrorCode::InvalidSpec);
  const PerturbationSpec flat{0.0, 0.0, 1.0, {1.0, 0.0}, 0};
  EXPECT_EQ(code_of([&] { (void)perturbed_curve(c, flat, 0.1); }), ErrorCode::InvalidSpec);
}

TEST(FirstVariation, AgreesWithDirectFormulaProperty) {
  oracle::Gen gen(71);
  const FamilyClass fams[] = {FamilyClass::SpacelikeCMinus, FamilyClass::SpacelikeCPlus};
  for (int i = 0; i < 24; ++i) {
    const FamilyClass f = fams[i % 2];
    double alpha = gen.uniform(-2.5, 2.5);
    if (std::abs(alpha - critical_alpha(f)) < 0.2) alpha += 0.5;
    const FamilySpec spec = make_family(f, alpha);
    const ParamCurve c = family_curve(spec);
    const auto suite = bump_suite(spec.domain, 1, 100 + i);
    PerturbationSpec p = suite.front();
    p.amplitude = 0.01 * c.eval(p.bump_center).norm_inf();
    const double ours = first_variation(c, alpha, p, 1e-5);
    const double ref = first_variation_oracle(c, alpha, p);
    ASSERT_NEAR(ours, ref, 1e-7 * (1.0 + std::abs(ref))) << to_string(f) << " alpha=" << alpha;
  }
}

TEST(FirstVariation, HyperbolaClosedForm) {
  // On the unit hyperbola the variation is -(alpha + 1) int b <gamma, d>.
  const ParamCurve c = unit_hyperbola();
  const PerturbationSpec p{0.1, 0.5, 1.0, {0.6, 0.8}, 0};
  const double inner = oracle::integrate(
      [&](double s) {
        const double u = (s - 0.1) / 0.5;
        const double b = std::abs(u) < 1.0 ? std::pow(1.0 - u * u, 4) : 0.0;
        return b * (std::sinh(s) * 0.6 - std::cosh(s) * 0.8);
      },
      -0.4, 0.6);
  for (double alpha : {-2.0, 1.0, 3.0}) {
    EXPECT_NEAR(first_variation(c, alpha, p, 1e-4), -(alpha + 1.0) * inner, 1e-7) << alpha;
  }
}

TEST(FirstVariation, CriticalPointsOfTheReflectedExponent) {
  // A curve with kappa + alpha <N, gamma>/|<gamma, gamma>| = 0 makes
  // E_{-alpha} stationary: the first variation of E_{-alpha} decays like
  // eps^2 along every bump, while E_alpha itself has an O(1) variation
  // unless alpha = 0.
  const auto lines = inverse_line_curves();
  const FamilySpec fam = make_family(FamilyClass::SpacelikeCMinus, 2.0, std::nullopt,
                                     Interval{-1.0, 1.0});
  struct Case {
    ParamCurve curve;
    double alpha;
  };
  const Case cases[] = {{unit_hyperbola(), 1.0},
                        {family_curve(fam), 2.0},
                        {ParamCurve{lines[0].eval, lines[0].deriv1, lines[0].deriv2, {-1.0, 1.0}},
                         2.0}};
  for (const Case& k : cases) {
    for (const PerturbationSpec& p : bump_suite(k.curve.domain, 6, 5)) {
      // The centered difference is E'(0) + O(eps^2); with E'(0) = 0 each
      // decade of eps divides the value by 100.
      const LadderReport dual = first_variation_ladder(k.curve, -k.alpha, p);
      EXPECT_TRUE(dual.quadratic_decay);
      EXPECT_LE(std::abs(dual.values.back().second), 1e-5);
      const double ratio = dual.values[0].second / dual.values[1].second;
      EXPECT_NEAR(ratio, 100.0, 5.0);
      const LadderReport direct = first_variation_ladder(k.curve, k.alpha, p);
      EXPECT_FALSE(direct.quadratic_decay);
    }
  }
}

TEST(FirstVariation, NonStationaryControlIsLarge) {
  // The unit hyperbola is not critical for E_3: the variation stays O(1).
  const ParamCurve c = unit_hyperbola();
  for (const PerturbationSpec& p : bump_suite(c.domain, 5, 9)) {
    EXPECT_GE(std::abs(first_variation(c, 3.0, p, 1e-4)), 1e-3);
  }
}

TEST(FirstVariation, InadmissiblePerturbation) {
  const ParamCurve c = unit_hyperbola();
  const PerturbationSpec push{0.0, 0.5, 10.0, {0.0, -1.0}, 0};
  EXPECT_EQ(code_of([&] { (void)first_variation(c, 1.0, push, 1.0); }),
            ErrorCode::InadmissiblePerturbation);
  EXPECT_EQ(code_of([&] { (void)first_variation(c, 1.0, push, 0.0); }), ErrorCode::Precondition);
}

TEST(BumpSuite, ReproducibleAndInside) {
  const Interval d{-2.0, 3.0};
  const auto a = bump_suite(d, 20, 7);
  const auto b = bump_suite(d, 20, 7);
  const auto c = bump_suite(d, 20, 8);
  ASSERT_EQ(a.size(), 20u);
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].bump_center, b[i].bump_center);
    EXPECT_EQ(a[i].direction, b[i].direction);
    EXPECT_GT(a[i].bump_center - a[i].bump_width, d.lo);
    EXPECT_LT(a[i].bump_center + a[i].bump_width, d.hi);
    EXPECT_NEAR(std::hypot(a[i].direction.x(), a[i].direction.y()), 1.0, 1e-15);
    differs = differs || a[i].bump_center != c[i].bump_center;
  }
  EXPECT_TRUE(differs);
  EXPECT_THROW((void)bump_suite(d, 0, 1), Error);
}

TEST(SegmentEnergy, ClosedFormMatchesQuadratureProperty) {
  oracle::Gen gen(72);
  for (int i = 0; i < 40; ++i) {
    const double alpha = i == 0 ? -1.0 : gen.uniform(-3, 3);
    const double r = std::exp(gen.uniform(0.05, 2.5));
    const double q = energy(segment_curve({1.0, 0.0}, {r, 0.0}), alpha);
    ASSERT_LE(oracle::rel_diff(segment_energy(r, alpha), q), 1e-12) << alpha << " " << r;
  }
  EXPECT_NEAR(segment_energy(2.0, 2.0), 7.0 / 3.0, 1e-15);
  EXPECT_NEAR(segment_energy(2.0, -1.0), std::log(2.0), 1e-15);
  EXPECT_THROW((void)segment_energy(1.0, 2.0), Error);
}

TEST(Endpoints, Classification) {
  const EndpointPair a = EndpointPair::make({1, 0}, {2, 0});
  EXPECT_TRUE(a.collinear_with_origin);
  EXPECT_FALSE(a.origin_between);
  const EndpointPair b = EndpointPair::make({2, 1}, {-4, -2});
  EXPECT_TRUE(b.collinear_with_origin);
  EXPECT_TRUE(b.origin_between);
  const EndpointPair c = EndpointPair::make({1, 0}, {2, 0.5});
  EXPECT_FALSE(c.collinear_with_origin);
}

TEST(Maximizer, SegmentBeatsCompetitors) {
  for (double alpha : {-0.5, 2.0}) {
    const ComparisonReport r = maximizer_check(EndpointPair::make({1, 0}, {2, 0}), alpha, 30, 3);
    EXPECT_TRUE(r.verdict) << alpha << " excess=" << r.max_excess;
    EXPECT_EQ(r.outcome, ComparisonOutcome::SegmentMaximizes);
    EXPECT_EQ(r.competitor_energies.size(), 30u);
    EXPECT_NEAR(r.segment_energy, segment_energy(2.0, alpha), 1e-15);
    for (double e : r.competitor_energies) EXPECT_GT(e, 0.0);
  }
}

TEST(Maximizer, BoostedEndpointsAndOriginBetween) {
  const Vec2L p1 = eulerl2::boost({1.0, 0.0}, 0.7);
  const Vec2L p2 = eulerl2::boost({-1.5, 0.0}, 0.7);
  const ComparisonReport r = maximizer_check(EndpointPair::make(p1, p2), 0.0, 20, 4);
  EXPECT_TRUE(r.verdict) << r.max_excess;
  EXPECT_NEAR(r.segment_energy, 2.5, 1e-12);
}

TEST(Maximizer, ReproducibleFromSeed) {
  const EndpointPair pair = EndpointPair::make({1, 0}, {3, 0});
  const ComparisonReport a = maximizer_check(pair, 1.0, 12, 21);
  const ComparisonReport b = maximizer_check(pair, 1.0, 12, 21);
  const ComparisonReport c = maximizer_check(pair, 1.0, 12, 22);
  EXPECT_EQ(a.competitor_energies, b.competitor_energies);
  EXPECT_EQ(a.rejected, b.rejected);
  EXPECT_NE(a.competitor_energies, c.competitor_energies);
}

TEST(Maximizer, DivergentSegment) {
  const ComparisonReport r = maximizer_check(EndpointPair::make({1, 0}, {-1, 0}), -1.0, 10, 1);
  EXPECT_EQ(r.outcome, ComparisonOutcome::NoMaximizer);
  EXPECT_TRUE(std::isinf(r.segment_energy));
  ASSERT_EQ(r.divergence.size(), 6u);
  EXPECT_NEAR(r.divergence.back().second, std::log(1e6), 1e-9);
}

TEST(Maximizer, InvalidEndpoints) {
  EXPECT_EQ(code_of([] {
              (void)maximizer_check(EndpointPair::make({0, 1}, {0, 2}), 1.0, 5, 1);
            }),
            ErrorCode::InvalidEndpoints);
  EXPECT_EQ(code_of([] {
              (void)maximizer_check(EndpointPair::make({1, 0}, {2, 0.5}), 1.0, 5, 1);
            }),
            ErrorCode::InvalidEndpoints);
  EXPECT_EQ(code_of([] {
              (void)maximizer_check(EndpointPair::make({1, 0}, {1, 0}), 1.0, 5, 1);
            }),
            ErrorCode::InvalidEndpoints);
}

TEST(Divergence, ClosedForms) {
  const auto logs = divergence_probe(-1.0, {1.0, 1e-2, 1e-6});
  EXPECT_NEAR(logs[0].second, 0.0, 1e-15);
  EXPECT_NEAR(logs[1].second, std::log(1e2), 1e-10);
  EXPECT_NEAR(logs[2].second, std::log(1e6), 1e-9);
  const auto inv = divergence_probe(-2.0, {1e-1, 1e-3});
  EXPECT_NEAR(inv[0].second, 9.0, 1e-10);
  EXPECT_NEAR(inv[1].second, 999.0, 1e-8);
  EXPECT_THROW((void)divergence_probe(-0.5, {0.1}), Error);
  EXPECT_THROW((void)divergence_probe(-1.0, {0.1, 0.2}), Error);
  EXPECT_THROW((void)divergence_probe(-1.0, {}), Error);
  EXPECT_THROW((void)divergence_probe(-1.0, {2.0}), Error);
}
