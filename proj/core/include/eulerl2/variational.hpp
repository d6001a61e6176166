#pragma once

// Direct variational checks: centered first variations of E_alpha along
// compactly supported bumps, and the energy comparison between the straight
// segment and random spacelike competitors for endpoints collinear with the
// origin.

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "eulerl2/curve.hpp"

namespace eulerl2 {

// V(s) = amplitude * b((s - bump_center) / bump_width) * direction with the
// C^3 bump b(u) = (1 - u^2)^4 on |u| < 1.
struct PerturbationSpec {
  double bump_center = 0.0;
  double bump_width = 0.5;
  double amplitude = 1.0;
  Vec2L direction{0.0, 1.0};
  std::uint64_t seed = 0;
};

// b(u) and its first two derivatives.
[[nodiscard]] std::array<double, 3> bump_jet(double u);

// c + eps V. Throws Error(InvalidSpec) if the bump support leaves the domain.
[[nodiscard]] ParamCurve perturbed_curve(const ParamCurve& c, const PerturbationSpec& pert,
                                         double eps);

// (E[c + eps V] - E[c - eps V]) / (2 eps) on a fixed composite rule with the
// bump edges as breakpoints, so both energies share their nodes. Throws
// Error(InadmissiblePerturbation) when either perturbed curve is not
// spacelike or touches the cone.
[[nodiscard]] double first_variation(const ParamCurve& c, double alpha,
                                     const PerturbationSpec& pert, double eps, int panels = 512);

inline constexpr std::array<double, 3> kEpsLadder{1e-3, 1e-4, 1e-5};

struct LadderReport {
  std::vector<std::pair<double, double>> values;  // (eps, first variation)
  double max_abs = 0.0;
  // Each step down the ladder shrinks |value| by at least 20x, or the value
  // is already below `floor`.
  bool quadratic_decay = false;
};

[[nodiscard]] LadderReport first_variation_ladder(const ParamCurve& c, double alpha,
                                                  const PerturbationSpec& pert,
                                                  double floor = 1e-9);

// `count` bumps with supports inside the domain, reproducible from `seed`.
[[nodiscard]] std::vector<PerturbationSpec> bump_suite(const Interval& domain, int count,
                                                       std::uint64_t seed);

// E_alpha of the segment from (1,0) to (r,0): (r^(alpha+1) - 1)/(alpha+1), or
// log r at alpha = -1. Throws Error(Precondition) unless r > 1.
[[nodiscard]] double segment_energy(double r, double alpha);

struct EndpointPair {
  Vec2L p1;
  Vec2L p2;
  bool collinear_with_origin = false;
  bool origin_between = false;

  [[nodiscard]] static EndpointPair make(Vec2L p1, Vec2L p2);
};

enum class ComparisonOutcome { SegmentMaximizes, NoMaximizer, CounterexampleFound };
std::string_view to_string(ComparisonOutcome o);

struct ComparisonReport {
  double alpha = 0.0;
  double segment_energy = 0.0;
  std::vector<double> competitor_energies;
  int rejected = 0;
  // max over competitors of E[competitor] - E[segment].
  double max_excess = 0.0;
  ComparisonOutcome outcome = ComparisonOutcome::SegmentMaximizes;
  bool verdict = false;
  // Filled when the segment energy diverges (alpha <= -1, origin between).
  std::vector<std::pair<double, double>> divergence;
};

// Random spacelike competitors built in the hyperbolic polar chart of C+:
// log rho interpolated linearly between the endpoints plus at most three
// bumps, and theta equal to the common angle plus at most three bumps,
// rejected unless |(log rho)'| > |theta'| everywhere. When the origin lies
// between the endpoints each competitor is two such halves joined through
// the origin along the endpoint ray. Throws Error(InvalidEndpoints) unless
// both points are in C+ and collinear with the origin.
[[nodiscard]] ComparisonReport maximizer_check(const EndpointPair& pair, double alpha,
                                               int competitors, std::uint64_t seed);

// E_alpha of the segment from (eps, 0) to (1, 0) for each eps, using the
// parametrization (e^t, 0). Requires alpha <= -1 and a strictly decreasing
// positive list.
[[nodiscard]] std::vector<std::pair<double, double>> divergence_probe(
    double alpha, const std::vector<double>& eps_list);

}  // namespace eulerl2
