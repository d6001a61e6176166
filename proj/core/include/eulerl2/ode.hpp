#pragma once

// Fixed-step RK4 for the polar stationarity equations
//   K1: rho'' = ((2 - alpha) rho'^2 + (alpha - 1) rho^2) / rho
//   K2: rho'' = ((alpha + 2) rho'^2 - (1 + alpha) rho^2) / rho
// and the reciprocal symmetry rho -> 1/rho behind the inversion duality.

#include <optional>
#include <vector>

#include "eulerl2/curve.hpp"
#include "eulerl2/families.hpp"

namespace eulerl2 {

struct OdeProblem {
  PolarOde kind = PolarOde::K1;
  double alpha = 2.0;
  double rho0 = 1.0;
  double rho1_0 = 0.0;
  double s0 = 0.0;
  double s_end = 1.0;
  double step = 1e-3;
};

struct TrajectoryNode {
  double s = 0.0;
  double rho = 0.0;
  double rho1 = 0.0;
};

struct Trajectory {
  PolarOde kind = PolarOde::K1;
  double alpha = 0.0;
  double step = 0.0;
  std::vector<TrajectoryNode> nodes;
  // Observed order from the h, h/2, h/4 end values, when it was measurable.
  std::optional<double> order_estimate;
};

struct IntegrateOptions {
  double floor = 1e-8;
  double cap = 1e12;
  // Repeat at h/2 and h/4 and reject steps whose nodal values neither agree
  // to 1e-9 (relative) nor converge at fourth order.
  bool verify_order = true;
};

[[nodiscard]] double polar_ode_acceleration(PolarOde kind, double alpha, double rho, double rho1);

// Throws Error(Precondition) for rho0 <= floor or a nonpositive step,
// Error(BlowUp) when rho leaves [floor, cap] and Error(StepTooLarge) when
// the order check fails.
[[nodiscard]] Trajectory integrate(const OdeProblem& problem, const IntegrateOptions& opts = {});

// log2 of the ratio of successive sup-norm differences at h, h/2, h/4.
[[nodiscard]] double empirical_order(const OdeProblem& problem);

struct ShootReport {
  double max_abs_error = 0.0;
  double max_rel_error = 0.0;
  std::size_t nodes = 0;
  Trajectory trajectory;
};

// Integrates from the closed-form initial data at range.lo and compares every
// node against the closed form. K1 for SpacelikeCMinus and TimelikeCPlus, K2
// otherwise.
[[nodiscard]] ShootReport shoot_match(const FamilySpec& spec, Interval range, double step = 1e-3);

enum class RegionSign { CMinus, CPlus };

// Exponent reached by inverting an alpha-stationary spacelike curve:
// 2 - alpha in C-, -2 - alpha in C+.
[[nodiscard]] double inversion_alpha_map(double alpha, RegionSign region);
// The same map indexed by the polar equation, which also covers timelike
// curves: 2 - alpha for K1, -2 - alpha for K2.
[[nodiscard]] double inversion_alpha_map(double alpha, PolarOde kind);
// Equation governing a curve of the given causal character in a region.
[[nodiscard]] PolarOde polar_ode_for(CausalCharacter causal, ConeRegion region);

// Nodes mapped by rho -> 1/rho, alpha mapped by the equation kind.
[[nodiscard]] Trajectory reciprocal_trajectory(const Trajectory& t);

// Max relative residual of the nodes in their own equation, with rho''
// taken from the original trajectory through the chain rule when the
// trajectory is a reciprocal one.
[[nodiscard]] double reciprocal_residual(const Trajectory& original);

}  // namespace eulerl2
