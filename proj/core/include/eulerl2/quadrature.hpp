#pragma once

#include <array>
#include <functional>
#include <vector>

namespace eulerl2 {

inline constexpr int kGaussOrder = 16;

struct GaussRule {
  std::array<double, kGaussOrder> nodes;    // on [-1, 1]
  std::array<double, kGaussOrder> weights;
};

// 16-point Gauss-Legendre rule, computed once by Newton iteration on P_16.
const GaussRule& gauss_legendre16();

// Composite rule: `panels` equal panels on each segment between consecutive
// breakpoints.
struct QuadratureSpec {
  int panels = 256;
  double rel_tol = 1e-10;
  int max_panels = 1 << 16;
  // Interior points where the integrand may lose smoothness. Panels never
  // straddle them.
  std::vector<double> breakpoints;
};

struct QuadratureResult {
  double value = 0.0;
  int panels = 0;
  bool converged = false;
};

double composite_gauss(const std::function<double(double)>& f, double a, double b,
                       int panels, const std::vector<double>& breakpoints = {});

// Doubles the panel count until two successive values agree to rel_tol or
// max_panels is reached.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureSpec& spec = {});

}  // namespace eulerl2
