#include "eulerl2/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "eulerl2/error.hpp"

namespace eulerl2 {
namespace {

GaussRule build_rule() {
  GaussRule rule{};
  constexpr int n = kGaussOrder;
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

}  // namespace

const GaussRule& gauss_legendre16() {
  static const GaussRule rule = build_rule();
  return rule;
}

double composite_gauss(const std::function<double(double)>& f, double a, double b,
                       int panels, const std::vector<double>& breakpoints) {
  if (panels < 1) throw Error(ErrorCode::Precondition, "composite_gauss: panels < 1");
  if (a == b) return 0.0;
  const double sign = b > a ? 1.0 : -1.0;
  const double lo = std::min(a, b);
  const double hi = std::max(a, b);

  std::vector<double> cuts{lo};
  for (double p : breakpoints) {
    if (p > lo && p < hi) cuts.push_back(p);
  }
  cuts.push_back(hi);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  const GaussRule& rule = gauss_legendre16();
  double total = 0.0;
  for (std::size_t seg = 0; seg + 1 < cuts.size(); ++seg) {
    const double h = (cuts[seg + 1] - cuts[seg]) / panels;
    double seg_sum = 0.0;
    for (int p = 0; p < panels; ++p) {
      const double mid = cuts[seg] + (p + 0.5) * h;
      double panel = 0.0;
      for (int i = 0; i < kGaussOrder; ++i) {
        panel += rule.weights[i] * f(mid + 0.5 * h * rule.nodes[i]);
      }
      seg_sum += 0.5 * h * panel;
    }
    total += seg_sum;
  }
  return sign * total;
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureSpec& spec) {
  int panels = std::max(1, spec.panels);
  QuadratureResult result;
  result.value = composite_gauss(f, a, b, panels, spec.breakpoints);
  result.panels = panels;
  while (panels < spec.max_panels) {
    panels = std::min(2 * panels, spec.max_panels);
    const double refined = composite_gauss(f, a, b, panels, spec.breakpoints);
    const double diff = std::abs(refined - result.value);
    result.value = refined;
    result.panels = panels;
    if (diff <= spec.rel_tol * std::abs(refined) || diff == 0.0) {
      result.converged = true;
      return result;
    }
  }
  return result;
}

}  // namespace eulerl2
