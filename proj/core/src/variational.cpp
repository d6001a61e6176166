#include "eulerl2/variational.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <numbers>
#include <cmath>
#include <random>
#include <string>
#include <thread>

#include "eulerl2/error.hpp"

namespace eulerl2 {
namespace {

struct Bump {
  double center;
  double width;
  double amplitude;
};

// value, first and second derivative of sum_i a_i b((t - c_i)/w_i)
std::array<double, 3> bump_sum(const std::vector<Bump>& bumps, double t) {
  std::array<double, 3> out{0.0, 0.0, 0.0};
  for (const Bump& b : bumps) {
    const auto j = bump_jet((t - b.center) / b.width);
    out[0] += b.amplitude * j[0];
    out[1] += b.amplitude * j[1] / b.width;
    out[2] += b.amplitude * j[2] / (b.width * b.width);
  }
  return out;
}

// A curve rho(t) E(theta(t)), t in [0, 1], in the chart of a C+ component,
// with log rho = L0 + t (L1 - L0) + bumps and theta = theta0 + bumps.
struct PolarCompetitor {
  double L0 = 0.0;
  double L1 = 0.0;
  double theta0 = 0.0;
  double x_sign = 1.0;  // -1 on the left component
  std::vector<Bump> log_rho_bumps;
  std::vector<Bump> theta_bumps;

  [[nodiscard]] std::array<double, 3> L(double t) const {
    auto b = bump_sum(log_rho_bumps, t);
    b[0] += L0 + t * (L1 - L0);
    b[1] += L1 - L0;
    return b;
  }
  [[nodiscard]] std::array<double, 3> theta(double t) const {
    auto b = bump_sum(theta_bumps, t);
    b[0] += theta0;
    return b;
  }

  // |L'| > |theta'| with a margin, and |L'| bounded away from zero so the
  // speed cannot vanish between grid points.
  [[nodiscard]] bool spacelike_everywhere(int grid) const {
    const double floor = 0.02 * std::abs(L1 - L0);
    for (int i = 0; i <= grid; ++i) {
      const double t = static_cast<double>(i) / grid;
      const double dl = std::abs(L(t)[1]);
      if (!(dl > 1.05 * std::abs(theta(t)[1])) || !(dl > floor)) return false;
    }
    return true;
  }

  [[nodiscard]] ParamCurve curve() const {
    const PolarCompetitor self = *this;
    auto frame = [self](double t, int order) {
      const auto l = self.L(t);
      const auto th = self.theta(t);
      const double rho = std::exp(l[0]);
      const Vec2L e{self.x_sign * std::cosh(th[0]), std::sinh(th[0])};
      const Vec2L e1{self.x_sign * std::sinh(th[0]), std::cosh(th[0])};
      if (order == 0) return rho * e;
      if (order == 1) return rho * (l[1] * e + th[1] * e1);
      return rho * ((l[2] + l[1] * l[1] + th[1] * th[1]) * e + (th[2] + 2.0 * l[1] * th[1]) * e1);
    };
    return {[frame](double t) { return frame(t, 0); }, [frame](double t) { return frame(t, 1); },
            [frame](double t) { return frame(t, 2); }, Interval{0.0, 1.0}};
  }

  [[nodiscard]] std::vector<double> breakpoints() const {
    std::vector<double> out;
    for (const auto* set : {&log_rho_bumps, &theta_bumps}) {
      for (const Bump& b : *set) {
        out.push_back(b.center - b.width);
        out.push_back(b.center + b.width);
      }
    }
    return out;
  }
};

PolarCompetitor random_competitor(std::mt19937_64& rng, double L0, double L1, double theta0,
                                  double x_sign) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> count_l(0, 3);
  std::uniform_int_distribution<int> count_t(1, 3);
  const double span = std::abs(L1 - L0);
  auto draw = [&](double scale) {
    const double w = 0.05 + 0.45 * unit(rng);
    const double c = w + (1.0 - 2.0 * w) * unit(rng);
    const double a = (2.0 * unit(rng) - 1.0) * scale * span * w;
    return Bump{c, w, a};
  };
  PolarCompetitor p;
  p.L0 = L0;
  p.L1 = L1;
  p.theta0 = theta0;
  p.x_sign = x_sign;
  for (int i = count_l(rng); i > 0; --i) p.log_rho_bumps.push_back(draw(0.4));
  for (int i = count_t(rng); i > 0; --i) {
    Bump b = draw(0.5);
    b.amplitude = std::clamp(b.amplitude, -2.0, 2.0);
    p.theta_bumps.push_back(b);
  }
  return p;
}

double competitor_energy(const PolarCompetitor& p, double alpha) {
  QuadratureSpec quad;
  quad.panels = 32;
  quad.rel_tol = 1e-13;
  quad.max_panels = 1 << 12;
  quad.breakpoints = p.breakpoints();
  return energy(p.curve(), alpha, quad);
}

// Runs f(i) for i in [0, n) on the available hardware threads; results are
// stored by index so the output does not depend on scheduling.
std::vector<double> parallel_map(std::size_t n, const std::function<double(std::size_t)>& f) {
  std::vector<double> out(n);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                           static_cast<unsigned>(n)));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          out[i] = f(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

void check_support(const ParamCurve& c, const PerturbationSpec& pert) {
  if (!(pert.bump_width > 0.0) || !std::isfinite(pert.bump_center) ||
      !std::isfinite(pert.amplitude)) {
    throw Error(ErrorCode::InvalidSpec, "perturbation needs a positive width and finite data");
  }
  if (pert.bump_center - pert.bump_width < c.domain.lo ||
      pert.bump_center + pert.bump_width > c.domain.hi) {
    throw Error(ErrorCode::InvalidSpec, "bump support must lie inside the curve domain");
  }
}

}  // namespace

std::array<double, 3> bump_jet(double u) {
  if (!(std::abs(u) < 1.0)) return {0.0, 0.0, 0.0};
  const double q = 1.0 - u * u;
  const double q2 = q * q;
  return {q2 * q2, -8.0 * u * q2 * q, -8.0 * q2 * q + 48.0 * u * u * q2};
}

ParamCurve perturbed_curve(const ParamCurve& c, const PerturbationSpec& pert, double eps) {
  check_support(c, pert);
  const Vec2L v = pert.amplitude * pert.direction;
  const double mu = pert.bump_center;
  const double w = pert.bump_width;
  return {[c, v, mu, w, eps](double s) { return c.eval(s) + (eps * bump_jet((s - mu) / w)[0]) * v; },
          [c, v, mu, w, eps](double s) {
            return c.deriv1(s) + (eps * bump_jet((s - mu) / w)[1] / w) * v;
          },
          [c, v, mu, w, eps](double s) {
            return c.deriv2(s) + (eps * bump_jet((s - mu) / w)[2] / (w * w)) * v;
          },
          c.domain};
}

double first_variation(const ParamCurve& c, double alpha, const PerturbationSpec& pert,
                       double eps, int panels) {
  if (!(eps > 0.0)) throw Error(ErrorCode::Precondition, "first_variation: eps must be positive");
  QuadratureSpec quad;
  quad.panels = panels;
  quad.max_panels = panels;
  quad.breakpoints = {pert.bump_center - pert.bump_width, pert.bump_center + pert.bump_width};
  double values[2];
  for (int k = 0; k < 2; ++k) {
    const ParamCurve p = perturbed_curve(c, pert, k == 0 ? eps : -eps);
    for (double s : sample_parameters(c.domain, 401)) {
      const Vec2L g = p.eval(s);
      if (!clear_of_cone(g) || classify(p.deriv1(s)) != CausalCharacter::Spacelike) {
        throw Error(ErrorCode::InadmissiblePerturbation,
                    "perturbed curve leaves the spacelike, cone-free class at s = " +
                        std::to_string(s));
      }
    }
    try {
      values[k] = energy(p, alpha, quad);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ConeContact && e.code() != ErrorCode::NotSpacelike &&
          e.code() != ErrorCode::NonFinite) {
        throw;
      }
      throw Error(ErrorCode::InadmissiblePerturbation, e.what());
    }
  }
  return (values[0] - values[1]) / (2.0 * eps);
}

LadderReport first_variation_ladder(const ParamCurve& c, double alpha,
                                    const PerturbationSpec& pert, double floor) {
  LadderReport report;
  report.quadratic_decay = true;
  for (double eps : kEpsLadder) {
    const double v = first_variation(c, alpha, pert, eps);
    if (!report.values.empty()) {
      const double prev = std::abs(report.values.back().second);
      if (std::abs(v) > floor && std::abs(v) > prev / 20.0) report.quadratic_decay = false;
    }
    report.values.emplace_back(eps, v);
    report.max_abs = std::max(report.max_abs, std::abs(v));
  }
  return report;
}

std::vector<PerturbationSpec> bump_suite(const Interval& domain, int count, std::uint64_t seed) {
  if (count < 1) throw Error(ErrorCode::Precondition, "bump_suite: count < 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double len = domain.length();
  std::vector<PerturbationSpec> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    PerturbationSpec p;
    p.bump_width = len * (0.1 + 0.3 * unit(rng));
    const double margin = p.bump_width + 1e-3 * len;
    p.bump_center = domain.lo + margin + (len - 2.0 * margin) * unit(rng);
    const double angle = 2.0 * std::numbers::pi * unit(rng);
    p.direction = Vec2L{std::cos(angle), std::sin(angle)};
    p.amplitude = 1.0;
    p.seed = seed + static_cast<std::uint64_t>(i);
    out.push_back(p);
  }
  return out;
}

double segment_energy(double r, double alpha) {
  if (!(r > 1.0) || !std::isfinite(r)) {
    throw Error(ErrorCode::Precondition, "segment_energy: need r > 1");
  }
  if (alpha == -1.0) return std::log(r);
  return std::expm1((alpha + 1.0) * std::log(r)) / (alpha + 1.0);
}

EndpointPair EndpointPair::make(Vec2L p1, Vec2L p2) {
  EndpointPair pair{p1, p2};
  const double det = p1.x() * p2.y() - p2.x() * p1.y();
  const double scale = std::max(1.0, std::hypot(p1.x(), p1.y()) * std::hypot(p2.x(), p2.y()));
  pair.collinear_with_origin = std::abs(det) <= 1e-12 * scale;
  pair.origin_between =
      pair.collinear_with_origin && p1.x() * p2.x() + p1.y() * p2.y() < 0.0;
  return pair;
}

std::string_view to_string(ComparisonOutcome o) {
  switch (o) {
    case ComparisonOutcome::SegmentMaximizes: return "segment-maximizes";
    case ComparisonOutcome::NoMaximizer: return "no-maximizer";
    case ComparisonOutcome::CounterexampleFound: return "counterexample-found";
  }
  return "?";
}

ComparisonReport maximizer_check(const EndpointPair& pair, double alpha, int competitors,
                                 std::uint64_t seed) {
  if (!std::isfinite(alpha)) throw Error(ErrorCode::Precondition, "alpha must be finite");
  if (competitors < 1) throw Error(ErrorCode::Precondition, "need at least one competitor");
  const ConeRegion r1 = region_of(pair.p1);
  const ConeRegion r2 = region_of(pair.p2);
  if (!in_cplus(r1) || !in_cplus(r2) || !pair.collinear_with_origin) {
    throw Error(ErrorCode::InvalidEndpoints,
                "endpoints must both lie in C+ and be collinear with the origin");
  }
  const HyperbolicPolar h1 = to_polar(pair.p1);
  const HyperbolicPolar h2 = to_polar(pair.p2);
  if (h1.rho == h2.rho && r1 == r2) {
    throw Error(ErrorCode::InvalidEndpoints, "endpoints coincide");
  }
  auto sign_of = [](ConeRegion r) { return r == ConeRegion::CPlusRight ? 1.0 : -1.0; };
  auto power = [alpha](double rho) {
    return alpha == -1.0 ? std::log(rho) : std::pow(rho, alpha + 1.0) / (alpha + 1.0);
  };

  ComparisonReport report;
  report.alpha = alpha;
  if (pair.origin_between && alpha <= -1.0) {
    report.outcome = ComparisonOutcome::NoMaximizer;
    report.segment_energy = std::numeric_limits<double>::infinity();
    report.divergence = divergence_probe(alpha, {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6});
    report.verdict = true;
    for (std::size_t i = 1; i < report.divergence.size(); ++i) {
      report.verdict =
          report.verdict && report.divergence[i].second > report.divergence[i - 1].second;
    }
    return report;
  }

  std::mt19937_64 rng(seed);
  // Competitors are drawn sequentially so the set depends only on the seed.
  std::vector<std::vector<PolarCompetitor>> pieces;
  double tail = 0.0;
  auto draw_admissible = [&](double L0, double L1, double theta0, double x_sign) {
    for (;;) {
      PolarCompetitor p = random_competitor(rng, L0, L1, theta0, x_sign);
      if (p.spacelike_everywhere(4000)) return p;
      ++report.rejected;
      if (report.rejected > 1000 * competitors) {
        throw Error(ErrorCode::Precondition, "competitor rejection rate too high");
      }
    }
  };
  if (!pair.origin_between) {
    report.segment_energy = std::abs(power(h2.rho) - power(h1.rho));
    for (int i = 0; i < competitors; ++i) {
      pieces.push_back({draw_admissible(std::log(h1.rho), std::log(h2.rho), h1.phi,
                                        sign_of(r1))});
    }
  } else {
    // Halves run from each endpoint to rho_min on its own ray; the stretch
    // from rho_min to the origin is radial and integrated in closed form.
    const double rho_min = 1e-6 * std::min(h1.rho, h2.rho);
    tail = std::pow(rho_min, alpha + 1.0) / (alpha + 1.0);
    report.segment_energy = power(h1.rho) + power(h2.rho);
    for (int i = 0; i < competitors; ++i) {
      PolarCompetitor a =
          draw_admissible(std::log(h1.rho), std::log(rho_min), h1.phi, sign_of(r1));
      PolarCompetitor b =
          draw_admissible(std::log(h2.rho), std::log(rho_min), h2.phi, sign_of(r2));
      pieces.push_back({a, b});
    }
  }

  report.competitor_energies = parallel_map(pieces.size(), [&](std::size_t i) {
    double e = 0.0;
    for (const auto& piece : pieces[i]) e += competitor_energy(piece, alpha) + tail;
    return e;
  });
  report.max_excess = -std::numeric_limits<double>::infinity();
  for (double e : report.competitor_energies) {
    report.max_excess = std::max(report.max_excess, e - report.segment_energy);
  }
  report.verdict = report.max_excess <= 1e-9;
  report.outcome = report.verdict ? ComparisonOutcome::SegmentMaximizes
                                  : ComparisonOutcome::CounterexampleFound;
  return report;
}

std::vector<std::pair<double, double>> divergence_probe(double alpha,
                                                        const std::vector<double>& eps_list) {
  if (!(alpha <= -1.0)) throw Error(ErrorCode::Precondition, "divergence_probe: need alpha <= -1");
  if (eps_list.empty()) throw Error(ErrorCode::Precondition, "divergence_probe: empty list");
  for (std::size_t i = 0; i < eps_list.size(); ++i) {
    if (!(eps_list[i] > 0.0) || eps_list[i] > 1.0 || (i > 0 && !(eps_list[i] < eps_list[i - 1]))) {
      throw Error(ErrorCode::Precondition,
                  "divergence_probe: eps must be in (0, 1] and strictly decreasing");
    }
  }
  std::vector<std::pair<double, double>> out;
  for (double eps : eps_list) {
    const ParamCurve seg{[](double t) { return Vec2L{std::exp(t), 0.0}; },
                         [](double t) { return Vec2L{std::exp(t), 0.0}; },
                         [](double t) { return Vec2L{std::exp(t), 0.0}; },
                         Interval{std::log(eps), 0.0}};
    out.emplace_back(eps, energy(seg, alpha));
  }
  return out;
}

}  // namespace eulerl2
