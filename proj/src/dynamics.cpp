#include "dispositions/dynamics.hpp"

#include <cmath>

#include "dispositions/analytic.hpp"

namespace dispositions::dynamics {

double replicator_step(const TranslucentPayoffs& pay, const TranslucencyParams& t) {
  const double r = t.r();
  const double cm_share = r * analytic::translucent_eu_cm(pay, t);
  const double denom = cm_share + (1.0 - r) * analytic::translucent_eu_sm(pay, t);
  if (!(denom > 0.0)) {
    throw DegenerateFitness("mean fitness is zero at r = " + std::to_string(r));
  }
  return cm_share / denom;
}

Trajectory evolve(const TranslucentPayoffs& pay, const TranslucencyParams& t0,
                  std::uint64_t generations) {
  if (generations == 0) {
    throw ValidationError("generations must be at least 1");
  }
  Trajectory traj;
  TranslucencyParams t = t0;
  auto record = [&](std::uint64_t g) {
    traj.steps.push_back(
        {g, t.r(), analytic::translucent_eu_cm(pay, t), analytic::translucent_eu_sm(pay, t)});
  };
  record(0);
  for (std::uint64_t g = 1; g <= generations; ++g) {
    const double before = t.r();
    t = t.with_r(replicator_step(pay, t));
    record(g);
    if (std::abs(t.r() - before) < kConvergenceTolerance) {
      traj.converged = true;
      break;
    }
  }
  return traj;
}

std::optional<double> interior_threshold(const TranslucentPayoffs& pay, double p, double q) {
  auto margin = [&](double r) {
    return analytic::cm_rational(pay, TranslucencyParams::make(p, q, r)).margin;
  };
  double lo = 0.0;
  double hi = 1.0;
  const double m_lo = margin(lo);
  const double m_hi = margin(hi);
  if (!((m_lo < 0.0 && m_hi > 0.0) || (m_lo > 0.0 && m_hi < 0.0))) return std::nullopt;

  while (hi - lo > kThresholdTolerance) {
    const double mid = 0.5 * (lo + hi);
    const double m = margin(mid);
    if (m == 0.0) return mid;
    if ((m < 0.0) == (m_lo < 0.0)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace dispositions::dynamics
