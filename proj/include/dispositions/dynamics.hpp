#ifndef DISPOSITIONS_DYNAMICS_HPP
#define DISPOSITIONS_DYNAMICS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dispositions/core.hpp"

namespace dispositions::dynamics {

class DegenerateFitness : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TrajectoryStep {
  std::uint64_t generation;
  double r;
  double eu_cm;
  double eu_sm;
};

struct Trajectory {
  std::vector<TrajectoryStep> steps;
  // The last step moved r by less than kConvergenceTolerance.
  bool converged = false;
};

inline constexpr double kConvergenceTolerance = 1e-12;
inline constexpr double kThresholdTolerance = 1e-10;

// r' = r eu_cm / (r eu_cm + (1 - r) eu_sm), with both EUs taken at t.r().
double replicator_step(const TranslucentPayoffs& pay, const TranslucencyParams& t);

/// Iterates replicator_step from t0.r() with p and q held fixed. Step 0 is the
/// initial state; one step is appended per generation. Iteration stops after
/// the first step with |r' - r| < kConvergenceTolerance.
Trajectory evolve(const TranslucentPayoffs& pay, const TranslucencyParams& t0,
                  std::uint64_t generations);

// Interior r in (0, 1) where eu_cm(r) = eu_sm(r), if the margin changes sign
// across the interval. Located by bisection to kThresholdTolerance. Below
// the threshold SM is favored and r falls; above it r rises.
std::optional<double> interior_threshold(const TranslucentPayoffs& pay, double p, double q);

}  // namespace dispositions::dynamics

#endif  // DISPOSITIONS_DYNAMICS_HPP
