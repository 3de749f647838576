#ifndef DISPOSITIONS_MONTECARLO_HPP
#define DISPOSITIONS_MONTECARLO_HPP

#include <array>
#include <cstdint>

#include "dispositions/core.hpp"
#include "dispositions/encounter.hpp"

namespace dispositions::montecarlo {

class InvalidTrialCount : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Counts indexed by OutcomeClass.
using OutcomeHistogram = std::array<std::uint64_t, kOutcomeClassCount>;

struct TrialReport {
  std::uint64_t n_trials = 0;
  double mean_payoff_cm = 0.0;
  double mean_payoff_sm = 0.0;
  double stderr_cm = 0.0;
  double stderr_sm = 0.0;
  // Outcome of the focal agent's record, per focal disposition. Each sums to
  // n_trials, so together they cover all 2 * n_trials encounters.
  OutcomeHistogram histogram_cm{};
  OutcomeHistogram histogram_sm{};
  // Partners drawn as CM.
  std::uint64_t cm_partners = 0;

  friend bool operator==(const TrialReport&, const TrialReport&) = default;
};

// Trials per block. Each block owns three streams derived from
// (seed, 3 * block + k): partner draws, CM-focal and SM-focal encounters.
inline constexpr std::uint64_t kBlockSize = 1u << 16;

/// Focal-agent estimate of both translucent expected utilities. Every trial
/// draws one partner (CM with probability r) and plays it once with a CM and
/// once with an SM in the focal seat.
///
/// Blocks are spread over `workers` threads (0 = hardware concurrency). Only
/// integer counts are merged and they are summed in block order, so the
/// report is bit-identical for every worker count.
TrialReport estimate_eus(const EncounterConfig& cfg, std::uint64_t n_trials, std::uint64_t seed,
                         unsigned workers = 0);

}  // namespace dispositions::montecarlo

#endif  // DISPOSITIONS_MONTECARLO_HPP
