#include "dispositions/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

namespace dispositions::montecarlo {

namespace {

struct BlockCounts {
  OutcomeHistogram cm{};
  OutcomeHistogram sm{};
  std::uint64_t cm_partners = 0;
};

BlockCounts run_block(const EncounterConfig& cfg, std::uint64_t seed, std::uint64_t block,
                      std::uint64_t trials) {
  constexpr auto CM = Disposition::ConstrainedMaximizer;
  constexpr auto SM = Disposition::StraightforwardMaximizer;
  RngStream partner_rng(seed, 3 * block);
  RngStream cm_rng(seed, 3 * block + 1);
  RngStream sm_rng(seed, 3 * block + 2);

  BlockCounts counts;
  for (std::uint64_t i = 0; i < trials; ++i) {
    const Disposition partner = partner_rng.bernoulli(cfg.params.r()) ? CM : SM;
    if (partner == CM) ++counts.cm_partners;
    ++counts.cm[static_cast<int>(resolve_encounter(CM, partner, cfg, cm_rng).first.outcome)];
    ++counts.sm[static_cast<int>(resolve_encounter(SM, partner, cfg, sm_rng).first.outcome)];
  }
  return counts;
}

struct Moments {
  double mean;
  double stderr_;
};

// Payoffs take only four values, so mean and unbiased variance follow
// exactly from the class counts.
Moments moments(const OutcomeHistogram& h, std::uint64_t n, const TranslucentPayoffs& pay) {
  const double dn = static_cast<double>(n);
  double mean = 0.0;
  for (int k = 0; k < kOutcomeClassCount; ++k) {
    if (h[k] == 0) continue;
    mean += (static_cast<double>(h[k]) / dn) * payoff_for(static_cast<OutcomeClass>(k), pay);
  }
  if (n < 2) return {mean, 0.0};
  double ss = 0.0;
  for (int k = 0; k < kOutcomeClassCount; ++k) {
    if (h[k] == 0) continue;
    const double d = payoff_for(static_cast<OutcomeClass>(k), pay) - mean;
    ss += static_cast<double>(h[k]) * d * d;
  }
  const double variance = ss / (dn - 1.0);
  return {mean, std::sqrt(variance / dn)};
}

}  // namespace

TrialReport estimate_eus(const EncounterConfig& cfg, std::uint64_t n_trials, std::uint64_t seed,
                         unsigned workers) {
  if (n_trials == 0) throw InvalidTrialCount("n_trials must be at least 1");

  const std::uint64_t n_blocks = (n_trials + kBlockSize - 1) / kBlockSize;
  std::vector<BlockCounts> blocks(n_blocks);

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, n_blocks));

  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    for (std::uint64_t b = next++; b < n_blocks; b = next++) {
      const std::uint64_t begin = b * kBlockSize;
      blocks[b] = run_block(cfg, seed, b, std::min(kBlockSize, n_trials - begin));
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  TrialReport report;
  report.n_trials = n_trials;
  for (const BlockCounts& b : blocks) {
    for (int k = 0; k < kOutcomeClassCount; ++k) {
      report.histogram_cm[k] += b.cm[k];
      report.histogram_sm[k] += b.sm[k];
    }
    report.cm_partners += b.cm_partners;
  }
  const Moments cm = moments(report.histogram_cm, n_trials, cfg.payoffs);
  const Moments sm = moments(report.histogram_sm, n_trials, cfg.payoffs);
  report.mean_payoff_cm = cm.mean;
  report.stderr_cm = cm.stderr_;
  report.mean_payoff_sm = sm.mean;
  report.stderr_sm = sm.stderr_;
  return report;
}

}  // namespace dispositions::montecarlo
