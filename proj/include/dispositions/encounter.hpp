#ifndef DISPOSITIONS_ENCOUNTER_HPP
#define DISPOSITIONS_ENCOUNTER_HPP

#include <utility>

#include "dispositions/core.hpp"
#include "dispositions/rng.hpp"

namespace dispositions {

struct EncounterConfig {
  TranslucentPayoffs payoffs;
  TranslucencyParams params;
};

/// Plays one pairwise interaction and returns the records of (a, b).
///
///  - SM vs SM: both act individually.
///  - CM vs CM: with probability p they recognize each other and cooperate,
///    otherwise both act individually. A CM never exploits another CM.
///  - CM vs SM: with probability q the CM misreads the SM while being read
///    correctly, so the SM defects (payoff 1) on the cooperating CM
///    (payoff 0). Every other sub-case is mutual non-cooperation.
///
/// Exactly one uniform is drawn from `rng` per call, whichever pairing is
/// played, so paired experiments stay aligned draw for draw.
std::pair<EncounterOutcome, EncounterOutcome> resolve_encounter(Disposition a, Disposition b,
                                                                const EncounterConfig& cfg,
                                                                RngStream& rng);

}  // namespace dispositions

#endif  // DISPOSITIONS_ENCOUNTER_HPP
