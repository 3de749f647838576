#include "dispositions/encounter.hpp"

namespace dispositions {

namespace {

std::pair<EncounterOutcome, EncounterOutcome> symmetric(OutcomeClass c, double payoff) {
  return {EncounterOutcome{c, payoff, payoff}, EncounterOutcome{c, payoff, payoff}};
}

}  // namespace

std::pair<EncounterOutcome, EncounterOutcome> resolve_encounter(Disposition a, Disposition b,
                                                                const EncounterConfig& cfg,
                                                                RngStream& rng) {
  constexpr auto CM = Disposition::ConstrainedMaximizer;
  const double draw = rng.uniform();
  const double nc = cfg.payoffs.v_noncoop();

  if (a == CM && b == CM) {
    if (draw < cfg.params.p()) {
      return symmetric(OutcomeClass::Cooperation, cfg.payoffs.v_coop());
    }
    return symmetric(OutcomeClass::NonCooperation, nc);
  }
  if (a != CM && b != CM) {
    return symmetric(OutcomeClass::NonCooperation, nc);
  }

  if (draw < cfg.params.q()) {
    constexpr double one = TranslucentPayoffs::kDefection;
    constexpr double zero = TranslucentPayoffs::kExploitation;
    const EncounterOutcome exploited{OutcomeClass::Exploitation, zero, one};
    const EncounterOutcome defector{OutcomeClass::Defection, one, zero};
    if (a == CM) return {exploited, defector};
    return {defector, exploited};
  }
  return symmetric(OutcomeClass::NonCooperation, nc);
}

}  // namespace dispositions
