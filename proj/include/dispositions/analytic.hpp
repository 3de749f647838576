#ifndef DISPOSITIONS_ANALYTIC_HPP
#define DISPOSITIONS_ANALYTIC_HPP

#include "dispositions/core.hpp"

namespace dispositions::analytic {

struct EuComparison {
  double eu_sm;
  double eu_cm;
  bool cm_is_rational;  // margin > 0, ties are not rational
  double margin;        // eu_cm - eu_sm
};

// Dominance argument for straightforward maximization. p is the probability
// that the others are CMs, and the comparison assumes the CM cannot be told
// apart from an SM (opacity), so the SM gets to free-ride on the CMs it meets.
// Under that assumption SM always comes out ahead for p > 0.
EuComparison argument1_eus(const TransparentPayoffs& pay, double p);

// The same choice once dispositions are visible (transparency): an SM is met
// with individual play and gets u, a CM gets u' against fellow CMs.
EuComparison argument2_eus(const TransparentPayoffs& pay, double p);

// u' + r p (u'' - u') - (1 - r) q u'
double translucent_eu_cm(const TranslucentPayoffs& pay, const TranslucencyParams& t);

// u' + r q (1 - u')
double translucent_eu_sm(const TranslucentPayoffs& pay, const TranslucencyParams& t);

/// Threshold that p/q has to exceed for the CM disposition to pay:
///
///   (1 - u') / (u'' - u') + (1 - r) u' / (r (u'' - u'))
///
/// Returns +infinity at r = 0.
double critical_ratio(const TranslucentPayoffs& pay, double r);

/// Both translucent EUs and their strict comparison.
///
/// The margin is evaluated in the factored form
/// r p (u'' - u') - q ((1 - r) u' + r (1 - u')), which drops the shared u'
/// term before subtracting. Parameter sets that sit exactly on the
/// critical ratio therefore produce a margin of exactly zero instead of
/// rounding noise on either side.
EuComparison cm_rational(const TranslucentPayoffs& pay, const TranslucencyParams& t);

}  // namespace dispositions::analytic

#endif  // DISPOSITIONS_ANALYTIC_HPP
