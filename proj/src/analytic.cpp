#include "dispositions/analytic.hpp"

#include <limits>

namespace dispositions::analytic {

EuComparison argument1_eus(const TransparentPayoffs& pay, double p) {
  validate_probability(p, "p");
  const double u = pay.u_both_defect();
  const double eu_sm = p * pay.u_temptation() + (1.0 - p) * u;
  const double eu_cm = p * pay.u_coop() + (1.0 - p) * u;
  const double margin = p * (pay.u_coop() - pay.u_temptation());
  return {eu_sm, eu_cm, margin > 0.0, margin};
}

EuComparison argument2_eus(const TransparentPayoffs& pay, double p) {
  validate_probability(p, "p");
  const double u = pay.u_both_defect();
  const double eu_cm = p * pay.u_coop() + (1.0 - p) * u;
  const double margin = p * (pay.u_coop() - u);
  return {u, eu_cm, margin > 0.0, margin};
}

double translucent_eu_cm(const TranslucentPayoffs& pay, const TranslucencyParams& t) {
  const double nc = pay.v_noncoop();
  return nc + t.r() * t.p() * (pay.v_coop() - nc) - (1.0 - t.r()) * t.q() * nc;
}

double translucent_eu_sm(const TranslucentPayoffs& pay, const TranslucencyParams& t) {
  const double nc = pay.v_noncoop();
  return nc + t.r() * t.q() * (1.0 - nc);
}

double critical_ratio(const TranslucentPayoffs& pay, double r) {
  validate_probability(r, "r");
  if (r == 0.0) return std::numeric_limits<double>::infinity();
  const double nc = pay.v_noncoop();
  const double gain = pay.v_coop() - nc;
  return (1.0 - nc) / gain + ((1.0 - r) * nc) / (r * gain);
}

EuComparison cm_rational(const TranslucentPayoffs& pay, const TranslucencyParams& t) {
  const double nc = pay.v_noncoop();
  const double r = t.r();
  const double margin =
      r * t.p() * (pay.v_coop() - nc) - t.q() * ((1.0 - r) * nc + r * (1.0 - nc));
  return {translucent_eu_sm(pay, t), translucent_eu_cm(pay, t), margin > 0.0, margin};
}

}  // namespace dispositions::analytic
