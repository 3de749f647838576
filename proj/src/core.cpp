#include "dispositions/core.hpp"

#include <cmath>
#include <sstream>

namespace dispositions {

namespace {

std::string format_values(std::initializer_list<double> values) {
  std::ostringstream os;
  os.precision(17);
  os << '(';
  bool first = true;
  for (double v : values) {
    if (!first) os << ", ";
    os << v;
    first = false;
  }
  os << ')';
  return os.str();
}

}  // namespace

std::string_view to_string(Disposition d) {
  switch (d) {
    case Disposition::StraightforwardMaximizer: return "SM";
    case Disposition::ConstrainedMaximizer: return "CM";
  }
  return "?";
}

std::string_view to_string(OutcomeClass c) {
  switch (c) {
    case OutcomeClass::NonCooperation: return "NonCooperation";
    case OutcomeClass::Cooperation: return "Cooperation";
    case OutcomeClass::Defection: return "Defection";
    case OutcomeClass::Exploitation: return "Exploitation";
  }
  return "?";
}

double validate_probability(double value, std::string_view name) {
  if (!std::isfinite(value)) {
    throw NonFinite(std::string(name) + " is not finite");
  }
  if (value < 0.0 || value > 1.0) {
    std::ostringstream os;
    os.precision(17);
    os << name << " = " << value << " is outside [0, 1]";
    throw ProbabilityOutOfRange(os.str());
  }
  return value;
}

TransparentPayoffs validate_transparent(double u, double u1, double u2) {
  if (!std::isfinite(u) || !std::isfinite(u1) || !std::isfinite(u2)) {
    throw NonFinite("transparent payoffs must be finite, got " + format_values({u, u1, u2}));
  }
  if (!(u < u1 && u1 < u2)) {
    throw OrderingViolation("transparent payoffs must satisfy u < u' < u'', got " +
                            format_values({u, u1, u2}));
  }
  return TransparentPayoffs(u, u1, u2);
}

TranslucentPayoffs validate_translucent(double v_nc, double v_c) {
  // NaN fails every comparison below, infinities fail the bounds.
  if (!(0.0 < v_nc && v_nc < v_c && v_c < 1.0)) {
    throw OrderingViolation("translucent payoffs must satisfy 0 < v_noncoop < v_coop < 1, got " +
                            format_values({v_nc, v_c}));
  }
  return TranslucentPayoffs(v_nc, v_c);
}

TranslucencyParams TranslucencyParams::make(double p, double q, double r) {
  return TranslucencyParams(validate_probability(p, "p"), validate_probability(q, "q"),
                            validate_probability(r, "r"));
}

double payoff_for(OutcomeClass c, const TranslucentPayoffs& pay) {
  switch (c) {
    case OutcomeClass::NonCooperation: return pay.v_noncoop();
    case OutcomeClass::Cooperation: return pay.v_coop();
    case OutcomeClass::Defection: return TranslucentPayoffs::kDefection;
    case OutcomeClass::Exploitation: return TranslucentPayoffs::kExploitation;
  }
  return 0.0;
}

}  // namespace dispositions
