#ifndef DISPOSITIONS_CORE_HPP
#define DISPOSITIONS_CORE_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace dispositions {

// Errors raised when a value breaks a domain invariant. Everything a caller
// can get wrong derives from ValidationError; the CLI maps it to exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class OrderingViolation : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NonFinite : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class ProbabilityOutOfRange : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

enum class Disposition {
  StraightforwardMaximizer,
  ConstrainedMaximizer,
};

std::string_view to_string(Disposition d);

// Three-level payoffs of the fully transparent/opaque arguments:
// both act individually < both act jointly < free-ride on a cooperator.
class TransparentPayoffs {
 public:
  double u_both_defect() const { return u_both_defect_; }
  double u_coop() const { return u_coop_; }
  double u_temptation() const { return u_temptation_; }

  friend TransparentPayoffs validate_transparent(double u, double u1, double u2);
  friend bool operator==(const TransparentPayoffs&, const TransparentPayoffs&) = default;

 private:
  TransparentPayoffs(double u, double u1, double u2)
      : u_both_defect_(u), u_coop_(u1), u_temptation_(u2) {}

  double u_both_defect_;
  double u_coop_;
  double u_temptation_;
};

// Normalized payoffs for the translucent case. Being exploited is worth 0 and
// defecting on a cooperator is worth 1, so only the two middle values vary.
class TranslucentPayoffs {
 public:
  static constexpr double kExploitation = 0.0;
  static constexpr double kDefection = 1.0;

  double v_noncoop() const { return v_noncoop_; }
  double v_coop() const { return v_coop_; }

  friend TranslucentPayoffs validate_translucent(double v_nc, double v_c);
  friend bool operator==(const TranslucentPayoffs&, const TranslucentPayoffs&) = default;

 private:
  TranslucentPayoffs(double v_nc, double v_c) : v_noncoop_(v_nc), v_coop_(v_c) {}

  double v_noncoop_;
  double v_coop_;
};

/// Recognition probabilities and population mix.
///   p: two CMs recognize each other and cooperate.
///   q: a CM fails to recognize an SM but is herself recognized (exploited).
///   r: a randomly met population member is a CM.
class TranslucencyParams {
 public:
  static TranslucencyParams make(double p, double q, double r);

  double p() const { return p_; }
  double q() const { return q_; }
  double r() const { return r_; }

  // Same p and q, different population share.
  TranslucencyParams with_r(double r) const { return make(p_, q_, r); }

  friend bool operator==(const TranslucencyParams&, const TranslucencyParams&) = default;

 private:
  TranslucencyParams(double p, double q, double r) : p_(p), q_(q), r_(r) {}

  double p_;
  double q_;
  double r_;
};

// Throws NonFinite or ProbabilityOutOfRange; `name` goes into the message.
double validate_probability(double value, std::string_view name);

TransparentPayoffs validate_transparent(double u, double u1, double u2);
TranslucentPayoffs validate_translucent(double v_nc, double v_c);

enum class OutcomeClass {
  NonCooperation = 0,
  Cooperation,
  Defection,
  Exploitation,
};

inline constexpr int kOutcomeClassCount = 4;

std::string_view to_string(OutcomeClass c);

// Payoff an agent receives when its own record carries class `c`.
double payoff_for(OutcomeClass c, const TranslucentPayoffs& pay);

// One agent's view of an encounter.
struct EncounterOutcome {
  OutcomeClass outcome;
  double payoff_self;
  double payoff_other;

  friend bool operator==(const EncounterOutcome&, const EncounterOutcome&) = default;
};

}  // namespace dispositions

#endif  // DISPOSITIONS_CORE_HPP
