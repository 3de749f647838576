#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <utility>
#include <vector>

#include "doctest.h"
#include "dispositions/analytic.hpp"
#include "test_support.hpp"

using namespace dispositions;
using namespace dispositions::analytic;
using dispositions::testing::random_translucent;
using dispositions::testing::random_transparent;
using dispositions::testing::uniform;

namespace {

constexpr double kTol = 1e-12;

using Lottery = std::vector<std::pair<double, double>>;  // (probability, payoff)

double expectation(const Lottery& l) {
  double e = 0.0;
  for (auto [prob, payoff] : l) e += prob * payoff;
  return e;
}

// Outcome tree of one encounter against a random population member, built
// from the encounter rules rather than from the closed forms.
Lottery translucent_tree(bool focal_cm, const TranslucentPayoffs& pay, const TranslucencyParams& t) {
  const double nc = pay.v_noncoop(), c = pay.v_coop(), p = t.p(), q = t.q(), r = t.r();
  if (focal_cm) {
    return {{r * p, c}, {r * (1 - p), nc}, {(1 - r) * q, 0.0}, {(1 - r) * (1 - q), nc}};
  }
  return {{r * q, 1.0}, {r * (1 - q), nc}, {1 - r, nc}};
}

}  // namespace

TEST_CASE("argument1_eus examples") {
  const auto pay = validate_transparent(0.2, 0.6, 0.9);
  const auto res = argument1_eus(pay, 0.5);
  // SM free-rides on CMs with probability p; CM cooperates with them.
  const double sm_oracle = expectation({{0.5, 0.9}, {0.5, 0.2}});
  const double cm_oracle = expectation({{0.5, 0.6}, {0.5, 0.2}});
  CHECK(sm_oracle == doctest::Approx(0.55).epsilon(kTol));
  CHECK(cm_oracle == doctest::Approx(0.40).epsilon(kTol));
  CHECK(std::abs(res.eu_sm - sm_oracle) < kTol);
  CHECK(std::abs(res.eu_cm - cm_oracle) < kTol);
  CHECK_FALSE(res.cm_is_rational);

  const auto zero = argument1_eus(pay, 0.0);
  CHECK(zero.eu_sm == 0.2);
  CHECK(zero.eu_cm == 0.2);
  CHECK(zero.margin == 0.0);

  const auto one = argument1_eus(validate_transparent(0.0, 0.5, 1.0), 1.0);
  CHECK(one.eu_sm == 1.0);
  CHECK(one.eu_cm == 0.5);

  CHECK_THROWS_AS(argument1_eus(pay, 1.5), ProbabilityOutOfRange);
}

TEST_CASE("argument2_eus examples") {
  const auto pay = validate_transparent(0.2, 0.6, 0.9);
  const auto res = argument2_eus(pay, 0.5);
  const double cm_oracle = expectation({{0.5, 0.6}, {0.5, 0.2}});
  CHECK(std::abs(res.eu_sm - 0.20) < kTol);
  CHECK(std::abs(res.eu_cm - cm_oracle) < kTol);
  CHECK(std::abs(res.eu_cm - 0.40) < kTol);
  CHECK(res.cm_is_rational);

  const auto zero = argument2_eus(pay, 0.0);
  CHECK(zero.margin == 0.0);
  CHECK_FALSE(zero.cm_is_rational);

  const auto one = argument2_eus(validate_transparent(0.0, 0.5, 0.9), 1.0);
  CHECK(one.eu_cm == 0.5);
  CHECK(one.eu_sm == 0.0);
}

TEST_CASE("translucent EUs match the outcome-tree oracle on the reference point") {
  const auto pay = validate_translucent(0.5, 0.75);
  const auto t = TranslucencyParams::make(0.8, 0.1, 0.5);
  const double cm_oracle = expectation(translucent_tree(true, pay, t));
  const double sm_oracle = expectation(translucent_tree(false, pay, t));
  CHECK(std::abs(cm_oracle - 0.575) < kTol);
  CHECK(std::abs(sm_oracle - 0.525) < kTol);
  CHECK(std::abs(translucent_eu_cm(pay, t) - 0.575) < kTol);
  CHECK(std::abs(translucent_eu_sm(pay, t) - 0.525) < kTol);
}

TEST_CASE("translucent EU limiting cases") {
  std::mt19937_64 g(11);
  for (int i = 0; i < 50; ++i) {
    const auto pay = random_translucent(g);
    const double r = uniform(g);
    CHECK(translucent_eu_cm(pay, TranslucencyParams::make(0, 0, r)) == pay.v_noncoop());
    CHECK(translucent_eu_sm(pay, TranslucencyParams::make(uniform(g), 0, r)) == pay.v_noncoop());
    CHECK(std::abs(translucent_eu_cm(pay, TranslucencyParams::make(1, uniform(g), 1)) - pay.v_coop()) < kTol);
    CHECK(std::abs(translucent_eu_sm(pay, TranslucencyParams::make(uniform(g), 1, 1)) - 1.0) < kTol);
  }
}

TEST_CASE("property: closed forms equal the outcome-tree oracle") {
  std::mt19937_64 g(12);
  for (int i = 0; i < 2000; ++i) {
    const auto pay = random_translucent(g);
    const auto t = TranslucencyParams::make(uniform(g), uniform(g), uniform(g));
    CHECK(std::abs(translucent_eu_cm(pay, t) - expectation(translucent_tree(true, pay, t))) < kTol);
    CHECK(std::abs(translucent_eu_sm(pay, t) - expectation(translucent_tree(false, pay, t))) < kTol);
    const auto cmp = cm_rational(pay, t);
    CHECK(std::abs(cmp.margin - (cmp.eu_cm - cmp.eu_sm)) < kTol);
    CHECK(cmp.cm_is_rational == (cmp.margin > 0.0));
  }
}

TEST_CASE("critical_ratio examples") {
  const auto pay = validate_translucent(0.5, 0.75);
  CHECK(std::abs(critical_ratio(pay, 0.5) - 4.0) < kTol);
  CHECK(std::abs(critical_ratio(pay, 1.0) - 2.0) < kTol);
  CHECK(critical_ratio(pay, 0.0) == std::numeric_limits<double>::infinity());
}

TEST_CASE("cm_rational examples") {
  const auto pay = validate_translucent(0.5, 0.75);
  const auto a = cm_rational(pay, TranslucencyParams::make(0.8, 0.1, 0.5));
  CHECK(a.cm_is_rational);
  CHECK(std::abs(a.margin - 0.05) < kTol);
  CHECK(0.8 / 0.1 > critical_ratio(pay, 0.5));

  // p/q sits exactly on the critical ratio.
  const auto tie = cm_rational(pay, TranslucencyParams::make(0.4, 0.1, 0.5));
  CHECK(std::abs(tie.eu_cm - 0.525) < kTol);
  CHECK(std::abs(tie.eu_sm - 0.525) < kTol);
  CHECK(tie.margin == 0.0);
  CHECK_FALSE(tie.cm_is_rational);

  const auto none = cm_rational(pay, TranslucencyParams::make(0, 0, 0.3));
  CHECK(none.margin == 0.0);
  CHECK_FALSE(none.cm_is_rational);
}

TEST_CASE("property: EU sign agrees with the ratio criterion") {
  std::mt19937_64 g(13);
  int checked = 0;
  while (checked < 5000) {
    const auto pay = random_translucent(g);
    const double p = uniform(g), q = uniform(g, 1e-6, 1.0), r = uniform(g, 1e-6, 1.0);
    const auto cmp = cm_rational(pay, TranslucencyParams::make(p, q, r));
    const double gap = p / q - critical_ratio(pay, r);
    if (std::abs(cmp.margin) < 1e-9 || std::abs(gap) < 1e-9) continue;
    CHECK((cmp.margin > 0) == (gap > 0));
    ++checked;
  }
}

TEST_CASE("q = 0 uses the direct comparison") {
  std::mt19937_64 g(14);
  for (int i = 0; i < 100; ++i) {
    const auto pay = random_translucent(g);
    const double r = uniform(g, 1e-3, 1.0);
    const double p = uniform(g, 1e-3, 1.0);
    CHECK(cm_rational(pay, TranslucencyParams::make(p, 0.0, r)).cm_is_rational);
    CHECK_FALSE(cm_rational(pay, TranslucencyParams::make(0.0, 0.0, r)).cm_is_rational);
  }
}

TEST_CASE("property: transparency limit favors CM whenever r > 0") {
  std::mt19937_64 g(15);
  for (int i = 0; i < 1000; ++i) {
    const auto pay = random_translucent(g);
    const double r = uniform(g, 1e-9, 1.0);
    CHECK(cm_rational(pay, TranslucencyParams::make(1.0, 0.0, r)).cm_is_rational);
  }
}

TEST_CASE("property: critical_ratio strictly decreases in r") {
  std::mt19937_64 g(16);
  for (int i = 0; i < 200; ++i) {
    const auto pay = random_translucent(g);
    double prev = critical_ratio(pay, 0.0);
    for (int k = 1; k <= 100; ++k) {
      const double cur = critical_ratio(pay, k / 100.0);
      CHECK(cur < prev);
      prev = cur;
    }
  }
}

TEST_CASE("property: argument 1 favors SM, argument 2 favors CM") {
  std::mt19937_64 g(17);
  for (int i = 0; i < 2000; ++i) {
    const auto pay = random_transparent(g);
    const double p = 1.0 - uniform(g);  // (0, 1]
    const auto a1 = argument1_eus(pay, p);
    const auto a2 = argument2_eus(pay, p);
    CHECK(a1.eu_sm > a1.eu_cm);
    CHECK_FALSE(a1.cm_is_rational);
    CHECK(a2.eu_cm > a2.eu_sm);
    CHECK(a2.cm_is_rational);
  }
}

TEST_CASE("analytic operations are pure") {
  std::mt19937_64 g(18);
  for (int i = 0; i < 100; ++i) {
    const auto pay = random_translucent(g);
    const auto t = TranslucencyParams::make(uniform(g), uniform(g), uniform(g));
    const auto a = cm_rational(pay, t);
    const auto b = cm_rational(pay, t);
    CHECK(std::bit_cast<std::uint64_t>(a.margin) == std::bit_cast<std::uint64_t>(b.margin));
    CHECK(std::bit_cast<std::uint64_t>(a.eu_cm) == std::bit_cast<std::uint64_t>(b.eu_cm));
    CHECK(std::bit_cast<std::uint64_t>(critical_ratio(pay, t.r())) ==
          std::bit_cast<std::uint64_t>(critical_ratio(pay, t.r())));
  }
}
