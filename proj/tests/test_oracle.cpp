#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "velmark/binomial.hpp"

using namespace velmark;

TEST_CASE("path enumeration basics") {
  const GridSpec g = make_grid(1.0, 0.5, -10, 10);
  const JointDensity init = point_initial(g, 0, 1.0);
  const RateSpec rates = RateSpec::constant_step(0.006, 0.006);

  SUBCASE("single step from a point") {
    const auto dist = oracle::enumerate_distribution(oracle::from_joint(init, rates, 1));
    CHECK(dist.at({1, +1}) == doctest::Approx(0.994).epsilon(1e-15));
    CHECK(dist.at({1, -1}) == doctest::Approx(0.006).epsilon(1e-15));
    CHECK(dist.size() == 2);
  }

  SUBCASE("zero steps returns the initial data") {
    const auto dist = oracle::enumerate_distribution(oracle::from_joint(init, rates, 0));
    CHECK(dist.size() == 1);
    CHECK(dist.at({0, +1}) == 1.0);
  }

  SUBCASE("enumerated mass is exact") {
    const auto dist = oracle::enumerate_distribution(oracle::from_joint(init, rates, 9));
    CHECK(oracle::total_mass(dist) == doctest::Approx(1.0).epsilon(1e-14));
  }

  SUBCASE("state-space guard") {
    MultiDensity q = zero_multi(make_grid(1.0, 1.0, -20, 20), 2);
    q.at(0, 0) = 1.0;
    std::vector<double> e(25, 0.2);
    const RateMatrix omega = RateMatrix::constant(2, RateForm::StepProbability, e);
    CHECK_THROWS_AS(
        oracle::enumerate_distribution(oracle::from_multi(q, omega, 11)),
        std::length_error);
  }
}

TEST_CASE("twelve-step recursion equals the enumeration") {
  const GridSpec g = make_grid(1.0, 0.5, -15, 15);
  const JointDensity init = point_initial(g, 0, 0.7);
  const RateSpec rates = RateSpec::constant_step(0.35, 0.2);
  JointDensity q = init;
  for (int k = 0; k < 12; ++k) q = step_binomial(q, rates, k * g.dt);
  const auto ref = oracle::enumerate_distribution(oracle::from_joint(init, rates, 12));
  CHECK(oracle::max_abs_difference(ref, q) <= 1e-12);
}

TEST_CASE("stepper agrees with the enumeration on random instances") {
  std::mt19937 gen(123456u);
  std::uniform_real_distribution<double> prob(0.0, 1.0);
  std::uniform_real_distribution<double> mass(0.05, 1.0);

  for (int trial = 0; trial < 12; ++trial) {
    const int n = 8;
    const GridSpec g = make_grid(1.0, 0.5, -12, 12);
    JointDensity init = zero_density(g);
    double total = 0.0;
    for (int m = -2; m <= 2; ++m) {
      init.plus(m) = mass(gen);
      init.minus(m) = mass(gen);
      total += init.plus(m) + init.minus(m);
    }
    for (double& v : init.q_plus) v /= total;
    for (double& v : init.q_minus) v /= total;

    const RateSpec rates = RateSpec::constant_step(prob(gen), prob(gen));
    JointDensity q = init;
    for (int k = 0; k < n; ++k) q = step_binomial(q, rates, k * g.dt);
    const auto ref = oracle::enumerate_distribution(oracle::from_joint(init, rates, n));
    CHECK(oracle::max_abs_difference(ref, q) <= 1e-13);
  }
}
