#include "society/asymptotics.hpp"
#include "society/rank_stats.hpp"
#include "society/sequences.hpp"

#include <doctest.h>

#include <cmath>

using namespace society;

TEST_CASE("the constant C") {
  const double c = constant_C();
  CHECK(std::floor(c * 100.0) / 100.0 == doctest::Approx(1038.97).epsilon(1e-12));
  const double l2 = std::log(2.0);
  const double direct = 32.0 * M_PI * M_PI * std::exp(3.0 - 1.0 / l2) * l2;
  CHECK(c == doctest::Approx(direct).epsilon(1e-14));
  CHECK(std::abs(log_constant_C() - std::log(c)) < 1e-12);
}

TEST_CASE("log factorial") {
  CHECK(log_factorial(0) == 0.0);
  CHECK(log_factorial(1) == 0.0);
  CHECK(log_factorial(10) == doctest::Approx(std::log(3628800.0)).epsilon(1e-14));
  CHECK(log_factorial(1000) == doctest::Approx(std::lgamma(1001.0)).epsilon(1e-13));
}

TEST_CASE("ordered Bell estimate") {
  // At n = 1 the estimate is 1/(2 (log 2)^2).
  const auto one = ordered_bell_asymptotic_log(1, ordered_bell(1));
  const double l2 = std::log(2.0);
  CHECK(*one.ratio_to_exact == doctest::Approx(1.0 / (2.0 * l2 * l2)).epsilon(1e-12));
  CHECK(one.abs_error() == doctest::Approx(0.04068).epsilon(1e-3));

  const auto fifty = ordered_bell_asymptotic_log(50, ordered_bell(50));
  CHECK(fifty.abs_error() < 1e-8);
  CHECK(fifty.abs_error() < ordered_bell_asymptotic_log(12, ordered_bell(12)).abs_error());

  const auto no_exact = ordered_bell_asymptotic_log(20);
  CHECK_FALSE(no_exact.ratio_to_exact.has_value());
  CHECK(no_exact.abs_error() == 0.0);
}

TEST_CASE("hierarchical estimate converges") {
  const double e250 = hierarchical_asymptotic_log(250, hierarchical(250)).abs_error();
  const double e1000 = hierarchical_asymptotic_log(1000, hierarchical(1000)).abs_error();
  CHECK(e1000 < 5e-3);
  CHECK(e1000 < e250);
  // The estimate overshoots for every n checked.
  CHECK(*hierarchical_asymptotic_log(100, hierarchical(100)).ratio_to_exact > 1.0);
  CHECK(std::isfinite(hierarchical_asymptotic_log(1, hierarchical(1)).log_value));
}

TEST_CASE("log H_n minus its smooth part is O(log n)") {
  // With Stirling for n!, the gap is -(1/4) log n + (1/2) log(2 pi) - (1/4) log C + o(1).
  double worst = 0.0;
  for (std::size_t n = 2; n <= 1000; n += (n < 100 ? 1 : 50)) {
    const double gap = log_of(hierarchical(n)) - hierarchical_log_leading(n);
    worst = std::max(worst, std::abs(gap) / std::log(double(n)));
  }
  MESSAGE("max |log H_n - leading| / log n = " << worst);
  CHECK(worst < 2.5);
  const double gap = log_of(hierarchical(1000)) - hierarchical_log_leading(1000);
  CHECK(std::abs(gap + 0.25 * std::log(1000.0) - 0.5 * std::log(2 * M_PI) + 0.25 * log_constant_C()) < 5e-3);
}

TEST_CASE("unlabeled estimate needs the factor e^c") {
  const double c = unlabeled_pole_constant();
  CHECK(c == doctest::Approx(0.33479154296).epsilon(1e-9));

  const auto plain = unlabeled_asymptotic_log(400, unlabeled(400));
  CHECK(*plain.ratio_to_exact == doctest::Approx(0.7553).epsilon(1e-3));
  const auto fixed100 = unlabeled_asymptotic_corrected_log(100, unlabeled(100));
  const auto fixed400 = unlabeled_asymptotic_corrected_log(400, unlabeled(400));
  CHECK(fixed400.log_value - plain.log_value == doctest::Approx(c).epsilon(1e-12));
  CHECK(fixed400.abs_error() < fixed100.abs_error());
  CHECK(fixed400.abs_error() < 0.06);
}

TEST_CASE("rank numerator estimate") {
  const double r25 = labeled_rank_asymptotic_check(25);
  const double r100 = labeled_rank_asymptotic_check(100);
  CHECK(std::abs(r100 - 1.0) < 0.02);
  CHECK(std::abs(r100 - 1.0) < std::abs(r25 - 1.0));

  const Rational a3 = labeled_average_rank(3);
  const auto est = rank_numerator_asymptotic_log(3, a3 * Rational(ordered_bell(3)));
  REQUIRE(est.ratio_to_exact.has_value());
  CHECK(*est.ratio_to_exact * labeled_rank_asymptotic_check(3) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("saddle point") {
  const auto s10 = saddle_point(10);
  CHECK(s10.solved == doctest::Approx(0.39785888552763604).epsilon(1e-12));
  CHECK(unlabeled_log_derivative(s10.solved) == doctest::Approx(10.0).epsilon(1e-10));
  CHECK(s10.iterations <= kSaddleMaxIterations);

  const auto s1000 = saddle_point(1000);
  CHECK(std::abs(s1000.solved - s1000.expansion) < 1e-4);
  CHECK(s1000.solved < 0.5);
  CHECK(s1000.expansion == doctest::Approx(0.5 - std::sqrt(8001.0) / 8000.0 + 1.0 / 8000.0));

  const auto s1 = saddle_point(1);
  CHECK(s1.solved > 0.0);
  CHECK(s1.solved < 0.5);
  CHECK_THROWS_AS(saddle_point(0), std::invalid_argument);
}
