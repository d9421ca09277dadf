#include <cmath>
#include <vector>

#include "doctest.h"
#include "harp/stats.hpp"

using namespace harp;

TEST_CASE("student t: closed forms at df=1 and df=2") {
  // df=1 is Cauchy: p = 1 - (2/pi) atan(|t|); df=2: p = 1 - t/sqrt(2+t^2)
  for (double t : {0.0, 0.3, 1.0, 2.5, 10.0}) {
    const double cauchy = 1.0 - 2.0 / M_PI * std::atan(t);
    CHECK(student_t_two_sided_p(t, 1.0) == doctest::Approx(cauchy).epsilon(1e-10));
    const double df2 = 1.0 - t / std::sqrt(2.0 + t * t);
    CHECK(student_t_two_sided_p(t, 2.0) == doctest::Approx(df2).epsilon(1e-10));
  }
}

TEST_CASE("student t: classic 5% quantile at df=9") {
  CHECK(student_t_two_sided_p(2.2621571627, 9.0) == doctest::Approx(0.05).epsilon(1e-6));
  CHECK(student_t_two_sided_p(0.0, 9.0) == doctest::Approx(1.0));
}

TEST_CASE("paired t-test matches the textbook formula") {
  // d = a - b = {1.2, 0.8, 1.0, 1.4, 0.6, 1.0, 1.1, 0.9, 1.3, 0.7}
  // mean = 1.0, sd = sqrt(sum((d-1)^2)/9) = sqrt(0.6/9), t = 1.0/(sd/sqrt(10))
  std::vector<double> b(10, 0.0);
  std::vector<double> a{1.2, 0.8, 1.0, 1.4, 0.6, 1.0, 1.1, 0.9, 1.3, 0.7};
  auto r = paired_t_test(a, b);
  const double sd = std::sqrt(0.6 / 9.0);
  const double expected_t = 1.0 / (sd / std::sqrt(10.0));
  CHECK(r.t == doctest::Approx(expected_t).epsilon(1e-12));
  CHECK(r.mean_diff == doctest::Approx(1.0));
  CHECK(r.p == doctest::Approx(student_t_two_sided_p(expected_t, 9.0)).epsilon(1e-12));
  CHECK(r.p < 1e-6);  // overwhelming evidence
}

TEST_CASE("paired t-test zero-variance conventions") {
  std::vector<double> a{0.5, 0.5, 0.5};
  auto same = paired_t_test(a, a);
  CHECK(same.p == 1.0);
  CHECK(same.t == 0.0);

  std::vector<double> b{0.3, 0.3, 0.3};
  auto shifted = paired_t_test(a, b);
  CHECK(shifted.p == 0.0);
}

TEST_CASE("paired t-test: p shrinks as |t| grows") {
  double prev = 1.0;
  for (double t : {0.5, 1.0, 2.0, 4.0, 8.0}) {
    const double p = student_t_two_sided_p(t, 9.0);
    CHECK(p < prev);
    prev = p;
  }
}

TEST_CASE("spearman: monotone and reversed sequences") {
  std::vector<double> x{1, 2, 3, 4, 5};
  std::vector<double> inc{10, 20, 30, 40, 50};
  std::vector<double> dec{5, 4, 3, 2, 1};
  CHECK(spearman_correlation(x, inc) == doctest::Approx(1.0));
  CHECK(spearman_correlation(x, dec) == doctest::Approx(-1.0));
  // nonlinear but monotone is still 1
  std::vector<double> exp_y{1, 8, 27, 64, 125};
  CHECK(spearman_correlation(x, exp_y) == doctest::Approx(1.0));
}

TEST_CASE("spearman: ties use average ranks") {
  // x: ranks {1.5, 1.5, 3.5, 3.5}; y: ranks {1, 2, 3, 4}
  // pearson of ranks = 0.8944271909999159 (hand computation)
  std::vector<double> x{1, 1, 2, 2};
  std::vector<double> y{10, 20, 30, 40};
  CHECK(spearman_correlation(x, y) == doctest::Approx(0.8944271909999159).epsilon(1e-12));
}

TEST_CASE("linear fit r2") {
  std::vector<double> x{1, 2, 3, 4};
  std::vector<double> y{2.0, 4.0, 6.0, 8.0};
  CHECK(linear_fit_r2(x, y) == doctest::Approx(1.0));
  std::vector<double> noisy{2.1, 3.8, 6.2, 7.9};
  CHECK(linear_fit_r2(x, noisy) > 0.99);
}
