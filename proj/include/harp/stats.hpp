#pragma once

#include <cstddef>
#include <span>

namespace harp {

// Regularized incomplete beta I_x(a, b) by continued fraction.
double incomplete_beta(double a, double b, double x);

// Two-sided p-value of Student's t with df degrees of freedom.
double student_t_two_sided_p(double t, double df);

struct PairedTTest {
  double t = 0.0;
  double p = 1.0;
  double mean_diff = 0.0;
  std::size_t n = 0;
};

// Paired t-test of a against b (diff = a - b). Zero-variance differences use
// the documented convention: p = 1 when all diffs are 0, p = 0 when they are
// all equal and nonzero.
PairedTTest paired_t_test(std::span<const double> a, std::span<const double> b);

// Spearman rank correlation with average ranks for ties.
double spearman_correlation(std::span<const double> x, std::span<const double> y);

// Least-squares fit y = a + b x; returns R^2.
double linear_fit_r2(std::span<const double> x, std::span<const double> y);

}  // namespace harp
