#pragma once

#include <span>
#include <string>

namespace sociodyn::stats {

double mean(std::span<const double> xs);
/// Sample standard deviation (n - 1 denominator); 0 for n < 2.
double stddev(std::span<const double> xs);
double median(std::span<const double> xs);

/// Adjusted Fisher-Pearson standardized third moment, G1.
double skewness(std::span<const double> xs);
/// Sample excess kurtosis, G2.
double excess_kurtosis(std::span<const double> xs);

struct TestResult {
  std::string name;
  double statistic = 0.0;
  double p_value = 1.0;
  bool valid = true;  // false when the statistic is undefined (e.g. zero variance)
  std::string note;
};

/// Welch's unequal-variance t-test, two-sided.
TestResult welch_t_test(std::span<const double> a, std::span<const double> b);

// Mann-Whitney U for sample a, two-sided. Exact null distribution when both
// samples have at most 20 values and there are no ties; otherwise the normal
// approximation with tie and continuity corrections.
TestResult mann_whitney_u(std::span<const double> a, std::span<const double> b);

struct SampleComparison {
  TestResult mann_whitney;  // headline
  TestResult welch;
};

SampleComparison compare_samples(std::span<const double> a, std::span<const double> b);

/// Exact two-sided sign test on paired differences; zeros are dropped.
/// statistic = number of positive differences.
TestResult sign_test(std::span<const double> differences);

/// Spearman rank correlation with average ranks for ties.
double spearman(std::span<const double> x, std::span<const double> y);

/// D'Agostino-Pearson K^2 omnibus normality test (n >= 20).
TestResult skew_kurtosis_test(std::span<const double> xs);

}  // namespace sociodyn::stats
