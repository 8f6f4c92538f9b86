#include "sociodyn/stats.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include <boost/math/distributions/students_t.hpp>

namespace sociodyn::stats {
namespace {

double normal_two_sided(double z) { return std::erfc(std::abs(z) / std::sqrt(2.0)); }

// Central moments m2, m3, m4 with the 1/n normalization.
struct Moments {
  double n = 0, m2 = 0, m3 = 0, m4 = 0;
};

Moments central_moments(std::span<const double> xs) {
  Moments m;
  m.n = static_cast<double>(xs.size());
  if (xs.empty()) return m;
  const double mu = mean(xs);
  for (const double x : xs) {
    const double d = x - mu;
    const double d2 = d * d;
    m.m2 += d2;
    m.m3 += d2 * d;
    m.m4 += d2 * d2;
  }
  m.m2 /= m.n;
  m.m3 /= m.n;
  m.m4 /= m.n;
  return m;
}

// Average ranks (1-based) and the tie term sum(t^3 - t).
std::vector<double> average_ranks(std::span<const double> xs, double* tie_term = nullptr) {
  std::vector<std::size_t> idx(xs.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
  std::vector<double> ranks(xs.size());
  double ties = 0.0;
  for (std::size_t i = 0; i < idx.size();) {
    std::size_t j = i;
    while (j + 1 < idx.size() && xs[idx[j + 1]] == xs[idx[i]]) ++j;
    const double r = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[idx[k]] = r;
    const auto t = static_cast<double>(j - i + 1);
    ties += t * t * t - t;
    i = j + 1;
  }
  if (tie_term) *tie_term = ties;
  return ranks;
}

// Number of arrangements giving each U for sample sizes (m, n), via
// c(m, n, u) = c(m-1, n, u-n) + c(m, n-1, u).
std::vector<double> u_distribution(std::size_t m, std::size_t n) {
  // table[i][j] holds the counts for sizes (i, j).
  std::vector<std::vector<std::vector<double>>> table(m + 1, std::vector<std::vector<double>>(n + 1));
  for (std::size_t i = 0; i <= m; ++i) {
    for (std::size_t j = 0; j <= n; ++j) {
      auto& cell = table[i][j];
      cell.assign(i * j + 1, 0.0);
      if (i == 0 || j == 0) {
        cell[0] = 1.0;
        continue;
      }
      const auto& left = table[i - 1][j];
      for (std::size_t u = 0; u < left.size(); ++u) cell[u + j] += left[u];
      const auto& up = table[i][j - 1];
      for (std::size_t u = 0; u < up.size(); ++u) cell[u] += up[u];
    }
  }
  return table[m][n];
}

}  // namespace

double mean(std::span<const double> xs) {
  if (xs.empty()) return 0.0;
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

double stddev(std::span<const double> xs) {
  if (xs.size() < 2) return 0.0;
  const double mu = mean(xs);
  double ss = 0.0;
  for (const double x : xs) ss += (x - mu) * (x - mu);
  return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

double median(std::span<const double> xs) {
  if (xs.empty()) return 0.0;
  std::vector<double> v(xs.begin(), xs.end());
  std::sort(v.begin(), v.end());
  const std::size_t h = v.size() / 2;
  return v.size() % 2 ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

double skewness(std::span<const double> xs) {
  const auto m = central_moments(xs);
  if (m.n < 3 || m.m2 <= 0.0) return 0.0;
  const double g1 = m.m3 / std::pow(m.m2, 1.5);
  return g1 * std::sqrt(m.n * (m.n - 1.0)) / (m.n - 2.0);
}

double excess_kurtosis(std::span<const double> xs) {
  const auto m = central_moments(xs);
  if (m.n < 4 || m.m2 <= 0.0) return 0.0;
  const double g2 = m.m4 / (m.m2 * m.m2) - 3.0;
  const double n = m.n;
  return ((n + 1.0) * g2 + 6.0) * (n - 1.0) / ((n - 2.0) * (n - 3.0));
}

TestResult welch_t_test(std::span<const double> a, std::span<const double> b) {
  TestResult r{"welch_t", 0.0, 1.0, true, {}};
  if (a.size() < 2 || b.size() < 2) {
    r.valid = false;
    r.note = "need at least two values per sample";
    return r;
  }
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const double va = std::pow(stddev(a), 2) / na;
  const double vb = std::pow(stddev(b), 2) / nb;
  const double se2 = va + vb;
  if (se2 <= 0.0) {
    r.valid = false;
    r.note = "degenerate variance";
    r.p_value = mean(a) == mean(b) ? 1.0 : 0.0;
    return r;
  }
  r.statistic = (mean(a) - mean(b)) / std::sqrt(se2);
  const double df = se2 * se2 / (va * va / (na - 1.0) + vb * vb / (nb - 1.0));
  const boost::math::students_t dist(df);
  r.p_value = std::min(1.0, 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(r.statistic))));
  return r;
}

TestResult mann_whitney_u(std::span<const double> a, std::span<const double> b) {
  TestResult r{"mann_whitney_u", 0.0, 1.0, true, {}};
  if (a.empty() || b.empty()) {
    r.valid = false;
    r.note = "empty sample";
    return r;
  }
  std::vector<double> pooled(a.begin(), a.end());
  pooled.insert(pooled.end(), b.begin(), b.end());
  double tie_term = 0.0;
  const auto ranks = average_ranks(pooled, &tie_term);
  const double m = static_cast<double>(a.size());
  const double n = static_cast<double>(b.size());
  const double rank_sum_a = std::accumulate(ranks.begin(), ranks.begin() + static_cast<long>(a.size()), 0.0);
  const double u1 = rank_sum_a - m * (m + 1.0) / 2.0;
  r.statistic = u1;

  const bool has_ties = tie_term > 0.0;
  if (!has_ties && a.size() <= 20 && b.size() <= 20) {
    const auto dist = u_distribution(a.size(), b.size());
    const double total = std::accumulate(dist.begin(), dist.end(), 0.0);
    const auto u_small = static_cast<std::size_t>(std::min(u1, m * n - u1));
    double tail = 0.0;
    for (std::size_t u = 0; u <= u_small; ++u) tail += dist[u];
    r.p_value = std::min(1.0, 2.0 * tail / total);
    r.note = "exact";
    return r;
  }

  const double big_n = m + n;
  const double sigma2 = m * n / 12.0 * ((big_n + 1.0) - tie_term / (big_n * (big_n - 1.0)));
  if (sigma2 <= 0.0) {
    r.p_value = 1.0;
    r.note = "all values tied";
    return r;
  }
  const double z = (std::abs(u1 - m * n / 2.0) - 0.5) / std::sqrt(sigma2);
  r.p_value = z <= 0.0 ? 1.0 : std::min(1.0, normal_two_sided(z));
  r.note = "normal approximation";
  return r;
}

SampleComparison compare_samples(std::span<const double> a, std::span<const double> b) {
  return {mann_whitney_u(a, b), welch_t_test(a, b)};
}

TestResult sign_test(std::span<const double> differences) {
  TestResult r{"sign_test", 0.0, 1.0, true, {}};
  int n = 0, pos = 0;
  for (const double d : differences) {
    if (d == 0.0) continue;
    ++n;
    if (d > 0.0) ++pos;
  }
  r.statistic = pos;
  if (n == 0) {
    r.valid = false;
    r.note = "all differences zero";
    return r;
  }
  const int k = std::min(pos, n - pos);
  double tail = 0.0;
  for (int i = 0; i <= k; ++i) {
    const double log_p = std::lgamma(n + 1.0) - std::lgamma(i + 1.0) - std::lgamma(n - i + 1.0) -
                         n * std::log(2.0);
    tail += std::exp(log_p);
  }
  r.p_value = std::min(1.0, 2.0 * tail);
  return r;
}

double spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) return 0.0;
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  const double mx = mean(rx), my = mean(ry);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx <= 0.0 || syy <= 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

TestResult skew_kurtosis_test(std::span<const double> xs) {
  TestResult r{"dagostino_pearson_k2", 0.0, 1.0, true, {}};
  const auto m = central_moments(xs);
  const double n = m.n;
  if (n < 20 || m.m2 <= 0.0) {
    r.valid = false;
    r.note = "need n >= 20 and positive variance";
    return r;
  }

  const double b1 = m.m3 / std::pow(m.m2, 1.5);
  double y = b1 * std::sqrt((n + 1.0) * (n + 3.0) / (6.0 * (n - 2.0)));
  const double beta2 = 3.0 * (n * n + 27.0 * n - 70.0) * (n + 1.0) * (n + 3.0) /
                       ((n - 2.0) * (n + 5.0) * (n + 7.0) * (n + 9.0));
  const double w2 = -1.0 + std::sqrt(2.0 * (beta2 - 1.0));
  const double delta = 1.0 / std::sqrt(0.5 * std::log(w2));
  const double alpha = std::sqrt(2.0 / (w2 - 1.0));
  if (y == 0.0) y = 1.0;
  const double z_skew = delta * std::log(y / alpha + std::sqrt((y / alpha) * (y / alpha) + 1.0));

  const double b2 = m.m4 / (m.m2 * m.m2);
  const double e = 3.0 * (n - 1.0) / (n + 1.0);
  const double var_b2 =
      24.0 * n * (n - 2.0) * (n - 3.0) / ((n + 1.0) * (n + 1.0) * (n + 3.0) * (n + 5.0));
  const double x = (b2 - e) / std::sqrt(var_b2);
  const double sqrt_beta1 = 6.0 * (n * n - 5.0 * n + 2.0) / ((n + 7.0) * (n + 9.0)) *
                            std::sqrt(6.0 * (n + 3.0) * (n + 5.0) / (n * (n - 2.0) * (n - 3.0)));
  const double a = 6.0 + 8.0 / sqrt_beta1 *
                             (2.0 / sqrt_beta1 + std::sqrt(1.0 + 4.0 / (sqrt_beta1 * sqrt_beta1)));
  const double term1 = 1.0 - 2.0 / (9.0 * a);
  const double denom = 1.0 + x * std::sqrt(2.0 / (a - 4.0));
  const double term2 =
      denom == 0.0 ? 0.0 : std::copysign(std::cbrt((1.0 - 2.0 / a) / std::abs(denom)), denom);
  const double z_kurt = (term1 - term2) / std::sqrt(2.0 / (9.0 * a));

  r.statistic = z_skew * z_skew + z_kurt * z_kurt;
  r.p_value = std::exp(-0.5 * r.statistic);  // chi-square, 2 df
  return r;
}

}  // namespace sociodyn::stats
