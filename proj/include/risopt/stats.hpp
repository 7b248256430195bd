#ifndef RISOPT_STATS_HPP
#define RISOPT_STATS_HPP

#include <utility>
#include <vector>

namespace risopt {

struct CdfPoint {
    double value;
    double probability;
};

/// Empirical CDF: sorted sample values paired with step probabilities i/n.
/// The final probability is exactly 1. Throws on empty input.
std::vector<CdfPoint> empirical_cdf(const std::vector<double>& samples);

/// Median of a sample (average of the two central order statistics for even n).
double median(std::vector<double> samples);

/// Regularized lower incomplete gamma P(a, x) = gamma(a, x) / Gamma(a).
double gamma_p(double a, double x);

/// Kolmogorov-Smirnov distance between the empirical CDF of `samples` and a
/// reference CDF evaluated through `cdf`.
double ks_distance(std::vector<double> samples, double (*cdf)(double, const void*), const void* ctx);

}  // namespace risopt

#endif
