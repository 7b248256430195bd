#include "risopt/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace risopt {

std::vector<CdfPoint> empirical_cdf(const std::vector<double>& samples) {
    if (samples.empty()) throw std::invalid_argument("empirical_cdf: empty sample set");
    std::vector<double> sorted = samples;
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    std::vector<CdfPoint> cdf(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        cdf[i] = {sorted[i], static_cast<double>(i + 1) / n};
    cdf.back().probability = 1.0;
    return cdf;
}

double median(std::vector<double> samples) {
    if (samples.empty()) throw std::invalid_argument("median: empty sample set");
    std::sort(samples.begin(), samples.end());
    const std::size_t n = samples.size();
    if (n % 2 == 1) return samples[n / 2];
    return 0.5 * (samples[n / 2 - 1] + samples[n / 2]);
}

namespace {

// Series expansion, valid for x < a + 1.
double gamma_p_series(double a, double x) {
    double term = 1.0 / a;
    double sum = term;
    for (int k = 1; k < 500; ++k) {
        term *= x / (a + k);
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Continued fraction for Q(a, x), valid for x >= a + 1.
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double gamma_p(double a, double x) {
    if (a <= 0.0) throw std::invalid_argument("gamma_p: a must be positive");
    if (x < 0.0) throw std::invalid_argument("gamma_p: x must be non-negative");
    if (x == 0.0) return 0.0;
    return x < a + 1.0 ? gamma_p_series(a, x) : 1.0 - gamma_q_cf(a, x);
}

double ks_distance(std::vector<double> samples, double (*cdf)(double, const void*), const void* ctx) {
    if (samples.empty()) throw std::invalid_argument("ks_distance: empty sample set");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i], ctx);
        worst = std::max(worst, std::abs(static_cast<double>(i + 1) / n - f));
        worst = std::max(worst, std::abs(static_cast<double>(i) / n - f));
    }
    return worst;
}

}  // namespace risopt
