#ifndef RISOPT_HARNESS_HPP
#define RISOPT_HARNESS_HPP

#include <string>
#include <vector>

#include "risopt/channel.hpp"
#include "risopt/schemes.hpp"
#include "risopt/stats.hpp"

namespace risopt {

struct TrialRecord {
    std::size_t trial = 0;
    std::vector<SchemeResult> results;  // one per enabled scheme, config order
};

struct SchemeCdf {
    Scheme scheme;
    std::vector<CdfPoint> cdf;
};

struct ResultSet {
    SystemConfig config;
    std::vector<TrialRecord> trials;  // ordered by trial index

    std::vector<double> throughputs(Scheme s) const;
    double mean_wall_time_s(Scheme s) const;
};

/// Monte-Carlo driver: per trial draws a fresh topology and channel
/// realization, then runs every enabled scheme on that same realization.
/// Trials are distributed over `threads` workers (0 = hardware concurrency);
/// output ordering and RNG streams are independent of the thread count.
ResultSet run_montecarlo(const SystemConfig& cfg, std::size_t threads = 0);

std::vector<SchemeCdf> summarize_cdf(const ResultSet& results);

/// Writes trials.csv, cdf.csv and manifest.cfg under `dir` (created if absent).
void write_results(const ResultSet& results, const std::string& dir);

/// Reads a trials.csv back into per-scheme throughput samples (file order).
std::vector<std::pair<Scheme, std::vector<double>>> load_trials_csv(const std::string& path);

}  // namespace risopt

#endif
