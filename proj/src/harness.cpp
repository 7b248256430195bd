#include "risopt/harness.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace risopt {

namespace {

// Fixed per-trial stream purposes; keeps every draw independent of scheduling.
enum StreamPurpose : std::uint64_t {
    kTopology = 0,
    kChannels = 1,
    kJoRandomization = 2,
    kFdmaAnchor = 3,
    kStreamsPerTrial = 8,
};

RngStream trial_stream(const SystemConfig& cfg, std::size_t trial, StreamPurpose purpose) {
    return RngStream(cfg.seed, static_cast<std::uint64_t>(trial) * kStreamsPerTrial + purpose);
}

TrialRecord run_trial(const SystemConfig& cfg, std::size_t trial) {
    RngStream topo_rng = trial_stream(cfg, trial, kTopology);
    RngStream chan_rng = trial_stream(cfg, trial, kChannels);
    const Geometry geom = draw_topology(cfg, topo_rng);
    const ChannelRealization ch = realize_channels(geom, cfg, chan_rng);

    TrialRecord rec;
    rec.trial = trial;
    rec.results.reserve(cfg.schemes.size());
    for (Scheme s : cfg.schemes) {
        RngStream rng = trial_stream(cfg, trial,
                                     s == Scheme::Fdma ? kFdmaAnchor : kJoRandomization);
        rec.results.push_back(run_scheme(s, ch, cfg, rng));
    }
    return rec;
}

}  // namespace

std::vector<double> ResultSet::throughputs(Scheme s) const {
    std::vector<double> out;
    out.reserve(trials.size());
    for (const TrialRecord& rec : trials)
        for (const SchemeResult& r : rec.results)
            if (r.scheme == s) out.push_back(r.sum_throughput_bps);
    return out;
}

double ResultSet::mean_wall_time_s(Scheme s) const {
    double sum = 0.0;
    std::size_t n = 0;
    for (const TrialRecord& rec : trials)
        for (const SchemeResult& r : rec.results)
            if (r.scheme == s) {
                sum += r.wall_time_s;
                ++n;
            }
    if (n == 0) throw std::invalid_argument("mean_wall_time_s: scheme has no records");
    return sum / static_cast<double>(n);
}

ResultSet run_montecarlo(const SystemConfig& cfg, std::size_t threads) {
    cfg.validate();
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<std::size_t>(threads, cfg.trials);

    ResultSet results;
    results.config = cfg;
    results.trials.resize(cfg.trials);

    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(threads);
    for (std::size_t w = 0; w < threads; ++w) {
        workers.emplace_back([&, w] {
            try {
                for (;;) {
                    const std::size_t t = next.fetch_add(1);
                    if (t >= cfg.trials) break;
                    results.trials[t] = run_trial(cfg, t);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (std::thread& th : workers) th.join();
    for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

std::vector<SchemeCdf> summarize_cdf(const ResultSet& results) {
    if (results.trials.empty()) throw std::invalid_argument("summarize_cdf: empty result set");
    std::vector<SchemeCdf> out;
    for (Scheme s : results.config.schemes)
        out.push_back(SchemeCdf{s, empirical_cdf(results.throughputs(s))});
    return out;
}

void write_results(const ResultSet& results, const std::string& dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw std::runtime_error("write_results: cannot create directory '" + dir + "': " + ec.message());

    const auto open = [](const fs::path& p) {
        std::ofstream f(p);
        if (!f) throw std::runtime_error("write_results: cannot open '" + p.string() + "'");
        f.precision(17);
        return f;
    };

    {
        std::ofstream f = open(fs::path(dir) / "trials.csv");
        f << "trial,scheme,sum_throughput_bps,selected_user,wall_time_ms,converged\n";
        for (const TrialRecord& rec : results.trials)
            for (const SchemeResult& r : rec.results)
                f << rec.trial << ',' << scheme_name(r.scheme) << ',' << r.sum_throughput_bps << ','
                  << r.selected_user << ',' << r.wall_time_s * 1e3 << ',' << (r.converged ? 1 : 0)
                  << '\n';
        if (!f) throw std::runtime_error("write_results: write failed for trials.csv in '" + dir + "'");
    }
    {
        std::ofstream f = open(fs::path(dir) / "cdf.csv");
        f << "scheme,throughput_bps,probability\n";
        for (const SchemeCdf& sc : summarize_cdf(results))
            for (const CdfPoint& p : sc.cdf)
                f << scheme_name(sc.scheme) << ',' << p.value << ',' << p.probability << '\n';
        if (!f) throw std::runtime_error("write_results: write failed for cdf.csv in '" + dir + "'");
    }
    {
        std::ofstream f = open(fs::path(dir) / "manifest.cfg");
        f << config_to_text(results.config);
        if (!f) throw std::runtime_error("write_results: write failed for manifest.cfg in '" + dir + "'");
    }
}

std::vector<std::pair<Scheme, std::vector<double>>> load_trials_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open trials file '" + path + "'");
    std::string line;
    if (!std::getline(in, line) || line.rfind("trial,scheme,sum_throughput_bps", 0) != 0)
        throw std::runtime_error("'" + path + "' is not a trials.csv (bad header)");

    std::vector<std::pair<Scheme, std::vector<double>>> out;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string trial_s, scheme_s, tput_s;
        if (!std::getline(ss, trial_s, ',') || !std::getline(ss, scheme_s, ',') ||
            !std::getline(ss, tput_s, ','))
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": malformed row");
        const Scheme s = scheme_from_name(scheme_s);
        double tput = 0.0;
        try {
            tput = std::stod(tput_s);
        } catch (...) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": bad throughput value");
        }
        auto it = std::find_if(out.begin(), out.end(), [&](const auto& p) { return p.first == s; });
        if (it == out.end()) {
            out.emplace_back(s, std::vector<double>{tput});
        } else {
            it->second.push_back(tput);
        }
    }
    if (out.empty()) throw std::runtime_error("'" + path + "' contains no trial rows");
    return out;
}

}  // namespace risopt
