#include <algorithm>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "risopt/harness.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;
constexpr int kExitIo = 4;

// Full-scale JO is orders of magnitude slower than everything else; demand an
// explicit opt-in above this element count.
constexpr std::size_t kJoElementGate = 256;

struct CommonOpts {
    std::string config_path;
    std::string out_dir = "results";
    std::vector<std::string> overrides;
    std::string schemes;
    std::int64_t seed = -1;
    std::size_t threads = 0;
    bool allow_full_scale_jo = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config_path, "Scenario config file (key=value)")->required();
    cmd->add_option("--set", opts.overrides, "Override a config key, e.g. --set trials=10");
    cmd->add_option("--schemes", opts.schemes, "Comma-separated scheme subset");
    cmd->add_option("--seed", opts.seed, "Seed override");
    cmd->add_option("--threads", opts.threads, "Worker threads (0 = hardware parallelism)");
    cmd->add_flag("--allow-full-scale-jo", opts.allow_full_scale_jo,
                  "Permit the JO scheme above " + std::to_string(kJoElementGate) + " total elements");
}

risopt::SystemConfig build_config(const CommonOpts& opts) {
    risopt::SystemConfig cfg = risopt::load_config(opts.config_path);
    for (const std::string& kv : opts.overrides) risopt::apply_override(cfg, kv);
    if (!opts.schemes.empty()) risopt::apply_override(cfg, "schemes=" + opts.schemes);
    if (opts.seed >= 0) cfg.seed = static_cast<std::uint64_t>(opts.seed);
    cfg.validate();

    const bool jo_enabled =
        std::find(cfg.schemes.begin(), cfg.schemes.end(), risopt::Scheme::UsJo) != cfg.schemes.end();
    if (jo_enabled && cfg.total_elements() > kJoElementGate && !opts.allow_full_scale_jo)
        throw std::invalid_argument(
            "config: JO with " + std::to_string(cfg.total_elements()) +
            " elements exceeds the gate (" + std::to_string(kJoElementGate) +
            "); pass --allow-full-scale-jo or drop us_jo from --schemes");
    return cfg;
}

int cmd_run(const CommonOpts& opts) {
    const risopt::SystemConfig cfg = build_config(opts);
    const risopt::ResultSet results = risopt::run_montecarlo(cfg, opts.threads);
    risopt::write_results(results, opts.out_dir);
    std::printf("wrote %zu trials x %zu schemes to %s\n", results.trials.size(),
                cfg.schemes.size(), opts.out_dir.c_str());
    return 0;
}

int cmd_bench(const CommonOpts& opts) {
    const risopt::SystemConfig cfg = build_config(opts);
    const risopt::ResultSet results = risopt::run_montecarlo(cfg, opts.threads);
    std::printf("%-10s %14s\n", "scheme", "mean time [ms]");
    for (risopt::Scheme s : cfg.schemes)
        std::printf("%-10s %14.3f\n", risopt::scheme_name(s), results.mean_wall_time_s(s) * 1e3);
    return 0;
}

int cmd_cdf(const std::string& trials_path, const std::string& out_path) {
    const auto per_scheme = risopt::load_trials_csv(trials_path);
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open output file '" + out_path + "'");
    f.precision(17);
    f << "scheme,throughput_bps,probability\n";
    for (const auto& [scheme, samples] : per_scheme)
        for (const risopt::CdfPoint& p : risopt::empirical_cdf(samples))
            f << risopt::scheme_name(scheme) << ',' << p.value << ',' << p.probability << '\n';
    if (!f) throw std::runtime_error("write failed for '" + out_path + "'");
    std::printf("wrote %s\n", out_path.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multi-RIS multi-user downlink simulator"};
    app.require_subcommand(1);

    CommonOpts run_opts, bench_opts;
    auto* run = app.add_subcommand("run", "Run the Monte-Carlo simulation and write CSV results");
    add_common(run, run_opts);
    run->add_option("--out", run_opts.out_dir, "Output directory");

    auto* bench = app.add_subcommand("bench", "Run enabled schemes and print mean wall-time per trial");
    add_common(bench, bench_opts);

    std::string trials_path, cdf_out = "cdf.csv";
    auto* cdf = app.add_subcommand("cdf", "Recompute per-scheme CDF tables from a trials.csv");
    cdf->add_option("--trials", trials_path, "Existing trials.csv")->required();
    cdf->add_option("--out", cdf_out, "Output CDF CSV path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(run_opts);
        if (bench->parsed()) return cmd_bench(bench_opts);
        return cmd_cdf(trials_path, cdf_out);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitConfig;
    } catch (const std::ios_base::failure& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitIo;
    } catch (const std::runtime_error& e) {
        // I/O errors carry a path in their message; everything else is numerical.
        const std::string msg = e.what();
        std::fprintf(stderr, "error: %s\n", msg.c_str());
        return msg.find("'") != std::string::npos ? kExitIo : kExitRuntime;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitRuntime;
    }
}
