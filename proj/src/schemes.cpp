#include "risopt/schemes.hpp"

#include <chrono>
#include <stdexcept>

#include "risopt/ao.hpp"
#include "risopt/beamforming.hpp"
#include "risopt/sdr.hpp"

namespace risopt {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

SdrSettings sdr_settings_of(const SystemConfig& cfg) {
    return SdrSettings{cfg.sdr_rank, cfg.sdr_max_sweeps, 1e-10};
}

}  // namespace

SchemeResult run_us_ideal(const ChannelRealization& ch, const SystemConfig& cfg) {
    SchemeResult res;
    res.scheme = Scheme::UsIdeal;
    const auto t0 = Clock::now();
    const std::size_t k = select_user(ch);
    const double gain = gamma_max(ch.g[k], ch.F, ch.d[k]);
    res.sum_throughput_bps = cfg.bandwidth_hz * rate_bpshz(gain, cfg.tx_power_w, ch.noise_power_w);
    res.wall_time_s = seconds_since(t0);
    res.selected_user = static_cast<long>(k);
    return res;
}

SchemeResult run_us_jo(const ChannelRealization& ch, const SystemConfig& cfg, RngStream& rng) {
    SchemeResult res;
    res.scheme = Scheme::UsJo;
    const auto t0 = Clock::now();
    const std::size_t k = select_user(ch);
    const JoResult jo = jo_pipeline(ch, k, sdr_settings_of(cfg), cfg.sdr_randomizations, cfg.tx_power_w, rng);
    res.sum_throughput_bps = cfg.bandwidth_hz * jo.rate;
    res.wall_time_s = seconds_since(t0);
    res.selected_user = static_cast<long>(k);
    res.converged = jo.converged;
    return res;
}

SchemeResult run_us_ao(const ChannelRealization& ch, const SystemConfig& cfg) {
    SchemeResult res;
    res.scheme = Scheme::UsAo;
    const auto t0 = Clock::now();
    const std::size_t k = select_user(ch);
    const AoResult ao = ao_iterate(ch, k, cfg.ao_iterations, cfg.tx_power_w);
    res.sum_throughput_bps = cfg.bandwidth_hz * ao.rate;
    res.wall_time_s = seconds_since(t0);
    res.selected_user = static_cast<long>(k);
    res.converged = !ao.direct_link_blocked;
    return res;
}

SchemeResult run_tdma(const ChannelRealization& ch, const SystemConfig& cfg) {
    SchemeResult res;
    res.scheme = Scheme::Tdma;
    const auto t0 = Clock::now();
    const double k_count = static_cast<double>(cfg.users);
    double sum_rate = 0.0;
    for (std::size_t k = 0; k < cfg.users; ++k) {
        const AoResult ao = ao_iterate(ch, k, cfg.ao_iterations, cfg.tx_power_w);
        sum_rate += ao.rate;
        res.converged = res.converged && !ao.direct_link_blocked;
    }
    res.sum_throughput_bps = cfg.bandwidth_hz / k_count * sum_rate;
    res.wall_time_s = seconds_since(t0);
    return res;
}

SchemeResult run_fdma(const ChannelRealization& ch, const SystemConfig& cfg, RngStream& rng) {
    SchemeResult res;
    res.scheme = Scheme::Fdma;
    const auto t0 = Clock::now();
    const std::size_t anchor = static_cast<std::size_t>(rng.uniform_index(cfg.users));
    const AoResult ao = ao_iterate(ch, anchor, cfg.ao_iterations, cfg.tx_power_w);
    res.converged = !ao.direct_link_blocked;
    const double k_count = static_cast<double>(cfg.users);
    double sum_rate = 0.0;
    for (std::size_t k = 0; k < cfg.users; ++k) {
        const double gain = norm_sq(effective_channel(ch.g[k], ao.phases, ch.F, ch.d[k]));
        // Power P_d/K into bandwidth B/K with noise sigma^2/K: per-user SNR
        // equals the full-band SNR.
        sum_rate += rate_bpshz(gain, cfg.tx_power_w, ch.noise_power_w);
    }
    res.sum_throughput_bps = cfg.bandwidth_hz / k_count * sum_rate;
    res.wall_time_s = seconds_since(t0);
    return res;
}

SchemeResult run_scheme(Scheme s, const ChannelRealization& ch, const SystemConfig& cfg, RngStream& rng) {
    switch (s) {
        case Scheme::UsIdeal: return run_us_ideal(ch, cfg);
        case Scheme::UsJo: return run_us_jo(ch, cfg, rng);
        case Scheme::UsAo: return run_us_ao(ch, cfg);
        case Scheme::Tdma: return run_tdma(ch, cfg);
        case Scheme::Fdma: return run_fdma(ch, cfg, rng);
    }
    throw std::logic_error("run_scheme: unreachable");
}

}  // namespace risopt
