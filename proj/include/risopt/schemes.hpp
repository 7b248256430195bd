#ifndef RISOPT_SCHEMES_HPP
#define RISOPT_SCHEMES_HPP

#include "risopt/channel.hpp"
#include "risopt/rng.hpp"

namespace risopt {

struct SchemeResult {
    Scheme scheme = Scheme::UsIdeal;
    double sum_throughput_bps = 0.0;
    long selected_user = -1;  // US schemes only
    double wall_time_s = 0.0;
    bool converged = true;
};

SchemeResult run_us_ideal(const ChannelRealization& ch, const SystemConfig& cfg);
SchemeResult run_us_jo(const ChannelRealization& ch, const SystemConfig& cfg, RngStream& rng);
SchemeResult run_us_ao(const ChannelRealization& ch, const SystemConfig& cfg);
/// Per-slot reflection: one AO run per user, 1/K time share each.
SchemeResult run_tdma(const ChannelRealization& ch, const SystemConfig& cfg);
/// One shared reflection pattern for the whole band, optimized for a uniformly
/// drawn anchor user; per-user SNR is preserved since power and noise both
/// scale by 1/K.
SchemeResult run_fdma(const ChannelRealization& ch, const SystemConfig& cfg, RngStream& rng);

/// Dispatch by scheme tag; rng feeds JO randomization and the FDMA anchor draw.
SchemeResult run_scheme(Scheme s, const ChannelRealization& ch, const SystemConfig& cfg, RngStream& rng);

}  // namespace risopt

#endif
