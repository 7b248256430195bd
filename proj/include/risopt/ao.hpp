#ifndef RISOPT_AO_HPP
#define RISOPT_AO_HPP

#include <vector>

#include "risopt/beamforming.hpp"
#include "risopt/channel.hpp"

namespace risopt {

/// Snapshot after one half-step of the alternation.
struct AoState {
    std::size_t iteration = 0;
    PhaseConfig phases;
    Beamformer beamformer;
    double objective = 0.0;  // |(g^T Theta F + d^T) w|^2
};

struct AoResult {
    PhaseConfig phases;
    Beamformer beamformer;
    double gain = 0.0;  // ||g^T Theta F + d^T||^2
    double rate = 0.0;  // bit/s/Hz
    std::vector<AoState> trace;
    bool direct_link_blocked = false;
};

/// Initial beamformer: MRT on the direct link, w = conj(d)/||d||.
Beamformer ao_init(const CVector& d);

/// Closed-form phase alignment for a fixed beamformer: every reflected summand
/// is rotated onto the phase of the direct-link term.
PhaseConfig phase_update(const CVector& g, const CMatrix& F, const Beamformer& w, const CVector& d);

/// Alternates phase_update and MRT for exactly `iterations` rounds.
AoResult ao_iterate(const ChannelRealization& ch, std::size_t user, std::size_t iterations,
                    double tx_power_w);

}  // namespace risopt

#endif
