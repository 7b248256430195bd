#ifndef RISOPT_BEAMFORMING_HPP
#define RISOPT_BEAMFORMING_HPP

#include <vector>

#include "risopt/channel.hpp"
#include "risopt/linalg.hpp"

namespace risopt {

/// Per-element reflection phases, radians in [0, 2pi).
struct PhaseConfig {
    std::vector<double> theta;

    static PhaseConfig zeros(std::size_t m) { return PhaseConfig{std::vector<double>(m, 0.0)}; }
    void wrap();  // reduce all angles mod 2pi into [0, 2pi)
};

/// Unit-norm transmit beamformer.
struct Beamformer {
    CVector w;
};

/// h^T = g^T diag(e^{j theta}) F + d^T, returned as a length-N_b vector.
CVector effective_channel(const CVector& g, const PhaseConfig& theta, const CMatrix& F, const CVector& d);

/// MRT beamformer w = conj(h) / ||h||. Throws on a zero channel.
Beamformer mrt(const CVector& h);

/// Spectral efficiency log2(1 + gain * P_d / noise) in bit/s/Hz.
double rate_bpshz(double channel_gain, double tx_power_w, double noise_w);

/// Per-antenna-perfect alignment bound on ||g^T Theta F + d^T||^2.
double gamma_max(const CVector& g, const CMatrix& F, const CVector& d);

/// Opportunistic selection: argmax_k gamma_max over users, lowest index on ties.
std::size_t select_user(const ChannelRealization& ch);

}  // namespace risopt

#endif
