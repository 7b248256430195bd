#ifndef RISOPT_SDR_HPP
#define RISOPT_SDR_HPP

#include "risopt/beamforming.hpp"
#include "risopt/channel.hpp"
#include "risopt/linalg.hpp"
#include "risopt/rng.hpp"

namespace risopt {

/// Homogenized cost C = B B^H with B = [diag(g^T) F ; d^T], size (M+1)x(M+1).
struct CostMatrix {
    CMatrix C;
};

/// Low-rank factor of the lifted variable: V = Y Y^H, every row of Y unit norm.
struct SdpFactor {
    CMatrix Y;  // (M+1) x r
};

struct SdrSettings {
    std::size_t rank = 0;  // 0 = ceil(sqrt(2(M+1))) + 1
    std::size_t max_sweeps = 500;
    double rel_tol = 1e-10;
};

struct SdpSolution {
    SdpFactor factor;
    double objective = 0.0;
    bool converged = false;
    std::size_t sweeps = 0;
    std::vector<double> objective_history;  // one entry per sweep
};

struct JoResult {
    PhaseConfig phases;
    Beamformer beamformer;
    double gain = 0.0;           // ||g^T Theta F + d^T||^2
    double rate = 0.0;           // bit/s/Hz at the realization's noise power
    double sdp_objective = 0.0;  // Tr(C V), upper bound on gain
    bool converged = false;
};

CostMatrix build_cost_matrix(const CVector& g, const CMatrix& F, const CVector& d);

/// Diagonally-constrained SDP max Tr(C V), V >= 0, diag(V) = 1, solved by
/// block-coordinate ascent on the low-rank factor. Rejects non-PSD input.
SdpSolution solve_diag_sdp(const CostMatrix& cost, const SdrSettings& settings);

/// Gaussian randomization: candidates v = Y r with r ~ CN(0, I_rank); phases
/// from the ratio against the homogenization entry; best candidate by achieved
/// channel gain.
PhaseConfig randomize_extract(const SdpFactor& factor, const CVector& g, const CMatrix& F,
                              const CVector& d, std::size_t n_samples, RngStream& rng);

JoResult jo_pipeline(const ChannelRealization& ch, std::size_t user, const SdrSettings& settings,
                     std::size_t n_samples, double tx_power_w, RngStream& rng);

}  // namespace risopt

#endif
