#include "risopt/ao.hpp"

#include <cmath>
#include <stdexcept>

namespace risopt {

Beamformer ao_init(const CVector& d) {
    if (norm(d) <= 0.0) throw std::invalid_argument("ao_init: zero direct link");
    return mrt(d);
}

PhaseConfig phase_update(const CVector& g, const CMatrix& F, const Beamformer& w, const CVector& d) {
    const std::size_t m = F.rows();
    const std::size_t n_b = F.cols();
    if (g.size() != m || d.size() != n_b || w.w.size() != n_b)
        throw std::invalid_argument("phase_update: dimension mismatch");

    cplx dw{};
    for (std::size_t j = 0; j < n_b; ++j) dw += d[j] * w.w[j];
    const double phi0 = (dw == cplx{}) ? 0.0 : std::arg(dw);

    PhaseConfig phases = PhaseConfig::zeros(m);
    for (std::size_t i = 0; i < m; ++i) {
        cplx fw{};
        for (std::size_t j = 0; j < n_b; ++j) fw += F(i, j) * w.w[j];
        const cplx cascade = g[i] * fw;
        if (cascade == cplx{}) continue;  // element contributes nothing, leave at 0
        phases.theta[i] = phi0 - std::arg(cascade);
    }
    phases.wrap();
    return phases;
}

AoResult ao_iterate(const ChannelRealization& ch, std::size_t user, std::size_t iterations,
                    double tx_power_w) {
    if (user >= ch.g.size()) throw std::invalid_argument("ao_iterate: user index out of range");
    if (iterations < 1) throw std::invalid_argument("ao_iterate: iterations must be >= 1");
    const CVector& g = ch.g[user];
    const CVector& d = ch.d[user];
    const CMatrix& F = ch.F;

    AoResult res;
    Beamformer w;
    if (norm(d) > 0.0) {
        w = ao_init(d);
    } else {
        // Direct link fully blocked: align to the first BS antenna's element
        // signatures instead and flag the trial.
        res.direct_link_blocked = true;
        CVector col(F.rows());
        for (std::size_t i = 0; i < F.rows(); ++i) col[i] = F(i, 0);
        if (norm(col) <= 0.0) throw std::invalid_argument("ao_iterate: all channels are zero");
        CVector e(F.cols(), cplx{});
        e[0] = 1.0;
        w = Beamformer{std::move(e)};
    }

    PhaseConfig theta = PhaseConfig::zeros(F.rows());
    auto record = [&](std::size_t it) {
        const CVector h = effective_channel(g, theta, F, d);
        cplx hw{};
        for (std::size_t j = 0; j < h.size(); ++j) hw += h[j] * w.w[j];
        res.trace.push_back(AoState{it, theta, w, std::norm(hw)});
    };

    for (std::size_t it = 1; it <= iterations; ++it) {
        theta = phase_update(g, F, w, d);
        record(it);
        const CVector h = effective_channel(g, theta, F, d);
        w = mrt(h);
        record(it);
    }

    const CVector h = effective_channel(g, theta, F, d);
    res.gain = norm_sq(h);
    res.rate = rate_bpshz(res.gain, tx_power_w, ch.noise_power_w);
    res.phases = std::move(theta);
    res.beamformer = std::move(w);
    return res;
}

}  // namespace risopt
