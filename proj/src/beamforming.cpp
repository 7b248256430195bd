#include "risopt/beamforming.hpp"

#include <cmath>
#include <stdexcept>

namespace risopt {

void PhaseConfig::wrap() {
    for (double& t : theta) {
        t = std::fmod(t, 2.0 * M_PI);
        if (t < 0.0) t += 2.0 * M_PI;
        if (t >= 2.0 * M_PI) t = 0.0;  // fmod can land exactly on 2pi after rounding
    }
}

CVector effective_channel(const CVector& g, const PhaseConfig& theta, const CMatrix& F, const CVector& d) {
    const std::size_t m = F.rows();
    const std::size_t n_b = F.cols();
    if (g.size() != m || theta.theta.size() != m || d.size() != n_b)
        throw std::invalid_argument("effective_channel: dimension mismatch");
    CVector h = d;
    for (std::size_t i = 0; i < m; ++i) {
        const cplx coeff = g[i] * std::polar(1.0, theta.theta[i]);
        for (std::size_t j = 0; j < n_b; ++j) h[j] += coeff * F(i, j);
    }
    return h;
}

Beamformer mrt(const CVector& h) {
    const double nrm = norm(h);
    if (nrm <= 0.0) throw std::invalid_argument("mrt: zero channel");
    CVector w(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) w[i] = std::conj(h[i]) / nrm;
    return Beamformer{std::move(w)};
}

double rate_bpshz(double channel_gain, double tx_power_w, double noise_w) {
    if (channel_gain < 0.0) throw std::invalid_argument("rate_bpshz: gain must be non-negative");
    if (noise_w <= 0.0) throw std::invalid_argument("rate_bpshz: noise power must be positive");
    return std::log2(1.0 + channel_gain * tx_power_w / noise_w);
}

double gamma_max(const CVector& g, const CMatrix& F, const CVector& d) {
    const std::size_t m = F.rows();
    const std::size_t n_b = F.cols();
    if (g.size() != m || d.size() != n_b) throw std::invalid_argument("gamma_max: dimension mismatch");
    double total = 0.0;
    for (std::size_t j = 0; j < n_b; ++j) {
        double coherent = std::abs(d[j]);
        for (std::size_t i = 0; i < m; ++i) coherent += std::abs(g[i]) * std::abs(F(i, j));
        total += coherent * coherent;
    }
    return total;
}

std::size_t select_user(const ChannelRealization& ch) {
    if (ch.g.empty()) throw std::invalid_argument("select_user: no users");
    std::size_t best = 0;
    double best_gamma = gamma_max(ch.g[0], ch.F, ch.d[0]);
    for (std::size_t k = 1; k < ch.g.size(); ++k) {
        const double gk = gamma_max(ch.g[k], ch.F, ch.d[k]);
        if (gk > best_gamma) {
            best_gamma = gk;
            best = k;
        }
    }
    return best;
}

}  // namespace risopt
