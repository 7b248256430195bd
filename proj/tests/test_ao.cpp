#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "risopt/ao.hpp"
#include "risopt/rng.hpp"
#include "risopt/stats.hpp"

using namespace risopt;

namespace {

ChannelRealization random_realization(std::size_t n_b, std::size_t m, RngStream& rng) {
    ChannelRealization ch;
    ch.F = CMatrix(m, n_b);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n_b; ++j) ch.F(i, j) = cplx(rng.normal(), rng.normal());
    ch.g = {complex_gaussian_vector(m, rng)};
    ch.d = {complex_gaussian_vector(n_b, rng)};
    ch.noise_power_w = 1.0;
    return ch;
}

}  // namespace

TEST_CASE("ao_init: conjugate of the direct link, unit norm") {
    const Beamformer w1 = ao_init({cplx(1, 0), cplx(0, 0)});
    CHECK(std::abs(w1.w[0] - cplx(1, 0)) < 1e-15);

    const Beamformer w2 = ao_init({cplx(3, 0), cplx(0, 4)});
    CHECK(std::abs(w2.w[0] - cplx(0.6, 0)) < 1e-15);
    CHECK(std::abs(w2.w[1] - cplx(0, -0.8)) < 1e-15);

    RngStream rng(80, 0);
    const CVector d = complex_gaussian_vector(6, rng);
    CHECK(norm(ao_init(d).w) == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(ao_init(CVector(2, cplx{})), std::invalid_argument);
}

TEST_CASE("phase_update: aligned real-positive channels need no rotation") {
    CMatrix F(2, 1);
    F(0, 0) = 1.5;
    F(1, 0) = 0.5;
    const CVector g = {cplx(1, 0), cplx(2, 0)};
    const CVector d = {cplx(3, 0)};
    const Beamformer w{{cplx(1, 0)}};
    const PhaseConfig theta = phase_update(g, F, w, d);
    for (double t : theta.theta) CHECK(std::min(t, 2.0 * M_PI - t) < 1e-12);
}

TEST_CASE("phase_update: single antenna coherently sums all magnitudes") {
    RngStream rng(81, 0);
    const ChannelRealization ch = random_realization(1, 5, rng);
    const Beamformer w{{std::polar(1.0, -std::arg(ch.d[0][0]))}};  // MRT for the direct scalar
    const PhaseConfig theta = phase_update(ch.g[0], ch.F, w, ch.d[0]);
    const CVector h = effective_channel(ch.g[0], theta, ch.F, ch.d[0]);
    double expect = std::abs(ch.d[0][0]);
    for (std::size_t i = 0; i < 5; ++i) expect += std::abs(ch.g[0][i]) * std::abs(ch.F(i, 0));
    CHECK(std::abs(h[0]) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("phase_update: objective equals the aligned magnitude sum") {
    RngStream rng(82, 0);
    for (int t = 0; t < 20; ++t) {
        const ChannelRealization ch = random_realization(4, 9, rng);
        const Beamformer w = ao_init(ch.d[0]);
        const PhaseConfig theta = phase_update(ch.g[0], ch.F, w, ch.d[0]);
        const CVector h = effective_channel(ch.g[0], theta, ch.F, ch.d[0]);
        cplx hw{};
        for (std::size_t j = 0; j < h.size(); ++j) hw += h[j] * w.w[j];
        cplx dw{};
        for (std::size_t j = 0; j < h.size(); ++j) dw += ch.d[0][j] * w.w[j];
        double aligned = std::abs(dw);
        for (std::size_t i = 0; i < 9; ++i) {
            cplx fw{};
            for (std::size_t j = 0; j < h.size(); ++j) fw += ch.F(i, j) * w.w[j];
            aligned += std::abs(ch.g[0][i] * fw);
        }
        CHECK(std::abs(hw) == doctest::Approx(aligned).epsilon(1e-10));
    }
}

TEST_CASE("ao_iterate: single antenna reaches the alignment bound in one round") {
    RngStream rng(83, 0);
    for (int t = 0; t < 10; ++t) {
        const ChannelRealization ch = random_realization(1, 12, rng);
        const AoResult res = ao_iterate(ch, 0, 1, 1.0);
        CHECK(res.gain == doctest::Approx(gamma_max(ch.g[0], ch.F, ch.d[0])).epsilon(1e-9));
    }
}

TEST_CASE("ao_iterate: half-step objectives never decrease") {
    RngStream rng(84, 0);
    for (int t = 0; t < 100; ++t) {
        const ChannelRealization ch = random_realization(4, 16, rng);
        const AoResult res = ao_iterate(ch, 0, 5, 1.0);
        for (std::size_t i = 1; i < res.trace.size(); ++i)
            CHECK(res.trace[i].objective >= res.trace[i - 1].objective * (1.0 - 1e-12) - 1e-12);
        CHECK(norm(res.beamformer.w) == doctest::Approx(1.0).epsilon(1e-12));
        for (double a : res.phases.theta) {
            CHECK(a >= 0.0);
            CHECK(a < 2.0 * M_PI);
        }
        CHECK(res.gain <= gamma_max(ch.g[0], ch.F, ch.d[0]) + 1e-9);
    }
}

TEST_CASE("ao_iterate: three iterations are essentially converged") {
    // Uses the physical channel model: convergence speed depends on the
    // direct-link-to-cascade balance, which synthetic unit-variance
    // channels do not reproduce.
    SystemConfig cfg;
    cfg.n_b = 4;
    cfg.users = 1;
    cfg.elements_per_surface = {8, 8};
    std::vector<double> rel_gaps;
    for (std::uint64_t t = 0; t < 100; ++t) {
        RngStream topo(85, 2 * t);
        RngStream chan(85, 2 * t + 1);
        const Geometry geom = draw_topology(cfg, topo);
        const ChannelRealization ch = realize_channels(geom, cfg, chan);
        const AoResult a3 = ao_iterate(ch, 0, 3, cfg.tx_power_w);
        const AoResult a10 = ao_iterate(ch, 0, 10, cfg.tx_power_w);
        rel_gaps.push_back((a10.gain - a3.gain) / a10.gain);
    }
    CHECK(median(rel_gaps) < 1e-3);
}

TEST_CASE("ao_iterate: zero reflection degenerates to direct-link MRT") {
    RngStream rng(86, 0);
    ChannelRealization ch = random_realization(3, 4, rng);
    ch.g[0] = CVector(4, cplx{});
    const AoResult res = ao_iterate(ch, 0, 3, 2.0);
    CHECK(res.gain == doctest::Approx(norm_sq(ch.d[0])).epsilon(1e-12));
    CHECK(res.rate == doctest::Approx(rate_bpshz(norm_sq(ch.d[0]), 2.0, 1.0)).epsilon(1e-12));
}

TEST_CASE("ao_iterate: blocked direct link is handled and flagged") {
    RngStream rng(87, 0);
    ChannelRealization ch = random_realization(3, 4, rng);
    ch.d[0] = CVector(3, cplx{});
    const AoResult res = ao_iterate(ch, 0, 3, 1.0);
    CHECK(res.direct_link_blocked);
    CHECK(res.gain > 0.0);
}
