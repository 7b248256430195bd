#include <doctest.h>

#include <cmath>

#include "risopt/beamforming.hpp"
#include "risopt/rng.hpp"

using namespace risopt;

namespace {

ChannelRealization random_realization(std::size_t n_b, std::size_t m, std::size_t users, RngStream& rng) {
    ChannelRealization ch;
    ch.F = CMatrix(m, n_b);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n_b; ++j) ch.F(i, j) = cplx(rng.normal(), rng.normal());
    ch.g.resize(users);
    ch.d.resize(users);
    for (std::size_t k = 0; k < users; ++k) {
        ch.g[k] = complex_gaussian_vector(m, rng);
        ch.d[k] = complex_gaussian_vector(n_b, rng);
    }
    ch.noise_power_w = 1.0;
    return ch;
}

}  // namespace

TEST_CASE("effective_channel: zero reflection leaves the direct link") {
    CMatrix F(2, 3);
    F(0, 0) = 1.0;
    const CVector g(2, cplx{});
    const CVector d = {cplx(1, 2), cplx(3, -1), cplx(0, 0.5)};
    const CVector h = effective_channel(g, PhaseConfig::zeros(2), F, d);
    for (std::size_t j = 0; j < 3; ++j) CHECK(h[j] == d[j]);
}

TEST_CASE("effective_channel: scalar case h = g f + d") {
    CMatrix F(1, 1);
    F(0, 0) = cplx(2.0, 1.0);
    const CVector g = {cplx(0.5, -0.5)};
    const CVector d = {cplx(1.0, 1.0)};
    const CVector h = effective_channel(g, PhaseConfig::zeros(1), F, d);
    CHECK(std::abs(h[0] - (g[0] * F(0, 0) + d[0])) < 1e-15);
}

TEST_CASE("effective_channel: matches brute-force double sum") {
    RngStream rng(21, 0);
    const ChannelRealization ch = random_realization(3, 6, 1, rng);
    PhaseConfig theta = PhaseConfig::zeros(6);
    for (double& t : theta.theta) t = 2.0 * M_PI * rng.uniform();
    const CVector h = effective_channel(ch.g[0], theta, ch.F, ch.d[0]);
    for (std::size_t j = 0; j < 3; ++j) {
        cplx expect = ch.d[0][j];
        for (std::size_t i = 0; i < 6; ++i)
            expect += ch.g[0][i] * std::polar(1.0, theta.theta[i]) * ch.F(i, j);
        CHECK(std::abs(h[j] - expect) < 1e-12);
    }
}

TEST_CASE("effective_channel: dimension mismatch rejected") {
    CMatrix F(2, 2);
    CHECK_THROWS_AS(effective_channel(CVector(3), PhaseConfig::zeros(2), F, CVector(2)),
                    std::invalid_argument);
}

TEST_CASE("mrt: reference cases") {
    const Beamformer w1 = mrt({cplx(1, 0), cplx(0, 0)});
    CHECK(std::abs(w1.w[0] - cplx(1, 0)) < 1e-15);
    CHECK(std::abs(w1.w[1]) < 1e-15);

    const Beamformer w2 = mrt({cplx(3, 4)});
    CHECK(std::abs(w2.w[0] - cplx(0.6, -0.8)) < 1e-15);

    RngStream rng(4, 0);
    const CVector h = complex_gaussian_vector(5, rng);
    const Beamformer w = mrt(h);
    CHECK(norm(w.w) == doctest::Approx(1.0).epsilon(1e-12));
    cplx hw{};
    for (std::size_t i = 0; i < 5; ++i) hw += h[i] * w.w[i];
    CHECK(std::abs(hw) == doctest::Approx(norm(h)).epsilon(1e-12));

    CHECK_THROWS_AS(mrt(CVector(3, cplx{})), std::invalid_argument);
}

TEST_CASE("mrt: beats random unit-norm beamformers") {
    RngStream rng(14, 0);
    const CVector h = complex_gaussian_vector(4, rng);
    const Beamformer w = mrt(h);
    cplx hw{};
    for (std::size_t i = 0; i < 4; ++i) hw += h[i] * w.w[i];
    for (int t = 0; t < 100; ++t) {
        CVector u = complex_gaussian_vector(4, rng);
        const double nu = norm(u);
        cplx hu{};
        for (std::size_t i = 0; i < 4; ++i) hu += h[i] * u[i] / nu;
        CHECK(std::abs(hw) >= std::abs(hu) - 1e-12);
    }
}

TEST_CASE("rate_bpshz: reference points and monotonicity") {
    CHECK(rate_bpshz(1.0, 1.0, 1.0) == doctest::Approx(1.0));
    CHECK(rate_bpshz(0.0, 10.0, 1.0) == 0.0);
    CHECK(rate_bpshz(3.0, 1.0, 1.0) == doctest::Approx(2.0));
    CHECK(rate_bpshz(2.0, 1.0, 1.0) > rate_bpshz(1.0, 1.0, 1.0));
    CHECK(rate_bpshz(1.0, 2.0, 1.0) > rate_bpshz(1.0, 1.0, 1.0));
    CHECK_THROWS_AS(rate_bpshz(1.0, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(rate_bpshz(-1.0, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("gamma_max: reference cases") {
    CMatrix F1(1, 1);
    F1(0, 0) = cplx(0, 1);
    CHECK(gamma_max({cplx(1, 0)}, F1, {cplx(0, -1)}) == doctest::Approx(4.0));

    CMatrix F2(2, 1);
    F2(0, 0) = 1.0;
    F2(1, 0) = cplx(0, -1);
    CHECK(gamma_max({cplx(1, 0), cplx(0, 1)}, F2, {cplx(-1, 0)}) == doctest::Approx(9.0));

    CMatrix Fz(2, 2);
    CHECK(gamma_max(CVector(2, cplx{}), Fz, CVector(2, cplx{})) == 0.0);
}

TEST_CASE("gamma_max: upper-bounds the achieved gain for any phases") {
    RngStream rng(33, 0);
    for (int t = 0; t < 50; ++t) {
        const ChannelRealization ch = random_realization(3, 8, 1, rng);
        PhaseConfig theta = PhaseConfig::zeros(8);
        for (double& a : theta.theta) a = 2.0 * M_PI * rng.uniform();
        const double gain = norm_sq(effective_channel(ch.g[0], theta, ch.F, ch.d[0]));
        CHECK(gain <= gamma_max(ch.g[0], ch.F, ch.d[0]) + 1e-9);
    }
}

TEST_CASE("select_user: argmax of gamma_max, stable under power scaling") {
    RngStream rng(55, 0);
    const ChannelRealization ch = random_realization(4, 8, 4, rng);
    const std::size_t k = select_user(ch);
    double best = -1.0;
    std::size_t expect = 0;
    for (std::size_t u = 0; u < 4; ++u) {
        const double gu = gamma_max(ch.g[u], ch.F, ch.d[u]);
        if (gu > best) {
            best = gu;
            expect = u;
        }
    }
    CHECK(k == expect);
    // Selection depends only on channel gains, not transmit power.

    ChannelRealization single = ch;
    single.g.resize(1);
    single.d.resize(1);
    CHECK(select_user(single) == 0);
}
