#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "risopt/channel.hpp"
#include "risopt/stats.hpp"

using namespace risopt;

namespace {

SystemConfig tiny_config() {
    SystemConfig cfg;
    cfg.n_b = 1;
    cfg.users = 1;
    cfg.elements_per_surface = {1};
    cfg.trials = 1;
    return cfg;
}

}  // namespace

TEST_CASE("umi_pathloss_db: reference evaluations") {
    CHECK(umi_pathloss_db(1.0, 1.0) == doctest::Approx(-22.7).epsilon(1e-12));
    CHECK(umi_pathloss_db(100.0, 2.0) == doctest::Approx(-103.93).epsilon(1e-4));
    CHECK(umi_pathloss_db(300.0, 2.0) == doctest::Approx(-121.44).epsilon(1e-4));
    CHECK_THROWS_AS(umi_pathloss_db(0.5, 2.0), std::invalid_argument);
}

TEST_CASE("los_pathloss_db: reference evaluations") {
    CHECK(los_pathloss_db(1.0, 2.0, -30.0) == doctest::Approx(-30.0));
    CHECK(los_pathloss_db(90.0, 2.0, -30.0) == doctest::Approx(-69.08).epsilon(1e-4));
    CHECK(los_pathloss_db(90.0, 0.0, -30.0) == doctest::Approx(-30.0));
    CHECK_THROWS_AS(los_pathloss_db(0.9, 2.0, -30.0), std::invalid_argument);
}

TEST_CASE("noise_power_w: reference evaluations") {
    CHECK(noise_power_w(1.0, -174.0, 0.0) == doctest::Approx(std::pow(10.0, -20.4)).epsilon(1e-12));
    CHECK(noise_power_w(1e7, -174.0, 9.0) == doctest::Approx(3.162e-13).epsilon(1e-3));
    CHECK(noise_power_w(1e7, -174.0, 0.0) == doctest::Approx(std::pow(10.0, -13.4)).epsilon(1e-12));
    CHECK_THROWS_AS(noise_power_w(0.0, -174.0, 0.0), std::invalid_argument);
}

TEST_CASE("sample_nakagami: moments") {
    RngStream rng(2024, 0);
    const int n = 100000;
    double sum2 = 0.0, sum4 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = sample_nakagami(2.5, 1.0, rng);
        CHECK(x > 0.0);
        sum2 += x * x;
        sum4 += x * x * x * x;
    }
    CHECK(sum2 / n == doctest::Approx(1.0).epsilon(0.01));
    CHECK(sum4 / n == doctest::Approx(1.4).epsilon(0.02));  // Omega^2 (1 + 1/m)
    CHECK_THROWS_AS(sample_nakagami(0.0, 1.0, rng), std::invalid_argument);
    CHECK_THROWS_AS(sample_nakagami(1.0, -1.0, rng), std::invalid_argument);
}

TEST_CASE("sample_nakagami: m=1 matches Rayleigh CDF") {
    RngStream rng(77, 0);
    std::vector<double> samples(100000);
    for (double& s : samples) s = sample_nakagami(1.0, 1.0, rng);
    const double ks = ks_distance(
        samples, [](double x, const void*) { return x <= 0.0 ? 0.0 : 1.0 - std::exp(-x * x); }, nullptr);
    CHECK(ks < 0.01);
}

TEST_CASE("draw_topology: equal angular spacing on the ring") {
    SystemConfig cfg;
    cfg.elements_per_surface = {1, 1, 1, 1};
    RngStream rng(3, 0);
    const Geometry geom = draw_topology(cfg, rng);
    REQUIRE(geom.surfaces.size() == 4);
    for (std::size_t s = 0; s < 4; ++s) {
        CHECK(std::hypot(geom.surfaces[s].x, geom.surfaces[s].y) == doctest::Approx(90.0));
        const double expected = 2.0 * M_PI * s / 4.0;
        CHECK(std::atan2(geom.surfaces[s].y, geom.surfaces[s].x) ==
              doctest::Approx(expected > M_PI ? expected - 2.0 * M_PI : expected).epsilon(1e-12));
    }
    for (const Point& u : geom.users) CHECK(std::hypot(u.x, u.y) <= cfg.cell_radius_m);
}

TEST_CASE("draw_topology: uniform-disc second moment") {
    SystemConfig cfg;
    cfg.users = 4;
    double sum = 0.0;
    std::size_t n = 0;
    for (int t = 0; t < 2500; ++t) {
        RngStream rng(9, t);
        const Geometry geom = draw_topology(cfg, rng);
        for (const Point& u : geom.users) {
            sum += u.x * u.x + u.y * u.y;
            ++n;
        }
    }
    const double expected = cfg.cell_radius_m * cfg.cell_radius_m / 2.0;
    CHECK(sum / n == doctest::Approx(expected).epsilon(0.02));
}

TEST_CASE("draw_topology: deterministic for a fixed stream") {
    SystemConfig cfg;
    RngStream a(5, 17), b(5, 17);
    const Geometry ga = draw_topology(cfg, a);
    const Geometry gb = draw_topology(cfg, b);
    for (std::size_t k = 0; k < ga.users.size(); ++k) {
        CHECK(ga.users[k].x == gb.users[k].x);
        CHECK(ga.users[k].y == gb.users[k].y);
    }
}

TEST_CASE("realize_channels: dimensions in the 1x1x1 case") {
    const SystemConfig cfg = tiny_config();
    RngStream rng(1, 0);
    const Geometry geom = draw_topology(cfg, rng);
    const ChannelRealization ch = realize_channels(geom, cfg, rng);
    CHECK(ch.F.rows() == 1);
    CHECK(ch.F.cols() == 1);
    REQUIRE(ch.g.size() == 1);
    CHECK(ch.g[0].size() == 1);
    REQUIRE(ch.d.size() == 1);
    CHECK(ch.d[0].size() == 1);
    CHECK(ch.noise_power_w > 0.0);
}

TEST_CASE("realize_channels: mean direct-link power matches the link's path loss") {
    const SystemConfig cfg = tiny_config();
    Geometry geom;
    geom.users = {{100.0, 0.0}};
    geom.surfaces = {{90.0, 0.0}};
    const double omega = std::pow(10.0, umi_pathloss_db(100.0, cfg.carrier_ghz) / 10.0);
    double sum = 0.0;
    const int n = 10000;
    for (int t = 0; t < n; ++t) {
        RngStream rng(31, t);
        const ChannelRealization ch = realize_channels(geom, cfg, rng);
        sum += std::norm(ch.d[0][0]);
    }
    CHECK(sum / n == doctest::Approx(omega).epsilon(0.02));
}

TEST_CASE("realize_channels: co-located users share Omega but not draws") {
    SystemConfig cfg = tiny_config();
    cfg.n_b = 2;
    cfg.users = 2;
    Geometry geom;
    geom.users = {{50.0, 20.0}, {50.0, 20.0}};
    geom.surfaces = {{90.0, 0.0}};
    RngStream rng(8, 0);
    const ChannelRealization ch = realize_channels(geom, cfg, rng);
    CHECK(ch.d[0][0] != ch.d[1][0]);

    double p0 = 0.0, p1 = 0.0;
    for (int t = 0; t < 20000; ++t) {
        RngStream r(13, t);
        const ChannelRealization c = realize_channels(geom, cfg, r);
        p0 += std::norm(c.d[0][0]);
        p1 += std::norm(c.d[1][0]);
    }
    CHECK(p0 / p1 == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("realize_channels: rejects users closer than 1 m") {
    const SystemConfig cfg = tiny_config();
    Geometry geom;
    geom.users = {{0.1, 0.0}};
    geom.surfaces = {{90.0, 0.0}};
    RngStream rng(1, 0);
    CHECK_THROWS_AS(realize_channels(geom, cfg, rng), std::invalid_argument);
}

TEST_CASE("SystemConfig: validation rejects K > N_b") {
    SystemConfig cfg;
    cfg.n_b = 2;
    cfg.users = 3;
    CHECK_THROWS_WITH_AS(cfg.validate(), "config: users must not exceed n_b (K <= N_b)",
                         std::invalid_argument);
}

TEST_CASE("SystemConfig: round-trips through text form") {
    SystemConfig cfg;
    cfg.n_b = 8;
    cfg.users = 3;
    cfg.elements_per_surface = {4, 6};
    cfg.seed = 12345;
    cfg.schemes = {Scheme::UsAo, Scheme::Tdma};
    const std::string text = config_to_text(cfg);

    const std::string path = "roundtrip_test.cfg";
    {
        std::ofstream f(path);
        f << text;
    }
    const SystemConfig back = load_config(path);
    CHECK(back.n_b == cfg.n_b);
    CHECK(back.users == cfg.users);
    CHECK(back.elements_per_surface == cfg.elements_per_surface);
    CHECK(back.seed == cfg.seed);
    CHECK(back.schemes == cfg.schemes);
    std::remove(path.c_str());
}

TEST_CASE("apply_override: unknown keys rejected") {
    SystemConfig cfg;
    CHECK_THROWS_AS(apply_override(cfg, "nonsense=1"), std::invalid_argument);
    apply_override(cfg, "trials=10");
    CHECK(cfg.trials == 10);
}
