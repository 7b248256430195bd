#include "risopt/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "risopt/stats.hpp"

namespace risopt {

std::size_t SystemConfig::total_elements() const {
    std::size_t m = 0;
    for (std::size_t ns : elements_per_surface) m += ns;
    return m;
}

void SystemConfig::validate() const {
    if (n_b < 1) throw std::invalid_argument("config: n_b must be >= 1");
    if (users < 1) throw std::invalid_argument("config: users must be >= 1");
    if (users > n_b) throw std::invalid_argument("config: users must not exceed n_b (K <= N_b)");
    if (elements_per_surface.empty()) throw std::invalid_argument("config: at least one surface required");
    for (std::size_t ns : elements_per_surface)
        if (ns < 1) throw std::invalid_argument("config: every surface needs >= 1 element");
    if (tx_power_w <= 0.0) throw std::invalid_argument("config: tx_power_w must be positive");
    if (bandwidth_hz <= 0.0) throw std::invalid_argument("config: bandwidth_hz must be positive");
    if (carrier_ghz <= 0.0) throw std::invalid_argument("config: carrier_ghz must be positive");
    if (cell_radius_m <= 0.0) throw std::invalid_argument("config: cell_radius_m must be positive");
    if (ris_ring_radius_m <= 0.0) throw std::invalid_argument("config: ris_ring_radius_m must be positive");
    if (ris_ring_radius_m < 1.0) throw std::invalid_argument("config: ris_ring_radius_m must be >= 1 m");
    if (nakagami_m_direct <= 0.0 || nakagami_m_bs_ris <= 0.0 || nakagami_m_ris_user <= 0.0)
        throw std::invalid_argument("config: Nakagami m parameters must be positive");
    if (trials < 1) throw std::invalid_argument("config: trials must be >= 1");
    if (ao_iterations < 1) throw std::invalid_argument("config: ao_iterations must be >= 1");
    if (sdr_randomizations < 1) throw std::invalid_argument("config: sdr_randomizations must be >= 1");
    if (sdr_max_sweeps < 1) throw std::invalid_argument("config: sdr_max_sweeps must be >= 1");
    if (schemes.empty()) throw std::invalid_argument("config: at least one scheme must be enabled");
}

double umi_pathloss_db(double distance_m, double carrier_ghz) {
    if (distance_m < 1.0) throw std::invalid_argument("umi_pathloss_db: distance below 1 m reference");
    if (carrier_ghz <= 0.0) throw std::invalid_argument("umi_pathloss_db: carrier must be positive");
    return -22.7 - 26.0 * std::log10(carrier_ghz) - 36.7 * std::log10(distance_m);
}

double los_pathloss_db(double distance_m, double alpha, double l0_db) {
    if (distance_m < 1.0) throw std::invalid_argument("los_pathloss_db: distance below 1 m reference");
    return l0_db - 10.0 * alpha * std::log10(distance_m);
}

double noise_power_w(double bandwidth_hz, double density_dbm_hz, double noise_figure_db) {
    if (bandwidth_hz <= 0.0) throw std::invalid_argument("noise_power_w: bandwidth must be positive");
    const double dbm = density_dbm_hz + 10.0 * std::log10(bandwidth_hz) + noise_figure_db;
    return std::pow(10.0, (dbm - 30.0) / 10.0);
}

double sample_nakagami(double m, double omega, RngStream& rng) {
    if (m <= 0.0 || omega <= 0.0) throw std::invalid_argument("sample_nakagami: m and omega must be positive");
    // X^2 ~ Gamma(m, omega/m), so E[X^2] = omega.
    return std::sqrt(rng.gamma(m, omega / m));
}

double nakagami_cdf(double m, double omega, double x) {
    if (x <= 0.0) return 0.0;
    return gamma_p(m, m / omega * x * x);
}

Geometry draw_topology(const SystemConfig& cfg, RngStream& rng) {
    cfg.validate();
    Geometry geom;
    geom.users.reserve(cfg.users);
    for (std::size_t k = 0; k < cfg.users; ++k) {
        Point p;
        do {
            const double r = cfg.cell_radius_m * std::sqrt(rng.uniform());
            const double phi = 2.0 * M_PI * rng.uniform();
            p = {r * std::cos(phi), r * std::sin(phi)};
        } while (std::hypot(p.x, p.y) < 1.0);  // keep clear of the 1 m reference distance
        geom.users.push_back(p);
    }
    const std::size_t s_count = cfg.surfaces();
    geom.surfaces.reserve(s_count);
    for (std::size_t s = 0; s < s_count; ++s) {
        const double phi = 2.0 * M_PI * static_cast<double>(s) / static_cast<double>(s_count);
        geom.surfaces.push_back({cfg.ris_ring_radius_m * std::cos(phi), cfg.ris_ring_radius_m * std::sin(phi)});
    }
    return geom;
}

namespace {

double distance(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }

cplx draw_coefficient(double m, double omega_linear, RngStream& rng) {
    const double mag = sample_nakagami(m, omega_linear, rng);
    const double phase = 2.0 * M_PI * rng.uniform();
    return std::polar(mag, phase);
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

}  // namespace

ChannelRealization realize_channels(const Geometry& geom, const SystemConfig& cfg, RngStream& rng) {
    cfg.validate();
    if (geom.users.size() != cfg.users || geom.surfaces.size() != cfg.surfaces())
        throw std::invalid_argument("realize_channels: geometry does not match config");
    const Point bs{0.0, 0.0};
    for (const Point& u : geom.users)
        if (distance(bs, u) < 1.0) throw std::invalid_argument("realize_channels: user closer than 1 m to BS");
    for (const Point& s : geom.surfaces)
        if (distance(bs, s) < 1.0) throw std::invalid_argument("realize_channels: surface closer than 1 m to BS");

    const std::size_t m_total = cfg.total_elements();
    ChannelRealization ch;
    ch.F = CMatrix(m_total, cfg.n_b);
    ch.noise_power_w = noise_power_w(cfg.bandwidth_hz, cfg.noise_density_dbm_hz, cfg.noise_figure_db);

    // BS -> RIS elements: LOS path-loss law at the surface's ring distance.
    std::size_t row = 0;
    for (std::size_t s = 0; s < cfg.surfaces(); ++s) {
        const double omega =
            db_to_linear(los_pathloss_db(distance(bs, geom.surfaces[s]), cfg.pathloss_exponent, cfg.pathloss_ref_db));
        for (std::size_t ns = 0; ns < cfg.elements_per_surface[s]; ++ns, ++row)
            for (std::size_t nb = 0; nb < cfg.n_b; ++nb)
                ch.F(row, nb) = draw_coefficient(cfg.nakagami_m_bs_ris, omega, rng);
    }

    ch.g.resize(cfg.users);
    ch.d.resize(cfg.users);
    for (std::size_t k = 0; k < cfg.users; ++k) {
        const double omega_d = db_to_linear(umi_pathloss_db(distance(bs, geom.users[k]), cfg.carrier_ghz));
        ch.d[k].resize(cfg.n_b);
        for (std::size_t nb = 0; nb < cfg.n_b; ++nb)
            ch.d[k][nb] = draw_coefficient(cfg.nakagami_m_direct, omega_d, rng);

        ch.g[k].resize(m_total);
        std::size_t idx = 0;
        for (std::size_t s = 0; s < cfg.surfaces(); ++s) {
            double dist = distance(geom.surfaces[s], geom.users[k]);
            if (dist < 1.0) dist = 1.0;  // user standing on the surface: clamp to reference distance
            const double omega_g = db_to_linear(umi_pathloss_db(dist, cfg.carrier_ghz));
            for (std::size_t ns = 0; ns < cfg.elements_per_surface[s]; ++ns, ++idx)
                ch.g[k][idx] = draw_coefficient(cfg.nakagami_m_ris_user, omega_g, rng);
        }
    }
    return ch;
}

}  // namespace risopt
