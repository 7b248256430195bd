#ifndef RISOPT_CHANNEL_HPP
#define RISOPT_CHANNEL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "risopt/linalg.hpp"
#include "risopt/rng.hpp"

namespace risopt {

enum class Scheme { UsIdeal, UsJo, UsAo, Tdma, Fdma };

const char* scheme_name(Scheme s);
Scheme scheme_from_name(const std::string& name);

/// Full scenario description. Loadable from a flat key=value config file.
struct SystemConfig {
    std::size_t n_b = 4;                          // BS antennas
    std::size_t users = 4;                        // K
    std::vector<std::size_t> elements_per_surface = {8, 8};  // N_s, one entry per surface
    double tx_power_w = 20.0;                     // P_d
    double bandwidth_hz = 10e6;
    double noise_density_dbm_hz = -174.0;
    double noise_figure_db = 9.0;
    double carrier_ghz = 2.0;
    double cell_radius_m = 300.0;
    double ris_ring_radius_m = 90.0;
    double nakagami_m_direct = 2.5;               // BS-user links
    double nakagami_m_bs_ris = 2.5;
    double nakagami_m_ris_user = 2.5;
    double pathloss_ref_db = -30.0;               // L0 for the LOS BS-RIS law
    double pathloss_exponent = 2.0;               // alpha for the LOS BS-RIS law
    std::size_t trials = 200;
    std::uint64_t seed = 1;
    std::size_t ao_iterations = 3;
    std::size_t sdr_rank = 0;                     // 0 = auto
    std::size_t sdr_max_sweeps = 500;
    std::size_t sdr_randomizations = 1000;
    std::vector<Scheme> schemes = {Scheme::UsIdeal, Scheme::UsJo, Scheme::UsAo,
                                   Scheme::Tdma, Scheme::Fdma};

    std::size_t surfaces() const { return elements_per_surface.size(); }
    std::size_t total_elements() const;  // M

    /// Throws std::invalid_argument naming the violated constraint.
    void validate() const;
};

SystemConfig load_config(const std::string& path);
/// Applies one "key=value" override to cfg; throws on unknown key or bad value.
void apply_override(SystemConfig& cfg, const std::string& key_value);
std::string config_to_text(const SystemConfig& cfg);

struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// BS at the origin; users inside the cell disc; surfaces on the RIS ring.
struct Geometry {
    std::vector<Point> users;
    std::vector<Point> surfaces;
};

struct ChannelRealization {
    CMatrix F;               // M x N_b, BS -> all elements (surface-order row stacking)
    std::vector<CVector> g;  // per user, length M (elements -> user)
    std::vector<CVector> d;  // per user, length N_b (BS -> user)
    double noise_power_w = 0.0;
};

/// 3GPP UMi NLOS large-scale loss in dB: -22.7 - 26 log10(f_c) - 36.7 log10(d).
double umi_pathloss_db(double distance_m, double carrier_ghz);
/// LOS law in dB: L0 - 10 alpha log10(d).
double los_pathloss_db(double distance_m, double alpha, double l0_db);
/// Thermal noise power in watts from density (dBm/Hz), bandwidth, noise figure.
double noise_power_w(double bandwidth_hz, double density_dbm_hz, double noise_figure_db);
/// Nakagami-m magnitude with E[X^2] = omega.
double sample_nakagami(double m, double omega, RngStream& rng);
/// Nakagami-m CDF (regularized incomplete gamma form).
double nakagami_cdf(double m, double omega, double x);

Geometry draw_topology(const SystemConfig& cfg, RngStream& rng);
ChannelRealization realize_channels(const Geometry& geom, const SystemConfig& cfg, RngStream& rng);

}  // namespace risopt

#endif
