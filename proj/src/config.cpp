#include <fstream>
#include <sstream>
#include <stdexcept>

#include "risopt/channel.hpp"

namespace risopt {

const char* scheme_name(Scheme s) {
    switch (s) {
        case Scheme::UsIdeal: return "us_ideal";
        case Scheme::UsJo: return "us_jo";
        case Scheme::UsAo: return "us_ao";
        case Scheme::Tdma: return "tdma";
        case Scheme::Fdma: return "fdma";
    }
    throw std::logic_error("scheme_name: unreachable");
}

Scheme scheme_from_name(const std::string& name) {
    if (name == "us_ideal") return Scheme::UsIdeal;
    if (name == "us_jo") return Scheme::UsJo;
    if (name == "us_ao") return Scheme::UsAo;
    if (name == "tdma") return Scheme::Tdma;
    if (name == "fdma") return Scheme::Fdma;
    throw std::invalid_argument("unknown scheme: " + name);
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw std::invalid_argument("config: bad numeric value for " + key + ": '" + value + "'");
    }
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const unsigned long long v = std::stoull(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw std::invalid_argument("config: bad integer value for " + key + ": '" + value + "'");
    }
}

void set_key(SystemConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "n_b") cfg.n_b = parse_u64(key, value);
    else if (key == "users") cfg.users = parse_u64(key, value);
    else if (key == "elements_per_surface") {
        // One comma-separated entry per surface, e.g. "8,8".
        std::vector<std::size_t> counts;
        for (const std::string& tok : split_commas(value)) counts.push_back(parse_u64(key, tok));
        if (counts.empty()) throw std::invalid_argument("config: elements_per_surface is empty");
        cfg.elements_per_surface = counts;
    } else if (key == "tx_power_w") cfg.tx_power_w = parse_double(key, value);
    else if (key == "bandwidth_hz") cfg.bandwidth_hz = parse_double(key, value);
    else if (key == "noise_density_dbm_hz") cfg.noise_density_dbm_hz = parse_double(key, value);
    else if (key == "noise_figure_db") cfg.noise_figure_db = parse_double(key, value);
    else if (key == "carrier_ghz") cfg.carrier_ghz = parse_double(key, value);
    else if (key == "cell_radius_m") cfg.cell_radius_m = parse_double(key, value);
    else if (key == "ris_ring_radius_m") cfg.ris_ring_radius_m = parse_double(key, value);
    else if (key == "nakagami_m") {
        const double m = parse_double(key, value);
        cfg.nakagami_m_direct = m;
        cfg.nakagami_m_bs_ris = m;
        cfg.nakagami_m_ris_user = m;
    } else if (key == "nakagami_m_direct") cfg.nakagami_m_direct = parse_double(key, value);
    else if (key == "nakagami_m_bs_ris") cfg.nakagami_m_bs_ris = parse_double(key, value);
    else if (key == "nakagami_m_ris_user") cfg.nakagami_m_ris_user = parse_double(key, value);
    else if (key == "pathloss_ref_db") cfg.pathloss_ref_db = parse_double(key, value);
    else if (key == "pathloss_exponent") cfg.pathloss_exponent = parse_double(key, value);
    else if (key == "trials") cfg.trials = parse_u64(key, value);
    else if (key == "seed") cfg.seed = parse_u64(key, value);
    else if (key == "ao_iterations") cfg.ao_iterations = parse_u64(key, value);
    else if (key == "sdr_rank") cfg.sdr_rank = parse_u64(key, value);
    else if (key == "sdr_max_sweeps") cfg.sdr_max_sweeps = parse_u64(key, value);
    else if (key == "sdr_randomizations") cfg.sdr_randomizations = parse_u64(key, value);
    else if (key == "schemes") {
        std::vector<Scheme> schemes;
        for (const std::string& tok : split_commas(value)) schemes.push_back(scheme_from_name(tok));
        cfg.schemes = schemes;
    } else {
        throw std::invalid_argument("config: unknown key '" + key + "'");
    }
}

}  // namespace

SystemConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open '" + path + "'");
    SystemConfig cfg;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: " + path + ":" + std::to_string(lineno) + ": expected key=value");
        set_key(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return cfg;
}

void apply_override(SystemConfig& cfg, const std::string& key_value) {
    const auto eq = key_value.find('=');
    if (eq == std::string::npos)
        throw std::invalid_argument("override must be key=value, got '" + key_value + "'");
    set_key(cfg, trim(key_value.substr(0, eq)), trim(key_value.substr(eq + 1)));
}

std::string config_to_text(const SystemConfig& cfg) {
    std::ostringstream out;
    out.precision(17);
    out << "n_b = " << cfg.n_b << "\n";
    out << "users = " << cfg.users << "\n";
    out << "elements_per_surface = ";
    for (std::size_t s = 0; s < cfg.elements_per_surface.size(); ++s)
        out << (s ? "," : "") << cfg.elements_per_surface[s];
    out << "\n";
    out << "tx_power_w = " << cfg.tx_power_w << "\n";
    out << "bandwidth_hz = " << cfg.bandwidth_hz << "\n";
    out << "noise_density_dbm_hz = " << cfg.noise_density_dbm_hz << "\n";
    out << "noise_figure_db = " << cfg.noise_figure_db << "\n";
    out << "carrier_ghz = " << cfg.carrier_ghz << "\n";
    out << "cell_radius_m = " << cfg.cell_radius_m << "\n";
    out << "ris_ring_radius_m = " << cfg.ris_ring_radius_m << "\n";
    out << "nakagami_m_direct = " << cfg.nakagami_m_direct << "\n";
    out << "nakagami_m_bs_ris = " << cfg.nakagami_m_bs_ris << "\n";
    out << "nakagami_m_ris_user = " << cfg.nakagami_m_ris_user << "\n";
    out << "pathloss_ref_db = " << cfg.pathloss_ref_db << "\n";
    out << "pathloss_exponent = " << cfg.pathloss_exponent << "\n";
    out << "trials = " << cfg.trials << "\n";
    out << "seed = " << cfg.seed << "\n";
    out << "ao_iterations = " << cfg.ao_iterations << "\n";
    out << "sdr_rank = " << cfg.sdr_rank << "\n";
    out << "sdr_max_sweeps = " << cfg.sdr_max_sweeps << "\n";
    out << "sdr_randomizations = " << cfg.sdr_randomizations << "\n";
    out << "schemes = ";
    for (std::size_t i = 0; i < cfg.schemes.size(); ++i)
        out << (i ? "," : "") << scheme_name(cfg.schemes[i]);
    out << "\n";
    return out.str();
}

}  // namespace risopt
