#include "becavity/config.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "becavity/constants.hpp"

namespace becavity {

namespace cn = constants;

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::size_t edit_distance(const std::string& a, const std::string& b) {
    std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

} // namespace

const std::vector<Config::Entry>& Config::schema() {
    using T = Type;
    static const std::vector<Entry> s = {
        {"g0_hz", T::real, "10.9e6", "atom-photon coupling, linear Hz"},
        {"kappa_hz", T::real, "1.3e6", "cavity field decay rate, linear Hz"},
        {"gamma_hz", T::real, "3.0e6", "atomic amplitude decay rate, linear Hz"},
        {"lambda_m", T::real, "780e-9", "cavity wavelength, m"},
        {"mass_kg", T::real, format_real(cn::mass_rb87), "atomic mass, kg (87Rb)"},
        {"atom_number", T::real, "1.2e5", "atom number N"},
        {"delta_a_hz", T::real, "32e9", "pump-atom detuning, linear Hz"},
        {"pump_photons", T::real, "7.3", "mean intracavity photons on resonance, eta^2/kappa^2"},
        {"eta_hz", T::real, "0", "pump amplitude, linear Hz; overrides pump_photons if > 0"},
        {"polarization", T::text, "sigma_minus", "coupling preset: sigma_minus | sigma_plus"},
        {"trap_x_hz", T::real, "222", "trap frequency along cavity axis, Hz"},
        {"trap_y_hz", T::real, "37", "trap frequency, Hz"},
        {"trap_z_hz", T::real, "210", "trap frequency (vertical), Hz"},
        {"g1d_jm", T::real, "0", "1D interaction strength, J*m; 0 = calibrate to mu_target_hz"},
        {"mu_target_hz", T::real, "2400", "chemical potential pinned by g1d calibration, Hz"},
        {"cavity_length_m", T::real, "178e-6", "cavity length, m"},
        {"delta_c_start_hz", T::real, "", "scan start detuning, Hz; default U0*N/2 - 15 MHz"},
        {"scan_rate_hz_per_s", T::real, "2.9e9", "detuning scan rate, Hz/s (2.9 MHz/ms)"},
        {"scan_duration_s", T::real, "4e-3", "scan duration, s"},
        {"dt_s", T::real, "1e-7", "integrator time step, s"},
        {"sample_interval_s", T::real, "5e-7", "trajectory sample interval, s"},
        {"cavity_mode", T::text, "adiabatic", "cavity treatment: adiabatic | dynamic"},
        {"field_dt_s", T::real, "1e-9", "field substep for cavity_mode=dynamic, s"},
        {"grid_extent_lambdas", T::real, "13", "1D box size in wavelengths (multiple of 0.5)"},
        {"grid_points_per_half_lambda", T::integer, "10", "grid points per lambda/2"},
        {"gs_tol", T::real, "1e-10", "ground state energy convergence, relative"},
        {"gs_max_steps", T::integer, "2000000", "imaginary-time step budget"},
        {"gs_photon_tol", T::real, "1e-8", "self-consistency tolerance on photon number"},
        {"edge_density_guard", T::real, "1e-8", "max ground-state edge density / peak density"},
        {"loss_enabled", T::boolean, "true", "apply atom loss during propagation"},
        {"loss_background_per_s", T::real, "4.5e4", "background atom loss, atoms/s (45/ms)"},
        {"loss_enhanced_per_s", T::real, "1.5e6", "oscillation-induced loss, atoms/s (1.5e3/ms)"},
        {"loss_enhanced_enabled", T::boolean, "true", "enable the triggered enhanced loss"},
        {"loss_trigger_photons", T::real, "0.5", "trailing-average photon threshold for enhanced loss"},
        {"loss_trigger_window_s", T::real, "10e-6", "trailing average window, s"},
        {"detector_rate_per_photon_hz", T::real, "0.8e6", "count rate per intracavity photon, Hz"},
        {"detector_dead_time_s", T::real, "50e-9", "single-photon counter dead time, s"},
        {"detector_bin_s", T::real, "2e-6", "count binning interval, s"},
        {"condensate_fraction", T::real, "0.9", "N0/N for the thermal estimate"},
        {"thermal_mode", T::text, "per-mode",
         "occupation model: per-mode | rescaled-1d | marginal-3d"},
        {"thermal_i_max", T::integer, "0", "oscillator level cutoff; 0 = automatic"},
        {"thermal_tf_radius_m", T::real, "3.3e-6", "Thomas-Fermi radius of the condensate mode, m"},
        {"analysis_smooth_window_s", T::real, "10e-6", "transmission moving-average window, s"},
        {"analysis_min_prominence_frac", T::real, "0.25", "peak prominence, fraction of trace max"},
        {"analysis_min_separation_s", T::real, "10e-6", "minimum peak separation, s"},
        {"analysis_freq_bin_s", T::real, "50e-6", "frequency series bin width, s"},
        {"seed", T::integer, "12345", "RNG seed for detector shot noise"},
    };
    return s;
}

Config::Config() {
    for (const auto& e : schema()) {
        values_[e.key] = e.default_value;
        explicitly_set_[e.key] = false;
    }
}

const Config::Entry& Config::entry(const std::string& key) const {
    for (const auto& e : schema())
        if (e.key == key) return e;
    auto near = nearest_keys(key);
    std::string msg = "unknown config key '" + key + "'; nearest valid keys:";
    for (const auto& n : near) msg += " " + n;
    throw ValidationError(msg);
}

std::vector<std::string> Config::nearest_keys(const std::string& key, std::size_t count) {
    std::vector<std::pair<std::size_t, std::string>> scored;
    for (const auto& e : schema()) scored.emplace_back(edit_distance(key, e.key), e.key);
    std::sort(scored.begin(), scored.end());
    std::vector<std::string> out;
    for (std::size_t i = 0; i < std::min(count, scored.size()); ++i)
        out.push_back(scored[i].second);
    return out;
}

void Config::set(const std::string& key, const std::string& value) {
    const Entry& e = entry(key);
    std::string v = trim(value);
    switch (e.type) {
    case Type::real: {
        char* end = nullptr;
        std::strtod(v.c_str(), &end);
        if (end == v.c_str() || *end != '\0')
            throw ValidationError("config key '" + key + "': expected a number, got '" + v + "'");
        break;
    }
    case Type::integer: {
        char* end = nullptr;
        std::strtoull(v.c_str(), &end, 10);
        if (end == v.c_str() || *end != '\0')
            throw ValidationError("config key '" + key + "': expected an integer, got '" + v + "'");
        break;
    }
    case Type::boolean:
        if (v != "true" && v != "false")
            throw ValidationError("config key '" + key + "': expected true|false, got '" + v + "'");
        break;
    case Type::text:
        break;
    }
    values_[key] = v;
    explicitly_set_[key] = true;
}

bool Config::is_set(const std::string& key) const {
    auto it = explicitly_set_.find(key);
    return it != explicitly_set_.end() && it->second;
}

double Config::get_real(const std::string& key) const {
    entry(key);
    return std::strtod(values_.at(key).c_str(), nullptr);
}

std::uint64_t Config::get_uint(const std::string& key) const {
    entry(key);
    return std::strtoull(values_.at(key).c_str(), nullptr, 10);
}

bool Config::get_bool(const std::string& key) const {
    entry(key);
    return values_.at(key) == "true";
}

const std::string& Config::get_text(const std::string& key) const {
    entry(key);
    return values_.at(key);
}

Config Config::from_text(const std::string& text, bool apply_env) {
    Config cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ValidationError("config line " + std::to_string(lineno) +
                                  ": expected 'key = value'");
        cfg.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    if (apply_env) cfg.apply_environment();
    return cfg;
}

Config Config::load_file(const std::string& path, bool apply_env) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_text(ss.str(), apply_env);
}

void Config::apply_environment() {
    for (const auto& e : schema()) {
        std::string name = "BECAVITY_" + e.key;
        std::transform(name.begin(), name.end(), name.begin(),
                       [](unsigned char c) { return std::toupper(c); });
        if (const char* v = std::getenv(name.c_str())) set(e.key, v);
    }
}

std::vector<std::string> Config::defaulted_keys() const {
    std::vector<std::string> out;
    for (const auto& e : schema())
        if (!is_set(e.key)) out.push_back(e.key);
    return out;
}

std::string Config::serialize() const {
    std::string out;
    for (const auto& e : schema()) {
        std::string v = values_.at(e.key);
        if (e.type == Type::real && !v.empty()) v = format_real(std::strtod(v.c_str(), nullptr));
        out += e.key + " = " + v + "\n";
    }
    return out;
}

std::string Config::content_hash(const std::string& canonical) {
    std::uint64_t h = 1469598103934665603ull; // FNV offset basis
    for (unsigned char c : canonical) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

SystemParams Config::system_params() const {
    const std::string& pol = get_text("polarization");
    if (pol != "sigma_minus" && pol != "sigma_plus")
        throw ValidationError("polarization must be sigma_minus or sigma_plus");
    SystemParams p{};
    p.g0 = cn::two_pi * get_real("g0_hz");
    if (pol == "sigma_plus" && !is_set("g0_hz")) p.g0 *= std::sqrt(2.0);
    p.kappa = cn::two_pi * get_real("kappa_hz");
    p.gamma = cn::two_pi * get_real("gamma_hz");
    p.lambda = get_real("lambda_m");
    p.mass = get_real("mass_kg");
    p.atom_number = get_real("atom_number");
    p.delta_a = cn::two_pi * get_real("delta_a_hz");
    p.trap = {cn::two_pi * get_real("trap_x_hz"), cn::two_pi * get_real("trap_y_hz"),
              cn::two_pi * get_real("trap_z_hz")};
    p.cavity_length = get_real("cavity_length_m");
    p.g1d = get_real("g1d_jm");
    if (p.g1d == 0.0)
        p.g1d = calibrate_g1d(cn::hbar * cn::two_pi * get_real("mu_target_hz"), p.atom_number,
                              p.trap[0], p.mass);
    p.eta = 0.0;
    p.validate();
    const double eta_hz = get_real("eta_hz");
    if (eta_hz > 0.0)
        p.eta = cn::two_pi * eta_hz;
    else
        p.set_photons_on_resonance(get_real("pump_photons"));
    return p;
}

ScanProtocol Config::scan(const SystemParams& p) const {
    ScanProtocol s{};
    if (is_set("delta_c_start_hz"))
        s.delta_c_start = cn::two_pi * get_real("delta_c_start_hz");
    else
        s.delta_c_start = p.dispersive_shift() - cn::two_pi * 15e6;
    s.rate = cn::two_pi * get_real("scan_rate_hz_per_s");
    s.duration = get_real("scan_duration_s");
    s.validate();
    return s;
}

} // namespace becavity
