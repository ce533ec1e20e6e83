#include "becavity/params.hpp"

#include <cmath>

#include "becavity/constants.hpp"

namespace becavity {

namespace cn = constants;

double light_shift(double g0, double delta_a) {
    if (delta_a == 0.0) throw ValidationError("resonant pump unsupported");
    return g0 * g0 / delta_a;
}

double recoil_frequency(double lambda, double mass) {
    if (!(lambda > 0) || !(mass > 0))
        throw ValidationError("recoil_frequency requires lambda > 0 and mass > 0");
    const double k = cn::two_pi / lambda;
    return cn::hbar * k * k / (2.0 * mass);
}

double optomech_coupling(double u0, double atom_number) {
    return 0.5 * u0 * std::sqrt(atom_number / 2.0);
}

double effective_mass(double g, double cavity_length, double omega_c, double omega_m) {
    if (!(g > 0) || !(cavity_length > 0) || !(omega_c > 0) || !(omega_m > 0))
        throw ValidationError("effective_mass requires positive inputs");
    const double a_ho = g * cavity_length / omega_c;
    return cn::hbar / (2.0 * a_ho * a_ho * omega_m);
}

double calibrate_g1d(double mu_target, double atom_number, double omega_x, double mass) {
    // 1D Thomas-Fermi: N = 4 mu R / (3 g1d), R = sqrt(2 mu / (m omega_x^2))
    const double radius = std::sqrt(2.0 * mu_target / (mass * omega_x * omega_x));
    return 4.0 * mu_target * radius / (3.0 * atom_number);
}

SystemParams SystemParams::defaults(Polarization pol) {
    SystemParams p{};
    p.g0 = cn::two_pi * 10.9e6;
    if (pol == Polarization::sigma_plus) p.g0 *= std::sqrt(2.0); // g/kappa doubles
    p.kappa = cn::two_pi * 1.3e6;
    p.gamma = cn::two_pi * 3.0e6;
    p.lambda = 780e-9;
    p.mass = cn::mass_rb87;
    p.atom_number = 1.2e5;
    p.delta_a = cn::two_pi * 32e9;
    p.trap = {cn::two_pi * 222.0, cn::two_pi * 37.0, cn::two_pi * 210.0};
    p.cavity_length = 178e-6;
    p.g1d = calibrate_g1d(cn::hbar * cn::two_pi * 2400.0, p.atom_number, p.trap[0], p.mass);
    p.validate();
    p.set_photons_on_resonance(7.3);
    return p;
}

void SystemParams::validate() {
    warnings.clear();
    if (!(kappa > 0)) throw ValidationError("kappa must be > 0");
    if (!(g0 > 0)) throw ValidationError("g0 must be > 0");
    if (!(atom_number >= 1)) throw ValidationError("atom number must be >= 1");
    if (!(lambda > 0)) throw ValidationError("lambda must be > 0");
    if (!(mass > 0)) throw ValidationError("mass must be > 0");
    if (delta_a == 0.0) throw ValidationError("resonant pump unsupported");
    if (!(eta >= 0)) throw ValidationError("eta must be >= 0");
    for (double w : trap)
        if (!(w > 0)) throw ValidationError("trap frequencies must be > 0");
    if (gamma > 0 && std::abs(delta_a) < 1e4 * gamma)
        warnings.push_back("pump-atom detuning below 1e4*gamma: spontaneous "
                           "emission no longer negligible");

    wavenumber = cn::two_pi / lambda;
    u0 = light_shift(g0, delta_a);
    omega_rec = recoil_frequency(lambda, mass);
    g_coupling = optomech_coupling(u0, atom_number);
    omega_cavity = cn::two_pi * cn::c_light / lambda;
}

double SystemParams::photons_on_resonance() const {
    return eta * eta / (kappa * kappa);
}

void SystemParams::set_photons_on_resonance(double n) {
    if (!(n >= 0)) throw ValidationError("photon number must be >= 0");
    eta = kappa * std::sqrt(n);
}

} // namespace becavity
