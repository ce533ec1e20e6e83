#ifndef BECAVITY_PARAMS_HPP_
#define BECAVITY_PARAMS_HPP_

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace becavity {

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Derived opto-mechanical quantities. All frequencies are angular (rad/s).
double light_shift(double g0, double delta_a);           // U0 = g0^2/Delta_a
double recoil_frequency(double lambda, double mass);     // hbar k^2 / 2m
double optomech_coupling(double u0, double atom_number); // g = U0/2 sqrt(N/2)
// a_ho = g L / omega_c, m_eff = hbar/(2 a_ho^2 omega_m)
double effective_mass(double g, double cavity_length, double omega_c, double omega_m);

// Pump polarization presets. sigma_plus scales g0 so that g/kappa doubles.
enum class Polarization { sigma_minus, sigma_plus };

// All physical constants of one experimental configuration plus the derived
// quantities. Angular frequencies (rad/s) throughout; validate() recomputes
// every derived field, they are never stored independently.
struct SystemParams {
    double g0;             // atom-photon coupling (rad/s)
    double kappa;          // cavity field decay (rad/s)
    double gamma;          // atomic amplitude decay (rad/s), informational
    double lambda;         // cavity wavelength (m)
    double mass;           // atomic mass (kg)
    double atom_number;    // N
    double delta_a;        // pump-atom detuning (rad/s)
    double eta;            // pump amplitude (rad/s)
    std::array<double, 3> trap; // (omega_x, omega_y, omega_z), angular
    double g1d;            // effective 1D interaction strength (J m)
    double cavity_length;  // m

    // derived, filled by validate()
    double wavenumber = 0;   // k = 2 pi / lambda
    double u0 = 0;           // light shift per photon
    double omega_rec = 0;    // recoil frequency
    double g_coupling = 0;   // collectively enhanced coupling
    double omega_cavity = 0; // 2 pi c / lambda

    // Messages produced during validation (soft warnings, e.g. small
    // detuning where spontaneous emission is no longer negligible).
    std::vector<std::string> warnings;

    static SystemParams defaults(Polarization pol = Polarization::sigma_minus);

    // Recompute derived quantities and check invariants; throws
    // ValidationError on hard violations.
    void validate();

    // Dispersive shift of the empty-cavity resonance, U0 N / 2.
    double dispersive_shift() const { return u0 * atom_number / 2.0; }
    // Mechanical oscillator frequency 4 omega_rec.
    double omega_mech() const { return 4.0 * omega_rec; }
    // Mean intracavity photon number on resonance, eta^2/kappa^2.
    double photons_on_resonance() const;
    void set_photons_on_resonance(double n);
};

// g1d such that the 1D Thomas-Fermi chemical potential equals mu_target.
double calibrate_g1d(double mu_target, double atom_number, double omega_x, double mass);

// Detuning scan protocol: delta_c(t) = delta_c_start + rate * t.
struct ScanProtocol {
    double delta_c_start; // rad/s
    double rate;          // rad/s per s, sign encodes direction; 0 = hold
    double duration;      // s

    double delta_c(double t) const { return delta_c_start + rate * t; }
    void validate() const {
        if (!(duration > 0)) throw ValidationError("scan duration must be > 0");
    }
};

} // namespace becavity

#endif
