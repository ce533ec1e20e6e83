#ifndef BECAVITY_TWOMODE_HPP_
#define BECAVITY_TWOMODE_HPP_

#include <complex>
#include <optional>
#include <vector>

#include "becavity/params.hpp"

namespace becavity {

// Homogeneous two-mode opto-mechanical model: the zero-momentum condensate
// mode coupled to the symmetric +-2hbar k mode. Displacement
// X = 2 sqrt(1/N) Re(c0* c2), conjugate momentum P = hbar sqrt(1/N) Im(c0* c2)
// (stored as P/hbar). The model is trusted while
// (X^2/4 + (P/hbar)^2)/N < 0.1.
struct MechCavityState {
    double x = 0;
    double p_over_hbar = 0;
    std::complex<double> alpha{0, 0};
    double t = 0;

    double validity(const SystemParams& p) const {
        return (0.25 * x * x + p_over_hbar * p_over_hbar) / p.atom_number;
    }
};

enum class Stability { stable, unstable };

struct SteadyBranch {
    double x_ss;
    double photons; // |alpha|^2
    Stability stability;
    double delta; // effective detuning at x_ss
};

// Delta = Delta_c - U0 N/2 - g X; the slope in X equals -g.
double effective_detuning(double x, const SystemParams& p, double delta_c);

// Steady cavity amplitude alpha = eta / (kappa - i Delta).
std::complex<double> adiabatic_field(double delta, double eta, double kappa);

// Steady states of the displacement cubic, sorted by x_ss, classified via
// the eigenvalues of the linearized (X, Xdot) dynamics with adiabatic alpha.
// Exact double roots (folds) are reported as 2 branches, both unstable.
std::vector<SteadyBranch> steady_states(const SystemParams& p, double delta_c);

// Smallest pump amplitude for which some delta_c yields 3 steady states.
// Bisection on eta against a swept-detuning root-count indicator, relative
// tolerance 1e-4. Throws if no bistability exists up to eta = 100 kappa.
double critical_pump(const SystemParams& p, double rel_tol = 1e-4);

// First-order phase-space flow, components (dX/dt, d(2P/hbar)/dt).
struct PhaseVelocity {
    double dx_dt;
    double dy_dt;
};
PhaseVelocity phase_space_field(double x, double p_over_hbar, const SystemParams& p,
                                double delta_c);

enum class CavityTreatment {
    adiabatic, // alpha eliminated, follows X instantaneously
    dynamic    // complex alpha integrated alongside the oscillator
};

struct IntegrationOptions {
    double dt = 1e-7;              // s
    double sample_interval = 5e-7; // s
    CavityTreatment cavity = CavityTreatment::adiabatic;
    double field_dt = 1e-9;        // step for cavity == dynamic
    double validity_limit = 0.1;
};

struct TwoModeTrajectory {
    std::vector<double> t;
    std::vector<double> x;
    std::vector<double> p_over_hbar;
    std::vector<double> photons;
    std::vector<double> delta_c;
    // first time the validity monitor exceeded the limit; trajectory is
    // truncated there, not discarded
    std::optional<double> validity_violation_time;
    bool truncated = false;

    MechCavityState final_state(const SystemParams& p) const;
};

// Fixed-step RK4 integration of the scanned two-mode equations with the
// chosen cavity treatment. The initial state must satisfy the validity
// monitor.
TwoModeTrajectory integrate_scan(const MechCavityState& initial, const SystemParams& p,
                                 const ScanProtocol& scan, const IntegrationOptions& opt = {});

// Stable branch with the lowest photon number at the given detuning (the
// state the system occupies when prepared below resonance).
MechCavityState lower_branch_state(const SystemParams& p, double delta_c);

} // namespace becavity

#endif
