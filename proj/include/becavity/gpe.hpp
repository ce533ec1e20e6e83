#ifndef BECAVITY_GPE_HPP_
#define BECAVITY_GPE_HPP_

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "becavity/params.hpp"

namespace becavity {

struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Periodic 1D grid along the cavity axis. The extent must be an integer
// multiple of lambda/2 so cos^2(kx) is grid-periodic, and the point count
// must be even for the spectral kinetic step.
struct Grid1D {
    double extent = 0; // m
    int points = 0;
    double dx = 0;

    static Grid1D from_wavelength(double lambda, double extent_lambdas = 13.0,
                                  int points_per_half_lambda = 10);

    // positions centered on the trap, x_0 = -extent/2
    double position(int j) const { return (j - points / 2) * dx; }
};

// Condensate amplitude on the grid, normalized to the atom number.
struct Wavefunction1D {
    Grid1D grid;
    std::vector<std::complex<double>> psi;

    double norm() const; // integral of |psi|^2 dx
    void scale_to(double atom_number);
};

// cos^2(kx) overlap between density and cavity mode, in [0, N].
double overlap(const Wavefunction1D& wf, double wavenumber);

// Uniform loss of atoms in absolute numbers per second; the enhanced rate
// applies while the trailing-average photon number exceeds the trigger.
struct LossModel {
    bool enabled = true;
    double background_rate = 4.5e4; // atoms/s (45 per ms)
    double enhanced_rate = 1.5e6;   // atoms/s (1.5e3 per ms)
    bool enhanced_enabled = true;
    double trigger_photons = 0.5;
    double trigger_window = 10e-6; // s
};

struct GroundStateOptions {
    double tol = 1e-10;        // relative energy change per step
    long max_steps = 2000000;  // imaginary-time step budget
    double photon_tol = 1e-8;  // self-consistency on |alpha|^2
    double edge_density_guard = 1e-8; // max edge/peak density
};

struct GroundStateResult {
    Wavefunction1D psi;
    double energy = 0;     // J, Gross-Pitaevskii energy functional
    double mu = 0;         // J, chemical potential
    double photons = 0;    // self-consistent |alpha|^2
    double overlap_u = 0;
    long steps = 0;
    std::vector<double> energy_history; // accepted steps, non-increasing
};

// Imaginary-time ground state in the self-consistent adiabatic lattice at
// the scan start detuning. Throws NumericalError when the energy residual
// fails to reach tol within the step budget.
GroundStateResult ground_state(const SystemParams& p, const Grid1D& grid, double delta_c,
                               const GroundStateOptions& opt = {});

struct PropagationOptions {
    double dt = 1e-7;              // s
    double sample_interval = 5e-7; // s
};

struct GpeTrajectory {
    std::vector<double> t;
    std::vector<double> overlap_u;
    std::vector<double> photons;
    std::vector<double> atom_number;
    // [start, stop) times during which the enhanced loss was active
    std::vector<std::pair<double, double>> enhanced_intervals;
    Wavefunction1D psi_final;
};

// Strang-split real-time propagation of Eq.-of-motion pair with the cavity
// field adiabatically eliminated: alpha = eta / (kappa - i(delta_c - U0 u)).
// Aborts with diagnostics on non-finite field values.
GpeTrajectory propagate_scan(const Wavefunction1D& psi0, const SystemParams& p,
                             const ScanProtocol& scan, const LossModel& loss,
                             const PropagationOptions& opt = {});

// Binary checkpoint: u64 sample count, then (re, im) float64 pairs,
// little-endian.
void save_wavefunction(const std::string& path, const Wavefunction1D& wf);
Wavefunction1D load_wavefunction(const std::string& path, const Grid1D& grid);

} // namespace becavity

#endif
