#include "becavity/twomode.hpp"

#include <algorithm>
#include <cmath>

#include "becavity/rootfind.hpp"

namespace becavity {

namespace {

// Coefficient of the radiation-pressure displacement,
// X_ss = -coef * |alpha|^2 with coef = U0 sqrt(8N) / (16 omega_rec).
double displacement_coef(const SystemParams& p) {
    return p.u0 * std::sqrt(8.0 * p.atom_number) / (16.0 * p.omega_rec);
}

// d|alpha|^2/dX at fixed delta_c
double photon_slope(const SystemParams& p, double delta) {
    const double d2 = p.kappa * p.kappa + delta * delta;
    return 2.0 * p.g_coupling * delta * p.eta * p.eta / (d2 * d2);
}

struct Cubic {
    double c3, c2, c1, c0;
};

// X (kappa^2 + (delta0 - g X)^2) + coef eta^2 = 0, delta0 = Delta_c - U0 N/2
Cubic displacement_cubic(const SystemParams& p, double delta_c) {
    const double d0 = delta_c - p.dispersive_shift();
    const double g = p.g_coupling;
    return {g * g, -2.0 * d0 * g, p.kappa * p.kappa + d0 * d0,
            displacement_coef(p) * p.eta * p.eta};
}

double cubic_discriminant(const Cubic& c) {
    const double a = c.c3, b = c.c2, cc = c.c1, d = c.c0;
    return 18.0 * a * b * cc * d - 4.0 * b * b * b * d + b * b * cc * cc -
           4.0 * a * cc * cc * cc - 27.0 * a * a * d * d;
}

} // namespace

double effective_detuning(double x, const SystemParams& p, double delta_c) {
    return delta_c - p.dispersive_shift() - p.g_coupling * x;
}

std::complex<double> adiabatic_field(double delta, double eta, double kappa) {
    return eta / std::complex<double>(kappa, -delta);
}

std::vector<SteadyBranch> steady_states(const SystemParams& p, double delta_c) {
    const Cubic c = displacement_cubic(p, delta_c);
    const CubicRoots roots = solve_cubic(c.c3, c.c2, c.c1, c.c0);
    const double coef = displacement_coef(p);

    // collapse numerically coincident roots (fold points)
    std::vector<double> xs;
    bool fold = false;
    for (int i = 0; i < roots.count; ++i) {
        const double xi = roots.x[i];
        if (!xs.empty() && std::abs(xi - xs.back()) <
                               1e-9 * std::max({1.0, std::abs(xi), std::abs(xs.back())})) {
            fold = true;
            continue;
        }
        xs.push_back(xi);
    }

    std::vector<SteadyBranch> out;
    for (double x : xs) {
        SteadyBranch b{};
        b.x_ss = x;
        b.delta = effective_detuning(x, p, delta_c);
        b.photons = p.eta * p.eta / (p.kappa * p.kappa + b.delta * b.delta);
        // lambda^2 = -omega_m^2 (1 + coef * d|alpha|^2/dX); center when > 0
        const double curvature = 1.0 + coef * photon_slope(p, b.delta);
        b.stability = (curvature > 0.0 && !fold) ? Stability::stable : Stability::unstable;
        if (fold) b.stability = Stability::unstable;
        out.push_back(b);
    }
    std::sort(out.begin(), out.end(),
              [](const SteadyBranch& a, const SteadyBranch& b) { return a.x_ss < b.x_ss; });
    return out;
}

namespace {

// True when some delta_c yields three steady states at this pump amplitude.
// Coarse sweep of the cubic discriminant over the physically reachable
// detuning window, refined around the best candidate (golden section), so
// the indicator stays reliable for arbitrarily narrow bistable windows.
bool has_bistability(const SystemParams& base, double eta) {
    SystemParams p = base;
    p.eta = eta;
    const double coef = displacement_coef(p);
    const double n_max = p.eta * p.eta / (p.kappa * p.kappa);
    const double span = p.g_coupling * coef * n_max + 10.0 * p.kappa;
    const double shift = p.dispersive_shift();

    auto disc_at = [&](double d0) {
        return cubic_discriminant(displacement_cubic(p, shift + d0));
    };

    const int n_grid = 2000;
    double best_d0 = 0.0, best = -1.0;
    for (int i = 0; i <= n_grid; ++i) {
        const double d0 = -span * static_cast<double>(i) / n_grid;
        const double d = disc_at(d0);
        if (d > best) {
            best = d;
            best_d0 = d0;
        }
    }
    if (best > 0.0) return true;

    // golden-section refinement of the discriminant maximum
    const double h = span / n_grid;
    double lo = best_d0 - h, hi = best_d0 + h;
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = hi - gr * (hi - lo), b = lo + gr * (hi - lo);
    double fa = disc_at(a), fb = disc_at(b);
    for (int i = 0; i < 120; ++i) {
        if (fa < fb) {
            lo = a;
            a = b;
            fa = fb;
            b = lo + gr * (hi - lo);
            fb = disc_at(b);
        } else {
            hi = b;
            b = a;
            fb = fa;
            a = hi - gr * (hi - lo);
            fa = disc_at(a);
        }
        if (std::max(fa, fb) > 0.0) return true;
    }
    return std::max(fa, fb) > 0.0;
}

} // namespace

double critical_pump(const SystemParams& p, double rel_tol) {
    const double kappa = p.kappa;
    double hi = 0.05 * kappa;
    while (!has_bistability(p, hi)) {
        hi *= 2.0;
        if (hi > 100.0 * kappa)
            throw ValidationError("no bistability found up to eta = 100 kappa");
    }
    double lo = hi / 2.0;
    if (hi <= 0.05 * kappa) lo = 1e-6 * kappa;
    while (has_bistability(p, lo)) lo /= 2.0;
    for (int i = 0; i < 200 && (hi - lo) > rel_tol * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (has_bistability(p, mid))
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

PhaseVelocity phase_space_field(double x, double p_over_hbar, const SystemParams& p,
                                double delta_c) {
    const double omega_m = p.omega_mech();
    const double y = 2.0 * p_over_hbar;
    const double delta = effective_detuning(x, p, delta_c);
    const double photons = std::norm(adiabatic_field(delta, p.eta, p.kappa));
    // radiation force omega_rec U0 sqrt(8N) |alpha|^2, scaled by 1/omega_m
    const double force = p.omega_rec * p.u0 * std::sqrt(8.0 * p.atom_number) * photons;
    return {omega_m * y, -omega_m * x - force / omega_m};
}

MechCavityState TwoModeTrajectory::final_state(const SystemParams& p) const {
    MechCavityState s;
    if (t.empty()) return s;
    const std::size_t i = t.size() - 1;
    s.t = t[i];
    s.x = x[i];
    s.p_over_hbar = p_over_hbar[i];
    s.alpha = adiabatic_field(effective_detuning(s.x, p, delta_c[i]), p.eta, p.kappa);
    return s;
}

TwoModeTrajectory integrate_scan(const MechCavityState& initial, const SystemParams& p,
                                 const ScanProtocol& scan, const IntegrationOptions& opt) {
    scan.validate();
    if (initial.validity(p) >= opt.validity_limit)
        throw ValidationError("initial state violates the two-mode validity monitor");

    TwoModeTrajectory traj;
    const double omega_m = p.omega_mech();
    const double force_coef =
        p.omega_rec * p.u0 * std::sqrt(8.0 * p.atom_number) / omega_m;

    const bool dynamic = opt.cavity == CavityTreatment::dynamic;
    const double dt = dynamic ? opt.field_dt : opt.dt;
    const long n_steps = static_cast<long>(std::llround(scan.duration / dt));

    double x = initial.x;
    double y = 2.0 * initial.p_over_hbar;
    std::complex<double> alpha = initial.alpha;
    if (!dynamic)
        alpha = adiabatic_field(effective_detuning(x, p, scan.delta_c_start), p.eta, p.kappa);

    auto record = [&](double t, double dc) {
        traj.t.push_back(t);
        traj.x.push_back(x);
        traj.p_over_hbar.push_back(0.5 * y);
        const double n = dynamic
                             ? std::norm(alpha)
                             : std::norm(adiabatic_field(effective_detuning(x, p, dc), p.eta,
                                                         p.kappa));
        traj.photons.push_back(n);
        traj.delta_c.push_back(dc);
    };

    // adiabatic RHS on (x, y); dynamic RHS on (x, y, Re alpha, Im alpha)
    auto deriv = [&](double xs, double ys, std::complex<double> as, double t,
                     std::array<double, 4>& d) {
        const double dc = scan.delta_c(t);
        const double delta = effective_detuning(xs, p, dc);
        double n;
        if (dynamic) {
            n = std::norm(as);
            const std::complex<double> adot =
                std::complex<double>(-p.kappa, delta) * as + p.eta;
            d[2] = adot.real();
            d[3] = adot.imag();
        } else {
            n = std::norm(adiabatic_field(delta, p.eta, p.kappa));
            d[2] = d[3] = 0.0;
        }
        d[0] = omega_m * ys;
        d[1] = -omega_m * xs - force_coef * n;
    };

    double t = 0.0;
    double next_sample = 0.0;
    std::array<double, 4> k1{}, k2{}, k3{}, k4{};
    for (long i = 0; i <= n_steps; ++i) {
        if (t >= next_sample - 0.5 * dt) {
            record(t, scan.delta_c(t));
            next_sample += opt.sample_interval;
        }
        if (i == n_steps) break;
        deriv(x, y, alpha, t, k1);
        deriv(x + 0.5 * dt * k1[0], y + 0.5 * dt * k1[1],
              alpha + 0.5 * dt * std::complex<double>(k1[2], k1[3]), t + 0.5 * dt, k2);
        deriv(x + 0.5 * dt * k2[0], y + 0.5 * dt * k2[1],
              alpha + 0.5 * dt * std::complex<double>(k2[2], k2[3]), t + 0.5 * dt, k3);
        deriv(x + dt * k3[0], y + dt * k3[1],
              alpha + dt * std::complex<double>(k3[2], k3[3]), t + dt, k4);
        x += dt / 6.0 * (k1[0] + 2 * k2[0] + 2 * k3[0] + k4[0]);
        y += dt / 6.0 * (k1[1] + 2 * k2[1] + 2 * k3[1] + k4[1]);
        if (dynamic)
            alpha += dt / 6.0 *
                     std::complex<double>(k1[2] + 2 * k2[2] + 2 * k3[2] + k4[2],
                                          k1[3] + 2 * k2[3] + 2 * k3[3] + k4[3]);
        t += dt;

        const double validity = (0.25 * x * x + 0.25 * y * y) / p.atom_number;
        if (validity >= opt.validity_limit) {
            traj.validity_violation_time = t;
            traj.truncated = true;
            record(t, scan.delta_c(t));
            break;
        }
    }
    return traj;
}

MechCavityState lower_branch_state(const SystemParams& p, double delta_c) {
    const auto branches = steady_states(p, delta_c);
    const SteadyBranch* best = nullptr;
    for (const auto& b : branches) {
        if (b.stability != Stability::stable) continue;
        if (!best || b.photons < best->photons) best = &b;
    }
    if (!best)
        throw ValidationError("no stable steady state at the requested detuning");
    MechCavityState s;
    s.x = best->x_ss;
    s.p_over_hbar = 0.0;
    s.alpha = adiabatic_field(best->delta, p.eta, p.kappa);
    s.t = 0.0;
    return s;
}

} // namespace becavity
