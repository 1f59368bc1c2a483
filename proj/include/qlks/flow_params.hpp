#pragma once

#include <cmath>
#include <stdexcept>

namespace qlks {

/// Solve mu = rho*(1/2 - 2*A*cs2)*cs2*dt for A given the kinematic
/// viscosity nu = mu/rho.
inline double a_from_viscosity(double nu, double dt, double cs2) {
    if (dt <= 0.0) throw std::invalid_argument("a_from_viscosity: dt must be positive");
    if (cs2 <= 0.0) throw std::invalid_argument("a_from_viscosity: cs2 must be positive");
    return (0.5 - nu / (cs2 * dt)) / (2.0 * cs2);
}

/// Kinematic viscosity of the scheme, nu = (tau - 1/2 - 2*A*cs2)*cs2*dt
/// with the relaxation time fixed at tau = 1.
inline double viscosity_from_a(double a, double dt, double cs2) {
    return (0.5 - 2.0 * a * cs2) * cs2 * dt;
}

/// Lattice pressure p = rho*cs2.
inline double pressure(double rho, double cs2) { return rho * cs2; }

/// Run parameters in lattice units. tau is fixed to 1 and dx = c*dt with
/// c = 1; the viscosity is controlled solely through the equilibrium
/// constant A.
struct FlowParams {
    double dt = 1.0;
    double dx = 1.0;
    double rho0 = 1.0;
    double u0 = 0.0;      // characteristic velocity
    double nu = 0.0;      // kinematic viscosity
    double re = 0.0;      // Reynolds number u0*L/nu
    double a_coeff = 0.0; // equilibrium constant A
    double tau = 1.0;

    /// Construct from a target viscosity; A is derived so that
    /// viscosity_from_a(a_coeff) == nu holds after construction.
    static FlowParams from_viscosity(double nu, double u0, double rho0, double re,
                                     double cs2 = 1.0 / 3.0) {
        if (nu <= 0.0) throw std::invalid_argument("FlowParams: viscosity must be positive");
        FlowParams p;
        p.rho0 = rho0;
        p.u0 = u0;
        p.nu = nu;
        p.re = re;
        p.a_coeff = a_from_viscosity(nu, p.dt, cs2);
        return p;
    }

    /// Construct from a given A (nu derived). nu must come out positive,
    /// i.e. A < 1/(4*cs2).
    static FlowParams from_a(double a, double u0, double rho0, double cs2 = 1.0 / 3.0) {
        FlowParams p;
        p.rho0 = rho0;
        p.u0 = u0;
        p.a_coeff = a;
        p.nu = viscosity_from_a(a, p.dt, cs2);
        if (p.nu <= 0.0) throw std::invalid_argument("FlowParams: A implies non-positive viscosity");
        return p;
    }
};

} // namespace qlks
