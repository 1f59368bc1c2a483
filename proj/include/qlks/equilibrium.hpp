#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "qlks/flow_params.hpp"
#include "qlks/velocity_set.hpp"

namespace qlks {

/// Velocity gradient tensor at one node, g[i][j] = du_i/dx_j (units 1/step).
/// The equilibrium only ever consumes its symmetrized form S = g + g^T;
/// symmetrization happens inside the evaluation so callers always pass the
/// raw gradient and cannot disagree about conventions.
struct VelocityGradientTensor {
    std::array<std::array<double, 3>, 3> g{};

    double& operator()(int i, int j) { return g[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    double operator()(int i, int j) const { return g[static_cast<size_t>(i)][static_cast<size_t>(j)]; }

    /// S_ij = du_i/dx_j + du_j/dx_i
    std::array<std::array<double, 3>, 3> symmetrized() const {
        std::array<std::array<double, 3>, 3> s{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                s[static_cast<size_t>(i)][static_cast<size_t>(j)] = g[static_cast<size_t>(i)][static_cast<size_t>(j)] + g[static_cast<size_t>(j)][static_cast<size_t>(i)];
        return s;
    }
};

namespace detail {

/// Core equilibrium evaluation shared by the classical solver and the
/// quantum collision-diagonal builder. Both paths must produce bit-identical
/// values, so this is the single place the formula lives.
///
///   f_eq = w*rho*(1 + e.u/cs2 + (e.u)^2/(2 cs2^2) - u.u/(2 cs2) + A*dt*eSe)
///
/// where eSe = e^T (grad u + grad u^T) e is precomputed by the caller.
inline double edf_value(double w, double rho, double eu, double uu, double eSe,
                        double cs2, double a_dt) {
    const double inv_cs2 = 1.0 / cs2;
    return w * rho *
           (1.0 + eu * inv_cs2 + 0.5 * eu * eu * inv_cs2 * inv_cs2 - 0.5 * uu * inv_cs2 +
            a_dt * eSe);
}

inline double dot_eu(const std::array<int, 3>& e, const std::array<double, 3>& u, int dim) {
    double r = 0.0;
    for (int i = 0; i < dim; ++i) r += static_cast<double>(e[static_cast<size_t>(i)]) * u[static_cast<size_t>(i)];
    return r;
}

inline double quad_form(const std::array<int, 3>& e,
                        const std::array<std::array<double, 3>, 3>& s, int dim) {
    double r = 0.0;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            r += static_cast<double>(e[static_cast<size_t>(i)]) * s[static_cast<size_t>(i)][static_cast<size_t>(j)] * static_cast<double>(e[static_cast<size_t>(j)]);
    return r;
}

} // namespace detail

/// Modified equilibrium distribution along direction alpha. With A = 0 this
/// reduces to the standard low-Mach expansion. Caller is responsible for the
/// low-Mach regime; see mach_number() for the soft guard.
inline double equilibrium(double rho, const std::array<double, 3>& u,
                          const VelocityGradientTensor& grad_u, const VelocitySet& set,
                          const FlowParams& params, int alpha) {
    const auto& e = set.velocity(alpha);
    const auto s = grad_u.symmetrized();
    const double eu = detail::dot_eu(e, u, set.dim);
    double uu = 0.0;
    for (int i = 0; i < set.dim; ++i) uu += u[static_cast<size_t>(i)] * u[static_cast<size_t>(i)];
    const double eSe = detail::quad_form(e, s, set.dim);
    return detail::edf_value(set.weight(alpha), rho, eu, uu, eSe, set.cs2,
                             params.a_coeff * params.dt);
}

/// Equilibrium normalized by density, f_eq/rho. rho = 0 is a degenerate
/// field and rejected.
inline double normalized_equilibrium(double rho, const std::array<double, 3>& u,
                                     const VelocityGradientTensor& grad_u,
                                     const VelocitySet& set, const FlowParams& params,
                                     int alpha) {
    if (rho == 0.0) throw std::invalid_argument("normalized_equilibrium: rho must be non-zero");
    return equilibrium(rho, u, grad_u, set, params, alpha) / rho;
}

/// Mach number |u|/cs of a single velocity. The solvers warn (once) when
/// this exceeds 0.3 anywhere; the expansion underlying the EDF assumes
/// u0 well below cs.
inline double mach_number(const std::array<double, 3>& u, int dim, double cs2) {
    double uu = 0.0;
    for (int i = 0; i < dim; ++i) uu += u[static_cast<size_t>(i)] * u[static_cast<size_t>(i)];
    return std::sqrt(uu / cs2);
}

} // namespace qlks
