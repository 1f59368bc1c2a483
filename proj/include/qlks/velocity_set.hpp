#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace qlks {

enum class LatticeModel { D2Q9, D3Q27 };

/// Discrete velocity set of a lattice model: directions e_alpha, weights
/// w_alpha and the lattice sound speed. Direction index 0 is always the rest
/// velocity; the remaining directions follow the frozen ordering documented
/// below. The quantum pipeline's subspace map depends on this ordering, so it
/// is a compile-time table, not something assembled at runtime.
struct VelocitySet {
    int dim = 0;               // spatial dimension (2 or 3)
    int q = 0;                 // number of discrete velocities (9 or 27)
    std::array<std::array<int, 3>, 27> e{};   // e[alpha] = lattice velocity, z = 0 in 2D
    std::array<double, 27> w{};               // weights, exact rationals in double
    double cs2 = 1.0 / 3.0;    // squared lattice sound speed

    const std::array<int, 3>& velocity(int alpha) const { return e[static_cast<size_t>(alpha)]; }
    double weight(int alpha) const { return w[static_cast<size_t>(alpha)]; }
};

namespace detail {

// D2Q9, frozen ordering: rest; +x, +y, -x, -y; then diagonals
// (1,1), (-1,1), (-1,-1), (1,-1).  Weights 4/9, 1/9, 1/36.
inline constexpr std::array<std::array<int, 3>, 9> kD2Q9Velocities = {{
    {0, 0, 0},
    {1, 0, 0}, {0, 1, 0}, {-1, 0, 0}, {0, -1, 0},
    {1, 1, 0}, {-1, 1, 0}, {-1, -1, 0}, {1, -1, 0},
}};

// D3Q27, frozen ordering: rest; axis pairs (+x,-x,+y,-y,+z,-z); edge
// directions grouped xz, xy, yz with each direction followed by its
// opposite; corners likewise in opposite pairs.
inline constexpr std::array<std::array<int, 3>, 27> kD3Q27Velocities = {{
    {0, 0, 0},
    {1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1},
    {1, 0, 1}, {-1, 0, -1}, {-1, 0, 1}, {1, 0, -1},
    {1, 1, 0}, {-1, -1, 0}, {-1, 1, 0}, {1, -1, 0},
    {0, 1, 1}, {0, -1, -1}, {0, -1, 1}, {0, 1, -1},
    {1, 1, 1}, {-1, -1, -1}, {1, 1, -1}, {-1, -1, 1},
    {1, -1, 1}, {-1, 1, -1}, {-1, 1, 1}, {1, -1, -1},
}};

} // namespace detail

/// Build the canonical D2Q9 or D3Q27 velocity set. Weights are stored as
/// exact rationals converted once to double, so the lattice moment
/// identities hold to machine precision.
inline VelocitySet make_velocity_set(LatticeModel model) {
    VelocitySet set;
    if (model == LatticeModel::D2Q9) {
        set.dim = 2;
        set.q = 9;
        for (int a = 0; a < 9; ++a) set.e[static_cast<size_t>(a)] = detail::kD2Q9Velocities[static_cast<size_t>(a)];
        set.w[0] = 4.0 / 9.0;
        for (int a = 1; a <= 4; ++a) set.w[static_cast<size_t>(a)] = 1.0 / 9.0;
        for (int a = 5; a <= 8; ++a) set.w[static_cast<size_t>(a)] = 1.0 / 36.0;
    } else {
        set.dim = 3;
        set.q = 27;
        for (int a = 0; a < 27; ++a) set.e[static_cast<size_t>(a)] = detail::kD3Q27Velocities[static_cast<size_t>(a)];
        set.w[0] = 8.0 / 27.0;
        for (int a = 1; a <= 6; ++a) set.w[static_cast<size_t>(a)] = 2.0 / 27.0;
        for (int a = 7; a <= 18; ++a) set.w[static_cast<size_t>(a)] = 1.0 / 54.0;
        for (int a = 19; a <= 26; ++a) set.w[static_cast<size_t>(a)] = 1.0 / 216.0;
    }
    set.cs2 = 1.0 / 3.0;
    return set;
}

inline LatticeModel lattice_model_from_string(const std::string& s) {
    if (s == "d2q9" || s == "D2Q9") return LatticeModel::D2Q9;
    if (s == "d3q27" || s == "D3Q27") return LatticeModel::D3Q27;
    throw std::invalid_argument("unknown lattice model: " + s);
}

} // namespace qlks
