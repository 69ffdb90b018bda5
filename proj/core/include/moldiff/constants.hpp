#pragma once

namespace moldiff::constants {

// CODATA 2018 exact / recommended values.
inline constexpr double planck_h = 6.62607015e-34;        // J s
inline constexpr double hbar = 1.054571817e-34;           // J s
inline constexpr double boltzmann_k = 1.380649e-23;       // J / K
inline constexpr double amu_kg = 1.66053907e-27;          // kg
inline constexpr double elementary_charge = 1.602176634e-19; // C
inline constexpr double default_gravity = 9.81;           // m / s^2

// 1 meV nm^3 expressed in J m^3 (used for the C3 surface constant).
inline constexpr double mev_nm3_to_J_m3 = 1.602176634e-22 * 1e-27;

inline constexpr double nm = 1e-9;
inline constexpr double um = 1e-6;
inline constexpr double mm = 1e-3;
inline constexpr double pm = 1e-12;

} // namespace moldiff::constants
