#pragma once

#include <numbers>

namespace ioncoupler {

/// Physical constants (CODATA 2018, SI units).
namespace constants {

inline constexpr double elementary_charge = 1.602176634e-19;   // [C], exact
inline constexpr double vacuum_permittivity = 8.8541878128e-12; // [F/m]
inline constexpr double hbar = 1.054571817e-34;                 // [J s]
inline constexpr double pi = std::numbers::pi;

/// Coulomb constant 1/(4 pi eps0) [N m^2 / C^2].
inline constexpr double coulomb = 1.0 / (4.0 * pi * vacuum_permittivity);

} // namespace constants

} // namespace ioncoupler
