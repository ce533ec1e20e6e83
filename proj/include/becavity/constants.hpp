#ifndef BECAVITY_CONSTANTS_HPP_
#define BECAVITY_CONSTANTS_HPP_

// Fundamental constants, SI units, CODATA 2018 values to 10 significant
// digits. Frozen here so golden traces reproduce bit-for-bit.
namespace becavity::constants {

inline constexpr double pi = 3.141592653589793;
inline constexpr double two_pi = 6.283185307179586;

// reduced Planck constant [J s]
inline constexpr double hbar = 1.054571817e-34;
// speed of light in vacuum [m/s] (exact)
inline constexpr double c_light = 299792458.0;
// Boltzmann constant [J/K] (exact)
inline constexpr double k_boltzmann = 1.380649e-23;
// atomic mass unit [kg]
inline constexpr double atomic_mass_unit = 1.66053906660e-27;
// 87Rb atomic mass [kg] (86.909180531 u)
inline constexpr double mass_rb87 = 86.909180531 * atomic_mass_unit;

} // namespace becavity::constants

#endif
