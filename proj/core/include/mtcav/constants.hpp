#pragma once

// Physical constants and unit conversions used across the workbench.
// SI unless the name says otherwise; the Gaussian-unit hbar is needed by
// the cavity vacuum-field formula, which is evaluated in CGS.

namespace mtcav::constants {

inline constexpr double elementary_charge_C = 1.602176634e-19;
inline constexpr double hbar_J_s = 1.054571817e-34;
inline constexpr double hbar_erg_s = 1.054571817e-27;
inline constexpr double eV_J = 1.602176634e-19;

// 1 debye in C·m.
inline constexpr double debye_C_m = 3.33564e-30;

// 1 statvolt/cm expressed in V/m.
inline constexpr double statvolt_per_cm_V_per_m = 2.99792458e4;

inline constexpr double nm_m = 1e-9;
inline constexpr double um_m = 1e-6;
inline constexpr double angstrom_m = 1e-10;

}  // namespace mtcav::constants
