#include "mtcav/cavity.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mtcav/constants.hpp"
#include "mtcav/io.hpp"

namespace mtcav::cavity {

namespace {
constexpr double kM3ToCm3 = 1e6;
}

double default_interior_volume_m3() {
  const double radius_m = 7e-9;
  const double length_m = 1e-6;
  return std::numbers::pi * radius_m * radius_m * length_m;
}

int default_dimer_count() {
  const double lambda0 = rabi_coupling(1e4, 3e-28, 1.0);
  const double target = 3e11;
  return static_cast<int>(std::lround((target / lambda0) * (target / lambda0)));
}

void CavityParams::validate() const {
  if (omega_c <= 0 || omega_0 <= 0) {
    throw std::invalid_argument("CavityParams: frequencies must be positive");
  }
  if (epsilon_rel <= 0) {
    throw std::invalid_argument("CavityParams: epsilon_rel must be positive");
  }
  if (volume_m3 <= 0) {
    throw std::invalid_argument("CavityParams: volume must be positive");
  }
  if (n_dimers < 1) {
    throw std::invalid_argument("CavityParams: n_dimers must be >= 1");
  }
  if (dipole_Cm < 0) {
    throw std::invalid_argument("CavityParams: dipole must be >= 0");
  }
  if (std::abs(polarization_cos) > 1.0) {
    throw std::invalid_argument("CavityParams: |polarization_cos| must be <= 1");
  }
  if (T_r_s <= 0) {
    throw std::invalid_argument("CavityParams: T_r must be positive");
  }
  if (t_collapse_lo_s <= 0 || t_collapse_hi_s < t_collapse_lo_s) {
    throw std::invalid_argument("CavityParams: collapse interval must satisfy 0 < lo <= hi");
  }
}

double vacuum_field(double omega_c, double epsilon_rel, double volume_m3) {
  if (omega_c <= 0 || epsilon_rel <= 0 || volume_m3 <= 0) {
    throw std::invalid_argument("vacuum_field: all inputs must be positive");
  }
  const double volume_cm3 = volume_m3 * kM3ToCm3;
  const double e_sq_cgs =
      2.0 * std::numbers::pi * constants::hbar_erg_s * omega_c / (epsilon_rel * volume_cm3);
  return std::sqrt(e_sq_cgs) * constants::statvolt_per_cm_V_per_m;
}

double rabi_coupling(double E_c_V_per_m, double dipole_Cm, double polarization_cos) {
  if (E_c_V_per_m < 0) {
    throw std::invalid_argument("rabi_coupling: field amplitude must be >= 0");
  }
  return E_c_V_per_m * dipole_Cm * polarization_cos / constants::hbar_J_s;
}

Doublet doublet(double omega_0, double detuning, int n_emitters, double lambda0) {
  if (n_emitters < 1) {
    throw std::invalid_argument("doublet: need at least one emitter");
  }
  // On resonance the radical collapses to the collective coupling; computing
  // it that way keeps the sqrt(N) scaling of the splitting exact.
  const double radical =
      detuning == 0.0
          ? 2.0 * std::abs(lambda0) * std::sqrt(static_cast<double>(n_emitters))
          : std::sqrt(detuning * detuning + 4.0 * n_emitters * lambda0 * lambda0);
  const double center = omega_0 - 0.5 * detuning;
  return {center + 0.5 * radical, center - 0.5 * radical};
}

Doublet doublet(const CavityParams& params, double lambda0) {
  params.validate();
  return doublet(params.omega_0, params.detuning(), params.n_dimers, lambda0);
}

std::vector<SpectrumSample> spectrum(const CavityParams& params, double lambda0,
                                     const OmegaGrid& grid) {
  params.validate();
  if (grid.n_points < 1) {
    throw std::invalid_argument("spectrum: grid must be non-empty");
  }
  if (grid.omega_max <= grid.omega_min) {
    throw std::invalid_argument("spectrum: grid bounds must be increasing");
  }
  const Doublet peaks = doublet(params, lambda0);
  if (grid.omega_min > peaks.omega_minus || grid.omega_max < peaks.omega_plus) {
    throw std::invalid_argument("spectrum: grid does not cover both peaks");
  }
  const double q = params.omega_c * params.T_r_s;
  const double hw = params.omega_c / (2.0 * q);  // Lorentzian half-width
  const double step =
      grid.n_points > 1 ? (grid.omega_max - grid.omega_min) / (grid.n_points - 1) : 0.0;

  std::vector<SpectrumSample> samples;
  samples.reserve(grid.n_points);
  const auto lorentz = [hw](double x) {
    return (hw / std::numbers::pi) / (x * x + hw * hw);
  };
  for (int i = 0; i < grid.n_points; ++i) {
    const double omega = grid.omega_min + i * step;
    const double a = lorentz(omega - peaks.omega_plus) + lorentz(omega - peaks.omega_minus);
    samples.push_back({omega, a});
  }
  return samples;
}

FiguresOfMerit figures_of_merit(const CavityParams& params, double kink_length_m,
                                double kink_speed_m_per_s) {
  params.validate();
  if (kink_length_m <= 0 || kink_speed_m_per_s <= 0) {
    throw std::invalid_argument("figures_of_merit: kink length and speed must be positive");
  }
  const double q = params.omega_c * params.T_r_s;
  const double transit = kink_length_m / kink_speed_m_per_s;
  return {q, params.t_collapse_lo_s, params.t_collapse_hi_s, transit,
          params.t_collapse_hi_s >= transit};
}

RabiResult compute_rabi(const CavityParams& params, bool force_resonant) {
  params.validate();
  const double e_c = vacuum_field(params.omega_c, params.epsilon_rel, params.volume_m3);
  const double lambda0 = rabi_coupling(e_c, params.dipole_Cm, params.polarization_cos);
  const double detuning = force_resonant ? 0.0 : params.detuning();
  const Doublet peaks = doublet(params.omega_0, detuning, params.n_dimers, lambda0);
  const FiguresOfMerit fom = figures_of_merit(params);
  return {e_c,
          lambda0,
          lambda0 * std::sqrt(static_cast<double>(params.n_dimers)),
          detuning,
          peaks,
          fom.Q,
          fom.t_collapse_lo_s,
          fom.t_collapse_hi_s};
}

void write_report(std::ostream& out, const RabiResult& r) {
  io::write_kv(out, "E_c_V_per_m", r.E_c_V_per_m);
  io::write_kv(out, "lambda0", r.lambda0);
  io::write_kv(out, "lambda_sqrtN", r.lambda_collective);
  io::write_kv(out, "omega_plus", r.peaks.omega_plus);
  io::write_kv(out, "omega_minus", r.peaks.omega_minus);
  io::write_kv(out, "Q", r.Q);
  io::write_kv(out, "t_collapse_lo", r.t_collapse_lo_s);
  io::write_kv(out, "t_collapse_hi", r.t_collapse_hi_s);
  io::write_kv(out, "detuning", r.detuning);
}

void write_spectrum_csv(std::ostream& out, const std::vector<SpectrumSample>& samples) {
  out << "omega,absorption\n";
  for (const auto& s : samples) {
    io::write_csv_row(out, {io::fmt(s.omega), io::fmt(s.absorption)});
  }
}

}  // namespace mtcav::cavity
