#pragma once

#include <ostream>
#include <vector>

// Vacuum-field Rabi splitting of N dimer emitters coupled to a single
// coherent cavity mode of the ordered interior water, plus the cavity
// figures of merit (vacuum field, quality factor, coherence times).

namespace mtcav::cavity {

// Interior cylinder of radius 7 nm and length 1 um, in m^3.
double default_interior_volume_m3();

// Emitter count chosen so that lambda0*sqrt(N) reproduces the collective
// coupling 3e11 1/s when the vacuum field is 1e4 V/m and the screened
// dipole is 3e-28 C·m. Evaluates to 111.
int default_dimer_count();

struct CavityParams {
  double omega_c = 6e12;   // cavity (dipole-quanta) frequency, rad/s
  double omega_0 = 1e12;   // dimer two-state frequency, rad/s
  double epsilon_rel = 80.0;
  double volume_m3 = default_interior_volume_m3();
  int n_dimers = 111;
  double dipole_Cm = 3e-28;
  double polarization_cos = 1.0;
  double T_r_s = 1e-4;  // cavity energy dissipation time
  double t_collapse_lo_s = 1e-7;
  double t_collapse_hi_s = 1e-6;

  double detuning() const { return omega_c - omega_0; }
  void validate() const;
};

// RMS vacuum electric field amplitude at the cavity center, in V/m.
// The square root is evaluated in Gaussian units (dimensionless epsilon),
// where the model's inputs reproduce the 1e4 V/m scale; the result is
// converted from statvolt/cm at the boundary.
double vacuum_field(double omega_c, double epsilon_rel, double volume_m3);

// Single-emitter coupling lambda0 = E_c * d * cos(theta) / hbar, in 1/s.
double rabi_coupling(double E_c_V_per_m, double dipole_Cm, double polarization_cos);

struct Doublet {
  double omega_plus;
  double omega_minus;
};

// Absorption doublet peaks: omega_0 - Delta/2 +- sqrt(Delta^2 + 4N lambda^2)/2.
// At zero detuning this reduces to omega_0 +- lambda*sqrt(N).
Doublet doublet(double omega_0, double detuning, int n_emitters, double lambda0);
Doublet doublet(const CavityParams& params, double lambda0);

struct OmegaGrid {
  double omega_min;
  double omega_max;
  int n_points;
};

struct SpectrumSample {
  double omega;
  double absorption;
};

// Doublet rendered as the sum of two unit-area Lorentzians of half-width
// omega_c/(2Q) centred on the peaks. The grid must be non-empty and cover
// both peaks.
std::vector<SpectrumSample> spectrum(const CavityParams& params, double lambda0,
                                     const OmegaGrid& grid);

struct FiguresOfMerit {
  double Q;  // omega_c * T_r
  double t_collapse_lo_s;
  double t_collapse_hi_s;
  double kink_transit_s;
  bool collapse_outlasts_transit;  // t_collapse_hi >= kink transit
};

FiguresOfMerit figures_of_merit(const CavityParams& params, double kink_length_m = 1e-6,
                                double kink_speed_m_per_s = 2.0);

struct RabiResult {
  double E_c_V_per_m;
  double lambda0;
  double lambda_collective;  // lambda0 * sqrt(N)
  double detuning;
  Doublet peaks;
  double Q;
  double t_collapse_lo_s;
  double t_collapse_hi_s;
};

// Full chain vacuum_field -> rabi_coupling -> doublet -> figures of merit.
// force_resonant computes the doublet at zero detuning (cavity tuned to the
// dimers) while keeping E_c and Q at the configured omega_c.
RabiResult compute_rabi(const CavityParams& params, bool force_resonant = false);

// key=value block with stable keys: E_c_V_per_m, lambda0, lambda_sqrtN,
// omega_plus, omega_minus, Q, t_collapse_lo, t_collapse_hi.
void write_report(std::ostream& out, const RabiResult& r);

void write_spectrum_csv(std::ostream& out, const std::vector<SpectrumSample>& samples);

}  // namespace mtcav::cavity
