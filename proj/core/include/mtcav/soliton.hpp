#pragma once

#include <array>
#include <ostream>
#include <span>
#include <string>
#include <vector>

// Kink solitons on the dimer displacement field u(x,t): analytic traveling
// profiles, the damped nonlinear wave integrator, the smeared force term
// carrying the leading quantum correction, and transit-time accounting.
//
// Field dynamics run in dimensionless units (wave speed 1, kink amplitude
// O(1)); ScaleMap maps physical lattice scales onto them.

namespace mtcav::soliton {

// Polynomial interaction: U(u) is the potential, P(u) = U'(u) the force
// entering the wave equation. Degree of U is capped at 6 so the smear
// series below stays a terminating sum.
class PotentialPoly {
 public:
  // Coefficients ascending in u. from_force integrates formally (constant 0).
  static PotentialPoly from_potential(std::vector<double> u_coeffs);
  static PotentialPoly from_force(const std::vector<double>& p_coeffs);

  // U(u) = (strength/4) * (u^2 - vacuum^2)^2, the classic double well.
  static PotentialPoly double_well(double strength = 1.0, double vacuum = 1.0);

  double potential(double u) const;
  double force(double u) const;
  // order-th derivative of the force P at u.
  double force_deriv(int order, double u) const;

  const std::vector<double>& potential_coeffs() const { return u_coeffs_; }
  const std::vector<double>& force_coeffs() const { return p_coeffs_; }
  int degree() const;

  // Term-by-term check that the stored force equals dU/du.
  bool derivative_consistent() const;

 private:
  PotentialPoly(std::vector<double> u_coeffs, std::vector<double> p_coeffs);

  std::vector<double> u_coeffs_;
  std::vector<double> p_coeffs_;
};

// Cubic force P(u) for which u(xi) = c1*(tanh(c2 xi) + c3) solves the
// traveling-frame equation u'' + rho u' = P(u) exactly.
PotentialPoly matched_tanh_force(double c1, double c2, double c3, double rho);

// Same for the sigmoid variant u = c1 + (c2 - c1)/(1 + exp(c3 (c2-c1) xi)):
// P(u) = -c3 (u - c1)(c2 - u) [rho - c3 (c1 + c2 - 2u)], vanishing on both
// asymptotes.
PotentialPoly matched_sigmoid_force(double c1, double c2, double c3, double rho);

enum class KinkVariant { Tanh, Sigmoid };

// Traveling-wave profile evaluated at xi = x - v t.
//   Tanh:    u = c1*(tanh(c2 xi) + c3), c2 > 0
//   Sigmoid: u = c1 + (c2 - c1) / (1 + exp(c3*(c2 - c1)*xi)), c2 != c1
struct KinkProfile {
  KinkVariant variant = KinkVariant::Tanh;
  double c1 = 1.0;
  double c2 = 1.0;
  double c3 = 0.0;
  double v = 0.0;

  static KinkProfile tanh_kink(double c1, double c2, double c3, double v = 0.0);
  static KinkProfile sigmoid_kink(double c1, double c2, double c3, double v = 0.0);

  double eval(double x, double t) const;
  double d1(double xi) const;  // du/dxi
  double d2(double xi) const;
  // {value at xi -> -inf, value at xi -> +inf}
  std::array<double, 2> asymptotes() const;
  double width() const;

  void validate() const;
};

double kink_eval(const KinkProfile& k, double x, double t);

struct GridSpec {
  double x0 = 0.0;
  double dx = 1.0;
  int n_points = 0;

  double x(int i) const { return x0 + i * dx; }
  double x_last() const { return x(n_points - 1); }
  void validate() const;
};

struct ResidualReport {
  double max_abs;
  bool under_resolved;  // fewer than 16 points per unit kink width
};

// max over the grid of |u''(xi) + rho u'(xi) - P(u(xi))| using the profile's
// analytic derivatives.
ResidualReport traveling_residual(const KinkProfile& k, const PotentialPoly& pot, double rho,
                                  const GridSpec& grid);

enum class SmearMode { Off, ConstantSmear, ProfileSmear };

// Diagonal quantum correction deltaG = G(x,x,t) - G0(x,x) entering the
// smeared force; only this difference is carried, not the bilocal field.
struct QuantumCorrection {
  SmearMode mode = SmearMode::Off;
  double delta_g = 0.0;
  std::vector<double> delta_g_profile;

  static QuantumCorrection off();
  static QuantumCorrection constant(double delta_g);
  static QuantumCorrection profile(std::vector<double> delta_g);

  void validate(int n_points) const;
};

// Smeared force M1(z) = exp(a d^2/dz^2) P(z) with a = delta_g/2, evaluated
// as the terminating series sum_k a^k/k! * P^(2k)(z). Equals a heat-kernel
// convolution of P with variance delta_g.
double corrected_force(const PotentialPoly& pot, double delta_g, double z);
double corrected_force(const PotentialPoly& pot, const QuantumCorrection& q, double z);

enum class Boundary { Fixed, Periodic, Absorbing };

struct FieldState {
  GridSpec grid;
  std::vector<double> u;
  std::vector<double> u_t;
  double time = 0.0;
  Boundary boundary = Boundary::Fixed;
  double gamma = 0.0;  // lab-frame viscous damping
  double rho = 0.0;    // traveling-frame damping, bookkeeping for ODE checks
  double force = 0.0;  // constant external drive

  void validate() const;
};

// Initial data sampled from a profile: u = k(x,0), u_t = -v k'(x).
FieldState make_kink_state(const GridSpec& grid, const KinkProfile& k,
                           Boundary boundary = Boundary::Fixed, double gamma = 0.0,
                           double force = 0.0);

// Kink at -separation/2 + kink_offset moving right at v, antikink at
// +separation/2 moving left at v, on the double-well vacuum -1. The actual
// launch distance must stay >= 10 kink widths.
FieldState make_kink_antikink_state(const GridSpec& grid, double v, double separation,
                                    double gamma = 0.0, double force = 0.0,
                                    Boundary boundary = Boundary::Fixed,
                                    double kink_offset = 0.0);

struct TrajectorySample {
  long step;
  double time;
  double kink_pos;
  double speed_est;
  double shape_l2;
  double energy;
};

struct SampleOptions {
  long stride = 0;  // 0: no trajectory samples
  const KinkProfile* reference = nullptr;
};

struct EvolveResult {
  FieldState state;
  std::vector<TrajectorySample> samples;
};

// Integrates u_tt = u_xx - gamma u_t - M1(u) + force with a second-order
// central stencil in space and a fixed-step second-order leapfrog in time
// (the damping term is folded in implicitly, so the step stays explicit).
// Refuses dt > 0.9 dx; throws with the step index if the field leaves the
// finite range.
EvolveResult evolve(FieldState state, const PotentialPoly& pot, const QuantumCorrection& q,
                    double dt, long n_steps, const SampleOptions& opts = {});

// Mid-level crossing of u between its boundary values, leftmost crossing,
// linearly interpolated. NaN when no crossing exists.
double kink_position(const GridSpec& grid, std::span<const double> u);

// Discrete energy sum of [u_t^2/2 + u_x^2/2 + U(u)] dx.
double field_energy(const FieldState& state, const PotentialPoly& pot);

// Connected regions where |u - vacuum| exceeds the threshold.
int count_localized(std::span<const double> u, double vacuum, double threshold);

struct CollisionReport {
  int survivors;
  double final_vacuum_residual;
  double vacuum_level;
  double threshold;
};

// Evolves the state and counts surviving localized structures against the
// vacuum taken from the left end of the initial data; the threshold is half
// the initial field span.
CollisionReport collide(FieldState state, const PotentialPoly& pot, double dt, long n_steps);

// L / v in seconds.
double transit_time(double length_m, double speed_m_per_s);

// Adapter between physical scales and the dimensionless field units.
// rho_per_gamma is the unresolved proportionality in rho ∝ gamma.
struct ScaleMap {
  double length_scale_m = 8e-9;      // one dimensionless length unit
  double speed_scale_m_per_s = 2.0;  // dimensionless speed 1
  double rho_per_gamma = 1.0;

  double time_scale_s() const { return length_scale_m / speed_scale_m_per_s; }
  double to_dimless_length(double length_m) const { return length_m / length_scale_m; }
  double to_dimless_speed(double v_m_per_s) const { return v_m_per_s / speed_scale_m_per_s; }
  double to_physical_time_s(double t_dimless) const { return t_dimless * time_scale_s(); }
  double rho_from_gamma(double gamma) const { return rho_per_gamma * gamma; }
};

// CSV writers: trajectory "step,time,kink_pos,speed_est,shape_l2,energy";
// snapshot "x,u,u_t".
void write_trajectory_csv(std::ostream& out, const std::vector<TrajectorySample>& samples);
void write_snapshot_csv(std::ostream& out, const FieldState& state);

}  // namespace mtcav::soliton
