#pragma once

#include <cstddef>
#include <ostream>
#include <vector>

// Microtubule geometry: a cylinder of offset protofilaments whose sites are
// tubulin dimers, each carrying a two-state electric dipole. The chain model
// is effectively one-dimensional; transverse coordinates exist for reporting.

namespace mtcav::lattice {

// Geometric and electrostatic description of one tubulin dimer.
// Angles in degrees, lengths in nm. The free flip angle 27.7 deg corresponds
// to 27 deg 42 min; polymerized (GDP trunk) dimers flip by a much smaller,
// configurable angle.
struct DimerSpec {
  double height_nm = 8.0;
  double width_nm = 4.0;
  double depth_nm = 6.5;
  int mobile_electrons = 36;
  double pocket_separation_nm = 4.0;
  double hydrolysis_energy_eV = 0.42;
  double flip_angle_free_deg = 27.7;
  double flip_angle_trunk_deg = 2.0;

  // Throws std::invalid_argument if lengths are non-positive or the flip
  // angles violate 0 <= trunk <= free < 90.
  void validate() const;
};

enum class ConformationState : unsigned char { Up, Down };

// Cylinder layout: 13 protofilaments by default, 5-start helix, so each
// protofilament sits one fifth of a dimer height above its neighbor.
struct LatticeLayout {
  int n_protofilaments = 13;
  int helix_start = 5;
  double inner_radius_nm = 7.0;
  double outer_radius_nm = 12.5;

  void validate() const;
};

struct SitePosition {
  double x_nm;
  double y_nm;
  double z_nm;
};

class MTLattice {
 public:
  MTLattice(int n_rings, DimerSpec dimer = {}, LatticeLayout layout = {});

  int n_rings() const { return n_rings_; }
  int n_protofilaments() const { return layout_.n_protofilaments; }
  std::size_t site_count() const;
  double length_m() const;

  const DimerSpec& dimer() const { return dimer_; }
  const LatticeLayout& layout() const { return layout_; }

  ConformationState state(int p, int n) const;

  // Axial coordinate x = n*height + p*(height/helix_start); (y,z) on the
  // mean-radius circle at angle 2*pi*p/n_protofilaments.
  SitePosition site_position(int p, int n) const;

  // CSV dump: header "p,n,x_nm,y_nm,z_nm,state", rows p-major then n.
  void write_csv(std::ostream& out) const;

 private:
  void check_site(int p, int n) const;

  int n_rings_;
  DimerSpec dimer_;
  LatticeLayout layout_;
  std::vector<ConformationState> states_;  // indexed p * n_rings + n
};

MTLattice build_lattice(int n_rings, const DimerSpec& dimer = {},
                        const LatticeLayout& layout = {});

struct DipoleEstimate {
  double raw_Cm;       // charge * pocket separation, unscreened
  double screened_Cm;  // raw / epsilon_rel
  double debye;        // raw in debye
  double epsilon_rel;
};

// Dipole magnitude from the mobile-electron charge times the hydrophobic
// pocket separation, screened by the relative dielectric constant.
DipoleEstimate estimate_dipole(const DimerSpec& spec, double epsilon_rel = 80.0);

// Projection of a dipole of magnitude d_Cm onto the longitudinal axis,
// using the trunk or free flip angle. This sets the amplitude scale for
// the displacement field u.
double longitudinal_projection(const DimerSpec& spec, double d_Cm, bool trunk);

// Molecular-simulation dipole value, exposed as an optional preset only.
inline constexpr double simulated_dipole_debye = 1714.0;
double simulated_dipole_Cm();

}  // namespace mtcav::lattice
