#include "mtcav/lattice.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mtcav/constants.hpp"
#include "mtcav/io.hpp"

namespace mtcav::lattice {

void DimerSpec::validate() const {
  if (height_nm <= 0 || width_nm <= 0 || depth_nm <= 0 || pocket_separation_nm <= 0) {
    throw std::invalid_argument("DimerSpec: lengths must be positive");
  }
  if (mobile_electrons < 0) {
    throw std::invalid_argument("DimerSpec: mobile_electrons must be >= 0");
  }
  if (flip_angle_free_deg < 0 || flip_angle_free_deg >= 90 || flip_angle_trunk_deg < 0 ||
      flip_angle_trunk_deg >= 90) {
    throw std::invalid_argument("DimerSpec: flip angles must lie in [0, 90)");
  }
  if (flip_angle_trunk_deg > flip_angle_free_deg) {
    throw std::invalid_argument("DimerSpec: trunk flip angle exceeds free flip angle");
  }
}

void LatticeLayout::validate() const {
  if (n_protofilaments < 1) {
    throw std::invalid_argument("LatticeLayout: need at least one protofilament");
  }
  if (helix_start < 1) {
    throw std::invalid_argument("LatticeLayout: helix_start must be >= 1");
  }
  if (inner_radius_nm <= 0 || outer_radius_nm <= inner_radius_nm) {
    throw std::invalid_argument("LatticeLayout: require 0 < inner radius < outer radius");
  }
}

MTLattice::MTLattice(int n_rings, DimerSpec dimer, LatticeLayout layout)
    : n_rings_(n_rings), dimer_(dimer), layout_(layout) {
  if (n_rings < 1) {
    throw std::invalid_argument("MTLattice: n_rings must be >= 1");
  }
  dimer_.validate();
  layout_.validate();
  // GDP trunk: every site starts Down.
  states_.assign(static_cast<std::size_t>(layout_.n_protofilaments) * n_rings_,
                 ConformationState::Down);
}

std::size_t MTLattice::site_count() const { return states_.size(); }

double MTLattice::length_m() const { return n_rings_ * dimer_.height_nm * constants::nm_m; }

void MTLattice::check_site(int p, int n) const {
  if (p < 0 || p >= layout_.n_protofilaments || n < 0 || n >= n_rings_) {
    throw std::invalid_argument("MTLattice: site index out of range");
  }
}

ConformationState MTLattice::state(int p, int n) const {
  check_site(p, n);
  return states_[static_cast<std::size_t>(p) * n_rings_ + n];
}

SitePosition MTLattice::site_position(int p, int n) const {
  check_site(p, n);
  const double h = dimer_.height_nm;
  const double x = n * h + p * (h / layout_.helix_start);
  const double r = 0.5 * (layout_.inner_radius_nm + layout_.outer_radius_nm);
  const double theta = 2.0 * std::numbers::pi * p / layout_.n_protofilaments;
  return {x, r * std::cos(theta), r * std::sin(theta)};
}

void MTLattice::write_csv(std::ostream& out) const {
  out << "p,n,x_nm,y_nm,z_nm,state\n";
  for (int p = 0; p < layout_.n_protofilaments; ++p) {
    for (int n = 0; n < n_rings_; ++n) {
      const SitePosition pos = site_position(p, n);
      io::write_csv_row(out, {io::fmt(static_cast<long long>(p)),
                              io::fmt(static_cast<long long>(n)), io::fmt(pos.x_nm),
                              io::fmt(pos.y_nm), io::fmt(pos.z_nm),
                              state(p, n) == ConformationState::Up ? "Up" : "Down"});
    }
  }
}

MTLattice build_lattice(int n_rings, const DimerSpec& dimer, const LatticeLayout& layout) {
  return MTLattice(n_rings, dimer, layout);
}

DipoleEstimate estimate_dipole(const DimerSpec& spec, double epsilon_rel) {
  spec.validate();
  if (epsilon_rel < 1.0) {
    throw std::invalid_argument("estimate_dipole: epsilon_rel must be >= 1");
  }
  const double raw = spec.mobile_electrons * constants::elementary_charge_C *
                     spec.pocket_separation_nm * constants::nm_m;
  return {raw, raw / epsilon_rel, raw / constants::debye_C_m, epsilon_rel};
}

double longitudinal_projection(const DimerSpec& spec, double d_Cm, bool trunk) {
  spec.validate();
  if (d_Cm < 0) {
    throw std::invalid_argument("longitudinal_projection: dipole must be >= 0");
  }
  const double angle_deg = trunk ? spec.flip_angle_trunk_deg : spec.flip_angle_free_deg;
  return d_Cm * std::sin(angle_deg * std::numbers::pi / 180.0);
}

double simulated_dipole_Cm() { return simulated_dipole_debye * constants::debye_C_m; }

}  // namespace mtcav::lattice
