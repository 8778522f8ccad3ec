#include "mtcav/lattice.hpp"

#include <cmath>
#include <sstream>

#include "doctest.h"

using namespace mtcav::lattice;

TEST_CASE("lattice dimensions and site count") {
  const MTLattice lat = build_lattice(125);
  CHECK(lat.length_m() == doctest::Approx(1.0e-6).epsilon(1e-12));
  CHECK(lat.site_count() == 13u * 125u);

  const MTLattice ring = build_lattice(1);
  CHECK(ring.site_count() == 13u);

  // counting oracle: walk every site
  std::size_t counted = 0;
  for (int p = 0; p < lat.n_protofilaments(); ++p) {
    for (int n = 0; n < lat.n_rings(); ++n) {
      (void)lat.state(p, n);
      ++counted;
    }
  }
  CHECK(counted == lat.site_count());

  CHECK_THROWS_AS(build_lattice(0), std::invalid_argument);
  CHECK_THROWS_AS(build_lattice(-3), std::invalid_argument);
}

TEST_CASE("all sites start in the Down trunk conformation") {
  const MTLattice lat = build_lattice(4);
  for (int p = 0; p < lat.n_protofilaments(); ++p) {
    for (int n = 0; n < lat.n_rings(); ++n) {
      CHECK(lat.state(p, n) == ConformationState::Down);
    }
  }
}

TEST_CASE("site positions follow the helical offset") {
  const MTLattice lat = build_lattice(8);
  CHECK(lat.site_position(0, 0).x_nm == 0.0);
  CHECK(lat.site_position(1, 0).x_nm == doctest::Approx(1.6).epsilon(1e-12));
  // hand oracle: 2*8 + 5*1.6
  CHECK(lat.site_position(5, 2).x_nm == doctest::Approx(24.0).epsilon(1e-12));

  // axial coordinate strictly increasing in n for fixed p
  for (int p = 0; p < lat.n_protofilaments(); ++p) {
    double prev = -1.0;
    for (int n = 0; n < lat.n_rings(); ++n) {
      const double x = lat.site_position(p, n).x_nm;
      CHECK(x > prev);
      prev = x;
    }
  }

  // transverse coordinates sit on the mean radius
  const double r = 0.5 * (lat.layout().inner_radius_nm + lat.layout().outer_radius_nm);
  for (int p = 0; p < lat.n_protofilaments(); ++p) {
    const SitePosition pos = lat.site_position(p, 0);
    CHECK(std::hypot(pos.y_nm, pos.z_nm) == doctest::Approx(r).epsilon(1e-12));
  }

  CHECK_THROWS_AS(lat.site_position(13, 0), std::invalid_argument);
  CHECK_THROWS_AS(lat.site_position(0, 8), std::invalid_argument);
  CHECK_THROWS_AS(lat.site_position(-1, 0), std::invalid_argument);
}

TEST_CASE("dipole estimate reproduces the screened dimer value") {
  const DimerSpec spec;

  const DipoleEstimate unscreened = estimate_dipole(spec, 1.0);
  CHECK(unscreened.raw_Cm == doctest::Approx(2.3e-26).epsilon(0.01));
  CHECK(unscreened.screened_Cm == unscreened.raw_Cm);

  const DipoleEstimate d = estimate_dipole(spec, 80.0);
  CHECK(d.screened_Cm == doctest::Approx(3e-28).epsilon(0.05));
  CHECK(d.screened_Cm == doctest::Approx(2.88e-28).epsilon(0.01));
  CHECK(d.screened_Cm == d.raw_Cm / 80.0);

  DimerSpec none = spec;
  none.mobile_electrons = 0;
  CHECK(estimate_dipole(none, 80.0).raw_Cm == 0.0);

  CHECK_THROWS_AS(estimate_dipole(spec, 0.5), std::invalid_argument);
}

TEST_CASE("dipole estimate is linear in charge and separation") {
  const DimerSpec base;
  DimerSpec doubled_e = base;
  doubled_e.mobile_electrons = 2 * base.mobile_electrons;
  DimerSpec doubled_sep = base;
  doubled_sep.pocket_separation_nm = 2 * base.pocket_separation_nm;

  const double raw = estimate_dipole(base, 80.0).raw_Cm;
  CHECK(estimate_dipole(doubled_e, 80.0).raw_Cm == 2.0 * raw);
  CHECK(estimate_dipole(doubled_sep, 80.0).raw_Cm == 2.0 * raw);
}

TEST_CASE("debye conversion round-trips") {
  const DipoleEstimate d = estimate_dipole(DimerSpec{}, 80.0);
  CHECK(d.debye * 3.33564e-30 == doctest::Approx(d.raw_Cm).epsilon(1e-12));
  // the charge-times-separation estimate lands near 6.9e3 debye
  CHECK(d.debye == doctest::Approx(6916.0).epsilon(0.01));
  CHECK(simulated_dipole_Cm() == doctest::Approx(1714.0 * 3.33564e-30).epsilon(1e-12));
}

TEST_CASE("longitudinal projection uses the flip angle") {
  const DimerSpec spec;
  // sin-table oracle: sin(27.7 deg) = 0.46463
  CHECK(longitudinal_projection(spec, 3e-28, false) ==
        doctest::Approx(1.394e-28).epsilon(1e-3));
  CHECK(longitudinal_projection(spec, 0.0, false) == 0.0);

  DimerSpec flat = spec;
  flat.flip_angle_free_deg = 0.0;
  flat.flip_angle_trunk_deg = 0.0;
  CHECK(longitudinal_projection(flat, 3e-28, false) == 0.0);

  // trunk angle is the small one
  CHECK(longitudinal_projection(spec, 3e-28, true) <
        longitudinal_projection(spec, 3e-28, false));
  CHECK_THROWS_AS(longitudinal_projection(spec, -1e-30, false), std::invalid_argument);
}

TEST_CASE("dimer spec validation") {
  DimerSpec bad;
  bad.height_nm = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  DimerSpec angle;
  angle.flip_angle_trunk_deg = 30.0;  // exceeds free angle
  CHECK_THROWS_AS(angle.validate(), std::invalid_argument);

  LatticeLayout layout;
  layout.outer_radius_nm = layout.inner_radius_nm;
  CHECK_THROWS_AS(layout.validate(), std::invalid_argument);
}

TEST_CASE("lattice CSV dump is p-major with a header") {
  const MTLattice lat = build_lattice(2);
  std::ostringstream out;
  lat.write_csv(out);
  std::istringstream in(out.str());
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "p,n,x_nm,y_nm,z_nm,state");
  std::size_t rows = 0;
  std::string first_row, second_row;
  while (std::getline(in, line)) {
    if (rows == 0) first_row = line;
    if (rows == 1) second_row = line;
    ++rows;
  }
  CHECK(rows == lat.site_count());
  CHECK(first_row.substr(0, 4) == "0,0,");
  CHECK(second_row.substr(0, 4) == "0,1,");
  CHECK(first_row.find("Down") != std::string::npos);
}
