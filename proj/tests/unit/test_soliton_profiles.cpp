#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "mtcav/soliton.hpp"

using namespace mtcav::soliton;

namespace {

// Independent heat-kernel oracle: trapezoid convolution of the force with a
// Gaussian of variance delta_g.
double heat_kernel_force(const PotentialPoly& pot, double delta_g, double z) {
  const double sigma = std::sqrt(delta_g);
  const int n = 8001;
  const double lo = -12.0 * sigma;
  const double hi = 12.0 * sigma;
  const double h = (hi - lo) / (n - 1);
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    const double s = lo + i * h;
    const double w = (i == 0 || i == n - 1) ? 0.5 : 1.0;
    acc += w * pot.force(z + s) *
           std::exp(-s * s / (2.0 * sigma * sigma)) / (sigma * std::sqrt(2.0 * M_PI));
  }
  return acc * h;
}

}  // namespace

TEST_CASE("potential polynomial bookkeeping") {
  const PotentialPoly dw = PotentialPoly::double_well();
  CHECK(dw.degree() == 4);
  CHECK(dw.derivative_consistent());
  CHECK(dw.force(1.0) == 0.0);
  CHECK(dw.force(-1.0) == 0.0);
  CHECK(dw.force(0.5) == doctest::Approx(0.5 * 0.5 * 0.5 - 0.5).epsilon(1e-14));
  CHECK(dw.potential(0.0) == doctest::Approx(0.25).epsilon(1e-14));

  const PotentialPoly from_p = PotentialPoly::from_force({0.0, -1.0, 0.0, 1.0});
  CHECK(from_p.derivative_consistent());
  CHECK(from_p.potential(1.0) == doctest::Approx(-0.25).epsilon(1e-14));

  CHECK_THROWS_AS(PotentialPoly::from_potential({0, 0, 0, 0, 0, 0, 0, 1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(PotentialPoly::from_force({0, 0, 0, 0, 0, 0, 1.0}), std::invalid_argument);
}

TEST_CASE("kink evaluation and asymptotes") {
  const KinkProfile tanh_k = KinkProfile::tanh_kink(1.0, 1.0, 0.0, 0.7);
  CHECK(tanh_k.eval(0.7 * 3.0, 3.0) == 0.0);  // x = v t
  CHECK(tanh_k.eval(40.0, 0.0) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(kink_eval(tanh_k, -40.0, 0.0) == doctest::Approx(-1.0).epsilon(1e-9));

  const KinkProfile sig = KinkProfile::sigmoid_kink(0.0, 1.0, 4.0, 0.0);
  CHECK(sig.eval(0.0, 0.0) == 0.5);  // 1/(1+e^0)

  CHECK_THROWS_AS(KinkProfile::tanh_kink(1.0, -1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(KinkProfile::sigmoid_kink(1.0, 1.0, 4.0), std::invalid_argument);
}

TEST_CASE("asymptote values at |xi| = 40 / c2") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  std::uniform_real_distribution<double> pos(0.1, 2.0);
  for (int i = 0; i < 50; ++i) {
    const double c1 = coef(rng);
    const double c2 = pos(rng);
    const double c3 = coef(rng);
    if (c1 == 0.0) continue;
    const KinkProfile k = KinkProfile::tanh_kink(c1, c2, c3, 0.0);
    const auto a = k.asymptotes();
    CHECK(a[0] == c1 * (c3 - 1.0));
    CHECK(a[1] == c1 * (c3 + 1.0));
    const double far = 40.0 / c2;
    CHECK(k.eval(-far, 0.0) == doctest::Approx(a[0]).epsilon(1e-9));
    CHECK(k.eval(far, 0.0) == doctest::Approx(a[1]).epsilon(1e-9));
  }
  for (int i = 0; i < 50; ++i) {
    const double c1 = coef(rng);
    double c2 = coef(rng);
    if (c2 == c1) c2 += 1.0;
    const double c3 = pos(rng);
    const KinkProfile k = KinkProfile::sigmoid_kink(c1, c2, c3, 0.0);
    const auto a = k.asymptotes();
    const double far = 40.0 * k.width();
    CHECK(k.eval(-far, 0.0) == doctest::Approx(a[0]).epsilon(1e-9));
    CHECK(k.eval(far, 0.0) == doctest::Approx(a[1]).epsilon(1e-9));
  }
}

TEST_CASE("matched tanh force satisfies the traveling equation") {
  const double c1 = 1.3, c2 = 0.8, c3 = 0.2, rho = 0.4;
  const KinkProfile k = KinkProfile::tanh_kink(c1, c2, c3, 0.0);
  const PotentialPoly matched = matched_tanh_force(c1, c2, c3, rho);

  GridSpec grid;
  grid.x0 = -15.0;
  grid.dx = (1.0 / c2) / 20.0;
  grid.n_points = static_cast<int>(30.0 / grid.dx) + 1;

  const ResidualReport r = traveling_residual(k, matched, rho, grid);
  CHECK(r.max_abs < 1e-10);
  CHECK_FALSE(r.under_resolved);

  // perturbation oracle: 10% extra damping leaves a residual ~ 0.1 rho |u'|
  const ResidualReport wrong = traveling_residual(k, matched, 1.1 * rho, grid);
  CHECK(wrong.max_abs > 1e-3);

  // zero field, zero force
  const KinkProfile flat = KinkProfile::tanh_kink(0.0, 1.0, 0.0, 0.0);
  const PotentialPoly none = PotentialPoly::from_force({0.0});
  CHECK(traveling_residual(flat, none, 0.5, grid).max_abs == 0.0);

  GridSpec coarse;
  coarse.x0 = -15.0;
  coarse.dx = 1.0;  // one point per width
  coarse.n_points = 31;
  CHECK(traveling_residual(k, matched, rho, coarse).under_resolved);
}

TEST_CASE("matched sigmoid force satisfies the traveling equation") {
  const double c1 = -0.5, c2 = 1.5, c3 = 0.8, rho = 0.25;
  const KinkProfile k = KinkProfile::sigmoid_kink(c1, c2, c3, 0.0);
  const PotentialPoly matched = matched_sigmoid_force(c1, c2, c3, rho);

  GridSpec grid;
  grid.x0 = -12.0;
  grid.dx = k.width() / 24.0;
  grid.n_points = static_cast<int>(24.0 / grid.dx) + 1;

  const ResidualReport r = traveling_residual(k, matched, rho, grid);
  CHECK(r.max_abs < 1e-10);
  CHECK_FALSE(r.under_resolved);

  // both asymptotes are roots of the matched force
  CHECK(matched.force(c1) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(matched.force(c2) == doctest::Approx(0.0).epsilon(1e-14));

  CHECK(traveling_residual(k, matched, 1.3 * rho, grid).max_abs > 1e-3);
  CHECK_THROWS_AS(matched_sigmoid_force(1.0, 1.0, 0.5, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(matched_sigmoid_force(0.0, 1.0, 0.0, 0.1), std::invalid_argument);
}

TEST_CASE("quantum-corrected force series") {
  // d^2(z^3)/dz^2 = 6z, so deltaG = 0.2 turns z^3 - z into z^3 - 0.4 z
  const PotentialPoly cubic = PotentialPoly::from_force({0.0, -1.0, 0.0, 1.0});
  CHECK(corrected_force(cubic, 0.2, 1.0) == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(corrected_force(cubic, 0.2, 2.0) == doctest::Approx(8.0 - 0.8).epsilon(1e-12));

  // identity smear
  for (double z : {-2.0, -0.3, 0.0, 1.7}) {
    CHECK(corrected_force(cubic, 0.0, z) == cubic.force(z));
  }

  // linear force is invariant under any smear
  const PotentialPoly linear = PotentialPoly::from_force({0.0, 1.0});
  for (double dg : {0.0, 0.3, 1.0}) {
    CHECK(corrected_force(linear, dg, 0.7) == 0.7);
  }

  CHECK_THROWS_AS(corrected_force(cubic, -0.1, 0.0), std::invalid_argument);
}

TEST_CASE("smeared force matches the heat-kernel convolution") {
  const PotentialPoly dw = PotentialPoly::double_well();
  // degree-6 potential exercises every term of the series
  const PotentialPoly deg6 =
      PotentialPoly::from_potential({0.1, -0.4, 0.8, 0.05, -0.3, 0.02, 0.15});
  for (const PotentialPoly* pot : {&dw, &deg6}) {
    for (double dg : {0.1, 0.25, 0.5, 1.0}) {
      for (double z : {-2.0, -1.0, -0.25, 0.0, 0.6, 1.5, 2.0}) {
        const double series = corrected_force(*pot, dg, z);
        const double quad = heat_kernel_force(*pot, dg, z);
        const double scale = std::max({std::abs(series), std::abs(quad), 1e-3});
        CHECK(std::abs(series - quad) / scale < 1e-6);
      }
    }
  }
}

TEST_CASE("quantum correction modes validate their data") {
  CHECK(QuantumCorrection::off().mode == SmearMode::Off);
  CHECK_THROWS_AS(QuantumCorrection::constant(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(QuantumCorrection::profile({0.1, -0.2}), std::invalid_argument);
  const QuantumCorrection q = QuantumCorrection::profile({0.1, 0.2, 0.3});
  CHECK_THROWS_AS(q.validate(4), std::invalid_argument);
  CHECK_NOTHROW(q.validate(3));
  CHECK_THROWS_AS(corrected_force(PotentialPoly::double_well(), q, 0.0),
                  std::invalid_argument);
}

TEST_CASE("transit time") {
  CHECK(transit_time(1e-6, 2.0) == 5e-7);
  CHECK(transit_time(1e-6, 20.0) == doctest::Approx(5e-8).epsilon(1e-14));
  CHECK(transit_time(2e-6, 2.0) == doctest::Approx(1e-6).epsilon(1e-14));
  CHECK_THROWS_AS(transit_time(0.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(transit_time(1e-6, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(transit_time(-1e-6, 2.0), std::invalid_argument);

  // homogeneity: scaling length and speed together leaves the time fixed
  for (double a : {0.5, 2.0, 4.0}) {
    CHECK(transit_time(a * 1e-6, a * 2.0) == transit_time(1e-6, 2.0));
  }
  CHECK(transit_time(3.7e-6, 3.7 * 2.0) == doctest::Approx(transit_time(1e-6, 2.0)).epsilon(1e-14));
}

TEST_CASE("scale map carries physical units into lattice units") {
  ScaleMap map;
  CHECK(map.time_scale_s() == doctest::Approx(4e-9).epsilon(1e-12));
  CHECK(map.to_dimless_speed(2.0) == 1.0);
  CHECK(map.to_dimless_length(1e-6) == doctest::Approx(125.0).epsilon(1e-12));
  CHECK(map.to_physical_time_s(125.0) == doctest::Approx(5e-7).epsilon(1e-12));
  map.rho_per_gamma = 2.5;
  CHECK(map.rho_from_gamma(0.2) == doctest::Approx(0.5).epsilon(1e-14));
}
