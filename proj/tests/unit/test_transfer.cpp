#include "mtcav/transfer.hpp"

#include <cmath>
#include <sstream>

#include "doctest.h"

using namespace mtcav::transfer;

TEST_CASE("forster rate at the reference separation") {
  ForsterParams p{1e-12, 2.1, 2.1};
  CHECK(forster_rate(p) == 1.0 / p.T1_s);

  // power oracle: 0.75^6
  ForsterParams q{1.0, 2.1, 2.8};
  CHECK(forster_rate(q) == doctest::Approx(0.178).epsilon(1e-2));
  CHECK(forster_rate(q) == doctest::Approx(std::pow(0.75, 6)).epsilon(1e-12));

  ForsterParams far{1.0, 2.1, 21.0};
  CHECK(forster_rate(far) == doctest::Approx(1e-6).epsilon(1e-12));

  ForsterParams bad{1.0, 2.1, 0.0};
  CHECK_THROWS_AS(forster_rate(bad), std::invalid_argument);
  ForsterParams bad_t1{0.0, 2.1, 2.8};
  CHECK_THROWS_AS(forster_rate(bad_t1), std::invalid_argument);
}

TEST_CASE("forster rate monotonicity and T1 scaling") {
  double prev = forster_rate({1.0, 2.1, 2.0});
  for (double r = 2.2; r < 6.0; r += 0.2) {
    const double k = forster_rate({1.0, 2.1, r});
    CHECK(k < prev);
    prev = k;
  }
  double prev_r0 = forster_rate({1.0, 1.0, 2.8});
  for (double r0 = 1.2; r0 < 4.0; r0 += 0.2) {
    const double k = forster_rate({1.0, r0, 2.8});
    CHECK(k > prev_r0);
    prev_r0 = k;
  }
  const double k1 = forster_rate({1e-12, 2.1, 2.8});
  const double k2 = forster_rate({2e-12, 2.1, 2.8});
  CHECK(k1 == doctest::Approx(2.0 * k2).epsilon(1e-14));
}

TEST_CASE("channel comparison counts sequential hops") {
  // 1 um chain, 2.8 A hops, resonant pair: 3571 hops at 1e12 /s
  ForsterParams p{1e-12, 2.1, 2.1};
  const ChannelComparison c = compare_channels(p, 2.8e-10, 1e-6, 1e-6, 2.0);
  CHECK(c.forster_chain_time_s == doctest::Approx(3.571e-9).epsilon(1e-3));
  CHECK(c.kink_time_s == doctest::Approx(5e-7).epsilon(1e-12));
  CHECK(c.ratio == doctest::Approx(c.forster_chain_time_s / c.kink_time_s).epsilon(1e-12));

  const ChannelComparison empty = compare_channels(p, 2.8e-10, 0.0, 1e-6, 2.0);
  CHECK(empty.forster_chain_time_s == 0.0);
}

TEST_CASE("channel times scale linearly with chain length") {
  ForsterParams p{1e-12, 2.1, 2.8};
  const ChannelComparison a = compare_channels(p, 2.8e-10, 1e-6, 1e-6, 2.0);
  const ChannelComparison b = compare_channels(p, 2.8e-10, 2e-6, 2e-6, 2.0);
  CHECK(b.forster_chain_time_s == doctest::Approx(2.0 * a.forster_chain_time_s).epsilon(1e-12));
  CHECK(b.kink_time_s == doctest::Approx(2.0 * a.kink_time_s).epsilon(1e-12));
}

TEST_CASE("transfer report block uses stable keys") {
  ForsterParams p{1e-12, 2.1, 2.8};
  std::ostringstream out;
  write_report(out, compare_channels(p, 2.8e-10, 1e-6, 1e-6, 2.0));
  const std::string text = out.str();
  CHECK(text.find("k_per_s=") != std::string::npos);
  CHECK(text.find("forster_chain_time_s=") != std::string::npos);
  CHECK(text.find("kink_time_s=") != std::string::npos);
  CHECK(text.find("ratio=") != std::string::npos);
}
