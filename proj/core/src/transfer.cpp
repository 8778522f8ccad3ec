#include "mtcav/transfer.hpp"

#include <cmath>
#include <stdexcept>

#include "mtcav/io.hpp"

namespace mtcav::transfer {

void ForsterParams::validate() const {
  if (T1_s <= 0) throw std::invalid_argument("ForsterParams: T1 must be positive");
  if (r0_angstrom <= 0) throw std::invalid_argument("ForsterParams: r0 must be positive");
  if (r_angstrom <= 0) throw std::invalid_argument("ForsterParams: r must be positive");
}

double forster_rate(const ForsterParams& p) {
  p.validate();
  return (1.0 / p.T1_s) * std::pow(p.r0_angstrom / p.r_angstrom, 6);
}

ChannelComparison compare_channels(const ForsterParams& p, double hop_distance_m,
                                   double chain_length_m, double kink_length_m,
                                   double kink_speed_m_per_s) {
  if (hop_distance_m <= 0) {
    throw std::invalid_argument("compare_channels: hop distance must be positive");
  }
  if (chain_length_m < 0) {
    throw std::invalid_argument("compare_channels: chain length must be >= 0");
  }
  if (kink_length_m <= 0 || kink_speed_m_per_s <= 0) {
    throw std::invalid_argument("compare_channels: kink length and speed must be positive");
  }
  const double k = forster_rate(p);
  const double hops = chain_length_m / hop_distance_m;
  const double forster_time = hops / k;
  const double kink_time = kink_length_m / kink_speed_m_per_s;
  return {k, hops, forster_time, kink_time, forster_time / kink_time};
}

void write_report(std::ostream& out, const ChannelComparison& c) {
  io::write_kv(out, "k_per_s", c.k_per_s);
  io::write_kv(out, "forster_chain_time_s", c.forster_chain_time_s);
  io::write_kv(out, "kink_time_s", c.kink_time_s);
  io::write_kv(out, "ratio", c.ratio);
}

}  // namespace mtcav::transfer
