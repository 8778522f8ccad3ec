#pragma once

#include <ostream>

// Förster intermolecular energy transfer between OH oscillators and its
// comparison against kink-soliton transport over the same distance.

namespace mtcav::transfer {

struct ForsterParams {
  double T1_s;  // excited-state lifetime; no physical default exists
  double r0_angstrom = 2.1;
  double r_angstrom = 2.8;

  void validate() const;
};

// Pairwise transfer rate k = (1/T1) * (r0/r)^6, in 1/s.
double forster_rate(const ForsterParams& p);

struct ChannelComparison {
  double k_per_s;
  double hops;
  double forster_chain_time_s;
  double kink_time_s;
  double ratio;  // forster / kink
};

// Sequential-hop Förster time over a chain versus a single kink transit.
// hop_distance_m > 0; chain_length_m >= 0 (zero chain means zero hops).
ChannelComparison compare_channels(const ForsterParams& p, double hop_distance_m,
                                   double chain_length_m, double kink_length_m,
                                   double kink_speed_m_per_s);

// key=value block: k_per_s, forster_chain_time_s, kink_time_s, ratio.
void write_report(std::ostream& out, const ChannelComparison& c);

}  // namespace mtcav::transfer
