#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "mtcav/soliton.hpp"

// Soliton logic networks: microtubule segments joined by MAP links, each of
// which transmits a passing soliton with some probability and tags it with a
// phase (kink vs antikink orientation). Two opposite-phase solitons on one
// segment annihilate; the abstract layer enumerates transmission events, the
// physical layer reproduces the two-input case with a collision run.

namespace mtcav::gates {

enum class Phase { Plus, Minus };

struct Segment {
  std::string id;
  double length_um;
};

struct MapLink {
  std::string from;
  std::string to;
  double position_um;
  double transmit_probability;
  Phase phase;
};

// What to do when two same-phase solitons land on one segment: Coalesce and
// Saturate both leave a single soliton (bit 1); Error refuses the network.
enum class CoalescePolicy { Coalesce, Saturate, Error };

struct GateNetwork {
  std::vector<Segment> segments;
  std::vector<MapLink> maps;

  int segment_index(const std::string& id) const;  // -1 when absent
  void validate() const;
};

// Two input segments feeding one output through opposite-phase unit links.
GateNetwork xor_network(double transmit_probability = 1.0);

// Network file: lines "segment <id> <length_um>" and
// "map <from> <to> <pos_um> <p> <+|->"; '#' starts a comment.
GateNetwork parse_network(std::istream& in);
void write_network(std::ostream& out, const GateNetwork& net);

struct GateOutcome {
  std::vector<int> bits;  // one per segment, in network order
  double probability;
};

inline constexpr int max_exact_maps = 20;

// Exact enumeration over MAP transmission events. A segment's own input
// soliton persists (links tap it without consuming it) and counts phase
// Plus; a segment reads 1 when its plus and minus counts differ. Refuses
// networks with more than max_exact_maps links.
std::vector<GateOutcome> eval_abstract(const GateNetwork& net, const std::vector<int>& inputs,
                                       CoalescePolicy policy = CoalescePolicy::Coalesce);

// Seeded Monte Carlo estimate of the same distribution.
std::vector<GateOutcome> eval_monte_carlo(const GateNetwork& net,
                                          const std::vector<int>& inputs, long trials,
                                          std::uint64_t seed,
                                          CoalescePolicy policy = CoalescePolicy::Coalesce);

// Transmission probability from segment length: logistic in (L - L0)/w.
// The default calibration degenerates to p = 1 for any realistic length.
struct LengthCalibration {
  double L0_um = 1e12;
  double w_um = 1.0;
};
double length_bias(double length_um, const LengthCalibration& cal = {});

// Field-level run of the two-input topology. Solitons are launched from
// opposite ends of the output segment (kink for the Plus link, antikink for
// the Minus link); launch_offset shifts the Plus launch point to probe
// timing misalignment. Transmission is taken as certain, so the result
// matches eval_abstract at p = 1.
struct CollisionConfig {
  double v0 = 0.7;             // launch speed, lattice units
  double separation = 14.0;    // launch separation, >= 10 kink widths
  double gamma = 0.1;
  double launch_offset = 0.0;
  int n_points = 2048;
  double margin = 14.0;        // grid padding beyond the launch points
  double dt_factor = 0.4;      // dt = dt_factor * dx
  double t_final = 260.0;
};

GateOutcome eval_physical(const GateNetwork& net, const std::vector<int>& inputs,
                          const CollisionConfig& config = {});

// Outcome CSV: "config,bits,probability" with bits as a 0/1 string.
void write_outcomes_csv(std::ostream& out, const std::vector<GateOutcome>& outcomes);

}  // namespace mtcav::gates
