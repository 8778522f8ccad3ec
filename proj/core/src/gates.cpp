#include "mtcav/gates.hpp"

#include <cmath>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "mtcav/io.hpp"

namespace mtcav::gates {

namespace {

double canonical(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void check_inputs(const GateNetwork& net, const std::vector<int>& inputs) {
  if (inputs.size() != net.segments.size()) {
    throw std::invalid_argument("gate inputs: one bit per segment required");
  }
  for (int b : inputs) {
    if (b != 0 && b != 1) throw std::invalid_argument("gate inputs: bits must be 0 or 1");
  }
}

// Segment readout for one transmission event: a segment's own soliton counts
// phase Plus; the segment reads 1 when plus and minus counts differ.
std::vector<int> outcome_bits(const GateNetwork& net, const std::vector<int>& inputs,
                              const std::vector<int>& active_maps, unsigned long mask,
                              CoalescePolicy policy) {
  const std::size_t n = net.segments.size();
  std::vector<int> plus(n, 0), minus(n, 0);
  for (std::size_t s = 0; s < n; ++s) plus[s] = inputs[s];
  for (std::size_t k = 0; k < active_maps.size(); ++k) {
    if (!((mask >> k) & 1ul)) continue;
    const MapLink& link = net.maps[active_maps[k]];
    const int to = net.segment_index(link.to);
    (link.phase == Phase::Plus ? plus[to] : minus[to])++;
  }
  std::vector<int> bits(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (policy == CoalescePolicy::Error && (plus[s] > 1 || minus[s] > 1)) {
      throw std::runtime_error("gate evaluation: same-phase pileup on segment " +
                               net.segments[s].id);
    }
    bits[s] = plus[s] != minus[s] ? 1 : 0;
  }
  return bits;
}

std::vector<GateOutcome> to_outcomes(const std::map<std::vector<int>, double>& dist) {
  std::vector<GateOutcome> out;
  out.reserve(dist.size());
  for (const auto& [bits, p] : dist) out.push_back({bits, p});
  return out;
}

}  // namespace

int GateNetwork::segment_index(const std::string& id) const {
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (segments[i].id == id) return static_cast<int>(i);
  }
  return -1;
}

void GateNetwork::validate() const {
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (segments[i].length_um <= 0) {
      throw std::invalid_argument("GateNetwork: segment length must be positive");
    }
    for (std::size_t j = i + 1; j < segments.size(); ++j) {
      if (segments[i].id == segments[j].id) {
        throw std::invalid_argument("GateNetwork: duplicate segment id " + segments[i].id);
      }
    }
  }
  for (const MapLink& m : maps) {
    const int from = segment_index(m.from);
    const int to = segment_index(m.to);
    if (from < 0 || to < 0) {
      throw std::invalid_argument("GateNetwork: map references unknown segment");
    }
    if (m.transmit_probability < 0 || m.transmit_probability > 1) {
      throw std::invalid_argument("GateNetwork: transmit probability must be in [0,1]");
    }
    if (m.position_um < 0 || m.position_um > segments[from].length_um) {
      throw std::invalid_argument("GateNetwork: binding position outside segment");
    }
  }
}

GateNetwork xor_network(double transmit_probability) {
  GateNetwork net;
  net.segments = {{"a1", 1.0}, {"a2", 1.0}, {"b", 1.0}};
  net.maps = {{"a1", "b", 0.5, transmit_probability, Phase::Plus},
              {"a2", "b", 0.5, transmit_probability, Phase::Minus}};
  net.validate();
  return net;
}

GateNetwork parse_network(std::istream& in) {
  GateNetwork net;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string kind;
    if (!(ss >> kind)) continue;
    if (kind == "segment") {
      Segment s;
      if (!(ss >> s.id >> s.length_um)) {
        throw std::invalid_argument("network line " + std::to_string(line_no) +
                                    ": expected 'segment <id> <length_um>'");
      }
      net.segments.push_back(s);
    } else if (kind == "map") {
      MapLink m;
      std::string phase;
      if (!(ss >> m.from >> m.to >> m.position_um >> m.transmit_probability >> phase) ||
          (phase != "+" && phase != "-")) {
        throw std::invalid_argument("network line " + std::to_string(line_no) +
                                    ": expected 'map <from> <to> <pos_um> <p> <+|->'");
      }
      m.phase = phase == "+" ? Phase::Plus : Phase::Minus;
      net.maps.push_back(m);
    } else {
      throw std::invalid_argument("network line " + std::to_string(line_no) +
                                  ": unknown record '" + kind + "'");
    }
  }
  net.validate();
  return net;
}

void write_network(std::ostream& out, const GateNetwork& net) {
  for (const Segment& s : net.segments) {
    out << "segment " << s.id << ' ' << io::fmt(s.length_um) << '\n';
  }
  for (const MapLink& m : net.maps) {
    out << "map " << m.from << ' ' << m.to << ' ' << io::fmt(m.position_um) << ' '
        << io::fmt(m.transmit_probability) << ' ' << (m.phase == Phase::Plus ? '+' : '-')
        << '\n';
  }
}

std::vector<GateOutcome> eval_abstract(const GateNetwork& net, const std::vector<int>& inputs,
                                       CoalescePolicy policy) {
  net.validate();
  check_inputs(net, inputs);
  if (net.maps.size() > static_cast<std::size_t>(max_exact_maps)) {
    throw std::invalid_argument(
        "eval_abstract: too many MAP links for exact enumeration, use Monte Carlo");
  }
  std::vector<int> active;
  for (std::size_t m = 0; m < net.maps.size(); ++m) {
    if (inputs[net.segment_index(net.maps[m].from)] == 1) active.push_back(static_cast<int>(m));
  }
  std::map<std::vector<int>, double> dist;
  const unsigned long n_events = 1ul << active.size();
  for (unsigned long mask = 0; mask < n_events; ++mask) {
    double prob = 1.0;
    for (std::size_t k = 0; k < active.size(); ++k) {
      const double p = net.maps[active[k]].transmit_probability;
      prob *= ((mask >> k) & 1ul) ? p : 1.0 - p;
    }
    if (prob == 0.0) continue;
    dist[outcome_bits(net, inputs, active, mask, policy)] += prob;
  }
  return to_outcomes(dist);
}

std::vector<GateOutcome> eval_monte_carlo(const GateNetwork& net,
                                          const std::vector<int>& inputs, long trials,
                                          std::uint64_t seed, CoalescePolicy policy) {
  net.validate();
  check_inputs(net, inputs);
  if (trials < 1) throw std::invalid_argument("eval_monte_carlo: trials must be >= 1");
  std::vector<int> active;
  for (std::size_t m = 0; m < net.maps.size(); ++m) {
    if (inputs[net.segment_index(net.maps[m].from)] == 1) active.push_back(static_cast<int>(m));
  }
  std::mt19937_64 rng(seed);
  std::map<std::vector<int>, double> dist;
  for (long t = 0; t < trials; ++t) {
    unsigned long mask = 0;
    for (std::size_t k = 0; k < active.size(); ++k) {
      if (canonical(rng) < net.maps[active[k]].transmit_probability) mask |= 1ul << k;
    }
    dist[outcome_bits(net, inputs, active, mask, policy)] += 1.0;
  }
  for (auto& [bits, p] : dist) p /= static_cast<double>(trials);
  return to_outcomes(dist);
}

double length_bias(double length_um, const LengthCalibration& cal) {
  if (length_um <= 0) throw std::invalid_argument("length_bias: length must be positive");
  if (cal.w_um <= 0) throw std::invalid_argument("length_bias: calibration width must be > 0");
  return 1.0 / (1.0 + std::exp((length_um - cal.L0_um) / cal.w_um));
}

GateOutcome eval_physical(const GateNetwork& net, const std::vector<int>& inputs,
                          const CollisionConfig& config) {
  net.validate();
  check_inputs(net, inputs);
  if (net.maps.size() != 2 || net.maps[0].to != net.maps[1].to ||
      net.maps[0].from == net.maps[1].from || net.maps[0].phase == net.maps[1].phase) {
    throw std::invalid_argument(
        "eval_physical: network must be two opposite-phase links into one output segment");
  }
  const int out_idx = net.segment_index(net.maps[0].to);
  if (inputs[out_idx] != 0) {
    throw std::invalid_argument("eval_physical: output segment cannot carry an input soliton");
  }
  const MapLink& plus_link = net.maps[0].phase == Phase::Plus ? net.maps[0] : net.maps[1];
  const MapLink& minus_link = net.maps[0].phase == Phase::Plus ? net.maps[1] : net.maps[0];
  const bool kink_in = inputs[net.segment_index(plus_link.from)] == 1;
  const bool antikink_in = inputs[net.segment_index(minus_link.from)] == 1;

  const double v = config.v0;
  if (v <= 0 || v >= 1) throw std::invalid_argument("eval_physical: require 0 < v0 < 1");
  const double c2 = 1.0 / (std::sqrt(2.0) * std::sqrt(1.0 - v * v));
  if (config.separation < 10.0 / c2) {
    throw std::invalid_argument("eval_physical: separation must be >= 10 kink widths");
  }
  const double a = config.separation / 2.0;
  const double x_kink = -a + config.launch_offset;
  const double x_anti = a;
  const double lo = std::min(x_kink, -a) - config.margin;
  const double hi = std::max(x_anti, a) + config.margin;

  soliton::GridSpec grid;
  grid.n_points = config.n_points;
  grid.x0 = lo;
  grid.dx = (hi - lo) / (config.n_points - 1);

  soliton::FieldState state;
  state.grid = grid;
  state.boundary = soliton::Boundary::Fixed;
  state.gamma = config.gamma;
  state.u.assign(grid.n_points, -1.0);
  state.u_t.assign(grid.n_points, 0.0);
  // Kink launched from the left moving right, antikink from the right moving
  // left; together they bound a +1 plateau on the -1 vacuum.
  for (int i = 0; i < grid.n_points; ++i) {
    const double x = grid.x(i);
    const double tl = std::tanh(c2 * (x - x_kink));
    const double tr = std::tanh(c2 * (x - x_anti));
    const double sl = 1.0 / std::cosh(c2 * (x - x_kink));
    const double sr = 1.0 / std::cosh(c2 * (x - x_anti));
    if (kink_in && antikink_in) {
      state.u[i] = tl - tr - 1.0;
      state.u_t[i] = -v * c2 * (sl * sl + sr * sr);
    } else if (kink_in) {
      state.u[i] = tl;
      state.u_t[i] = -v * c2 * sl * sl;
    } else if (antikink_in) {
      state.u[i] = -tr;
      state.u_t[i] = -v * c2 * sr * sr;
    }
  }

  const double dt = config.dt_factor * grid.dx;
  const long n_steps = std::max(1l, static_cast<long>(std::ceil(config.t_final / dt)));
  const soliton::CollisionReport report =
      soliton::collide(std::move(state), soliton::PotentialPoly::double_well(), dt, n_steps);

  std::vector<int> bits = inputs;
  bits[out_idx] = report.survivors > 0 ? 1 : 0;
  return {bits, 1.0};
}

void write_outcomes_csv(std::ostream& out, const std::vector<GateOutcome>& outcomes) {
  out << "config,bits,probability\n";
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    std::string bits;
    for (int b : outcomes[i].bits) bits += b ? '1' : '0';
    io::write_csv_row(out, {io::fmt(static_cast<long long>(i)), bits,
                            io::fmt(outcomes[i].probability)});
  }
}

}  // namespace mtcav::gates
