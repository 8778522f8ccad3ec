#include "mtcav/qteleport.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mtcav/io.hpp"

namespace mtcav::qteleport {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865475244;

// Uniform double in [0,1) from the top 53 bits; keeps sampling independent
// of library distribution internals.
double canonical(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

PureState::PureState(std::vector<std::string> labels, std::vector<Amplitude> amplitudes)
    : labels_(std::move(labels)), amps_(std::move(amplitudes)) {
  const int n = static_cast<int>(labels_.size());
  if (n < 1 || n > max_qubits) {
    throw std::invalid_argument("PureState: register count must be in [1, 12]");
  }
  if (amps_.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("PureState: amplitude count must be 2^n_qubits");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (labels_[i] == labels_[j]) {
        throw std::invalid_argument("PureState: duplicate register name " + labels_[i]);
      }
    }
  }
  if (std::abs(norm() - 1.0) > norm_tolerance) {
    throw std::invalid_argument("PureState: state is not normalized");
  }
}

PureState PureState::single(const std::string& label, Amplitude amp0, Amplitude amp1) {
  return PureState({label}, {amp0, amp1});
}

int PureState::qubit_index(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    throw std::invalid_argument("PureState: unknown register " + label);
  }
  return static_cast<int>(it - labels_.begin());
}

double PureState::norm() const {
  double s = 0.0;
  for (const Amplitude& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

double PureState::marginal(const std::string& label, int bit) const {
  if (bit != 0 && bit != 1) throw std::invalid_argument("marginal: bit must be 0 or 1");
  const int k = qubit_index(label);
  const int shift = n_qubits() - 1 - k;
  double p = 0.0;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (static_cast<int>((i >> shift) & 1u) == bit) p += std::norm(amps_[i]);
  }
  return p;
}

PureState make_epr(const std::string& b, const std::string& c) {
  if (b == c) throw std::invalid_argument("make_epr: registers must be distinct");
  // basis order 00,01,10,11 over (b,c)
  return PureState({b, c}, {0.0, kInvSqrt2, kInvSqrt2, 0.0});
}

PureState tensor(const PureState& a, const PureState& b) {
  std::vector<std::string> labels = a.labels();
  for (const std::string& l : b.labels()) {
    if (std::find(labels.begin(), labels.end(), l) != labels.end()) {
      throw std::invalid_argument("tensor: register name collision on " + l);
    }
    labels.push_back(l);
  }
  const std::size_t nb = b.amplitudes().size();
  std::vector<Amplitude> amps(a.amplitudes().size() * nb);
  for (std::size_t i = 0; i < a.amplitudes().size(); ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      amps[i * nb + j] = a.amplitudes()[i] * b.amplitudes()[j];
    }
  }
  return PureState(std::move(labels), std::move(amps));
}

std::string to_string(BellOutcome o) {
  switch (o) {
    case BellOutcome::PsiPlus: return "psi+";
    case BellOutcome::PsiMinus: return "psi-";
    case BellOutcome::PhiPlus: return "phi+";
    case BellOutcome::PhiMinus: return "phi-";
  }
  throw std::logic_error("to_string: unknown Bell outcome");
}

std::string to_string(Correction c) {
  switch (c) {
    case Correction::Identity: return "I";
    case Correction::X: return "X";
    case Correction::Z: return "Z";
    case Correction::XZ: return "XZ";
  }
  throw std::logic_error("to_string: unknown correction");
}

BellOutcome bell_outcome_from_string(const std::string& name) {
  if (name == "psi+") return BellOutcome::PsiPlus;
  if (name == "psi-") return BellOutcome::PsiMinus;
  if (name == "phi+") return BellOutcome::PhiPlus;
  if (name == "phi-") return BellOutcome::PhiMinus;
  throw std::invalid_argument("unknown Bell outcome name: " + name);
}

std::array<Amplitude, 4> BellBasis::vector(BellOutcome o) {
  switch (o) {
    case BellOutcome::PsiPlus: return {0.0, kInvSqrt2, kInvSqrt2, 0.0};
    case BellOutcome::PsiMinus: return {0.0, kInvSqrt2, -kInvSqrt2, 0.0};
    case BellOutcome::PhiPlus: return {kInvSqrt2, 0.0, 0.0, kInvSqrt2};
    case BellOutcome::PhiMinus: return {kInvSqrt2, 0.0, 0.0, -kInvSqrt2};
  }
  throw std::logic_error("BellBasis: unknown outcome");
}

namespace {

constexpr std::array<BellOutcome, 4> kOutcomes{BellOutcome::PsiPlus, BellOutcome::PsiMinus,
                                               BellOutcome::PhiPlus, BellOutcome::PhiMinus};

struct PairBits {
  int shift_a;
  int shift_b;
  int shift_r;  // position of the single remaining register
};

PairBits locate(const PureState& state, const std::pair<std::string, std::string>& pair) {
  if (state.n_qubits() != 3) {
    throw std::invalid_argument("bell measurement: expected a 3-register state");
  }
  if (pair.first == pair.second) {
    throw std::invalid_argument("bell measurement: measured registers must be distinct");
  }
  const int n = state.n_qubits();
  const int ka = state.qubit_index(pair.first);
  const int kb = state.qubit_index(pair.second);
  int kr = -1;
  for (int k = 0; k < n; ++k) {
    if (k != ka && k != kb) kr = k;
  }
  return {n - 1 - ka, n - 1 - kb, n - 1 - kr};
}

}  // namespace

std::array<BellBranch, 4> bell_expand(const PureState& state,
                                      const std::pair<std::string, std::string>& pair) {
  const PairBits bits = locate(state, pair);
  const std::vector<Amplitude>& amps = state.amplitudes();

  std::array<BellBranch, 4> branches;
  for (int o = 0; o < 4; ++o) {
    const auto bell = BellBasis::vector(kOutcomes[o]);
    std::vector<Amplitude> remainder(2, 0.0);
    for (std::size_t idx = 0; idx < amps.size(); ++idx) {
      const int a = static_cast<int>((idx >> bits.shift_a) & 1u);
      const int b = static_cast<int>((idx >> bits.shift_b) & 1u);
      const int r = static_cast<int>((idx >> bits.shift_r) & 1u);
      remainder[r] += std::conj(bell[a * 2 + b]) * amps[idx];
    }
    const double weight = std::norm(remainder[0]) + std::norm(remainder[1]);
    branches[o] = {kOutcomes[o], std::move(remainder), weight};
  }
  return branches;
}

namespace {

TeleportTranscript transcript_for(const PureState& state,
                                  const std::pair<std::string, std::string>& pair,
                                  BellOutcome outcome) {
  const auto branches = bell_expand(state, pair);
  const BellBranch& branch = branches[static_cast<int>(outcome)];
  if (branch.weight <= 0.0) {
    throw std::invalid_argument("measure_bell: forced outcome has zero weight");
  }
  const double scale = 1.0 / std::sqrt(branch.weight);
  TeleportTranscript t{};
  t.outcome = outcome;
  t.outcome_probability = branch.weight;
  t.raw_c = {branch.remainder[0] * scale, branch.remainder[1] * scale};
  t.correction = Correction::Identity;
  t.corrected_c = t.raw_c;
  t.fidelity = 0.0;
  return t;
}

void check_normalized(const PureState& state) {
  if (std::abs(state.norm() - 1.0) > norm_tolerance) {
    throw std::invalid_argument("measure_bell: state must be normalized");
  }
}

}  // namespace

TeleportTranscript measure_bell(const PureState& state,
                                const std::pair<std::string, std::string>& pair,
                                std::mt19937_64& rng) {
  check_normalized(state);
  const auto branches = bell_expand(state, pair);
  const double draw = canonical(rng);
  double cumulative = 0.0;
  BellOutcome picked = BellOutcome::PhiMinus;
  for (const BellBranch& b : branches) {
    cumulative += b.weight;
    if (draw < cumulative) {
      picked = b.outcome;
      break;
    }
  }
  return transcript_for(state, pair, picked);
}

TeleportTranscript measure_bell_forced(const PureState& state,
                                       const std::pair<std::string, std::string>& pair,
                                       BellOutcome outcome) {
  check_normalized(state);
  return transcript_for(state, pair, outcome);
}

PureState post_measurement_state(const PureState& state,
                                 const std::pair<std::string, std::string>& pair,
                                 BellOutcome outcome) {
  const PairBits bits = locate(state, pair);
  const TeleportTranscript t = measure_bell_forced(state, pair, outcome);
  const auto bell = BellBasis::vector(outcome);
  std::vector<Amplitude> amps(8, 0.0);
  for (std::size_t idx = 0; idx < amps.size(); ++idx) {
    const int a = static_cast<int>((idx >> bits.shift_a) & 1u);
    const int b = static_cast<int>((idx >> bits.shift_b) & 1u);
    const int r = static_cast<int>((idx >> bits.shift_r) & 1u);
    amps[idx] = bell[a * 2 + b] * t.raw_c[r];
  }
  return PureState(state.labels(), std::move(amps));
}

TeleportTranscript correct(TeleportTranscript t) {
  const Amplitude r0 = t.raw_c[0];
  const Amplitude r1 = t.raw_c[1];
  switch (t.outcome) {
    case BellOutcome::PsiPlus:
      t.correction = Correction::Identity;
      t.corrected_c = {r0, r1};
      break;
    case BellOutcome::PsiMinus:
      t.correction = Correction::Z;
      t.corrected_c = {r0, -r1};
      break;
    case BellOutcome::PhiPlus:
      t.correction = Correction::X;
      t.corrected_c = {r1, r0};
      break;
    case BellOutcome::PhiMinus:
      t.correction = Correction::XZ;  // Z first, then X
      t.corrected_c = {-r1, r0};
      break;
  }
  const Amplitude overlap = std::conj(t.input_amp0) * t.corrected_c[0] +
                            std::conj(t.input_amp1) * t.corrected_c[1];
  t.fidelity = std::norm(overlap);
  return t;
}

namespace {

PureState joint_state(Amplitude amp0, Amplitude amp1) {
  const double norm2 = std::norm(amp0) + std::norm(amp1);
  if (std::abs(norm2 - 1.0) > norm_tolerance) {
    throw std::invalid_argument("teleport: input amplitudes must be normalized");
  }
  return tensor(PureState::single("A", amp0, amp1), make_epr("B", "C"));
}

TeleportTranscript finish(TeleportTranscript t, Amplitude amp0, Amplitude amp1) {
  t.input_amp0 = amp0;
  t.input_amp1 = amp1;
  return correct(std::move(t));
}

}  // namespace

TeleportTranscript teleport(Amplitude amp0, Amplitude amp1, std::mt19937_64& rng) {
  return finish(measure_bell(joint_state(amp0, amp1), {"A", "B"}, rng), amp0, amp1);
}

TeleportTranscript teleport(Amplitude amp0, Amplitude amp1, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return teleport(amp0, amp1, rng);
}

TeleportTranscript teleport_forced(Amplitude amp0, Amplitude amp1, BellOutcome outcome) {
  return finish(measure_bell_forced(joint_state(amp0, amp1), {"A", "B"}, outcome), amp0,
                amp1);
}

void write_transcript_header(std::ostream& out) {
  out << "input_amp0,input_amp1,outcome,probability,correction,fidelity\n";
}

void write_transcript_line(std::ostream& out, const TeleportTranscript& t) {
  io::write_csv_row(out, {io::fmt(t.input_amp0), io::fmt(t.input_amp1),
                          to_string(t.outcome), io::fmt(t.outcome_probability),
                          to_string(t.correction), io::fmt(t.fidelity)});
}

}  // namespace mtcav::qteleport
