#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <utility>
#include <vector>

// Dense state-vector engine over small qubit registers, sized for the
// three-microtubule teleportation protocol: an unknown coherent state on
// register A is carried to register C through an entangled (B,C) pair,
// a Bell measurement on (A,B) and a conditional single-qubit correction.

namespace mtcav::qteleport {

using Amplitude = std::complex<double>;

inline constexpr int max_qubits = 12;
inline constexpr double norm_tolerance = 1e-12;

// Normalized pure state over named single-qubit registers. The first label
// is the most significant bit of the basis index, so tensor products
// concatenate labels and Kronecker-multiply amplitudes.
class PureState {
 public:
  PureState(std::vector<std::string> labels, std::vector<Amplitude> amplitudes);

  static PureState single(const std::string& label, Amplitude amp0, Amplitude amp1);

  int n_qubits() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Amplitude>& amplitudes() const { return amps_; }

  int qubit_index(const std::string& label) const;  // throws if unknown
  double norm() const;

  // Marginal probability that the labelled register reads `bit`.
  double marginal(const std::string& label, int bit) const;

 private:
  std::vector<std::string> labels_;
  std::vector<Amplitude> amps_;
};

// (|1_b 0_c> + |0_b 1_c>) / sqrt(2).
PureState make_epr(const std::string& b, const std::string& c);

PureState tensor(const PureState& a, const PureState& b);

enum class BellOutcome { PsiPlus, PsiMinus, PhiPlus, PhiMinus };
enum class Correction { Identity, X, Z, XZ };

std::string to_string(BellOutcome o);
std::string to_string(Correction c);
BellOutcome bell_outcome_from_string(const std::string& name);

// The four Bell vectors over an ordered register pair (first = high bit),
// basis order 00,01,10,11.
struct BellBasis {
  std::string first;
  std::string second;
  static std::array<Amplitude, 4> vector(BellOutcome o);
};

struct BellBranch {
  BellOutcome outcome;
  std::vector<Amplitude> remainder;  // unnormalized coefficient vector
  double weight;                     // squared norm of the remainder
};

// Decomposition of a 3-qubit state over the Bell basis of the measured
// pair; branch weights sum to 1 for a normalized state.
std::array<BellBranch, 4> bell_expand(const PureState& state,
                                      const std::pair<std::string, std::string>& pair);

struct TeleportTranscript {
  Amplitude input_amp0;
  Amplitude input_amp1;
  BellOutcome outcome;
  double outcome_probability;
  std::array<Amplitude, 2> raw_c;        // collapsed target state, renormalized
  Correction correction;
  std::array<Amplitude, 2> corrected_c;  // filled by correct()
  double fidelity;                       // |<input|corrected>|^2
};

// Samples one Bell outcome by branch weight from the given generator and
// collapses the remaining register. Deterministic for a fixed seed.
TeleportTranscript measure_bell(const PureState& state,
                                const std::pair<std::string, std::string>& pair,
                                std::mt19937_64& rng);

// Forces a specific outcome; probability reported is the branch weight.
TeleportTranscript measure_bell_forced(const PureState& state,
                                       const std::pair<std::string, std::string>& pair,
                                       BellOutcome outcome);

// Full post-measurement state: Bell vector on the pair, collapsed remainder
// elsewhere. The measured pair carries no trace of the input amplitudes.
PureState post_measurement_state(const PureState& state,
                                 const std::pair<std::string, std::string>& pair,
                                 BellOutcome outcome);

// Applies the outcome-indexed correction (Identity, Z, X, or X·Z) and fills
// in the fidelity against the input.
TeleportTranscript correct(TeleportTranscript transcript);

// End-to-end protocol on registers A, B, C. The generator-taking overload
// lets batch runs share one seeded stream.
TeleportTranscript teleport(Amplitude amp0, Amplitude amp1, std::uint64_t seed);
TeleportTranscript teleport(Amplitude amp0, Amplitude amp1, std::mt19937_64& rng);
TeleportTranscript teleport_forced(Amplitude amp0, Amplitude amp1, BellOutcome outcome);

// Transcript line: input_amp0,input_amp1,outcome,probability,correction,fidelity
void write_transcript_header(std::ostream& out);
void write_transcript_line(std::ostream& out, const TeleportTranscript& t);

}  // namespace mtcav::qteleport
