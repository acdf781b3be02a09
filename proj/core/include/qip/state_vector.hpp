#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

namespace qip {

using Amplitude = std::complex<double>;

/// Dense statevector cap: 2^24 complex doubles (256 MiB of amplitudes is
/// deliberately out of reach; 24 qubits is 16 MiB per state).
inline constexpr int kMaxQubits = 24;

/// Full statevector of a register of qubits. Basis index k assigns qubit j
/// the bit of weight 2^j (qubit 0 is the least significant bit).
class StateVector {
 public:
  /// Constructs |0...0> on `num_qubits` qubits.
  explicit StateVector(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  std::uint64_t dim() const { return amps_.size(); }

  const std::vector<Amplitude>& amplitudes() const { return amps_; }
  std::vector<Amplitude>& amplitudes() { return amps_; }

  Amplitude& operator[](std::uint64_t i) { return amps_[i]; }
  const Amplitude& operator[](std::uint64_t i) const { return amps_[i]; }

  /// Sum of squared magnitudes; 1 within 1e-10 after any gate sequence.
  double norm() const;

 private:
  int num_qubits_;
  std::vector<Amplitude> amps_;
};

/// |0...0> on q qubits; throws CapacityError unless 1 <= q <= kMaxQubits.
StateVector zero_state(int q);

/// Exact stored amplitude of a computational basis state; no collapse.
Amplitude amplitude_of(const StateVector& state, std::uint64_t basis);

/// Draws `shots` basis states from |amplitude|^2. Deterministic for a fixed
/// seed (the generator and the uniform-double derivation are pinned so that
/// histograms are bit-identical across platforms and reruns).
std::map<std::uint64_t, std::uint64_t> sample(const StateVector& state,
                                              std::uint64_t shots,
                                              std::uint64_t seed);

}  // namespace qip
