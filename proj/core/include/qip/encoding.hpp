#pragma once

#include <cstdint>

#include "qip/circuit.hpp"
#include "qip/polynomial.hpp"

namespace qip {

/// Placement of the key and value registers on the simulator's qubits.
/// The standard layout puts the value register on qubits [0, m) and the key
/// register on [m, m + n), so a measured joint index reads key * 2^m + value.
struct RegisterLayout {
  int key_qubits = 0;
  int value_qubits = 0;
  int key_offset = 0;
  int value_offset = 0;

  static RegisterLayout standard(int n, int m);
  int total_qubits() const { return key_qubits + value_qubits; }
  QubitRange key_range() const { return {key_offset, key_qubits}; }
  QubitRange value_range() const { return {value_offset, value_qubits}; }
};

/// Phase cascade P(2^t * theta) on the qubit of weight 2^t; applied after
/// H^{x m} it turns the uniform state into (1/sqrt(M)) sum_k e^{i k theta}|k>.
CircuitProgram geometric_state_program(double theta, int m);

/// Full program mapping |0>_m to |j> for j >= 0, |j + M> for j < 0
/// (two's complement): H^{x m}, geometric phases at theta = j 2 pi / M,
/// inverse QFT. Requires -M/2 <= j < M/2.
CircuitProgram encode_integer(std::int64_t j, int m);

/// The entangling operator F of the dictionary: H on the value register,
/// per-monomial controlled phases, inverse QFT on the value register.
/// F maps sum_k a_k |k>|0>_m to sum_k a_k |k>|p(k) mod M>_m for any key
/// superposition; it deliberately leaves the key register untouched so it can
/// sit between arbitrary A and B operators.
/// `bit_order` says which key qubit realizes variable x_j (Msb0 reproduces
/// the value tables used throughout the finance layer).
/// Throws ValueOverflowError (naming the offending key) unless every value
/// fits the two's-complement window [-M/2, M/2).
CircuitProgram dictionary_entangler(const BinaryPolynomial& p,
                                    const RegisterLayout& layout,
                                    BitOrder bit_order = BitOrder::Msb0);

/// The full key-value encoding from |0>_{n+m}: H on the key register followed
/// by the entangler, producing (1/sqrt(N)) sum_k |k>_n |p(k) mod M>_m.
CircuitProgram dictionary_program(const BinaryPolynomial& p,
                                  const RegisterLayout& layout,
                                  BitOrder bit_order = BitOrder::Msb0);

/// Removes adjacent QFT/IQFT (and IQFT/QFT) pairs on identical ranges,
/// cascading through newly adjacent pairs. The end-to-end unitary action is
/// unchanged.
CircuitProgram cancel_qft_pairs(const CircuitProgram& program);

}  // namespace qip
