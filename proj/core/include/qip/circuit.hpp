#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qip/state_vector.hpp"

namespace qip {

enum class GateKind { H, X, Phase, RotY, Qft, InvQft };

/// Contiguous qubit range [first, first + count). Inside a QFT the
/// sub-register index j assigns qubit (first + t) the bit of weight 2^t.
struct QubitRange {
  int first = 0;
  int count = 0;

  bool operator==(const QubitRange&) const = default;
};

/// One gate. Controlled gates act only on basis states where every control
/// bit is 1; QFT/InvQft take a range and no controls.
struct GateOp {
  GateKind kind = GateKind::H;
  int target = 0;
  std::vector<int> controls;
  double theta = 0.0;      // Phase / RotY only
  QubitRange range;        // Qft / InvQft only

  static GateOp h(int target, std::vector<int> controls = {});
  static GateOp x(int target, std::vector<int> controls = {});
  static GateOp phase(double theta, int target, std::vector<int> controls = {});
  static GateOp rot_y(double theta, int target, std::vector<int> controls = {});
  static GateOp qft(QubitRange range);
  static GateOp inv_qft(QubitRange range);

  bool operator==(const GateOp&) const = default;
};

/// Ordered gate list over a fixed qubit count.
struct CircuitProgram {
  int num_qubits = 0;
  std::vector<GateOp> ops;

  CircuitProgram() = default;
  explicit CircuitProgram(int q) : num_qubits(q) {}

  CircuitProgram& push(GateOp op) {
    ops.push_back(std::move(op));
    return *this;
  }

  bool operator==(const CircuitProgram&) const = default;
};

/// Applies one gate in place. Norm is preserved within 1e-10.
/// RY(phi) = [[cos(phi/2), -sin(phi/2)], [sin(phi/2), cos(phi/2)]].
void apply(StateVector& state, const GateOp& op);

/// Applies every op of the program in order.
void apply(StateVector& state, const CircuitProgram& program);

/// Runs the program on a fresh zero state.
StateVector run(const CircuitProgram& program);

/// Forward QFT maps sub-register basis index j to
/// (1/sqrt(R)) sum_k e^{+2 pi i j k / R} |k>, R = 2^range.count, with the
/// internal bit reversal resolved so input and output share the index
/// convention of QubitRange. `inverse` applies the exact adjoint.
void apply_qft(StateVector& state, QubitRange range, bool inverse);

/// Formal inverse of a single gate (H and X are self-inverse, angles negate,
/// QFT and InvQft swap).
GateOp inverted(const GateOp& op);

/// Reversed list of inverted gates; applying program then inverted(program)
/// restores any state within 1e-10.
CircuitProgram inverted(const CircuitProgram& program);

/// Same gates with every qubit index shifted by `offset`, re-homed on a
/// register of `num_qubits` qubits.
CircuitProgram shifted(const CircuitProgram& program, int offset, int num_qubits);

/// Appends all ops of `tail` to `head` (qubit counts must match).
void append(CircuitProgram& head, const CircuitProgram& tail);

/// Line-based text form: `qubits <q>` then one `kind target [ctrl a,b]
/// [theta x]` or `qft first count` line per gate. Parsed back bit-exactly.
std::string to_text(const CircuitProgram& program);
CircuitProgram program_from_text(const std::string& text);

}  // namespace qip
