#include "qip/encoding.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qip/errors.hpp"

namespace qip {

RegisterLayout RegisterLayout::standard(int n, int m) {
  if (n < 1 || m < 1) {
    throw ValidationError("register layout needs n >= 1 and m >= 1");
  }
  if (n + m > kMaxQubits) {
    throw CapacityError("layout needs " + std::to_string(n + m) +
                        " qubits, cap is " + std::to_string(kMaxQubits));
  }
  return RegisterLayout{n, m, /*key_offset=*/m, /*value_offset=*/0};
}

CircuitProgram geometric_state_program(double theta, int m) {
  if (m < 1 || m > kMaxQubits) {
    throw ValidationError("geometric state needs 1 <= m <= " +
                          std::to_string(kMaxQubits));
  }
  CircuitProgram program(m);
  for (int j = 0; j < m; ++j) {
    program.push(GateOp::phase(std::ldexp(theta, j), j));
  }
  return program;
}

CircuitProgram encode_integer(std::int64_t j, int m) {
  if (m < 1 || m > kMaxQubits) {
    throw ValidationError("integer encoding needs 1 <= m <= " +
                          std::to_string(kMaxQubits));
  }
  const std::int64_t half = std::int64_t{1} << (m - 1);
  if (j < -half || j >= half) {
    throw RangeError("integer " + std::to_string(j) +
                     " outside two's-complement window of " +
                     std::to_string(m) + " bits");
  }
  const double theta =
      static_cast<double>(j) * 2.0 * std::numbers::pi / std::ldexp(1.0, m);
  CircuitProgram program(m);
  for (int t = 0; t < m; ++t) program.push(GateOp::h(t));
  append(program, geometric_state_program(theta, m));
  program.push(GateOp::inv_qft({0, m}));
  return program;
}

namespace {

// Simulator qubit that realizes variable x_j of the key register.
int key_qubit_for_variable(const RegisterLayout& layout, BitOrder order, int j) {
  const int bit = order == BitOrder::Lsb0 ? j : layout.key_qubits - 1 - j;
  return layout.key_offset + bit;
}

// Values must be representable without aliasing: nonnegative ones as raw
// register values (v < M), negative ones in the two's-complement half
// (v >= -M/2).
void check_value_window(const BinaryPolynomial& p, const RegisterLayout& layout,
                        BitOrder order) {
  const int m = layout.value_qubits;
  const std::int64_t full = std::int64_t{1} << m;
  const FunctionTable table = to_table(p, order);
  for (std::size_t k = 0; k < table.values.size(); ++k) {
    const std::int64_t v = table.values[k];
    if (v < -full / 2 || v >= full) {
      throw ValueOverflowError(
          k, v,
          "p(" + std::to_string(k) + ") = " + std::to_string(v) +
              " does not fit the " + std::to_string(m) +
              "-bit value register window [" + std::to_string(-full / 2) +
              ", " + std::to_string(full) + ")");
    }
  }
}

}  // namespace

CircuitProgram dictionary_entangler(const BinaryPolynomial& p,
                                    const RegisterLayout& layout,
                                    BitOrder bit_order) {
  if (p.num_vars() != layout.key_qubits) {
    throw ValidationError("polynomial has " + std::to_string(p.num_vars()) +
                          " variables, key register has " +
                          std::to_string(layout.key_qubits) + " qubits");
  }
  check_value_window(p, layout, bit_order);

  const int m = layout.value_qubits;
  const double unit = 2.0 * std::numbers::pi / std::ldexp(1.0, m);
  CircuitProgram program(layout.total_qubits());
  for (int t = 0; t < m; ++t) program.push(GateOp::h(layout.value_offset + t));

  // Monomial c_J adds phase c_J * 2pi/M * v to |v>_m whenever every key bit
  // of J is set: P(2^t c_J 2pi/M) on value qubit t, controlled on J's qubits.
  for (const auto& [mask, coeff] : p.terms()) {
    std::vector<int> controls;
    for (int j = 0; j < p.num_vars(); ++j) {
      if (mask >> j & 1) controls.push_back(key_qubit_for_variable(layout, bit_order, j));
    }
    for (int t = 0; t < m; ++t) {
      const double theta = std::ldexp(static_cast<double>(coeff) * unit, t);
      program.push(GateOp::phase(theta, layout.value_offset + t, controls));
    }
  }
  program.push(GateOp::inv_qft(layout.value_range()));
  return program;
}

CircuitProgram dictionary_program(const BinaryPolynomial& p,
                                  const RegisterLayout& layout,
                                  BitOrder bit_order) {
  CircuitProgram program(layout.total_qubits());
  for (int j = 0; j < layout.key_qubits; ++j) {
    program.push(GateOp::h(layout.key_offset + j));
  }
  append(program, dictionary_entangler(p, layout, bit_order));
  return program;
}

CircuitProgram cancel_qft_pairs(const CircuitProgram& program) {
  CircuitProgram out(program.num_qubits);
  for (const auto& op : program.ops) {
    const bool is_fourier =
        op.kind == GateKind::Qft || op.kind == GateKind::InvQft;
    if (is_fourier && !out.ops.empty()) {
      const GateOp& prev = out.ops.back();
      const bool prev_fourier =
          prev.kind == GateKind::Qft || prev.kind == GateKind::InvQft;
      if (prev_fourier && prev.kind != op.kind && prev.range == op.range) {
        out.ops.pop_back();
        continue;
      }
    }
    out.ops.push_back(op);
  }
  return out;
}

}  // namespace qip
