#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "qip/circuit.hpp"
#include "qip/polynomial.hpp"
#include "qip/state_vector.hpp"

namespace qip::test {

inline bool close(std::complex<double> a, std::complex<double> b,
                  double tol = 1e-10) {
  return std::abs(a - b) <= tol;
}

inline bool states_close(const StateVector& a, const StateVector& b,
                         double tol = 1e-10) {
  if (a.dim() != b.dim()) return false;
  for (std::uint64_t i = 0; i < a.dim(); ++i) {
    if (!close(a[i], b[i], tol)) return false;
  }
  return true;
}

inline bool states_identical(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) return false;
  for (std::uint64_t i = 0; i < a.dim(); ++i) {
    if (a[i].real() != b[i].real() || a[i].imag() != b[i].imag()) return false;
  }
  return true;
}

/// Random program over H/X/P/RY with random controls plus occasional QFT
/// blocks; used by the norm/unitarity property tests.
inline CircuitProgram random_program(std::mt19937_64& rng, int qubits,
                                     int gate_count, bool with_qft = true) {
  std::uniform_int_distribution<int> kind_dist(0, with_qft ? 5 : 3);
  std::uniform_int_distribution<int> qubit_dist(0, qubits - 1);
  std::uniform_real_distribution<double> angle_dist(-3.2, 3.2);
  CircuitProgram program(qubits);
  for (int g = 0; g < gate_count; ++g) {
    const int kind = kind_dist(rng);
    if (kind >= 4) {
      const int first = qubit_dist(rng);
      std::uniform_int_distribution<int> count_dist(1, qubits - first);
      const QubitRange range{first, count_dist(rng)};
      program.push(kind == 4 ? GateOp::qft(range) : GateOp::inv_qft(range));
      continue;
    }
    const int target = qubit_dist(rng);
    std::vector<int> controls;
    std::uniform_int_distribution<int> nc_dist(0, 2);
    int nc = nc_dist(rng);
    while (nc-- > 0) {
      const int c = qubit_dist(rng);
      bool dup = c == target;
      for (int prev : controls) dup = dup || prev == c;
      if (!dup) controls.push_back(c);
    }
    switch (kind) {
      case 0: program.push(GateOp::h(target, controls)); break;
      case 1: program.push(GateOp::x(target, controls)); break;
      case 2: program.push(GateOp::phase(angle_dist(rng), target, controls)); break;
      default: program.push(GateOp::rot_y(angle_dist(rng), target, controls)); break;
    }
  }
  return program;
}

/// Random state drawn from per-amplitude gaussians, normalized.
inline StateVector random_state(std::mt19937_64& rng, int qubits) {
  StateVector state(qubits);
  std::normal_distribution<double> dist(0.0, 1.0);
  double norm_sq = 0.0;
  for (std::uint64_t i = 0; i < state.dim(); ++i) {
    state[i] = {dist(rng), dist(rng)};
    norm_sq += std::norm(state[i]);
  }
  const double scale = 1.0 / std::sqrt(norm_sq);
  for (std::uint64_t i = 0; i < state.dim(); ++i) state[i] *= scale;
  return state;
}

/// Random polynomial whose table values stay inside [lo, hi], built through
/// interpolation so the range is guaranteed by construction.
inline BinaryPolynomial random_polynomial(std::mt19937_64& rng, int n,
                                          std::int64_t lo, std::int64_t hi,
                                          BitOrder order = BitOrder::Msb0) {
  std::uniform_int_distribution<std::int64_t> value_dist(lo, hi);
  FunctionTable table{n, std::vector<std::int64_t>(std::uint64_t{1} << n), order};
  for (auto& v : table.values) v = value_dist(rng);
  return from_table(table);
}

}  // namespace qip::test
