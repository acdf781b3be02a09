#include "qip/state_prep.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "qip/encoding.hpp"
#include "qip/errors.hpp"

namespace qip {

namespace {

void check_qubits(int q, int lo, const char* what) {
  if (q < lo || q > kMaxQubits) {
    throw ValidationError(std::string(what) + " needs between " +
                          std::to_string(lo) + " and " +
                          std::to_string(kMaxQubits) + " qubits, got " +
                          std::to_string(q));
  }
}

// Multiplexed-RY tree preparing |target|/||target||, then phase flips on the
// negative entries. Qubit q-1 is the root split (index bit q-1), so the
// prefix pattern at depth d lives on qubits q-1 .. q-d.
CircuitProgram amplitude_tree(std::span<const double> target, int q) {
  const std::uint64_t dim = std::uint64_t{1} << q;
  CircuitProgram program(q);

  // Squared block sums per level: level[d][c] covers indices whose top d bits
  // equal c.
  std::vector<std::vector<double>> level(q + 1);
  level[q].assign(target.begin(), target.end());
  for (auto& v : level[q]) v *= v;
  for (int d = q - 1; d >= 0; --d) {
    level[d].resize(std::uint64_t{1} << d);
    for (std::uint64_t c = 0; c < level[d].size(); ++c) {
      level[d][c] = level[d + 1][2 * c] + level[d + 1][2 * c + 1];
    }
  }

  for (int d = 0; d < q; ++d) {
    const int target_qubit = q - 1 - d;
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << d); ++c) {
      const double total = level[d][c];
      if (total == 0.0) continue;
      const double right = level[d + 1][2 * c + 1];
      const double left = level[d + 1][2 * c];
      const double angle = 2.0 * std::atan2(std::sqrt(right), std::sqrt(left));
      if (angle == 0.0) continue;

      std::vector<int> controls;
      std::vector<int> anti;  // control qubits that must read 0
      for (int i = 0; i < d; ++i) {
        const int qubit = q - 1 - i;
        controls.push_back(qubit);
        if (!(c >> (d - 1 - i) & 1)) anti.push_back(qubit);
      }
      for (int a : anti) program.push(GateOp::x(a));
      program.push(GateOp::rot_y(angle, target_qubit, controls));
      for (int a : anti) program.push(GateOp::x(a));
    }
  }

  // Phase flips realize the sign pattern exactly.
  for (std::uint64_t b = 0; b < dim; ++b) {
    if (!(target[b] < 0.0)) continue;
    std::vector<int> anti;
    for (int j = 0; j < q; ++j) {
      if (!(b >> j & 1)) anti.push_back(j);
    }
    std::vector<int> controls;
    for (int j = 1; j < q; ++j) controls.push_back(j);
    for (int a : anti) program.push(GateOp::x(a));
    program.push(GateOp::phase(std::numbers::pi, 0, controls));
    for (int a : anti) program.push(GateOp::x(a));
  }
  return program;
}

PreparedOperator fourier_loader(std::vector<double> coeffs, int n, double norm,
                                std::string label) {
  CircuitProgram program = amplitude_tree(coeffs, n);
  program.push(GateOp::inv_qft({0, n}));
  return PreparedOperator{std::move(program), n, norm, std::move(label)};
}

}  // namespace

PreparedOperator raised_cosine(int n) {
  check_qubits(n, 2, "raised_cosine");
  const double N = std::ldexp(1.0, n);
  // (|0> - |1>)/sqrt(2), then the inverse QFT spreads it into the sine arch.
  CircuitProgram program(n);
  program.push(GateOp::h(0));
  program.push(GateOp::phase(std::numbers::pi, 0));
  program.push(GateOp::inv_qft({0, n}));
  return PreparedOperator{std::move(program), n, std::sqrt(2.0 / N), "N1"};
}

PreparedOperator sin4(int n) {
  check_qubits(n, 2, "sin4");
  const std::uint64_t N = std::uint64_t{1} << n;
  std::vector<double> coeffs(N, 0.0);
  coeffs[0] = std::sqrt(2.0 / 3.0);
  coeffs[1] = -1.0 / std::sqrt(6.0);
  coeffs[N - 1] = -1.0 / std::sqrt(6.0);
  return fourier_loader(std::move(coeffs), n,
                        std::sqrt(8.0 / (3.0 * static_cast<double>(N))), "N2");
}

PreparedOperator sin8(int n) {
  check_qubits(n, 3, "sin8");
  const std::uint64_t N = std::uint64_t{1} << n;
  const double s = 1.0 / std::sqrt(70.0);
  std::vector<double> coeffs(N, 0.0);
  coeffs[0] = 6.0 * s;
  coeffs[1] = -4.0 * s;
  coeffs[2] = s;
  coeffs[N - 2] = s;
  coeffs[N - 1] = -4.0 * s;
  return fourier_loader(std::move(coeffs), n,
                        std::sqrt(128.0 / (35.0 * static_cast<double>(N))), "N4");
}

PreparedOperator linear_trig(double theta, int n) {
  check_qubits(n + 1, 2, "linear_trig");
  const int ancilla = n;
  CircuitProgram program(n + 1);
  for (int j = 0; j < n; ++j) program.push(GateOp::h(j));
  program.push(GateOp::x(ancilla));
  // After X the ancilla sits at |1>; RY(-2 k theta) turns it into
  // sin(k theta)|0> + cos(k theta)|1>, composed bit by bit.
  for (int j = 0; j < n; ++j) {
    const double angle = -std::ldexp(2.0 * theta, j);
    if (angle != 0.0) program.push(GateOp::rot_y(angle, ancilla, {j}));
  }
  const double N = std::ldexp(1.0, n);
  const double norm = theta != 0.0 ? std::abs(theta) / std::sqrt(N) : 1.0;
  return PreparedOperator{std::move(program), n + 1, norm,
                          "T(" + std::to_string(theta) + ")"};
}

PreparedOperator exact_amplitudes(std::span<const double> target, int q,
                                  std::string label) {
  check_qubits(q, 1, "exact_amplitudes");
  if (target.size() != (std::uint64_t{1} << q)) {
    throw ValidationError("target has " + std::to_string(target.size()) +
                          " entries, expected " +
                          std::to_string(std::uint64_t{1} << q));
  }
  double norm_sq = 0.0;
  for (double v : target) {
    if (!std::isfinite(v)) throw ValidationError("target entries must be finite");
    norm_sq += v * v;
  }
  if (norm_sq == 0.0) throw ValidationError("target vector is all zero");
  return PreparedOperator{amplitude_tree(target, q), q,
                          1.0 / std::sqrt(norm_sq), std::move(label)};
}

PreparedOperator identity_ramp(int q) {
  check_qubits(q, 1, "identity_ramp");
  const std::uint64_t M = std::uint64_t{1} << q;
  std::vector<double> ramp(M);
  std::iota(ramp.begin(), ramp.end(), 0.0);
  PreparedOperator op = exact_amplitudes(ramp, q, "L");
  const double Md = static_cast<double>(M);
  op.normalization = std::sqrt(6.0 / ((Md - 1.0) * Md * (2.0 * Md - 1.0)));
  return op;
}

PreparedOperator quantile_state(std::uint64_t l, int n) {
  check_qubits(n, 1, "quantile_state");
  const std::uint64_t N = std::uint64_t{1} << n;
  if (l >= N) {
    throw ValidationError("quantile cutoff " + std::to_string(l) +
                          " out of range for " + std::to_string(n) + " qubits");
  }
  std::vector<double> flat(N, 0.0);
  for (std::uint64_t k = 0; k <= l; ++k) flat[k] = 1.0;
  PreparedOperator op = exact_amplitudes(flat, n, "quantile");
  op.normalization = 1.0 / std::sqrt(static_cast<double>(l + 1));
  return op;
}

PreparedOperator basis_operator(std::uint64_t v0, int m) {
  check_qubits(m, 1, "basis_operator");
  const std::uint64_t M = std::uint64_t{1} << m;
  if (v0 >= M) {
    throw RangeError("basis value " + std::to_string(v0) +
                     " out of range for " + std::to_string(m) + " qubits");
  }
  const std::int64_t j = v0 < M / 2 ? static_cast<std::int64_t>(v0)
                                    : static_cast<std::int64_t>(v0) -
                                          static_cast<std::int64_t>(M);
  return PreparedOperator{encode_integer(j, m), m, 1.0, "point"};
}

PreparedOperator uniform_operator(int n) {
  check_qubits(n, 1, "uniform_operator");
  CircuitProgram program(n);
  for (int j = 0; j < n; ++j) program.push(GateOp::h(j));
  return PreparedOperator{std::move(program), n,
                          1.0 / std::sqrt(std::ldexp(1.0, n)), "uniform"};
}

PreparedOperator gaussian_density(double mu, double sigma, int n) {
  check_qubits(n, 1, "gaussian_density");
  if (!(sigma > 0.0) || !std::isfinite(mu) || !std::isfinite(sigma)) {
    throw ValidationError("gaussian loader needs finite mu and sigma > 0");
  }
  const std::uint64_t N = std::uint64_t{1} << n;
  std::vector<double> density(N);
  for (std::uint64_t k = 0; k < N; ++k) {
    const double z = (static_cast<double>(k) - mu) / sigma;
    density[k] = std::exp(-0.5 * z * z);
  }
  return exact_amplitudes(density, n, "gauss");
}

}  // namespace qip
