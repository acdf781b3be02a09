#include "qip/inner_product.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "qip/errors.hpp"

namespace qip {

namespace {

int log2_size(std::size_t size, const char* what) {
  if (size < 2 || (size & (size - 1)) != 0) {
    throw ValidationError(std::string(what) + " length " +
                          std::to_string(size) + " is not a power of two >= 2");
  }
  int q = 0;
  while ((std::size_t{1} << q) < size) ++q;
  return q;
}

double inv_l2_norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  // All-zero vectors keep a unit factor; callers short-circuit that case.
  return s > 0.0 ? 1.0 / std::sqrt(s) : 1.0;
}

bool all_zero(const std::vector<double>& v) {
  for (double x : v) {
    if (x != 0.0) return false;
  }
  return true;
}

}  // namespace

WeightSpec WeightSpec::uniform(int n) {
  WeightSpec w;
  w.n = n;
  w.weights.assign(std::uint64_t{1} << n, 1.0);
  w.common_factor = inv_l2_norm(w.weights);
  return w;
}

WeightSpec WeightSpec::sin_squared(int n) {
  WeightSpec w;
  w.n = n;
  const std::uint64_t N = std::uint64_t{1} << n;
  w.weights.resize(N);
  for (std::uint64_t k = 0; k < N; ++k) {
    const double s = std::sin(static_cast<double>(k) * std::numbers::pi /
                              static_cast<double>(N));
    w.weights[k] = s * s;
  }
  w.common_factor = inv_l2_norm(w.weights);
  return w;
}

WeightSpec WeightSpec::from_values(std::vector<double> values) {
  WeightSpec w;
  w.n = log2_size(values.size(), "weight vector");
  w.weights = std::move(values);
  w.common_factor = inv_l2_norm(w.weights);
  return w;
}

HashSpec HashSpec::identity(int m) {
  HashSpec h;
  h.m = m;
  const std::uint64_t M = std::uint64_t{1} << m;
  h.hashes.resize(M);
  for (std::uint64_t v = 0; v < M; ++v) h.hashes[v] = static_cast<double>(v);
  h.common_factor = inv_l2_norm(h.hashes);
  return h;
}

HashSpec HashSpec::call_payoff(int m, std::int64_t strike) {
  HashSpec h;
  h.m = m;
  const std::uint64_t M = std::uint64_t{1} << m;
  h.hashes.assign(M, 0.0);
  for (std::uint64_t v = 0; v < M; ++v) {
    const auto sv = static_cast<std::int64_t>(v);
    if (sv >= strike) h.hashes[v] = static_cast<double>(sv - strike);
  }
  h.common_factor = inv_l2_norm(h.hashes);
  return h;
}

HashSpec HashSpec::point(int m, std::uint64_t v0) {
  HashSpec h;
  h.m = m;
  const std::uint64_t M = std::uint64_t{1} << m;
  if (v0 >= M) {
    throw ValidationError("point hash index " + std::to_string(v0) +
                          " out of range");
  }
  h.hashes.assign(M, 0.0);
  h.hashes[v0] = 1.0;
  h.common_factor = 1.0;
  return h;
}

HashSpec HashSpec::from_values(std::vector<double> values) {
  HashSpec h;
  h.m = log2_size(values.size(), "hash vector");
  h.hashes = std::move(values);
  h.common_factor = inv_l2_norm(h.hashes);
  return h;
}

std::string EstimateResult::to_json() const {
  const auto num = [](double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return std::string(buf);
  };
  std::string out = "{";
  out += "\"amplitude0_re\":" + num(amplitude0.real());
  out += ",\"amplitude0_im\":" + num(amplitude0.imag());
  out += ",\"weighted_sum\":" + num(weighted_sum);
  out += ",\"a\":" + num(a_used);
  out += ",\"b\":" + num(b_used);
  out += ",\"rescale\":" + num(rescale_factor);
  out += std::string(",\"mode\":\"") + (sampled ? "sampled" : "exact") + "\"";
  out += ",\"shots\":" + std::to_string(shots);
  out += ",\"seed\":" + std::to_string(seed);
  out += "}";
  return out;
}

CircuitProgram pattern1_program(const PreparedOperator& A,
                                const PreparedOperator& B) {
  if (A.qubit_count != B.qubit_count) {
    throw ValidationError("pattern 1 needs equal register sizes, got " +
                          std::to_string(A.qubit_count) + " and " +
                          std::to_string(B.qubit_count));
  }
  CircuitProgram program = A.program;
  append(program, inverted(B.program));
  return program;
}

std::complex<double> simple_inner_product(const PreparedOperator& A,
                                          const PreparedOperator& B) {
  return amplitude_of(run(pattern1_program(A, B)), 0);
}

CircuitProgram pattern2_program(const PreparedOperator& A,
                                const CircuitProgram& F,
                                const PreparedOperator& B) {
  const int m = B.qubit_count;
  const int n = A.qubit_count;
  const int total = n + m;
  if (F.num_qubits != total) {
    throw ValidationError("entangler is on " + std::to_string(F.num_qubits) +
                          " qubits, expected " + std::to_string(total));
  }
  // Value register on [0, m), key register on [m, m + n).
  CircuitProgram program = shifted(A.program, m, total);
  append(program, F);
  append(program, shifted(inverted(B.program), 0, total));
  for (int j = 0; j < n; ++j) program.push(GateOp::h(m + j));
  return program;
}

std::complex<double> generalized_inner_product(const PreparedOperator& A,
                                               const CircuitProgram& F,
                                               const PreparedOperator& B) {
  return amplitude_of(run(pattern2_program(A, F, B)), 0);
}

namespace {

EstimateResult finish(const CircuitProgram& program, double a, double b,
                      double rescale, ExecMode mode) {
  EstimateResult result;
  result.a_used = a;
  result.b_used = b;
  result.rescale_factor = rescale;
  if (mode.sampled) {
    const double mag = estimate_magnitude(program, mode.shots, mode.seed);
    result.amplitude0 = mag;
    result.weighted_sum = rescale * mag;
    result.sampled = true;
    result.shots = mode.shots;
    result.seed = mode.seed;
  } else {
    result.amplitude0 = amplitude_of(run(program), 0);
    result.weighted_sum = rescale * result.amplitude0.real();
  }
  return result;
}

}  // namespace

EstimateResult weighted_sum_simple(const WeightSpec& w, const PreparedOperator& A,
                                   const PreparedOperator& B, double b_factor,
                                   ExecMode mode) {
  if (A.qubit_count < w.n) {
    throw ValidationError("operator A too small for the weight register");
  }
  const double a = w.common_factor;
  return finish(pattern1_program(A, B), a, b_factor, 1.0 / (a * b_factor), mode);
}

EstimateResult weighted_hashed_sum(const PreparedOperator& A, double a_factor,
                                   const PreparedOperator& B, double b_factor,
                                   const std::vector<double>& hashes,
                                   const BinaryPolynomial& p, BitOrder bit_order,
                                   ExecMode mode) {
  if (all_zero(hashes)) {
    EstimateResult zero;
    zero.a_used = a_factor;
    zero.b_used = b_factor;
    zero.sampled = mode.sampled;
    zero.shots = mode.shots;
    zero.seed = mode.seed;
    return zero;
  }
  const int n = A.qubit_count;
  const int m = B.qubit_count;
  const auto layout = RegisterLayout::standard(n, m);
  const CircuitProgram F = dictionary_entangler(p, layout, bit_order);
  const double rescale =
      std::sqrt(std::ldexp(1.0, n)) / (a_factor * b_factor);
  return finish(pattern2_program(A, F, B), a_factor, b_factor, rescale, mode);
}

EstimateResult weighted_hashed_sum(const WeightSpec& w, const HashSpec& h,
                                   const BinaryPolynomial& p, BitOrder bit_order,
                                   ExecMode mode) {
  if (all_zero(h.hashes)) {
    EstimateResult zero;
    zero.sampled = mode.sampled;
    zero.shots = mode.shots;
    zero.seed = mode.seed;
    return zero;
  }
  const PreparedOperator A = exact_amplitudes(w.weights, w.n, "weights");
  const PreparedOperator B = exact_amplitudes(h.hashes, h.m, "hashes");
  return weighted_hashed_sum(A, w.common_factor, B, h.common_factor, h.hashes,
                             p, bit_order, mode);
}

EstimateResult expected_value_canonical(const PreparedOperator& A, double a_factor,
                                        const BinaryPolynomial& p, int m,
                                        BitOrder bit_order, ExecMode mode) {
  const HashSpec h = HashSpec::identity(m);
  return weighted_hashed_sum(A, a_factor, identity_ramp(m), h.common_factor,
                             h.hashes, p, bit_order, mode);
}

EstimateResult expected_value_canonical(const WeightSpec& w,
                                        const BinaryPolynomial& p, int m,
                                        BitOrder bit_order, ExecMode mode) {
  const PreparedOperator A = exact_amplitudes(w.weights, w.n, "weights");
  return expected_value_canonical(A, w.common_factor, p, m, bit_order, mode);
}

EstimateResult mean_value(const BinaryPolynomial& p, int m, BitOrder bit_order,
                          ExecMode mode) {
  const int n = p.num_vars();
  const PreparedOperator A = uniform_operator(n);
  EstimateResult result =
      expected_value_canonical(A, A.normalization, p, m, bit_order, mode);
  const double N = std::ldexp(1.0, n);
  result.weighted_sum /= N;
  result.rescale_factor /= N;
  return result;
}

double estimate_magnitude(const CircuitProgram& program, std::uint64_t shots,
                          std::uint64_t seed) {
  if (shots < 1) throw ValidationError("shots must be >= 1");
  const StateVector state = run(program);
  const auto hist = sample(state, shots, seed);
  const auto it = hist.find(0);
  const double c0 = it == hist.end() ? 0.0 : static_cast<double>(it->second);
  return std::sqrt(c0 / static_cast<double>(shots));
}

}  // namespace qip
