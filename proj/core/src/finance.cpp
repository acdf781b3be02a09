#include "qip/finance.hpp"

#include <cmath>
#include <numbers>

#include "qip/errors.hpp"

namespace qip {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<std::complex<double>> closed_form_weights(const std::string& name,
                                                      int n) {
  const std::uint64_t N = std::uint64_t{1} << n;
  std::vector<std::complex<double>> w(N);
  for (std::uint64_t k = 0; k < N; ++k) {
    const double x = static_cast<double>(k) * kPi / static_cast<double>(N);
    if (name == "sin4") {
      w[k] = std::sin(x) * std::sin(x);
    } else if (name == "sin8") {
      const double s2 = std::sin(x) * std::sin(x);
      w[k] = s2 * s2;
    } else if (name == "rcos") {
      w[k] = std::sin(x) * std::polar(1.0, kPi / 2.0 - x);
    } else {  // uniform
      w[k] = 1.0;
    }
  }
  return w;
}

// Value actually held by the value register for key k: p(k) mod M.
std::vector<std::uint64_t> register_values(const BinaryPolynomial& p, int m,
                                           BitOrder order) {
  const std::uint64_t M = std::uint64_t{1} << m;
  const FunctionTable table = to_table(p, order);
  std::vector<std::uint64_t> out(table.values.size());
  for (std::size_t k = 0; k < table.values.size(); ++k) {
    const std::int64_t v = table.values[k];
    out[k] = static_cast<std::uint64_t>(((v % static_cast<std::int64_t>(M)) +
                                         static_cast<std::int64_t>(M)) %
                                        static_cast<std::int64_t>(M));
  }
  return out;
}

Report make_report(EstimateResult estimate, double oracle) {
  Report report;
  report.quantum_value = estimate.weighted_sum;
  report.oracle = oracle;
  report.abs_error = std::abs(estimate.weighted_sum - oracle);
  report.estimate = std::move(estimate);
  return report;
}

}  // namespace

WeightProfile weight_profile(const std::string& name, int n) {
  WeightProfile profile;
  profile.name = name;
  if (name == "sin4") {
    profile.op = sin4(n);
  } else if (name == "rcos") {
    profile.op = raised_cosine(n);
  } else if (name == "sin8") {
    profile.op = sin8(n);
  } else if (name == "uniform") {
    profile.op = uniform_operator(n);
  } else {
    throw ValidationError("unknown weight loader `" + name +
                          "` (expected sin4|rcos|sin8|uniform)");
  }
  profile.weights = closed_form_weights(name, n);
  return profile;
}

WeightProfile weight_profile_from_values(std::vector<double> w,
                                         std::string name) {
  WeightProfile profile;
  const WeightSpec spec = WeightSpec::from_values(w);
  profile.op = exact_amplitudes(spec.weights, spec.n, name);
  profile.weights.assign(spec.weights.begin(), spec.weights.end());
  profile.name = std::move(name);
  return profile;
}

Report expected_value_discrete(const BinaryPolynomial& p, int n, int m,
                               const WeightProfile& weights, BitOrder bit_order,
                               ExecMode mode) {
  if (p.num_vars() != n || weights.op.qubit_count != n) {
    throw ValidationError("polynomial, loader, and key register sizes disagree");
  }
  EstimateResult estimate =
      expected_value_canonical(weights.op, weights.a(), p, m, bit_order, mode);
  const auto values = register_values(p, m, bit_order);
  std::complex<double> oracle = 0.0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    oracle += weights.weights[k] * static_cast<double>(values[k]);
  }
  return make_report(std::move(estimate), oracle.real());
}

Report payoff_expectation(const PayoffSpec& spec, int n, int m,
                          BitOrder bit_order, ExecMode mode) {
  if (spec.f.num_vars() != n || spec.w.n != n) {
    throw ValidationError("payoff spec register sizes disagree");
  }
  const HashSpec h = HashSpec::call_payoff(m, spec.strike);
  EstimateResult estimate = weighted_hashed_sum(spec.w, h, spec.f, bit_order, mode);
  // Independent route: the printed rectifier formula over the key table.
  const FunctionTable table = to_table(spec.f, bit_order);
  double oracle = 0.0;
  for (std::size_t k = 0; k < table.values.size(); ++k) {
    if (table.values[k] >= spec.strike) {
      oracle += spec.w.weights[k] *
                static_cast<double>(table.values[k] - spec.strike);
    }
  }
  return make_report(std::move(estimate), oracle);
}

EstimateResult cumulative_probability(const WeightSpec& w, std::uint64_t l,
                                      ExecMode mode) {
  for (double wk : w.weights) {
    if (wk < 0.0) {
      throw ValidationError("cumulative probability needs nonnegative weights");
    }
  }
  const PreparedOperator A = exact_amplitudes(w.weights, w.n, "weights");
  const PreparedOperator B = quantile_state(l, w.n);
  return weighted_sum_simple(w, A, B, B.normalization, mode);
}

VarResult value_at_risk(const VarQuery& query, int n) {
  if (!(query.alpha > 0.0) || !(query.alpha < 1.0)) {
    throw ValidationError("alpha must lie in (0, 1)");
  }
  const WeightSpec w = WeightSpec::from_values(query.weights);
  if (w.n != n) {
    throw ValidationError("weight vector does not match the register size");
  }
  const std::uint64_t N = std::uint64_t{1} << n;
  // Slack absorbs amplitude-readout rounding at exact-equality thresholds.
  constexpr double kSlack = 1e-9;
  const auto cumulative = [&](std::uint64_t l) {
    return cumulative_probability(w, l).weighted_sum;
  };
  if (cumulative(N - 1) < query.alpha - kSlack) {
    throw UnreachableAlphaError("total mass below the requested alpha");
  }
  std::uint64_t lo = 0, hi = N - 1;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (cumulative(mid) >= query.alpha - kSlack) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return VarResult{lo, cumulative(lo)};
}

std::vector<double> rational_function_values() {
  const auto r = [](double x, double y) {
    return (1.0 / 7.856) *
           ((4.01 - x) / (1.0 + x) + (4.01 - 2.0 * y + x) / ((1.0 + y) * (1.0 + y)) -
            0.344);
  };
  std::vector<double> f(16);
  for (int k = 0; k < 16; ++k) {
    f[k] = r(static_cast<double>(k / 4), static_cast<double>(k % 4));
  }
  return f;
}

RationalResult expected_rational(ExecMode mode) {
  const int n = 4;
  const std::uint64_t N = 16;
  const std::vector<double> f = rational_function_values();
  const PreparedOperator A = sin4(n);
  const PreparedOperator B = exact_amplitudes(f, n, "rational");

  double norm_sq = 0.0;
  for (double v : f) norm_sq += v * v;
  const double f_norm = std::sqrt(norm_sq);

  // The normalized path: b is treated as 1, so the result is
  // sum w_k f(k)/||f|| = sqrt(3N/8) E.
  const double rescale = 1.0 / A.normalization;
  EstimateResult estimate;
  const CircuitProgram program = pattern1_program(A, B);
  if (mode.sampled) {
    const double mag = estimate_magnitude(program, mode.shots, mode.seed);
    estimate.amplitude0 = mag;
    estimate.weighted_sum = rescale * mag;
    estimate.sampled = true;
    estimate.shots = mode.shots;
    estimate.seed = mode.seed;
  } else {
    estimate.amplitude0 = amplitude_of(run(program), 0);
    estimate.weighted_sum = rescale * estimate.amplitude0.real();
  }
  estimate.a_used = A.normalization;
  estimate.b_used = 1.0;
  estimate.rescale_factor = rescale;

  RationalResult result;
  result.estimate = estimate;
  result.f_norm = f_norm;
  double raw = 0.0;
  for (std::uint64_t k = 0; k < N; ++k) {
    const double x = static_cast<double>(k) * kPi / static_cast<double>(N);
    raw += std::sin(x) * std::sin(x) * f[k];
  }
  result.oracle_raw = raw;
  result.oracle_normalized = raw / f_norm;
  return result;
}

Report linear_expected_exact(double intercept, double slope, int n,
                             const WeightProfile& weights, ExecMode mode) {
  if (weights.op.qubit_count != n) {
    throw ValidationError("weight loader does not match the register size");
  }
  double sum_w = 0.0;
  double oracle = 0.0;
  for (std::size_t k = 0; k < weights.weights.size(); ++k) {
    sum_w += weights.weights[k].real();
    oracle += weights.weights[k].real() *
              (intercept + slope * static_cast<double>(k));
  }

  const PreparedOperator B = identity_ramp(n);
  const double a = weights.a();
  const double b = B.normalization;
  const double rescale = 1.0 / (a * b);
  const CircuitProgram program = pattern1_program(weights.op, B);
  EstimateResult estimate;
  estimate.a_used = a;
  estimate.b_used = b;
  estimate.rescale_factor = rescale;
  if (mode.sampled) {
    const double mag = estimate_magnitude(program, mode.shots, mode.seed);
    estimate.amplitude0 = mag;
    estimate.weighted_sum = rescale * mag;
    estimate.sampled = true;
    estimate.shots = mode.shots;
    estimate.seed = mode.seed;
  } else {
    estimate.amplitude0 = amplitude_of(run(program), 0);
    estimate.weighted_sum = rescale * estimate.amplitude0.real();
  }

  Report report;
  report.quantum_value = intercept * sum_w + slope * estimate.weighted_sum;
  report.oracle = oracle;
  report.abs_error = std::abs(report.quantum_value - oracle);
  report.estimate = std::move(estimate);
  return report;
}

Report linear_expected_approx(double c, int n, const WeightProfile& weights,
                              ExecMode mode) {
  if (!(c > 0.0) || c > 0.5) {
    throw ValidationError("approximation scale c must lie in (0, 0.5]");
  }
  if (weights.op.qubit_count != n) {
    throw ValidationError("weight loader does not match the register size");
  }
  const double N = std::ldexp(1.0, n);
  const double theta = c / (2.0 * N);
  const PreparedOperator B = linear_trig(theta, n);
  const PreparedOperator A{shifted(weights.op.program, 0, n + 1), n + 1,
                           weights.op.normalization, weights.name};
  const double rescale = 1.0 / (A.normalization * B.normalization);

  const CircuitProgram program = pattern1_program(A, B);
  EstimateResult estimate;
  estimate.a_used = A.normalization;
  estimate.b_used = B.normalization;
  estimate.rescale_factor = rescale;
  if (mode.sampled) {
    const double mag = estimate_magnitude(program, mode.shots, mode.seed);
    estimate.amplitude0 = mag;
    estimate.weighted_sum = rescale * mag;
    estimate.sampled = true;
    estimate.shots = mode.shots;
    estimate.seed = mode.seed;
  } else {
    estimate.amplitude0 = amplitude_of(run(program), 0);
    estimate.weighted_sum = rescale * estimate.amplitude0.real();
  }

  double oracle = 0.0;
  for (std::size_t k = 0; k < weights.weights.size(); ++k) {
    oracle += weights.weights[k].real() * static_cast<double>(k);
  }
  return make_report(std::move(estimate), oracle);
}

CountResult count_preimages(const BinaryPolynomial& p, std::int64_t v0, int n,
                            int m, BitOrder bit_order) {
  if (p.num_vars() != n) {
    throw ValidationError("polynomial does not match the key register size");
  }
  const std::int64_t M = std::int64_t{1} << m;
  if (v0 < -M / 2 || v0 >= M) {
    throw RangeError("target value " + std::to_string(v0) +
                     " not representable in the value register");
  }
  const std::uint64_t wrapped = static_cast<std::uint64_t>((v0 % M + M) % M);

  const PreparedOperator A = uniform_operator(n);
  const PreparedOperator B = basis_operator(wrapped, m);
  const CircuitProgram F =
      dictionary_entangler(p, RegisterLayout::standard(n, m), bit_order);
  const std::complex<double> E = generalized_inner_product(A, F, B);
  const double N = std::ldexp(1.0, n);

  CountResult result;
  result.raw = N * E.real();
  result.count = std::llround(result.raw);
  if (std::abs(result.raw - static_cast<double>(result.count)) >= 1e-6 ||
      std::abs(E.imag()) * N >= 1e-6) {
    throw std::runtime_error("preimage count did not resolve to an integer");
  }
  return result;
}

namespace {

void validate_we_params(const WoernerEggerParams& params, bool check_values) {
  if (!(params.scale > 0.0) || params.scale > 0.5) {
    throw ValidationError("scale c must lie in (0, 0.5]");
  }
  double total = 0.0;
  for (double p : params.probabilities) {
    if (p < 0.0 || p > 1.0) throw ValidationError("probabilities must lie in [0, 1]");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-10) {
    throw ValidationError("probabilities must sum to 1");
  }
  if (check_values) {
    if (params.values.size() != params.probabilities.size()) {
      throw ValidationError("probabilities and values differ in length");
    }
    for (double f : params.values) {
      if (f < -1.0 || f > 1.0) {
        throw ValidationError("function values must lie in [-1, 1]");
      }
    }
  }
}

// P1 = sum over ancilla-|1> outcomes of the rotation circuit built on
// sqrt(p_k) amplitudes with theta_k = c f(k) + pi/4.
double ancilla_one_probability(const std::vector<double>& probabilities,
                               const std::vector<double>& thetas) {
  int n = 0;
  while ((std::size_t{1} << n) < probabilities.size()) ++n;
  const std::uint64_t N = std::uint64_t{1} << n;

  std::vector<double> roots(N);
  for (std::uint64_t k = 0; k < N; ++k) roots[k] = std::sqrt(probabilities[k]);
  CircuitProgram program = exact_amplitudes(roots, n, "sqrt-p").program;
  CircuitProgram full(n + 1);
  full.ops = shifted(program, 0, n + 1).ops;
  const int ancilla = n;
  std::vector<int> controls(n);
  for (int j = 0; j < n; ++j) controls[j] = j;
  for (std::uint64_t k = 0; k < N; ++k) {
    std::vector<int> anti;
    for (int j = 0; j < n; ++j) {
      if (!(k >> j & 1)) anti.push_back(j);
    }
    for (int aq : anti) full.push(GateOp::x(aq));
    full.push(GateOp::rot_y(2.0 * thetas[k], ancilla, controls));
    for (int aq : anti) full.push(GateOp::x(aq));
  }

  const StateVector state = run(full);
  double p1 = 0.0;
  for (std::uint64_t idx = N; idx < state.dim(); ++idx) {
    p1 += std::norm(state[idx]);
  }
  return p1;
}

}  // namespace

double woerner_egger_expected(const WoernerEggerParams& params, WeMode mode) {
  validate_we_params(params, /*check_values=*/true);
  const std::size_t size = params.probabilities.size();
  if (size < 2 || (size & (size - 1)) != 0) {
    throw ValidationError("distribution length must be a power of two >= 2");
  }
  const double c = params.scale;
  double p1 = 0.0;
  if (mode == WeMode::Classical) {
    for (std::size_t k = 0; k < size; ++k) {
      const double s = std::sin(c * params.values[k] + kPi / 4.0);
      p1 += params.probabilities[k] * s * s;
    }
  } else {
    std::vector<double> thetas(size);
    for (std::size_t k = 0; k < size; ++k) {
      thetas[k] = c * params.values[k] + kPi / 4.0;
    }
    p1 = ancilla_one_probability(params.probabilities, thetas);
  }
  return (2.0 * p1 - 1.0) / (2.0 * c);
}

double woerner_egger_linear(const WoernerEggerParams& params, int n,
                            std::optional<std::pair<double, double>> bounds) {
  validate_we_params(params, /*check_values=*/false);
  const std::uint64_t N = std::uint64_t{1} << n;
  if (params.probabilities.size() != N) {
    throw ValidationError("distribution length does not match the register");
  }
  const double c = params.scale;
  std::vector<double> thetas(N);
  for (std::uint64_t k = 0; k < N; ++k) {
    const double f =
        -1.0 + 2.0 * static_cast<double>(k) / (static_cast<double>(N) - 1.0);
    thetas[k] = c * f + kPi / 4.0;
  }
  const double p1 = ancilla_one_probability(params.probabilities, thetas);
  if (bounds) {
    return bounds->first +
           (bounds->second - bounds->first) / (2.0 * c) * (p1 - 0.5 + c);
  }
  return (static_cast<double>(N) - 1.0) / (2.0 * c) * (p1 - 0.5 + c);
}

}  // namespace qip
