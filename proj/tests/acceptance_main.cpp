// Acceptance gate: every shipped criterion runs at its pinned tolerance and
// prints exactly one PASS/FAIL line. Exit status is nonzero if any fail.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "qip/encoding.hpp"
#include "qip/finance.hpp"
#include "qip/inner_product.hpp"
#include "qip/polynomial.hpp"
#include "qip/state_prep.hpp"
#include "qip/state_vector.hpp"

using namespace qip;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kPi = std::numbers::pi;

int g_failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
  std::printf("%s  criterion %d: %-28s %s\n", pass ? "PASS" : "FAIL", id,
              name.c_str(), detail.c_str());
  if (!pass) ++g_failures;
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.8g", x);
  return buf;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// --- criterion 1: expected-value regression --------------------------------
void criterion_1() {
  const auto start = Clock::now();
  const BinaryPolynomial p =
      polynomial_from_text("7 + 4*k1 - 5*k0*k1 - 2*k0*k2", 3);
  const EstimateResult r =
      expected_value_canonical(WeightSpec::sin_squared(3), p, 4);
  const double amp_err = std::abs(r.amplitude0.real() - 0.17835);
  const double sum_err = std::abs(r.weighted_sum - 30.76777);
  const double elapsed = seconds_since(start);
  const bool pass = amp_err <= 5e-5 && sum_err <= 1e-3 && elapsed < 1.0;
  report(1, "expected-value regression", pass,
         "amplitude " + fmt(r.amplitude0.real()) + " (|d|=" + fmt(amp_err) +
             " <= 5e-5), sum " + fmt(r.weighted_sum) + " (|d|=" + fmt(sum_err) +
             " <= 1e-3), " + fmt(elapsed) + "s");
}

// --- criterion 2: value counting --------------------------------------------
void criterion_2() {
  const auto start = Clock::now();
  const BinaryPolynomial p = polynomial_from_text("2*k1 - k0*k1 - 3*k0*k2", 3);
  const CircuitProgram f = dictionary_entangler(p, RegisterLayout::standard(3, 3));
  const std::complex<double> amp =
      generalized_inner_product(uniform_operator(3), f, basis_operator(0, 3));
  const CountResult zeros = count_preimages(p, 0, 3, 3);
  const CountResult neg3 = count_preimages(p, -3, 3, 3);
  const double elapsed = seconds_since(start);
  const bool pass = std::abs(amp.real() - 0.375) <= 1e-9 && zeros.count == 3 &&
                    neg3.count == 1 && elapsed < 1.0;
  report(2, "value counting", pass,
         "amplitude " + fmt(amp.real()) + " (+-1e-9 of 0.375), zeros " +
             std::to_string(zeros.count) + ", count(-3) " +
             std::to_string(neg3.count) + ", " + fmt(elapsed) + "s");
}

// --- criterion 3: exact linear sums -----------------------------------------
void criterion_3() {
  const WeightProfile sin4w = weight_profile("sin4", 3);
  const Report canonical = linear_expected_exact(0.0, 1.0, 3, sin4w);
  const Report affine = linear_expected_exact(1.0, 2.0, 3, sin4w);
  const double canon_err = std::abs(canonical.quantum_value - 16.0);
  const double heuristic_gap = std::abs(canonical.quantum_value - 15.98493);
  const double affine_err = std::abs(affine.quantum_value - 36.0);
  const bool pass =
      canon_err <= 1e-6 && heuristic_gap <= 0.02 && affine_err <= 1e-4;
  report(3, "exact linear sums", pass,
         "sum(w*k) " + fmt(canonical.quantum_value) + " (|d|=" + fmt(canon_err) +
             " <= 1e-6), published-heuristic gap " + fmt(heuristic_gap) +
             " <= 0.02, affine " + fmt(affine.quantum_value) + " (|d|=" +
             fmt(affine_err) + " <= 1e-4)");
}

// --- criterion 4: approximate linear sums -----------------------------------
void criterion_4() {
  const WeightProfile sin4w = weight_profile("sin4", 3);
  const Report at_c = linear_expected_approx(0.1, 3, sin4w);
  const double amp_err = std::abs(at_c.estimate.amplitude0.real() - 0.02041);
  const double sum_err = std::abs(at_c.quantum_value - 15.99768);

  const double e1 = std::abs(linear_expected_approx(0.2, 3, sin4w).quantum_value - 16.0);
  const double e2 = std::abs(linear_expected_approx(0.1, 3, sin4w).quantum_value - 16.0);
  const double e3 = std::abs(linear_expected_approx(0.05, 3, sin4w).quantum_value - 16.0);
  const bool quadratic = e1 / e2 >= 3.5 && e2 / e3 >= 3.5;
  const bool pass = amp_err <= 1e-4 && sum_err <= 1e-2 && quadratic;
  report(4, "approximate linear sums", pass,
         "E " + fmt(at_c.estimate.amplitude0.real()) + " (|d|=" + fmt(amp_err) +
             " <= 1e-4), sum " + fmt(at_c.quantum_value) + " (|d|=" +
             fmt(sum_err) + " <= 1e-2), bias ratios " + fmt(e1 / e2) + "x, " +
             fmt(e2 / e3) + "x per halving (>= 3.5)");
}

// --- criterion 5: rational-function instance --------------------------------
void criterion_5() {
  const RationalResult r = expected_rational();
  const double oracle_gap = std::abs(r.estimate.weighted_sum - r.oracle_normalized);
  const double published_classical = std::abs(r.oracle_normalized - 1.33431);
  const double published_simulator = std::abs(r.estimate.weighted_sum - 1.34845);
  // Binding: circuit == own oracle at 1e-8, published classical value at the
  // loose 2e-2 check. The published simulator figure embeds an approximate
  // loader; its residual gap is reported here as a documented deviation.
  const bool pass = oracle_gap <= 1e-8 && published_classical <= 2e-2;
  report(5, "rational-function instance", pass,
         "quantum " + fmt(r.estimate.weighted_sum) + " == oracle " +
             fmt(r.oracle_normalized) + " (|d|=" + fmt(oracle_gap) +
             " <= 1e-8); published 1.33431 |d|=" + fmt(published_classical) +
             " <= 2e-2; published 1.34845 |d|=" + fmt(published_simulator) +
             " (documented loader gap, informational)");
}

// --- criterion 6: distribution loaders --------------------------------------
void criterion_6() {
  double worst = 0.0;
  bool pass = true;
  for (int n = 2; n <= 5; ++n) {
    const std::uint64_t N = std::uint64_t{1} << n;
    const StateVector rc = run(raised_cosine(n).program);
    const StateVector s4 = run(sin4(n).program);
    for (std::uint64_t k = 0; k < N; ++k) {
      const double s = std::sin(static_cast<double>(k) * kPi / static_cast<double>(N));
      worst = std::max(worst, std::abs(std::norm(rc[k]) - 2.0 / N * s * s));
      worst = std::max(worst,
                       std::abs(std::norm(s4[k]) - 8.0 / (3.0 * N) * std::pow(s, 4)));
    }
    if (n >= 3) {
      const StateVector s8 = run(sin8(n).program);
      for (std::uint64_t k = 0; k < N; ++k) {
        const double s = std::sin(static_cast<double>(k) * kPi / static_cast<double>(N));
        worst = std::max(worst, std::abs(std::norm(s8[k]) -
                                         128.0 / (35.0 * N) * std::pow(s, 8)));
      }
    }
    double sum = 0.0;
    for (std::uint64_t k = 0; k < N; ++k) {
      const double s = std::sin(static_cast<double>(k) * kPi / static_cast<double>(N));
      sum += s * s;
    }
    if (std::abs(sum - static_cast<double>(N) / 2.0) > 1e-10) pass = false;
  }
  pass = pass && worst <= 1e-10;
  report(6, "distribution loaders", pass,
         "max pointwise probability deviation " + fmt(worst) +
             " <= 1e-10 over n=2..5; sum sin^2 = N/2 within 1e-10");
}

// --- criterion 7: property suites --------------------------------------------
void criterion_7() {
  const auto start = Clock::now();
  std::mt19937_64 rng(20250808);
  bool pass = true;
  std::string failure;

  // Dictionary brute-force equivalence, 500 random instances.
  for (int trial = 0; trial < 500 && pass; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const int m = 1 + static_cast<int>(rng() % 4);
    const std::int64_t M = std::int64_t{1} << m;
    const BitOrder order = rng() % 2 ? BitOrder::Msb0 : BitOrder::Lsb0;
    const BinaryPolynomial p =
        qip::test::random_polynomial(rng, n, -M / 2, M - 1, order);
    const StateVector state =
        run(dictionary_program(p, RegisterLayout::standard(n, m), order));
    const FunctionTable table = to_table(p, order);
    const std::uint64_t N = std::uint64_t{1} << n;
    for (std::uint64_t k = 0; k < N; ++k) {
      const std::uint64_t v =
          static_cast<std::uint64_t>((table.values[k] % M + M) % M);
      if (std::abs(std::norm(state[k * (1ull << m) + v]) - 1.0 / N) > 1e-8) {
        pass = false;
        failure = "dictionary mismatch at trial " + std::to_string(trial);
        break;
      }
    }
  }

  // Pattern-2 oracle equivalence, 500 random weighted/hashed instances.
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 500 && pass; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const int m = 1 + static_cast<int>(rng() % 4);
    const std::int64_t M = std::int64_t{1} << m;
    const BinaryPolynomial p = qip::test::random_polynomial(rng, n, -M / 2, M - 1);
    std::vector<double> w(std::uint64_t{1} << n), h(std::uint64_t{1} << m);
    for (auto& x : w) x = unit(rng);
    for (auto& x : h) x = unit(rng);
    w[0] += 0.05;
    h[0] += 0.05;
    const EstimateResult r = weighted_hashed_sum(WeightSpec::from_values(w),
                                                 HashSpec::from_values(h), p);
    const FunctionTable table = to_table(p, BitOrder::Msb0);
    double oracle = 0.0;
    for (std::size_t k = 0; k < table.values.size(); ++k) {
      oracle += w[k] * h[static_cast<std::uint64_t>((table.values[k] % M + M) % M)];
    }
    if (std::abs(r.weighted_sum - oracle) > 1e-8) {
      pass = false;
      failure = "pattern-2 oracle mismatch at trial " + std::to_string(trial);
    }
  }

  // Polynomial table round trips.
  std::uniform_int_distribution<std::int64_t> value_dist(-50, 50);
  for (int trial = 0; trial < 200 && pass; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const BitOrder order = rng() % 2 ? BitOrder::Msb0 : BitOrder::Lsb0;
    FunctionTable table{n, std::vector<std::int64_t>(std::uint64_t{1} << n), order};
    for (auto& v : table.values) v = value_dist(rng);
    const BinaryPolynomial p = from_table(table);
    if (to_table(p, order).values != table.values || from_table(to_table(p, order)) != p) {
      pass = false;
      failure = "polynomial round-trip failed";
    }
  }

  // QFT unitarity on random states.
  for (int trial = 0; trial < 50 && pass; ++trial) {
    const int q = 2 + static_cast<int>(rng() % 5);
    StateVector state = qip::test::random_state(rng, q);
    const StateVector before = state;
    apply_qft(state, {0, q}, false);
    apply_qft(state, {0, q}, true);
    if (!qip::test::states_close(state, before, 1e-10)) {
      pass = false;
      failure = "QFT unitarity failed";
    }
  }

  // Seeded-sampling determinism.
  {
    const StateVector state = run(sin4(4).program);
    if (sample(state, 8192, 31) != sample(state, 8192, 31)) {
      pass = false;
      failure = "sampling not deterministic";
    }
  }

  const double elapsed = seconds_since(start);
  report(7, "property suites", pass && elapsed < 60.0,
         (pass ? std::string("500 dictionary + 500 pattern-2 + 200 round-trip + "
                             "50 QFT + sampling determinism")
               : failure) +
             ", " + fmt(elapsed) + "s < 60s");
}

// --- criterion 8: sampled substitute for hardware runs -----------------------
void criterion_8() {
  const BinaryPolynomial p =
      polynomial_from_text("7 + 4*k1 - 5*k0*k1 - 2*k0*k2", 3);
  const CircuitProgram program = pattern2_program(
      sin4(3), dictionary_entangler(p, RegisterLayout::standard(3, 4)),
      identity_ramp(4));
  const double exact = amplitude_of(run(program), 0).real();
  const double prob = exact * exact;
  const std::uint64_t shots = 8192;
  const double estimate = estimate_magnitude(program, shots, 20240808);
  const double sigma =
      std::sqrt(prob * (1.0 - prob) / static_cast<double>(shots));
  const double dev = std::abs(estimate * estimate - prob);
  const bool pass = dev <= 3.0 * sigma;
  report(8, "noise-free sampled run", pass,
         "|E| estimate " + fmt(estimate) + " vs exact " + fmt(exact) +
             "; |p^ - p| = " + fmt(dev) + " <= 3 sigma = " + fmt(3.0 * sigma) +
             " at 8192 shots (hardware amplitudes 0.17747/0.72996/0.57378 and "
             "heuristic-normal 0.60131 excluded as not reproducible)");
}

}  // namespace

int main() {
  const auto start = Clock::now();
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  std::printf("%d/8 criteria passed in %.2fs\n", 8 - g_failures,
              seconds_since(start));
  return g_failures == 0 ? 0 : 1;
}
