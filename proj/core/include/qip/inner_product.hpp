#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "qip/encoding.hpp"
#include "qip/state_prep.hpp"

namespace qip {

/// Key-register weights w_k with the common factor a making a*w_k unit-norm
/// amplitudes.
struct WeightSpec {
  int n = 0;
  std::vector<double> weights;
  double common_factor = 1.0;

  static WeightSpec uniform(int n);
  static WeightSpec sin_squared(int n);
  static WeightSpec from_values(std::vector<double> w);
};

/// Value-register hashes h_v indexed by the raw register value, so negative
/// function outputs address their two's-complement wrapped index.
struct HashSpec {
  int m = 0;
  std::vector<double> hashes;
  double common_factor = 1.0;

  static HashSpec identity(int m);
  static HashSpec call_payoff(int m, std::int64_t strike);
  static HashSpec point(int m, std::uint64_t v0);
  static HashSpec from_values(std::vector<double> h);
};

/// Exact amplitude readout, or seeded shot-frequency estimation of |E|.
struct ExecMode {
  bool sampled = false;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;

  static ExecMode exact() { return {}; }
  static ExecMode with_shots(std::uint64_t shots, std::uint64_t seed) {
    return {true, shots, seed};
  }
};

struct EstimateResult {
  std::complex<double> amplitude0;  // E; real |E| estimate in sampled mode
  double weighted_sum = 0.0;        // rescale_factor * Re(amplitude0)
  double a_used = 1.0;
  double b_used = 1.0;
  double rescale_factor = 1.0;
  bool sampled = false;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;

  /// Flat record {amplitude0_re, amplitude0_im, weighted_sum, a, b, rescale,
  /// mode, shots, seed}.
  std::string to_json() const;
};

/// <0| B^dag A |0> = sum_k conj(b_k) a_k.
std::complex<double> simple_inner_product(const PreparedOperator& A,
                                          const PreparedOperator& B);

/// The composed circuit of the simple pattern: A then B^dag.
CircuitProgram pattern1_program(const PreparedOperator& A,
                                const PreparedOperator& B);

/// <0|(H^{x n} (x) B^dag) F (A (x) I_m)|0> = (1/sqrt(N)) sum_k a_k b_{f(k)}.
/// F is a dictionary entangler over the standard layout (see
/// dictionary_entangler); A acts on the key register, B on the value register.
std::complex<double> generalized_inner_product(const PreparedOperator& A,
                                               const CircuitProgram& F,
                                               const PreparedOperator& B);

/// The composed circuit of the generalized pattern, ordered so that an IQFT
/// ending F sits adjacent to the QFT opening B^dag (cancel_qft_pairs removes
/// the pair).
CircuitProgram pattern2_program(const PreparedOperator& A,
                                const CircuitProgram& F,
                                const PreparedOperator& B);

/// Pattern 1: sum_k w_k f(k) = E / (a b), with A preparing a*w_k and B
/// preparing b*f(k) as amplitudes.
EstimateResult weighted_sum_simple(const WeightSpec& w, const PreparedOperator& A,
                                   const PreparedOperator& B, double b_factor,
                                   ExecMode mode = {});

/// Pattern 2: sum_k w_k h_{f(k) mod M} = sqrt(N)/(a b) * E. Loaders are built
/// from the specs with the exact amplitude encoder.
EstimateResult weighted_hashed_sum(const WeightSpec& w, const HashSpec& h,
                                   const BinaryPolynomial& p,
                                   BitOrder bit_order = BitOrder::Msb0,
                                   ExecMode mode = {});

/// Pattern 2 with explicit operators (a and b are their common factors).
EstimateResult weighted_hashed_sum(const PreparedOperator& A, double a_factor,
                                   const PreparedOperator& B, double b_factor,
                                   const std::vector<double>& hashes,
                                   const BinaryPolynomial& p,
                                   BitOrder bit_order = BitOrder::Msb0,
                                   ExecMode mode = {});

/// Pattern 2 specialized to the identity hash (B = identity_ramp), the
/// canonical expected-value computation.
EstimateResult expected_value_canonical(const WeightSpec& w,
                                        const BinaryPolynomial& p, int m,
                                        BitOrder bit_order = BitOrder::Msb0,
                                        ExecMode mode = {});
EstimateResult expected_value_canonical(const PreparedOperator& A, double a_factor,
                                        const BinaryPolynomial& p, int m,
                                        BitOrder bit_order = BitOrder::Msb0,
                                        ExecMode mode = {});

/// (1/N) sum_k f(k) via the canonical pattern with uniform weights.
EstimateResult mean_value(const BinaryPolynomial& p, int m,
                          BitOrder bit_order = BitOrder::Msb0,
                          ExecMode mode = {});

/// sqrt(count(0)/shots): converges to |E|. Magnitude only; callers recover
/// the sign from problem structure.
double estimate_magnitude(const CircuitProgram& program, std::uint64_t shots,
                          std::uint64_t seed);

}  // namespace qip
