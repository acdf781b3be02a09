#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qip/inner_product.hpp"

namespace qip {

/// A named weight loader plus the weight values it realizes (w_k such that
/// the operator prepares a * w_k). rcos weights carry phases, hence complex.
struct WeightProfile {
  PreparedOperator op;
  std::vector<std::complex<double>> weights;
  std::string name;

  double a() const { return op.normalization; }
};

/// Resolves "sin4" | "rcos" | "sin8" | "uniform" for an n-qubit key register.
WeightProfile weight_profile(const std::string& name, int n);

/// Wraps caller-supplied weights (CSV files, gaussian samples) behind the
/// exact amplitude encoder.
WeightProfile weight_profile_from_values(std::vector<double> w,
                                         std::string name = "file");

/// Circuit-route value, classical brute-force oracle, and their gap.
struct Report {
  double quantum_value = 0.0;
  double oracle = 0.0;
  double abs_error = 0.0;
  EstimateResult estimate;
};

struct PayoffSpec {
  std::int64_t strike = 0;
  BinaryPolynomial f;
  WeightSpec w;
};

struct VarQuery {
  std::vector<double> weights;  // nonnegative price distribution
  double alpha = 0.0;           // confidence target in (0, 1)
};

struct VarResult {
  std::uint64_t level = 0;   // smallest l with cumulative mass >= alpha
  double cumulative = 0.0;
};

struct WoernerEggerParams {
  double scale = 0.0;                 // c, in (0, 0.5]
  std::vector<double> probabilities;  // p_k, sums to 1 within 1e-10
  std::vector<double> values;         // f(k); [-1, 1] in the general case
};

enum class WeMode { Classical, Quantum };

struct CountResult {
  double raw = 0.0;          // N * Re(E)
  std::int64_t count = 0;    // nearest integer; residue < 1e-6 enforced
};

/// Canonical expected value sum_k w_k f(k) with the named weight loader and
/// the identity-ramp hash (negative outputs read their wrapped register value).
Report expected_value_discrete(const BinaryPolynomial& p, int n, int m,
                               const WeightProfile& weights,
                               BitOrder bit_order = BitOrder::Msb0,
                               ExecMode mode = {});

/// sum_{f(k) >= K} w_k (f(k) - K) via the rectified call-payoff hash.
Report payoff_expectation(const PayoffSpec& spec, int n, int m,
                          BitOrder bit_order = BitOrder::Msb0,
                          ExecMode mode = {});

/// sum_{k <= l} w_k via the quantile state (Pattern 1).
EstimateResult cumulative_probability(const WeightSpec& w, std::uint64_t l,
                                      ExecMode mode = {});

/// Smallest l whose cumulative mass reaches alpha; binary search issuing
/// O(n) cumulative queries. Throws UnreachableAlphaError if the total mass
/// stays below alpha.
VarResult value_at_risk(const VarQuery& query, int n);

/// The fixed 16-point rational-function pricing instance (sin^2 weights,
/// k = 4x + y with x, y in {0..3}).
struct RationalResult {
  EstimateResult estimate;    // weighted_sum follows the normalized-f path
  double oracle_normalized = 0.0;
  double oracle_raw = 0.0;
  double f_norm = 0.0;
};
RationalResult expected_rational(ExecMode mode = {});

/// The 16 rational-instance function values in key order.
std::vector<double> rational_function_values();

/// intercept * sum w_k + slope * sum w_k k, the latter computed once via
/// Pattern 1 against the identity ramp.
Report linear_expected_exact(double intercept, double slope, int n,
                             const WeightProfile& weights, ExecMode mode = {});

/// sum w_k k via the trigonometric approximation B = T_{c/(2N), n}; the bias
/// vanishes quadratically in c.
Report linear_expected_approx(double c, int n, const WeightProfile& weights,
                              ExecMode mode = {});

/// |f^{-1}(v0)| = N * Re(E) with uniform weights and a point hash; v0 may be
/// given as a signed value (two's complement) or a raw register index.
CountResult count_preimages(const BinaryPolynomial& p, std::int64_t v0, int n,
                            int m, BitOrder bit_order = BitOrder::Msb0);

/// Probability-domain approximation sum p_k f(k) ~ (2 P1 - 1)/(2c): the
/// classical mode evaluates P1 = sum p_k sin^2(c f(k) + pi/4) directly, the
/// quantum mode reads P1 off the ancilla of the rotation circuit. The modes
/// agree within 1e-10.
double woerner_egger_expected(const WoernerEggerParams& params, WeMode mode);

/// Canonical-linear case f(k) = -1 + 2k/(N-1): returns sum p_k k from the
/// intercept/slope form, or the rescaled min-max form when bounds are given.
double woerner_egger_linear(const WoernerEggerParams& params, int n,
                            std::optional<std::pair<double, double>> bounds = {});

}  // namespace qip
