#pragma once

#include <span>
#include <string>

#include "qip/circuit.hpp"

namespace qip {

/// A state-preparation operator together with the common factor that relates
/// its target vector to the unit-norm amplitudes it actually prepares.
struct PreparedOperator {
  CircuitProgram program;
  int qubit_count = 0;
  double normalization = 1.0;  // the a (or b) of the weighted-sum patterns
  std::string label;
};

/// Two-coefficient Fourier loader N_{1,n}: output probabilities are exactly
/// (2/N) sin^2(k pi / N) (the raised cosine density with mu = sigma = N/2);
/// amplitudes carry the phase e^{i(pi/2 - k pi/N)}. Requires n >= 2.
PreparedOperator raised_cosine(int n);

/// Three-coefficient loader N_{2,n}: real amplitudes
/// sqrt(8/(3N)) sin^2(k pi / N); normalization sqrt(8/(3N)). Requires n >= 2.
PreparedOperator sin4(int n);

/// Five-coefficient loader N_{4,n}: probabilities (128/(35N)) sin^8(k pi/N);
/// normalization sqrt(128/(35N)). Requires n >= 3.
PreparedOperator sin8(int n);

/// T_{theta,n} on n+1 qubits (ancilla last):
/// (1/sqrt(N)) sum_k sin(k theta)|k>|0> + (1/sqrt(N)) sum_k cos(k theta)|k>|1>.
/// For small theta the |0> branch reads as the linear function
/// k -> theta k / sqrt(N); normalization is that linear factor theta/sqrt(N).
PreparedOperator linear_trig(double theta, int n);

/// Prepares target/||target|| exactly (signs included) via a multiplexed-RY
/// tree plus per-index phase flips; normalization 1/||target||.
PreparedOperator exact_amplitudes(std::span<const double> target, int q,
                                  std::string label = "exact");

/// L_q, the canonical linear state: amplitudes proportional to k;
/// normalization sqrt(6 / ((M-1) M (2M-1))) with M = 2^q.
PreparedOperator identity_ramp(int q);

/// Uniform amplitudes 1/sqrt(l+1) on k in {0..l}, zero above.
PreparedOperator quantile_state(std::uint64_t l, int n);

/// Prepares the basis state |v0> via the integer-encoding program.
PreparedOperator basis_operator(std::uint64_t v0, int m);

/// H^{x n}: weights w_k = 1 with normalization 1/sqrt(N).
PreparedOperator uniform_operator(int n);

/// Amplitudes proportional to the sampled density exp(-(k-mu)^2/(2 sigma^2)).
PreparedOperator gaussian_density(double mu, double sigma, int n);

}  // namespace qip
