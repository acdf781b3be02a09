#include "qip/state_vector.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "qip/errors.hpp"

namespace qip {

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw CapacityError("qubit count " + std::to_string(num_qubits) +
                        " outside [1, " + std::to_string(kMaxQubits) + "]");
  }
  amps_.assign(std::uint64_t{1} << num_qubits, Amplitude{0.0, 0.0});
  amps_[0] = Amplitude{1.0, 0.0};
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return s;
}

StateVector zero_state(int q) { return StateVector(q); }

Amplitude amplitude_of(const StateVector& state, std::uint64_t basis) {
  if (basis >= state.dim()) {
    throw ValidationError("basis index " + std::to_string(basis) +
                          " out of range for " + std::to_string(state.num_qubits()) +
                          " qubits");
  }
  return state[basis];
}

namespace {

// Uniform double in [0, 1) from the top 53 bits of the generator output.
// std::uniform_real_distribution is implementation-defined, which would break
// the bit-identical-rerun contract.
double canonical_u01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::map<std::uint64_t, std::uint64_t> sample(const StateVector& state,
                                              std::uint64_t shots,
                                              std::uint64_t seed) {
  if (shots < 1) throw ValidationError("shots must be >= 1");

  std::vector<double> cdf(state.dim());
  double acc = 0.0;
  for (std::uint64_t i = 0; i < state.dim(); ++i) {
    acc += std::norm(state[i]);
    cdf[i] = acc;
  }
  // Guard against rounding shortfall at the tail.
  cdf.back() = std::max(cdf.back(), 1.0);

  std::mt19937_64 rng(seed);
  std::map<std::uint64_t, std::uint64_t> hist;
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = canonical_u01(rng);
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const std::uint64_t idx =
        static_cast<std::uint64_t>(std::distance(cdf.begin(), it));
    ++hist[std::min<std::uint64_t>(idx, state.dim() - 1)];
  }
  return hist;
}

}  // namespace qip
