#include <benchmark/benchmark.h>

#include <random>

#include "qip/encoding.hpp"
#include "qip/finance.hpp"
#include "qip/inner_product.hpp"
#include "qip/state_prep.hpp"

namespace {

void BM_HadamardSweep(benchmark::State& state) {
  const int qubits = static_cast<int>(state.range(0));
  qip::StateVector sv = qip::zero_state(qubits);
  for (auto _ : state) {
    for (int q = 0; q < qubits; ++q) qip::apply(sv, qip::GateOp::h(q));
    benchmark::DoNotOptimize(sv.amplitudes().data());
  }
  state.SetItemsProcessed(state.iterations() * qubits);
}
BENCHMARK(BM_HadamardSweep)->Arg(12)->Arg(16)->Arg(20);

void BM_ControlledPhase(benchmark::State& state) {
  const int qubits = static_cast<int>(state.range(0));
  qip::StateVector sv = qip::zero_state(qubits);
  for (int q = 0; q < qubits; ++q) qip::apply(sv, qip::GateOp::h(q));
  const qip::GateOp op = qip::GateOp::phase(0.37, qubits - 1, {0, 1});
  for (auto _ : state) {
    qip::apply(sv, op);
    benchmark::DoNotOptimize(sv.amplitudes().data());
  }
}
BENCHMARK(BM_ControlledPhase)->Arg(12)->Arg(16)->Arg(20);

void BM_Qft(benchmark::State& state) {
  const int qubits = static_cast<int>(state.range(0));
  std::mt19937_64 rng(5);
  qip::StateVector sv = qip::zero_state(qubits);
  std::normal_distribution<double> dist;
  for (std::uint64_t i = 0; i < sv.dim(); ++i) sv[i] = {dist(rng), dist(rng)};
  for (auto _ : state) {
    qip::apply_qft(sv, {0, qubits}, false);
    benchmark::DoNotOptimize(sv.amplitudes().data());
  }
}
BENCHMARK(BM_Qft)->Arg(12)->Arg(16);

void BM_DictionaryPipeline(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int m = n;
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::int64_t> values(-(1 << (m - 1)),
                                                     (1 << m) - 1);
  qip::FunctionTable table{n,
                           std::vector<std::int64_t>(std::uint64_t{1} << n),
                           qip::BitOrder::Msb0};
  for (auto& v : table.values) v = values(rng);
  const qip::BinaryPolynomial p = qip::from_table(table);
  const auto layout = qip::RegisterLayout::standard(n, m);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qip::run(qip::dictionary_program(p, layout)));
  }
}
BENCHMARK(BM_DictionaryPipeline)->Arg(3)->Arg(4)->Arg(6);

void BM_ExpectedValuePattern(benchmark::State& state) {
  const qip::BinaryPolynomial p =
      qip::polynomial_from_text("7 + 4*k1 - 5*k0*k1 - 2*k0*k2", 3);
  const qip::WeightSpec w = qip::WeightSpec::sin_squared(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qip::expected_value_canonical(w, p, 4));
  }
}
BENCHMARK(BM_ExpectedValuePattern);

void BM_ExactAmplitudeLoader(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  std::mt19937_64 rng(23);
  std::normal_distribution<double> dist;
  std::vector<double> target(std::uint64_t{1} << q);
  for (auto& v : target) v = dist(rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qip::run(qip::exact_amplitudes(target, q).program));
  }
}
BENCHMARK(BM_ExactAmplitudeLoader)->Arg(6)->Arg(8)->Arg(10);

void BM_Sampling(benchmark::State& state) {
  const qip::StateVector sv = qip::run(qip::sin4(8).program);
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qip::sample(sv, 8192, seed++));
  }
  state.SetItemsProcessed(state.iterations() * 8192);
}
BENCHMARK(BM_Sampling);

}  // namespace

BENCHMARK_MAIN();
