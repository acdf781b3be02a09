// Command-line front end: runs each estimation pattern and application from
// flags, emits JSON result records and CSV amplitude dumps for plotting.
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qip/encoding.hpp"
#include "qip/errors.hpp"
#include "qip/finance.hpp"
#include "qip/inner_product.hpp"
#include "qip/polynomial.hpp"
#include "qip/state_prep.hpp"

using json = nlohmann::json;

namespace {

struct CommonOpts {
  std::string out_path;
  std::string csv_path;
  std::string mode = "exact";
  std::uint64_t shots = 8192;
  std::uint64_t seed = 7;
  std::string bit_order = "msb0";
};

std::string resolve_output_path(const std::string& path) {
  if (path.empty() || path.front() == '/') return path;
  if (const char* dir = std::getenv("QIP_OUTPUT_DIR"); dir && *dir) {
    return std::string(dir) + "/" + path;
  }
  return path;
}

void write_file(const std::string& path, const std::string& content) {
  const std::string resolved = resolve_output_path(path);
  std::ofstream out(resolved, std::ios::binary);
  if (!out) throw qip::ValidationError("cannot open output file " + resolved);
  out << content;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw qip::ValidationError("cannot open input file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

qip::BitOrder bit_order_of(const CommonOpts& opts) {
  if (opts.bit_order == "msb0") return qip::BitOrder::Msb0;
  if (opts.bit_order == "lsb0") return qip::BitOrder::Lsb0;
  throw qip::ValidationError("bit order must be msb0 or lsb0");
}

qip::ExecMode exec_mode(const CommonOpts& opts) {
  if (opts.mode == "exact") return qip::ExecMode::exact();
  if (opts.mode == "sampled") return qip::ExecMode::with_shots(opts.shots, opts.seed);
  throw qip::ValidationError("mode must be exact or sampled");
}

std::string num17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string state_csv(const qip::StateVector& state) {
  std::string out = "basis,re,im,prob\n";
  for (std::uint64_t i = 0; i < state.dim(); ++i) {
    out += std::to_string(i) + ',' + num17(state[i].real()) + ',' +
           num17(state[i].imag()) + ',' + num17(std::norm(state[i])) + "\n";
  }
  return out;
}

void emit(const json& record, const CommonOpts& opts) {
  const std::string text = record.dump(2) + "\n";
  std::cout << text;
  if (!opts.out_path.empty()) write_file(opts.out_path, text);
}

json estimate_record(const qip::EstimateResult& est) {
  return json::parse(est.to_json());
}

// One value per line, or `k,value` rows; blank lines and `#` comments skipped.
std::vector<double> read_values_file(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<std::pair<long, double>> keyed;
  std::vector<double> flat;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!(std::isdigit(static_cast<unsigned char>(line[0])) ||
          line[0] == '-' || line[0] == '+' || line[0] == '.')) {
      continue;  // header
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      flat.push_back(std::stod(line));
    } else {
      keyed.emplace_back(std::stol(line.substr(0, comma)),
                         std::stod(line.substr(comma + 1)));
    }
  }
  if (!keyed.empty()) {
    if (!flat.empty()) throw qip::ValidationError("mixed value-file formats");
    std::vector<double> out(keyed.size(), 0.0);
    for (const auto& [k, v] : keyed) {
      if (k < 0 || static_cast<std::size_t>(k) >= out.size()) {
        throw qip::ValidationError("value-file key " + std::to_string(k) +
                                   " out of range");
      }
      out[static_cast<std::size_t>(k)] = v;
    }
    return out;
  }
  return flat;
}

std::vector<double> weights_vector(const std::string& name, int n) {
  const std::uint64_t N = std::uint64_t{1} << n;
  if (name == "sin2") {
    std::vector<double> w(N);
    for (std::uint64_t k = 0; k < N; ++k) {
      const double s = std::sin(static_cast<double>(k) * std::numbers::pi /
                                static_cast<double>(N));
      w[k] = s * s;
    }
    return w;
  }
  if (name == "uniform") return std::vector<double>(N, 1.0);
  if (name.rfind("file:", 0) == 0) {
    std::vector<double> w = read_values_file(name.substr(5));
    if (w.size() != N) {
      throw qip::ValidationError("weight file has " + std::to_string(w.size()) +
                                 " entries, expected " + std::to_string(N));
    }
    return w;
  }
  throw qip::ValidationError("unknown weight vector `" + name +
                             "` (expected sin2|uniform|file:<path>)");
}

qip::WeightProfile loader_profile(const std::string& name, int n) {
  if (name.rfind("file:", 0) == 0) {
    return qip::weight_profile_from_values(read_values_file(name.substr(5)));
  }
  return qip::weight_profile(name, n);
}

struct PolyArgs {
  std::string poly_text;
  std::string table_path;
  int n = 0;
};

qip::BinaryPolynomial load_polynomial(const PolyArgs& args, qip::BitOrder order) {
  if (!args.poly_text.empty() && !args.table_path.empty()) {
    throw qip::ValidationError("give either --poly or --table, not both");
  }
  if (!args.poly_text.empty()) {
    return qip::polynomial_from_text(args.poly_text, args.n);
  }
  if (!args.table_path.empty()) {
    return qip::from_table(
        qip::table_from_csv(read_file(args.table_path), args.n, order));
  }
  throw qip::ValidationError("a polynomial is required (--poly or --table)");
}

json error_record(const std::string& type, const std::string& message) {
  return json{{"error", {{"type", type}, {"message", message}}}};
}

// ---------------------------------------------------------------------------

struct PrepArgs {
  std::string loader;
  int n = 0;
  double theta = 0.0;
  std::int64_t l = 0;
  std::int64_t v0 = 0;
  double mu = 0.0;
  double sigma = 1.0;
};

int run_prep(const PrepArgs& args, const CommonOpts& opts) {
  qip::PreparedOperator op;
  if (args.loader == "rcos") op = qip::raised_cosine(args.n);
  else if (args.loader == "sin4") op = qip::sin4(args.n);
  else if (args.loader == "sin8") op = qip::sin8(args.n);
  else if (args.loader == "ramp") op = qip::identity_ramp(args.n);
  else if (args.loader == "uniform") op = qip::uniform_operator(args.n);
  else if (args.loader == "trig") op = qip::linear_trig(args.theta, args.n);
  else if (args.loader == "quantile")
    op = qip::quantile_state(static_cast<std::uint64_t>(args.l), args.n);
  else if (args.loader == "point")
    op = qip::basis_operator(static_cast<std::uint64_t>(args.v0), args.n);
  else if (args.loader == "gauss")
    op = qip::gaussian_density(args.mu, args.sigma, args.n);
  else if (args.loader.rfind("file:", 0) == 0)
    op = qip::exact_amplitudes(read_values_file(args.loader.substr(5)), args.n);
  else
    throw qip::ValidationError("unknown loader `" + args.loader + "`");

  const qip::StateVector state = qip::run(op.program);
  json record{{"command", "prep"},
              {"loader", args.loader},
              {"label", op.label},
              {"qubits", op.qubit_count},
              {"normalization", op.normalization},
              {"gate_count", op.program.ops.size()}};
  if (state.dim() <= 4096) {
    json amps = json::array();
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
      amps.push_back(json::array({state[i].real(), state[i].imag()}));
    }
    record["amplitudes"] = std::move(amps);
  }
  if (!opts.csv_path.empty()) write_file(opts.csv_path, state_csv(state));
  emit(record, opts);
  return 0;
}

int run_dict(const PolyArgs& poly_args, int m, const CommonOpts& opts) {
  const qip::BitOrder order = bit_order_of(opts);
  const qip::BinaryPolynomial p = load_polynomial(poly_args, order);
  const auto layout = qip::RegisterLayout::standard(poly_args.n, m);
  const qip::StateVector state = qip::run(qip::dictionary_program(p, layout, order));

  const std::uint64_t M = std::uint64_t{1} << m;
  json outcomes = json::array();
  std::string csv = "key,value,signed_value,prob\n";
  for (std::uint64_t idx = 0; idx < state.dim(); ++idx) {
    const double prob = std::norm(state[idx]);
    if (prob < 1e-12) continue;
    const std::uint64_t key = idx >> m;
    const std::uint64_t value = idx & (M - 1);
    const std::int64_t signed_value =
        value < M / 2 ? static_cast<std::int64_t>(value)
                      : static_cast<std::int64_t>(value) - static_cast<std::int64_t>(M);
    outcomes.push_back(json{{"key", key},
                            {"value", value},
                            {"signed_value", signed_value},
                            {"prob", prob}});
    csv += std::to_string(key) + ',' + std::to_string(value) + ',' +
           std::to_string(signed_value) + ',' + num17(prob) + "\n";
  }
  if (!opts.csv_path.empty()) write_file(opts.csv_path, csv);
  emit(json{{"command", "dict"},
            {"n", poly_args.n},
            {"m", m},
            {"bit_order", opts.bit_order},
            {"poly", qip::to_text(p)},
            {"outcomes", outcomes}},
       opts);
  return 0;
}

int run_expect(const PolyArgs& poly_args, int m, const std::string& weights,
               const CommonOpts& opts) {
  const qip::BitOrder order = bit_order_of(opts);
  const qip::BinaryPolynomial p = load_polynomial(poly_args, order);
  const qip::WeightProfile profile = loader_profile(weights, poly_args.n);
  const qip::Report report = qip::expected_value_discrete(
      p, poly_args.n, m, profile, order, exec_mode(opts));
  json record = estimate_record(report.estimate);
  record["command"] = "expect";
  record["weights"] = weights;
  record["n"] = poly_args.n;
  record["m"] = m;
  record["oracle"] = report.oracle;
  record["abs_error"] = report.abs_error;
  emit(record, opts);
  return 0;
}

int run_payoff(const PolyArgs& poly_args, int m, std::int64_t strike,
               const std::string& weights, const CommonOpts& opts) {
  const qip::BitOrder order = bit_order_of(opts);
  qip::PayoffSpec spec{
      strike, load_polynomial(poly_args, order),
      qip::WeightSpec::from_values(weights_vector(weights, poly_args.n))};
  const qip::Report report =
      qip::payoff_expectation(spec, poly_args.n, m, order, exec_mode(opts));
  json record = estimate_record(report.estimate);
  record["command"] = "payoff";
  record["strike"] = strike;
  record["weights"] = weights;
  record["oracle"] = report.oracle;
  record["abs_error"] = report.abs_error;
  emit(record, opts);
  return 0;
}

int run_var(const std::string& weights, bool normalize, double alpha, int n,
            const CommonOpts& opts) {
  std::vector<double> w = weights_vector(weights, n);
  if (normalize) {
    double total = 0.0;
    for (double x : w) total += x;
    if (total <= 0.0) throw qip::ValidationError("cannot normalize zero mass");
    for (double& x : w) x /= total;
  }
  const qip::VarResult result = qip::value_at_risk(qip::VarQuery{w, alpha}, n);
  emit(json{{"command", "var"},
            {"alpha", alpha},
            {"n", n},
            {"weights", weights},
            {"l_star", result.level},
            {"cumulative", result.cumulative}},
       opts);
  return 0;
}

int run_count(const PolyArgs& poly_args, std::int64_t v0, int m,
              const CommonOpts& opts) {
  const qip::BitOrder order = bit_order_of(opts);
  const qip::BinaryPolynomial p = load_polynomial(poly_args, order);
  const qip::CountResult result =
      qip::count_preimages(p, v0, poly_args.n, m, order);
  emit(json{{"command", "count"},
            {"poly", qip::to_text(p)},
            {"v0", v0},
            {"n", poly_args.n},
            {"m", m},
            {"raw", result.raw},
            {"count", result.count}},
       opts);
  return 0;
}

int run_linear_exact(double intercept, double slope, int n,
                     const std::string& weights, const CommonOpts& opts) {
  const qip::WeightProfile profile = loader_profile(weights, n);
  const qip::Report report =
      qip::linear_expected_exact(intercept, slope, n, profile, exec_mode(opts));
  json record = estimate_record(report.estimate);
  record["command"] = "linear-exact";
  record["intercept"] = intercept;
  record["slope"] = slope;
  record["weights"] = weights;
  record["canonical_sum"] = report.estimate.weighted_sum;
  record["value"] = report.quantum_value;
  record["oracle"] = report.oracle;
  record["abs_error"] = report.abs_error;
  emit(record, opts);
  return 0;
}

int run_linear_approx(double c, double intercept, double slope, int n,
                      const std::string& weights, const CommonOpts& opts) {
  const qip::WeightProfile profile = loader_profile(weights, n);
  const qip::Report report =
      qip::linear_expected_approx(c, n, profile, exec_mode(opts));
  double sum_w = 0.0;
  for (const auto& w : profile.weights) sum_w += w.real();
  json record = estimate_record(report.estimate);
  record["command"] = "linear-approx";
  record["c"] = c;
  record["weights"] = weights;
  record["canonical_sum"] = report.quantum_value;
  record["oracle"] = report.oracle;
  record["abs_error"] = report.abs_error;
  record["intercept"] = intercept;
  record["slope"] = slope;
  record["derived_value"] = intercept * sum_w + slope * report.quantum_value;
  record["derived_oracle"] = intercept * sum_w + slope * report.oracle;
  emit(record, opts);
  return 0;
}

int run_rational(const CommonOpts& opts) {
  const qip::RationalResult result = qip::expected_rational(exec_mode(opts));
  json record = estimate_record(result.estimate);
  record["command"] = "rational";
  record["oracle_normalized"] = result.oracle_normalized;
  record["oracle_raw"] = result.oracle_raw;
  record["f_norm"] = result.f_norm;
  record["abs_error"] =
      std::abs(result.estimate.weighted_sum - result.oracle_normalized);
  emit(record, opts);
  return 0;
}

struct WeArgs {
  double c = 0.0;
  int n = 0;
  std::string probs = "uniform";
  bool normalize = false;
  std::string values_file;
  std::string we_mode = "quantum";
  bool linear = false;
  double lo = 0.0;
  double hi = 0.0;
  bool has_bounds = false;
};

int run_we(const WeArgs& args, const CommonOpts& opts) {
  std::vector<double> p = weights_vector(args.probs, args.n);
  if (args.normalize) {
    double total = 0.0;
    for (double x : p) total += x;
    if (total <= 0.0) throw qip::ValidationError("cannot normalize zero mass");
    for (double& x : p) x /= total;
  }
  const std::uint64_t N = std::uint64_t{1} << args.n;

  qip::WoernerEggerParams params;
  params.scale = args.c;
  params.probabilities = p;

  json record{{"command", "we"}, {"c", args.c}, {"n", args.n},
              {"probs", args.probs}, {"linear", args.linear}};
  double value = 0.0;
  double oracle = 0.0;
  if (args.linear) {
    std::optional<std::pair<double, double>> bounds;
    if (args.has_bounds) bounds = std::make_pair(args.lo, args.hi);
    value = qip::woerner_egger_linear(params, args.n, bounds);
    if (args.has_bounds) {
      // min-max form targets the rescaled linear function.
      for (std::uint64_t k = 0; k < N; ++k) {
        const double f = args.lo + (args.hi - args.lo) * static_cast<double>(k) /
                                       (static_cast<double>(N) - 1.0);
        oracle += p[k] * f;
      }
    } else {
      for (std::uint64_t k = 0; k < N; ++k) {
        oracle += p[k] * static_cast<double>(k);
      }
    }
  } else {
    if (args.values_file.empty()) {
      throw qip::ValidationError("--values <path> is required unless --linear");
    }
    params.values = read_values_file(args.values_file);
    const qip::WeMode mode = args.we_mode == "classical" ? qip::WeMode::Classical
                                                         : qip::WeMode::Quantum;
    value = qip::woerner_egger_expected(params, mode);
    for (std::size_t k = 0; k < params.values.size(); ++k) {
      oracle += params.probabilities[k] * params.values[k];
    }
    record["we_mode"] = args.we_mode;
  }
  record["value"] = value;
  record["oracle"] = oracle;
  record["abs_error"] = std::abs(value - oracle);
  emit(record, opts);
  return 0;
}

int run_paper_suite(const CommonOpts& opts) {
  json rows = json::array();
  const auto add_row = [&rows](const std::string& name, double computed,
                               double reference, const std::string& source) {
    rows.push_back(json{{"name", name},
                        {"computed", computed},
                        {"reference", reference},
                        {"abs_diff", std::abs(computed - reference)},
                        {"source", source}});
  };

  const qip::BinaryPolynomial p51 =
      qip::polynomial_from_text("7 + 4*k1 - 5*k0*k1 - 2*k0*k2", 3);
  const qip::BinaryPolynomial p57 =
      qip::polynomial_from_text("2*k1 - k0*k1 - 3*k0*k2", 3);

  // Expected value of a discrete function (3-qubit keys, 4-qubit values).
  {
    const qip::Report report =
        qip::expected_value_discrete(p51, 3, 4, qip::weight_profile("sin4", 3));
    add_row("expected-value/amplitude", report.estimate.amplitude0.real(),
            0.17835, "reference");
    add_row("expected-value/sum", report.quantum_value, 30.76777, "reference");
    add_row("expected-value/sum-vs-oracle", report.quantum_value, report.oracle,
            "oracle");
  }
  // Mean value of the same function.
  {
    const qip::EstimateResult mean = qip::mean_value(p51, 4);
    add_row("mean-value", mean.weighted_sum, 7.25, "oracle");
  }
  // Value counting.
  {
    const qip::CountResult zeros = qip::count_preimages(p57, 0, 3, 3);
    add_row("count/zeros", static_cast<double>(zeros.count), 3.0, "reference");
    add_row("count/zeros-amplitude", zeros.raw / 8.0, 0.375, "reference");
    const qip::CountResult neg3 = qip::count_preimages(p57, -3, 3, 3);
    add_row("count/value=-3", static_cast<double>(neg3.count), 1.0, "reference");
  }
  // Canonical linear sums with sin^2 weights.
  {
    const qip::WeightProfile sin4w = qip::weight_profile("sin4", 3);
    const qip::Report canonical = qip::linear_expected_exact(0.0, 1.0, 3, sin4w);
    add_row("linear-exact/sum", canonical.quantum_value, 16.0, "oracle");
    add_row("linear-exact/amplitude", canonical.estimate.amplitude0.real(),
            0.77998, "reference(heuristic-loader)");
    const qip::Report affine = qip::linear_expected_exact(1.0, 2.0, 3, sin4w);
    add_row("linear-exact/affine", affine.quantum_value, 36.0, "reference");

    const qip::Report approx = qip::linear_expected_approx(0.1, 3, sin4w);
    add_row("linear-approx/amplitude", approx.estimate.amplitude0.real(),
            0.02041, "reference");
    add_row("linear-approx/sum", approx.quantum_value, 15.99768, "reference");
    add_row("linear-approx/affine", 4.0 + 2.0 * approx.quantum_value, 35.99536,
            "reference");
  }
  // Rational-function pricing instance.
  {
    const qip::RationalResult rational = qip::expected_rational();
    add_row("rational/oracle", rational.oracle_normalized, 1.33431,
            "reference(loose)");
    add_row("rational/quantum", rational.estimate.weighted_sum, 1.34845,
            "reference(heuristic-loader)");
    add_row("rational/quantum-vs-oracle", rational.estimate.weighted_sum,
            rational.oracle_normalized, "oracle");
  }
  // Payoff with strike 7 over the expected-value table (derived oracle).
  {
    qip::PayoffSpec spec{7, p51, qip::WeightSpec::sin_squared(3)};
    const qip::Report report = qip::payoff_expectation(spec, 3, 4);
    add_row("payoff/strike=7", report.quantum_value, report.oracle, "oracle");
  }
  // Value at risk on the normalized sin^2 distribution.
  {
    std::vector<double> w = weights_vector("sin2", 3);
    for (double& x : w) x /= 4.0;
    const qip::VarResult var = qip::value_at_risk(qip::VarQuery{w, 0.375}, 3);
    add_row("var/l-star", static_cast<double>(var.level), 3.0, "reference");
    add_row("var/cumulative", var.cumulative, 0.375, "oracle");
  }

  std::printf("%-34s %14s %14s %12s  %s\n", "instance", "computed", "reference",
              "abs-diff", "source");
  for (const auto& row : rows) {
    std::printf("%-34s %14.6f %14.6f %12.3e  %s\n",
                row["name"].get<std::string>().c_str(),
                row["computed"].get<double>(), row["reference"].get<double>(),
                row["abs_diff"].get<double>(),
                row["source"].get<std::string>().c_str());
  }
  const json record{{"command", "paper-suite"}, {"rows", rows}};
  if (!opts.out_path.empty()) write_file(opts.out_path, record.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qip: dense-statevector weighted-sum estimation toolkit"};
  app.require_subcommand(1);

  CommonOpts opts;
  PolyArgs poly_args;
  PrepArgs prep_args;
  WeArgs we_args;
  int m = 0;
  std::int64_t strike = 0;
  std::int64_t v0 = 0;
  double alpha = 0.0;
  double c_scale = 0.0;
  double intercept = 0.0;
  double slope = 1.0;
  bool normalize = false;
  std::string weights = "sin4";
  std::string weight_vec = "sin2";

  const auto add_common = [&](CLI::App* sub, bool with_csv = false) {
    sub->add_option("--out", opts.out_path, "write the JSON record to this file");
    sub->add_option("--mode", opts.mode, "exact|sampled")->capture_default_str();
    sub->add_option("--shots", opts.shots, "shot count for sampled mode")
        ->capture_default_str();
    sub->add_option("--seed", opts.seed, "sampling seed")->capture_default_str();
    sub->add_option("--bit-order", opts.bit_order, "msb0|lsb0")
        ->capture_default_str();
    if (with_csv) {
      sub->add_option("--csv", opts.csv_path, "write (basis,re,im,prob) CSV");
    }
  };

  auto* prep = app.add_subcommand("prep", "dump a loader's amplitudes");
  prep->add_option("--loader", prep_args.loader,
                   "rcos|sin4|sin8|ramp|trig|quantile|point|uniform|gauss|file:<path>")
      ->required();
  prep->add_option("--n", prep_args.n, "qubit count")->required();
  prep->add_option("--theta", prep_args.theta, "angle for trig");
  prep->add_option("--l", prep_args.l, "cutoff for quantile");
  prep->add_option("--v0", prep_args.v0, "basis value for point");
  prep->add_option("--mu", prep_args.mu, "gaussian mean");
  prep->add_option("--sigma", prep_args.sigma, "gaussian std dev");
  add_common(prep, true);

  auto* dict = app.add_subcommand("dict", "dump a dictionary outcome table");
  dict->add_option("--poly", poly_args.poly_text, "polynomial text");
  dict->add_option("--table", poly_args.table_path, "function table CSV");
  dict->add_option("--n", poly_args.n, "key qubits")->required();
  dict->add_option("--m", m, "value qubits")->required();
  add_common(dict, true);

  auto* expect = app.add_subcommand("expect", "canonical expected value");
  expect->add_option("--poly", poly_args.poly_text, "polynomial text");
  expect->add_option("--table", poly_args.table_path, "function table CSV");
  expect->add_option("--n", poly_args.n, "key qubits")->required();
  expect->add_option("--m", m, "value qubits")->required();
  expect->add_option("--weights", weights, "sin4|rcos|sin8|uniform|file:<path>")
      ->capture_default_str();
  add_common(expect);

  auto* payoff = app.add_subcommand("payoff", "rectified payoff expectation");
  payoff->add_option("--poly", poly_args.poly_text, "polynomial text");
  payoff->add_option("--table", poly_args.table_path, "function table CSV");
  payoff->add_option("--n", poly_args.n, "key qubits")->required();
  payoff->add_option("--m", m, "value qubits")->required();
  payoff->add_option("--strike", strike, "strike K")->required();
  payoff->add_option("--weights", weight_vec, "sin2|uniform|file:<path>")
      ->capture_default_str();
  add_common(payoff);

  auto* var = app.add_subcommand("var", "value at risk via binary search");
  var->add_option("--weights", weight_vec, "sin2|uniform|file:<path>")
      ->capture_default_str();
  var->add_flag("--normalize", normalize, "normalize weights to unit mass");
  var->add_option("--alpha", alpha, "confidence target in (0,1)")->required();
  var->add_option("--n", poly_args.n, "key qubits")->required();
  add_common(var);

  auto* count = app.add_subcommand("count", "count preimages of a value");
  count->add_option("--poly", poly_args.poly_text, "polynomial text");
  count->add_option("--table", poly_args.table_path, "function table CSV");
  count->add_option("--n", poly_args.n, "key qubits")->required();
  count->add_option("--m", m, "value qubits")->required();
  count->add_option("--v0", v0, "target value (signed ok)")->required();
  add_common(count);

  auto* lexact = app.add_subcommand("linear-exact", "affine sums via the ramp");
  lexact->add_option("--intercept", intercept, "affine intercept")
      ->capture_default_str();
  lexact->add_option("--slope", slope, "affine slope")->capture_default_str();
  lexact->add_option("--n", poly_args.n, "key qubits")->required();
  lexact->add_option("--weights", weights, "sin4|rcos|sin8|uniform|file:<path>")
      ->capture_default_str();
  add_common(lexact);

  auto* lapprox =
      app.add_subcommand("linear-approx", "canonical linear sum, trig route");
  lapprox->add_option("--c", c_scale, "approximation scale in (0, 0.5]")
      ->required();
  lapprox->add_option("--n", poly_args.n, "key qubits")->required();
  lapprox->add_option("--weights", weights, "sin4|rcos|sin8|uniform|file:<path>")
      ->capture_default_str();
  lapprox->add_option("--intercept", intercept, "derived affine intercept")
      ->capture_default_str();
  lapprox->add_option("--slope", slope, "derived affine slope")
      ->capture_default_str();
  add_common(lapprox);

  auto* rational =
      app.add_subcommand("rational", "fixed rational-function pricing instance");
  add_common(rational);

  auto* we = app.add_subcommand("we", "probability-domain rotation method");
  we->add_option("--c", we_args.c, "approximation scale in (0, 0.5]")->required();
  we->add_option("--n", we_args.n, "key qubits")->required();
  we->add_option("--probs", we_args.probs, "sin2|uniform|file:<path>")
      ->capture_default_str();
  we->add_flag("--normalize", we_args.normalize, "normalize probabilities");
  we->add_option("--values", we_args.values_file, "path to a file of f values");
  we->add_option("--we-mode", we_args.we_mode, "classical|quantum")
      ->capture_default_str();
  we->add_flag("--linear", we_args.linear, "canonical linear case");
  auto* lo_opt = we->add_option("--min", we_args.lo, "linear minimum");
  we->add_option("--max", we_args.hi, "linear maximum")->needs(lo_opt);
  add_common(we);

  auto* suite = app.add_subcommand(
      "paper-suite", "run every regression instance and compare");
  suite->add_option("--out", opts.out_path, "write the JSON rows to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << error_record("validation", e.what()).dump(2) << "\n";
    return 2;
  }

  try {
    if (we->parsed()) {
      we_args.has_bounds = lo_opt->count() > 0;
      if (we_args.values_file.rfind("file:", 0) == 0) {
        we_args.values_file = we_args.values_file.substr(5);
      }
    }
    if (prep->parsed()) return run_prep(prep_args, opts);
    if (dict->parsed()) return run_dict(poly_args, m, opts);
    if (expect->parsed()) return run_expect(poly_args, m, weights, opts);
    if (payoff->parsed()) return run_payoff(poly_args, m, strike, weight_vec, opts);
    if (var->parsed()) return run_var(weight_vec, normalize, alpha, poly_args.n, opts);
    if (count->parsed()) return run_count(poly_args, v0, m, opts);
    if (lexact->parsed())
      return run_linear_exact(intercept, slope, poly_args.n, weights, opts);
    if (lapprox->parsed())
      return run_linear_approx(c_scale, intercept, slope, poly_args.n, weights, opts);
    if (rational->parsed()) return run_rational(opts);
    if (we->parsed()) return run_we(we_args, opts);
    if (suite->parsed()) return run_paper_suite(opts);
    throw qip::ValidationError("no subcommand given");
  } catch (const qip::ValueOverflowError& e) {
    json record = error_record("overflow", e.what());
    record["error"]["key"] = e.key();
    record["error"]["value"] = e.value();
    std::cout << record.dump(2) << "\n";
    return 3;
  } catch (const qip::UnreachableAlphaError& e) {
    std::cout << error_record("unreachable-alpha", e.what()).dump(2) << "\n";
    return 4;
  } catch (const qip::ValidationError& e) {
    std::cout << error_record("validation", e.what()).dump(2) << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cout << error_record("validation", e.what()).dump(2) << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cout << error_record("validation", e.what()).dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cout << error_record("internal", e.what()).dump(2) << "\n";
    return 1;
  }
}
