#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace qip {

/// How a table index k maps to variable values (k_0, ..., k_{n-1}).
/// Lsb0: k = sum_j k_j 2^j. Msb0: k = sum_j k_j 2^{n-1-j}.
enum class BitOrder { Lsb0, Msb0 };

/// Multilinear integer-coefficient polynomial over n binary variables,
/// stored as a map from variable-index bitmask (bit j set <=> x_j in the
/// monomial) to its coefficient. Zero coefficients are never stored.
class BinaryPolynomial {
 public:
  explicit BinaryPolynomial(int num_vars);
  static BinaryPolynomial constant(int num_vars, std::int64_t c);

  int num_vars() const { return num_vars_; }
  const std::map<std::uint32_t, std::int64_t>& terms() const { return terms_; }

  std::int64_t coefficient(std::uint32_t vars_mask) const;

  /// Adds `coeff` to the monomial; erases the term if it cancels to zero.
  void add_term(std::uint32_t vars_mask, std::int64_t coeff);

  /// sum_J c_J prod_{j in J} bits[j]; bits must hold exactly n 0/1 entries.
  std::int64_t evaluate(const std::vector<int>& bits) const;

  BinaryPolynomial& operator+=(const BinaryPolynomial& other);
  friend BinaryPolynomial operator+(BinaryPolynomial a, const BinaryPolynomial& b) {
    a += b;
    return a;
  }
  BinaryPolynomial scaled(std::int64_t factor) const;

  bool operator==(const BinaryPolynomial&) const = default;

 private:
  int num_vars_;
  std::map<std::uint32_t, std::int64_t> terms_;
};

/// All 2^n outputs of a discrete function, indexed by key k under the
/// declared bit order.
struct FunctionTable {
  int num_vars = 0;
  std::vector<std::int64_t> values;
  BitOrder bit_order = BitOrder::Msb0;
};

/// p_k: evaluates to 1 exactly at the bit pattern of k (variable j reads bit
/// j of k), 0 everywhere else.
BinaryPolynomial indicator_polynomial(std::uint64_t k, int num_vars);

/// Interpolating polynomial of a table (subset Moebius transform);
/// to_table(from_table(t), t.bit_order) == t exactly.
BinaryPolynomial from_table(const FunctionTable& table);

/// Evaluates the polynomial at every point (subset zeta transform).
FunctionTable to_table(const BinaryPolynomial& p, BitOrder bit_order);

/// Canonical text form, e.g. `7 + 4*k1 - 5*k0*k1 - 2*k0*k2` (terms in
/// ascending variable-mask order).
std::string to_text(const BinaryPolynomial& p);

/// Parses the text form; variable indices must be < num_vars.
BinaryPolynomial polynomial_from_text(std::string_view text, int num_vars);

/// CSV with a `k,value` row per key (header row optional on input).
std::string table_to_csv(const FunctionTable& table);
FunctionTable table_from_csv(const std::string& csv, int num_vars, BitOrder bit_order);

}  // namespace qip
