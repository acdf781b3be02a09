#include "qip/polynomial.hpp"

#include <cctype>
#include <sstream>

#include "qip/errors.hpp"

namespace qip {

namespace {

constexpr int kMaxVars = 24;

void check_var_count(int n) {
  if (n < 1 || n > kMaxVars) {
    throw ValidationError("variable count " + std::to_string(n) +
                          " outside [1, " + std::to_string(kMaxVars) + "]");
  }
}

// Table key <-> variable-assignment mask (bit j of the mask is x_j).
std::uint64_t key_to_mask(std::uint64_t k, int n, BitOrder order) {
  if (order == BitOrder::Lsb0) return k;
  std::uint64_t m = 0;
  for (int j = 0; j < n; ++j) {
    if (k >> (n - 1 - j) & 1) m |= std::uint64_t{1} << j;
  }
  return m;
}

}  // namespace

BinaryPolynomial::BinaryPolynomial(int num_vars) : num_vars_(num_vars) {
  check_var_count(num_vars);
}

BinaryPolynomial BinaryPolynomial::constant(int num_vars, std::int64_t c) {
  BinaryPolynomial p(num_vars);
  p.add_term(0, c);
  return p;
}

std::int64_t BinaryPolynomial::coefficient(std::uint32_t vars_mask) const {
  const auto it = terms_.find(vars_mask);
  return it == terms_.end() ? 0 : it->second;
}

void BinaryPolynomial::add_term(std::uint32_t vars_mask, std::int64_t coeff) {
  if (vars_mask >> num_vars_) {
    throw ValidationError("monomial uses a variable index >= " +
                          std::to_string(num_vars_));
  }
  if (coeff == 0) return;
  const auto [it, inserted] = terms_.emplace(vars_mask, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t BinaryPolynomial::evaluate(const std::vector<int>& bits) const {
  if (static_cast<int>(bits.size()) != num_vars_) {
    throw ValidationError("expected " + std::to_string(num_vars_) +
                          " bits, got " + std::to_string(bits.size()));
  }
  std::uint32_t point = 0;
  for (int j = 0; j < num_vars_; ++j) {
    if (bits[j] != 0 && bits[j] != 1) {
      throw ValidationError("bit " + std::to_string(j) + " is not 0/1");
    }
    if (bits[j]) point |= std::uint32_t{1} << j;
  }
  std::int64_t sum = 0;
  for (const auto& [mask, coeff] : terms_) {
    if ((point & mask) == mask) sum += coeff;
  }
  return sum;
}

BinaryPolynomial& BinaryPolynomial::operator+=(const BinaryPolynomial& other) {
  if (other.num_vars_ != num_vars_) {
    throw ValidationError("cannot add polynomials over different variable counts");
  }
  for (const auto& [mask, coeff] : other.terms_) add_term(mask, coeff);
  return *this;
}

BinaryPolynomial BinaryPolynomial::scaled(std::int64_t factor) const {
  BinaryPolynomial out(num_vars_);
  if (factor == 0) return out;
  for (const auto& [mask, coeff] : terms_) out.add_term(mask, coeff * factor);
  return out;
}

BinaryPolynomial indicator_polynomial(std::uint64_t k, int num_vars) {
  check_var_count(num_vars);
  if (k >> num_vars) {
    throw ValidationError("point " + std::to_string(k) + " out of range for " +
                          std::to_string(num_vars) + " variables");
  }
  // prod_j ((2 k_j - 1) x_j + 1 - k_j), expanded one factor at a time.
  BinaryPolynomial p = BinaryPolynomial::constant(num_vars, 1);
  for (int j = 0; j < num_vars; ++j) {
    const int kj = static_cast<int>(k >> j & 1);
    const std::int64_t lin = 2 * kj - 1;   // coefficient of x_j
    const std::int64_t cons = 1 - kj;
    BinaryPolynomial next(num_vars);
    for (const auto& [mask, coeff] : p.terms()) {
      next.add_term(mask | (std::uint32_t{1} << j), coeff * lin);
      if (cons != 0) next.add_term(mask, coeff * cons);
    }
    p = std::move(next);
  }
  return p;
}

BinaryPolynomial from_table(const FunctionTable& table) {
  check_var_count(table.num_vars);
  const std::uint64_t size = std::uint64_t{1} << table.num_vars;
  if (table.values.size() != size) {
    throw ValidationError("table has " + std::to_string(table.values.size()) +
                          " values, expected " + std::to_string(size));
  }
  // Values re-indexed by assignment mask, then the in-place subset Moebius
  // transform turns point evaluations into monomial coefficients.
  std::vector<std::int64_t> g(size);
  for (std::uint64_t k = 0; k < size; ++k) {
    g[key_to_mask(k, table.num_vars, table.bit_order)] = table.values[k];
  }
  for (int j = 0; j < table.num_vars; ++j) {
    const std::uint64_t bit = std::uint64_t{1} << j;
    for (std::uint64_t m = 0; m < size; ++m) {
      if (m & bit) g[m] -= g[m ^ bit];
    }
  }
  BinaryPolynomial p(table.num_vars);
  for (std::uint64_t m = 0; m < size; ++m) {
    if (g[m] != 0) p.add_term(static_cast<std::uint32_t>(m), g[m]);
  }
  return p;
}

FunctionTable to_table(const BinaryPolynomial& p, BitOrder bit_order) {
  const int n = p.num_vars();
  const std::uint64_t size = std::uint64_t{1} << n;
  std::vector<std::int64_t> g(size, 0);
  for (const auto& [mask, coeff] : p.terms()) g[mask] = coeff;
  for (int j = 0; j < n; ++j) {
    const std::uint64_t bit = std::uint64_t{1} << j;
    for (std::uint64_t m = 0; m < size; ++m) {
      if (m & bit) g[m] += g[m ^ bit];
    }
  }
  FunctionTable table{n, std::vector<std::int64_t>(size), bit_order};
  for (std::uint64_t k = 0; k < size; ++k) {
    table.values[k] = g[key_to_mask(k, n, bit_order)];
  }
  return table;
}

std::string to_text(const BinaryPolynomial& p) {
  if (p.terms().empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [mask, coeff] : p.terms()) {
    const std::int64_t mag = coeff < 0 ? -coeff : coeff;
    if (first) {
      if (coeff < 0) out << '-';
      first = false;
    } else {
      out << (coeff < 0 ? " - " : " + ");
    }
    const bool has_vars = mask != 0;
    if (mag != 1 || !has_vars) out << mag;
    bool star = mag != 1 || !has_vars;
    for (int j = 0; j < p.num_vars(); ++j) {
      if (mask >> j & 1) {
        if (star) out << '*';
        out << 'k' << j;
        star = true;
      }
    }
  }
  return out.str();
}

namespace {

struct PolyParser {
  std::string_view text;
  std::size_t pos = 0;
  int num_vars;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() { return text[pos]; }

  [[noreturn]] void fail(const std::string& why) {
    throw ValidationError("polynomial text at offset " + std::to_string(pos) +
                          ": " + why);
  }

  std::int64_t integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    return std::stoll(std::string(text.substr(start, pos - start)));
  }

  int variable() {
    skip_ws();
    if (pos >= text.size() || text[pos] != 'k') fail("expected variable `k<j>`");
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected variable index after `k`");
    const int j = std::stoi(std::string(text.substr(start, pos - start)));
    if (j >= num_vars) fail("variable k" + std::to_string(j) + " >= num_vars");
    return j;
  }

  // term := int [* var ...] | var [* var ...]; `*` may be omitted after the
  // coefficient (`4k1` reads as `4*k1`).
  void term(BinaryPolynomial& p, std::int64_t sign) {
    skip_ws();
    if (done()) fail("expected term");
    std::int64_t coeff = 1;
    bool saw_factor = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = integer();
      saw_factor = true;
    }
    std::uint32_t mask = 0;
    while (true) {
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        mask |= std::uint32_t{1} << variable();
        saw_factor = true;
        continue;
      }
      if (pos < text.size() && text[pos] == 'k') {
        mask |= std::uint32_t{1} << variable();
        saw_factor = true;
        continue;
      }
      break;
    }
    if (!saw_factor) fail("empty term");
    p.add_term(mask, sign * coeff);
  }
};

}  // namespace

BinaryPolynomial polynomial_from_text(std::string_view text, int num_vars) {
  check_var_count(num_vars);
  PolyParser parser{text, 0, num_vars};
  BinaryPolynomial p(num_vars);
  if (parser.done()) throw ValidationError("polynomial text is empty");
  // Special case: a lone `0`.
  std::int64_t sign = 1;
  bool first = true;
  while (!parser.done()) {
    parser.skip_ws();
    const char c = parser.peek();
    if (c == '+') {
      ++parser.pos;
      sign = 1;
    } else if (c == '-') {
      ++parser.pos;
      sign = -1;
    } else if (!first) {
      parser.fail("expected `+` or `-` between terms");
    }
    parser.term(p, sign);
    sign = 1;
    first = false;
  }
  return p;
}

std::string table_to_csv(const FunctionTable& table) {
  std::ostringstream out;
  out << "k,value\n";
  for (std::size_t k = 0; k < table.values.size(); ++k) {
    out << k << ',' << table.values[k] << "\n";
  }
  return out.str();
}

FunctionTable table_from_csv(const std::string& csv, int num_vars,
                             BitOrder bit_order) {
  check_var_count(num_vars);
  const std::uint64_t size = std::uint64_t{1} << num_vars;
  FunctionTable table{num_vars, std::vector<std::int64_t>(size), bit_order};
  std::vector<bool> seen(size, false);
  std::istringstream in(csv);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    if (lineno == 1 && line.rfind("k,", 0) == 0) continue;  // header
    std::istringstream ls(line);
    std::string key_tok, val_tok;
    if (!std::getline(ls, key_tok, ',') || !std::getline(ls, val_tok)) {
      throw ValidationError("table csv line " + std::to_string(lineno) +
                            ": expected `k,value`");
    }
    const std::uint64_t k = std::stoull(key_tok);
    if (k >= size) {
      throw ValidationError("table csv line " + std::to_string(lineno) +
                            ": key " + key_tok + " out of range");
    }
    if (seen[k]) {
      throw ValidationError("table csv: duplicate key " + key_tok);
    }
    seen[k] = true;
    table.values[k] = std::stoll(val_tok);
  }
  for (std::uint64_t k = 0; k < size; ++k) {
    if (!seen[k]) {
      throw ValidationError("table csv: missing key " + std::to_string(k));
    }
  }
  return table;
}

}  // namespace qip
