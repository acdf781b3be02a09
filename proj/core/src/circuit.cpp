#include "qip/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qip/errors.hpp"

namespace qip {

GateOp GateOp::h(int target, std::vector<int> controls) {
  return GateOp{GateKind::H, target, std::move(controls), 0.0, {}};
}
GateOp GateOp::x(int target, std::vector<int> controls) {
  return GateOp{GateKind::X, target, std::move(controls), 0.0, {}};
}
GateOp GateOp::phase(double theta, int target, std::vector<int> controls) {
  return GateOp{GateKind::Phase, target, std::move(controls), theta, {}};
}
GateOp GateOp::rot_y(double theta, int target, std::vector<int> controls) {
  return GateOp{GateKind::RotY, target, std::move(controls), theta, {}};
}
GateOp GateOp::qft(QubitRange range) {
  return GateOp{GateKind::Qft, 0, {}, 0.0, range};
}
GateOp GateOp::inv_qft(QubitRange range) {
  return GateOp{GateKind::InvQft, 0, {}, 0.0, range};
}

namespace {

void validate_op(const StateVector& state, const GateOp& op) {
  const int q = state.num_qubits();
  if (op.kind == GateKind::Qft || op.kind == GateKind::InvQft) {
    if (op.range.count < 1 || op.range.first < 0 ||
        op.range.first + op.range.count > q) {
      throw ValidationError("QFT range [" + std::to_string(op.range.first) +
                            ", +" + std::to_string(op.range.count) +
                            ") invalid on " + std::to_string(q) + " qubits");
    }
    if (!op.controls.empty()) {
      throw ValidationError("QFT ops take no controls");
    }
    return;
  }
  if (op.target < 0 || op.target >= q) {
    throw ValidationError("target qubit " + std::to_string(op.target) +
                          " out of range");
  }
  for (int c : op.controls) {
    if (c < 0 || c >= q) {
      throw ValidationError("control qubit " + std::to_string(c) + " out of range");
    }
    if (c == op.target) {
      throw ValidationError("control collides with target qubit " +
                            std::to_string(c));
    }
  }
}

std::uint64_t control_mask(const GateOp& op) {
  std::uint64_t m = 0;
  for (int c : op.controls) m |= std::uint64_t{1} << c;
  return m;
}

// 2x2 on the target qubit, restricted to basis states satisfying the controls.
template <typename Kernel>
void for_each_pair(StateVector& state, int target, std::uint64_t ctrl,
                   Kernel&& kernel) {
  const std::uint64_t dim = state.dim();
  const std::uint64_t step = std::uint64_t{1} << target;
  const std::uint64_t block = step << 1;
  for (std::uint64_t base = 0; base < dim; base += block) {
    for (std::uint64_t off = 0; off < step; ++off) {
      const std::uint64_t i0 = base + off;
      if ((i0 & ctrl) != ctrl) continue;
      kernel(state[i0], state[i0 + step]);
    }
  }
}

// In-place DFT: a_k <- (1/sqrt(n)) sum_j a_j e^{sign 2 pi i jk/n}. Twiddles
// come straight from std::polar per butterfly so the 1e-12 QFT contract holds
// without error accumulation.
void fft(std::vector<Amplitude>& a, double sign) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        const Amplitude w = std::polar(1.0, ang * static_cast<double>(k));
        const Amplitude u = a[i + k];
        const Amplitude v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
      }
    }
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (auto& x : a) x *= scale;
}

}  // namespace

void apply_qft(StateVector& state, QubitRange range, bool inverse) {
  apply(state, inverse ? GateOp::inv_qft(range) : GateOp::qft(range));
}

void apply(StateVector& state, const GateOp& op) {
  validate_op(state, op);
  const std::uint64_t ctrl = control_mask(op);

  switch (op.kind) {
    case GateKind::H: {
      const double s = std::numbers::sqrt2 / 2.0;
      for_each_pair(state, op.target, ctrl, [s](Amplitude& a0, Amplitude& a1) {
        const Amplitude a = a0, b = a1;
        a0 = s * (a + b);
        a1 = s * (a - b);
      });
      break;
    }
    case GateKind::X: {
      for_each_pair(state, op.target, ctrl,
                    [](Amplitude& a0, Amplitude& a1) { std::swap(a0, a1); });
      break;
    }
    case GateKind::Phase: {
      const Amplitude ph = std::polar(1.0, op.theta);
      const std::uint64_t want = ctrl | (std::uint64_t{1} << op.target);
      const std::uint64_t dim = state.dim();
      for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & want) == want) state[i] *= ph;
      }
      break;
    }
    case GateKind::RotY: {
      const double c = std::cos(op.theta / 2.0);
      const double s = std::sin(op.theta / 2.0);
      for_each_pair(state, op.target, ctrl, [c, s](Amplitude& a0, Amplitude& a1) {
        const Amplitude a = a0, b = a1;
        a0 = c * a - s * b;
        a1 = s * a + c * b;
      });
      break;
    }
    case GateKind::Qft:
    case GateKind::InvQft: {
      const double sign = (op.kind == GateKind::Qft) ? 1.0 : -1.0;
      const int first = op.range.first;
      const int count = op.range.count;
      const std::uint64_t r = std::uint64_t{1} << count;
      const std::uint64_t low_mask = (std::uint64_t{1} << first) - 1;
      const std::uint64_t groups = state.dim() >> count;
      std::vector<Amplitude> buf(r);
      for (std::uint64_t g = 0; g < groups; ++g) {
        const std::uint64_t low = g & low_mask;
        const std::uint64_t high = (g & ~low_mask) << count;
        const std::uint64_t base = high | low;
        for (std::uint64_t j = 0; j < r; ++j) buf[j] = state[base | (j << first)];
        fft(buf, sign);
        for (std::uint64_t j = 0; j < r; ++j) state[base | (j << first)] = buf[j];
      }
      break;
    }
  }
}

void apply(StateVector& state, const CircuitProgram& program) {
  if (program.num_qubits != state.num_qubits()) {
    throw ValidationError("program is on " + std::to_string(program.num_qubits) +
                          " qubits, state has " +
                          std::to_string(state.num_qubits()));
  }
  for (const auto& op : program.ops) apply(state, op);
}

StateVector run(const CircuitProgram& program) {
  StateVector state(program.num_qubits);
  apply(state, program);
  return state;
}

GateOp inverted(const GateOp& op) {
  GateOp inv = op;
  switch (op.kind) {
    case GateKind::H:
    case GateKind::X:
      break;
    case GateKind::Phase:
    case GateKind::RotY:
      inv.theta = -op.theta;
      break;
    case GateKind::Qft:
      inv.kind = GateKind::InvQft;
      break;
    case GateKind::InvQft:
      inv.kind = GateKind::Qft;
      break;
  }
  return inv;
}

CircuitProgram inverted(const CircuitProgram& program) {
  CircuitProgram inv(program.num_qubits);
  inv.ops.reserve(program.ops.size());
  for (auto it = program.ops.rbegin(); it != program.ops.rend(); ++it) {
    inv.ops.push_back(inverted(*it));
  }
  return inv;
}

CircuitProgram shifted(const CircuitProgram& program, int offset, int num_qubits) {
  if (offset < 0 || program.num_qubits + offset > num_qubits) {
    throw ValidationError("shift does not fit the target register");
  }
  CircuitProgram out(num_qubits);
  out.ops.reserve(program.ops.size());
  for (GateOp op : program.ops) {
    op.target += offset;
    for (int& c : op.controls) c += offset;
    if (op.kind == GateKind::Qft || op.kind == GateKind::InvQft) {
      op.range.first += offset;
    }
    out.ops.push_back(std::move(op));
  }
  return out;
}

void append(CircuitProgram& head, const CircuitProgram& tail) {
  if (head.num_qubits != tail.num_qubits) {
    throw ValidationError("cannot append programs with different qubit counts");
  }
  head.ops.insert(head.ops.end(), tail.ops.begin(), tail.ops.end());
}

namespace {

const char* kind_name(GateKind k) {
  switch (k) {
    case GateKind::H: return "h";
    case GateKind::X: return "x";
    case GateKind::Phase: return "p";
    case GateKind::RotY: return "ry";
    case GateKind::Qft: return "qft";
    case GateKind::InvQft: return "iqft";
  }
  return "?";
}

std::string fmt_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::string to_text(const CircuitProgram& program) {
  std::ostringstream out;
  out << "qubits " << program.num_qubits << "\n";
  for (const auto& op : program.ops) {
    out << kind_name(op.kind);
    if (op.kind == GateKind::Qft || op.kind == GateKind::InvQft) {
      out << ' ' << op.range.first << ' ' << op.range.count << "\n";
      continue;
    }
    out << ' ' << op.target;
    if (!op.controls.empty()) {
      out << " ctrl ";
      for (std::size_t i = 0; i < op.controls.size(); ++i) {
        if (i) out << ',';
        out << op.controls[i];
      }
    }
    if (op.kind == GateKind::Phase || op.kind == GateKind::RotY) {
      out << " theta " << fmt_double(op.theta);
    }
    out << "\n";
  }
  return out.str();
}

CircuitProgram program_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  CircuitProgram program;
  bool have_header = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head) || head.empty() || head[0] == '#') continue;
    const auto fail = [&](const std::string& why) -> void {
      throw ValidationError("program text line " + std::to_string(lineno) +
                            ": " + why);
    };
    if (!have_header) {
      if (head != "qubits") fail("expected `qubits <q>` header");
      if (!(ls >> program.num_qubits)) fail("bad qubit count");
      have_header = true;
      continue;
    }
    GateOp op;
    if (head == "h") op.kind = GateKind::H;
    else if (head == "x") op.kind = GateKind::X;
    else if (head == "p") op.kind = GateKind::Phase;
    else if (head == "ry") op.kind = GateKind::RotY;
    else if (head == "qft") op.kind = GateKind::Qft;
    else if (head == "iqft") op.kind = GateKind::InvQft;
    else fail("unknown gate `" + head + "`");

    if (op.kind == GateKind::Qft || op.kind == GateKind::InvQft) {
      if (!(ls >> op.range.first >> op.range.count)) fail("bad qft range");
      program.ops.push_back(op);
      continue;
    }
    if (!(ls >> op.target)) fail("missing target");
    std::string word;
    while (ls >> word) {
      if (word == "ctrl") {
        std::string list;
        if (!(ls >> list)) fail("missing control list");
        std::istringstream cs(list);
        std::string tok;
        while (std::getline(cs, tok, ',')) op.controls.push_back(std::stoi(tok));
      } else if (word == "theta") {
        if (!(ls >> op.theta)) fail("missing theta value");
      } else {
        fail("unexpected token `" + word + "`");
      }
    }
    program.ops.push_back(std::move(op));
  }
  if (!have_header) throw ValidationError("program text: missing header");
  return program;
}

}  // namespace qip
