#include "vqge/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace vqge {

namespace {

constexpr double kUnitarityTol = 1e-10;
constexpr double kKrausTol = 1e-14;

void require_distinct(const Gate& g) {
  std::set<std::size_t> seen;
  auto add_all = [&](const std::vector<std::size_t>& qs) {
    for (std::size_t q : qs)
      if (!seen.insert(q).second)
        throw ShapeError("gate qubit indices must be distinct");
  };
  add_all(g.targets);
  add_all(g.controls);
  add_all(g.anti_controls);
}

}  // namespace

std::string register_name_str(RegisterName name) {
  switch (name) {
    case RegisterName::work: return "work";
    case RegisterName::idx: return "idx";
    case RegisterName::ancilla: return "ancilla";
    case RegisterName::augmented: return "augmented";
  }
  return "?";
}

Gate Gate::simple(GateKind kind, std::size_t q) {
  Gate g;
  g.kind = kind;
  g.targets = {q};
  return g;
}

Gate Gate::ry(std::size_t q, double angle) {
  Gate g = simple(GateKind::Ry, q);
  g.angle = angle;
  return g;
}

Gate Gate::rz(std::size_t q, double angle) {
  Gate g = simple(GateKind::Rz, q);
  g.angle = angle;
  return g;
}

Gate Gate::cnot(std::size_t control, std::size_t target) {
  Gate g;
  g.kind = GateKind::CNOT;
  g.controls = {control};
  g.targets = {target};
  return g;
}

Gate Gate::dense(std::vector<std::size_t> targets, ComplexMatrix payload,
                 std::string label) {
  Gate g;
  g.kind = GateKind::DenseUnitary;
  g.targets = std::move(targets);
  g.payload = std::move(payload);
  g.label = std::move(label);
  return g;
}

Gate Gate::controlled(std::vector<std::size_t> targets, ComplexMatrix payload,
                      std::vector<std::size_t> controls,
                      std::vector<std::size_t> anti_controls, std::string label) {
  Gate g;
  g.kind = GateKind::ControlledUnitary;
  g.targets = std::move(targets);
  g.payload = std::move(payload);
  g.controls = std::move(controls);
  g.anti_controls = std::move(anti_controls);
  g.label = std::move(label);
  return g;
}

bool Gate::is_single_qubit() const {
  switch (kind) {
    case GateKind::H:
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::Ry:
    case GateKind::Rz:
      return true;
    default:
      return false;
  }
}

Gate Gate::inverse() const {
  Gate g = *this;
  switch (kind) {
    case GateKind::Ry:
    case GateKind::Rz:
      g.angle = -angle;
      break;
    case GateKind::S:
      g.kind = GateKind::Sdg;
      break;
    case GateKind::Sdg:
      g.kind = GateKind::S;
      break;
    case GateKind::DenseUnitary:
    case GateKind::ControlledUnitary:
      g.payload = adjoint(payload);
      break;
    default:
      break;  // H, X, Y, Z, CNOT are involutions
  }
  return g;
}

ComplexMatrix gate_matrix_1q(GateKind kind, double angle) {
  const cplx i(0.0, 1.0);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  switch (kind) {
    case GateKind::H:
      return ComplexMatrix::from_rows({{inv_sqrt2, inv_sqrt2}, {inv_sqrt2, -inv_sqrt2}});
    case GateKind::X:
      return ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
    case GateKind::Y:
      return ComplexMatrix::from_rows({{0.0, -i}, {i, 0.0}});
    case GateKind::Z:
      return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
    case GateKind::S:
      return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, i}});
    case GateKind::Sdg:
      return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -i}});
    case GateKind::Ry: {
      const double c = std::cos(angle / 2.0), s = std::sin(angle / 2.0);
      return ComplexMatrix::from_rows({{c, -s}, {s, c}});
    }
    case GateKind::Rz: {
      const cplx em = std::exp(-i * (angle / 2.0)), ep = std::exp(i * (angle / 2.0));
      return ComplexMatrix::from_rows({{em, 0.0}, {0.0, ep}});
    }
    default:
      throw ShapeError("gate_matrix_1q: not a single-qubit kind");
  }
}

double kraus_completeness_residual(const std::vector<ComplexMatrix>& operators) {
  if (operators.empty()) throw ShapeError("kraus channel needs operators");
  const std::size_t dim = operators.front().rows();
  ComplexMatrix sum(dim, dim);
  for (const ComplexMatrix& e : operators) {
    if (e.rows() != dim || e.cols() != dim)
      throw ShapeError("kraus operators must share one square dimension");
    sum = sum + matmul(adjoint(e), e);
  }
  return max_abs_diff(sum, ComplexMatrix::identity(dim));
}

KrausChannel make_kraus_channel(std::vector<ComplexMatrix> operators,
                                std::vector<std::size_t> qubits, std::string label) {
  const std::size_t dim = std::size_t{1} << qubits.size();
  for (const ComplexMatrix& e : operators)
    if (e.rows() != dim)
      throw ShapeError("kraus channel '" + label + "': operator dim mismatch");
  const double residual = kraus_completeness_residual(operators);
  if (residual > kKrausTol)
    throw DomainError("kraus channel '" + label + "' not trace preserving, residual " +
                      std::to_string(residual));
  return {std::move(operators), std::move(qubits), std::move(label)};
}

Circuit::Circuit(std::vector<Register> registers) : registers_(std::move(registers)) {
  if (registers_.empty()) throw ShapeError("circuit needs at least one register");
  std::vector<Register> sorted = registers_;
  std::sort(sorted.begin(), sorted.end(),
            [](const Register& a, const Register& b) { return a.offset < b.offset; });
  std::size_t expect = 0;
  for (const Register& r : sorted) {
    if (r.size == 0) throw ShapeError("register " + register_name_str(r.name) + " empty");
    if (r.offset != expect)
      throw ShapeError("register offsets must partition the qubit range");
    expect += r.size;
  }
  total_qubits_ = expect;
  for (std::size_t i = 0; i < registers_.size(); ++i)
    for (std::size_t j = i + 1; j < registers_.size(); ++j)
      if (registers_[i].name == registers_[j].name)
        throw ShapeError("duplicate register name " +
                         register_name_str(registers_[i].name));
}

const Register& Circuit::reg(RegisterName name) const {
  for (const Register& r : registers_)
    if (r.name == name) return r;
  throw ShapeError("circuit has no register " + register_name_str(name));
}

bool Circuit::has_reg(RegisterName name) const {
  for (const Register& r : registers_)
    if (r.name == name) return true;
  return false;
}

void Circuit::append(Gate gate) {
  require_distinct(gate);
  auto check_range = [&](const std::vector<std::size_t>& qs) {
    for (std::size_t q : qs)
      if (q >= total_qubits_)
        throw ShapeError("gate qubit " + std::to_string(q) + " outside circuit of " +
                         std::to_string(total_qubits_) + " qubits");
  };
  check_range(gate.targets);
  check_range(gate.controls);
  check_range(gate.anti_controls);

  if (gate.is_dense()) {
    const std::size_t dim = std::size_t{1} << gate.targets.size();
    if (gate.payload.rows() != dim || gate.payload.cols() != dim)
      throw ShapeError("dense payload dimension does not match target count");
    const double residual = unitarity_residual(gate.payload);
    if (residual > kUnitarityTol)
      throw ShapeError("dense payload '" + gate.label + "' not unitary, residual " +
                       std::to_string(residual));
  }
  gates_.push_back(std::move(gate));
  hooks_.emplace_back();
}

void Circuit::attach_channel(std::size_t gate_index, KrausChannel channel) {
  if (gate_index >= gates_.size())
    throw ShapeError("attach_channel: gate index out of range");
  for (std::size_t q : channel.qubits)
    if (q >= total_qubits_) throw ShapeError("attach_channel: qubit out of range");
  hooks_[gate_index].push_back(std::move(channel));
  ++hook_count_;
}

GateCountReport gate_count_report(const Circuit& c) {
  GateCountReport report;
  report.qubits = c.total_qubits();
  for (const Gate& g : c.gates()) {
    if (g.is_single_qubit()) {
      ++report.single_qubit;
    } else if (g.kind == GateKind::CNOT) {
      ++report.two_qubit;
    } else if (g.declared_cost) {
      report.single_qubit += g.declared_cost->first;
      report.two_qubit += g.declared_cost->second;
    } else {
      ++report.opaque_units;
      report.has_opaque = true;
    }
  }
  return report;
}

std::vector<Gate> offset_gates(const std::vector<Gate>& gates, std::size_t offset) {
  std::vector<Gate> out = gates;
  for (Gate& g : out) {
    for (std::size_t& q : g.targets) q += offset;
    for (std::size_t& q : g.controls) q += offset;
    for (std::size_t& q : g.anti_controls) q += offset;
  }
  return out;
}

}  // namespace vqge
