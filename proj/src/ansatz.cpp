#include "vqge/ansatz.hpp"

#include <algorithm>

namespace vqge {

namespace {

constexpr std::size_t kUnitaryQubitCap = 6;

std::size_t boxes_per_layer(const AnsatzSpec& spec) {
  const std::size_t n = spec.n_qubits;
  switch (spec.architecture) {
    case AnsatzArchitecture::hardware_efficient:
      return n;
    case AnsatzArchitecture::dressed_cnot:
      return n >= 2 ? 4 * (n - 1) : 0;  // two boxes before and after each ladder CNOT
    case AnsatzArchitecture::cyclic:
      return n;
    case AnsatzArchitecture::cnot_specific:
      return 2 * n;
  }
  return 0;
}

std::size_t angles_per_box(RotationKind kind) {
  return kind == RotationKind::ry ? 1 : 3;
}

// one rotation box; consumes 1 or 3 angles
void emit_box(std::vector<Gate>& gates, std::size_t qubit, RotationKind kind,
              std::span<const double>& params) {
  if (kind == RotationKind::ry) {
    gates.push_back(Gate::ry(qubit, params[0]));
    params = params.subspan(1);
  } else {
    gates.push_back(Gate::rz(qubit, params[0]));
    gates.push_back(Gate::ry(qubit, params[1]));
    gates.push_back(Gate::rz(qubit, params[2]));
    params = params.subspan(3);
  }
}

void emit_rotation_column(std::vector<Gate>& gates, std::size_t n, RotationKind kind,
                          std::span<const double>& params) {
  for (std::size_t q = n; q-- > 0;) emit_box(gates, q, kind, params);  // top first
}

void emit_ladder(std::vector<Gate>& gates, std::size_t n) {
  for (std::size_t q = n; q-- > 1;) gates.push_back(Gate::cnot(q, q - 1));
}

}  // namespace

AnsatzArchitecture parse_architecture(const std::string& name) {
  if (name == "hwe") return AnsatzArchitecture::hardware_efficient;
  if (name == "dressed") return AnsatzArchitecture::dressed_cnot;
  if (name == "cyclic") return AnsatzArchitecture::cyclic;
  if (name == "fanin") return AnsatzArchitecture::cnot_specific;
  throw ParseError("unknown ansatz architecture '" + name +
                   "' (expected hwe|dressed|cyclic|fanin)");
}

std::string architecture_name(AnsatzArchitecture arch) {
  switch (arch) {
    case AnsatzArchitecture::hardware_efficient: return "hwe";
    case AnsatzArchitecture::dressed_cnot: return "dressed";
    case AnsatzArchitecture::cyclic: return "cyclic";
    case AnsatzArchitecture::cnot_specific: return "fanin";
  }
  return "?";
}

RotationKind parse_rotation_kind(const std::string& name) {
  if (name == "ry") return RotationKind::ry;
  if (name == "rzryrz") return RotationKind::rzryrz;
  throw ParseError("unknown rotation kind '" + name + "' (expected ry|rzryrz)");
}

std::string rotation_kind_name(RotationKind kind) {
  return kind == RotationKind::ry ? "ry" : "rzryrz";
}

std::size_t parameter_count(const AnsatzSpec& spec) {
  if (spec.n_qubits == 0) throw DomainError("ansatz needs at least one qubit");
  if (spec.layers == 0) throw DomainError("ansatz needs at least one layer");
  const std::size_t boxes = boxes_per_layer(spec);
  if (boxes == 0)
    throw DomainError("architecture '" + architecture_name(spec.architecture) +
                      "' has no rotation boxes on " + std::to_string(spec.n_qubits) +
                      " qubit(s)");
  return boxes * angles_per_box(spec.rotation_kind) * spec.layers;
}

std::vector<Gate> bind(const AnsatzSpec& spec, std::span<const double> params) {
  const std::size_t expected = parameter_count(spec);
  if (params.size() != expected)
    throw ArityError("ansatz expects " + std::to_string(expected) + " parameters, got " +
                     std::to_string(params.size()));

  const std::size_t n = spec.n_qubits;
  std::vector<Gate> gates;
  std::span<const double> rest = params;
  for (std::size_t layer = 0; layer < spec.layers; ++layer) {
    switch (spec.architecture) {
      case AnsatzArchitecture::hardware_efficient:
        emit_rotation_column(gates, n, spec.rotation_kind, rest);
        emit_ladder(gates, n);
        break;
      case AnsatzArchitecture::cyclic:
        emit_rotation_column(gates, n, spec.rotation_kind, rest);
        emit_ladder(gates, n);
        if (n >= 2) gates.push_back(Gate::cnot(0, n - 1));  // closing loop
        break;
      case AnsatzArchitecture::cnot_specific:
        emit_rotation_column(gates, n, spec.rotation_kind, rest);
        emit_ladder(gates, n);
        emit_rotation_column(gates, n, spec.rotation_kind, rest);
        for (std::size_t t = n; t-- > 1;) gates.push_back(Gate::cnot(0, t));
        break;
      case AnsatzArchitecture::dressed_cnot:
        for (std::size_t hi = n; hi-- > 1;) {
          emit_box(gates, hi, spec.rotation_kind, rest);
          emit_box(gates, hi - 1, spec.rotation_kind, rest);
          gates.push_back(Gate::cnot(hi, hi - 1));
          emit_box(gates, hi, spec.rotation_kind, rest);
          emit_box(gates, hi - 1, spec.rotation_kind, rest);
        }
        break;
    }
  }
  return gates;
}

std::vector<Gate> bind_adjoint(const AnsatzSpec& spec, std::span<const double> params) {
  std::vector<Gate> gates = bind(spec, params);
  std::reverse(gates.begin(), gates.end());
  for (Gate& g : gates) g = g.inverse();
  return gates;
}

ComplexMatrix ansatz_unitary(const AnsatzSpec& spec, std::span<const double> params) {
  if (spec.n_qubits > kUnitaryQubitCap)
    throw CapacityError("ansatz_unitary: dense expansion capped at " +
                        std::to_string(kUnitaryQubitCap) + " qubits");
  const std::size_t n = spec.n_qubits;
  const std::size_t dim = std::size_t{1} << n;
  ComplexMatrix u = ComplexMatrix::identity(dim);
  for (const Gate& g : bind(spec, params)) {
    ComplexMatrix full(1, 1);
    full(0, 0) = 1.0;
    if (g.is_single_qubit()) {
      const ComplexMatrix m = gate_matrix_1q(g.kind, g.angle);
      for (std::size_t q = n; q-- > 0;)
        full = kron(full, q == g.targets[0] ? m : ComplexMatrix::identity(2));
    } else {  // CNOT
      ComplexMatrix m(dim, dim);
      const std::size_t cbit = std::size_t{1} << g.controls[0];
      const std::size_t tbit = std::size_t{1} << g.targets[0];
      for (std::size_t col = 0; col < dim; ++col)
        m((col & cbit) ? (col ^ tbit) : col, col) = 1.0;
      full = m;
    }
    u = matmul(full, u);
  }
  return u;
}

}  // namespace vqge
