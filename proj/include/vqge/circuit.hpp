#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vqge/complex_matrix.hpp"

namespace vqge {

enum class RegisterName { work, idx, ancilla, augmented };

std::string register_name_str(RegisterName name);

/// A named slice of the global qubit ordering. Qubit k of the register is
/// global qubit offset + k, and registers read little-endian: qubit 0 is the
/// least significant bit of the register's value.
struct Register {
  RegisterName name;
  std::size_t size = 0;
  std::size_t offset = 0;
};

enum class GateKind { H, X, Y, Z, S, Sdg, Ry, Rz, CNOT, DenseUnitary, ControlledUnitary };

/// One circuit operation. Dense kinds carry an explicit unitary payload whose
/// bit t acts on targets[t] (targets listed least-significant first);
/// controls gate on |1>, anti_controls on |0>.
struct Gate {
  GateKind kind;
  double angle = 0.0;
  std::vector<std::size_t> targets;
  std::vector<std::size_t> controls;
  std::vector<std::size_t> anti_controls;
  ComplexMatrix payload;
  std::string label;
  // single- and two-qubit gate counts of a known elementary decomposition;
  // dense payloads without one are reported as opaque units
  std::optional<std::pair<std::size_t, std::size_t>> declared_cost;

  static Gate h(std::size_t q) { return simple(GateKind::H, q); }
  static Gate x(std::size_t q) { return simple(GateKind::X, q); }
  static Gate y(std::size_t q) { return simple(GateKind::Y, q); }
  static Gate z(std::size_t q) { return simple(GateKind::Z, q); }
  static Gate s(std::size_t q) { return simple(GateKind::S, q); }
  static Gate sdg(std::size_t q) { return simple(GateKind::Sdg, q); }
  static Gate ry(std::size_t q, double angle);
  static Gate rz(std::size_t q, double angle);
  static Gate cnot(std::size_t control, std::size_t target);
  static Gate dense(std::vector<std::size_t> targets, ComplexMatrix payload,
                    std::string label = "U");
  static Gate controlled(std::vector<std::size_t> targets, ComplexMatrix payload,
                         std::vector<std::size_t> controls,
                         std::vector<std::size_t> anti_controls,
                         std::string label = "CU");

  bool is_single_qubit() const;
  bool is_dense() const {
    return kind == GateKind::DenseUnitary || kind == GateKind::ControlledUnitary;
  }
  /// Inverse gate; dense payloads get their adjoint.
  Gate inverse() const;

 private:
  static Gate simple(GateKind kind, std::size_t q);
};

/// 2x2 matrix of a single-qubit gate kind.
ComplexMatrix gate_matrix_1q(GateKind kind, double angle = 0.0);

/// A CPTP map given by explicit Kraus operators acting on `qubits`
/// (payload bit i on qubits[i]). Completeness sum E†E = I is enforced at
/// construction to 1e-14.
struct KrausChannel {
  std::vector<ComplexMatrix> operators;
  std::vector<std::size_t> qubits;
  std::string label;
};

KrausChannel make_kraus_channel(std::vector<ComplexMatrix> operators,
                                std::vector<std::size_t> qubits, std::string label);

/// Checks sum E†E = I; returns the max-entry deviation.
double kraus_completeness_residual(const std::vector<ComplexMatrix>& operators);

/// Ordered gate list over a fixed register layout, with optional per-gate
/// noise channel attachments (applied after the gate they hang on).
class Circuit {
 public:
  explicit Circuit(std::vector<Register> registers);

  const std::vector<Register>& registers() const { return registers_; }
  const Register& reg(RegisterName name) const;
  bool has_reg(RegisterName name) const;
  std::size_t total_qubits() const { return total_qubits_; }

  void append(Gate gate);
  void attach_channel(std::size_t gate_index, KrausChannel channel);

  const std::vector<Gate>& gates() const { return gates_; }
  const std::vector<std::vector<KrausChannel>>& hooks() const { return hooks_; }
  bool has_noise() const { return hook_count_ > 0; }
  std::size_t hook_count() const { return hook_count_; }

 private:
  std::vector<Register> registers_;
  std::vector<Gate> gates_;
  std::vector<std::vector<KrausChannel>> hooks_;
  std::size_t total_qubits_ = 0;
  std::size_t hook_count_ = 0;
};

struct GateCountReport {
  std::size_t single_qubit = 0;
  std::size_t two_qubit = 0;
  std::size_t qubits = 0;
  std::size_t opaque_units = 0;  // dense payloads with no declared decomposition
  bool has_opaque = false;
};

/// Exact elementary-gate counts; declared decompositions of dense payloads
/// are expanded, undeclared ones counted as flagged opaque units.
GateCountReport gate_count_report(const Circuit& c);

/// Remaps a gate fragment onto qubits shifted by `offset` (used to place
/// ansatz fragments onto a register).
std::vector<Gate> offset_gates(const std::vector<Gate>& gates, std::size_t offset);

}  // namespace vqge
