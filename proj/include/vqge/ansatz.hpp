#pragma once

#include <span>
#include <string>
#include <vector>

#include "vqge/circuit.hpp"

namespace vqge {

/// The four parameterized-circuit families. CLI names in parentheses.
enum class AnsatzArchitecture {
  hardware_efficient,  // (hwe)     rotation column + CNOT ladder
  dressed_cnot,        // (dressed) rotations before and after each ladder CNOT
  cyclic,              // (cyclic)  ladder plus a closing CNOT back to the top
  cnot_specific,       // (fanin)   ladder, second rotation column, fan of CNOTs
                       //           controlled by the bottom qubit
};

enum class RotationKind {
  ry,      // one angle per box
  rzryrz,  // three angles per box: Rz, Ry, Rz in circuit order
};

struct AnsatzSpec {
  AnsatzArchitecture architecture = AnsatzArchitecture::hardware_efficient;
  std::size_t n_qubits = 1;
  std::size_t layers = 1;
  RotationKind rotation_kind = RotationKind::ry;
};

AnsatzArchitecture parse_architecture(const std::string& name);
std::string architecture_name(AnsatzArchitecture arch);
RotationKind parse_rotation_kind(const std::string& name);
std::string rotation_kind_name(RotationKind kind);

/// Number of bound angles. Throws DomainError for shapes with no boxes
/// (dressed_cnot needs at least two qubits).
std::size_t parameter_count(const AnsatzSpec& spec);

/// Deterministic gate list on qubits [0, n). Throws ArityError unless
/// params.size() == parameter_count(spec).
std::vector<Gate> bind(const AnsatzSpec& spec, std::span<const double> params);

/// Fragment of the adjoint circuit: reversed gates with inverted angles.
std::vector<Gate> bind_adjoint(const AnsatzSpec& spec, std::span<const double> params);

/// Dense 2^n unitary of the bound circuit (independent kron-composition
/// route; the simulator column extraction is the cross-check). n <= 6.
ComplexMatrix ansatz_unitary(const AnsatzSpec& spec, std::span<const double> params);

}  // namespace vqge
