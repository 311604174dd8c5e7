#pragma once

#include <cstdint>
#include <vector>

#include "vqge/circuit.hpp"

namespace vqge {

struct StateVector {
  std::size_t n_qubits = 0;
  std::vector<cplx> amplitudes;

  static StateVector zero_state(std::size_t n_qubits);
};

double norm_sq(const StateVector& s);

/// Applies all gates to |0...0>. Noiseless path only (ModeError if the
/// circuit carries noise hooks); capped at 24 qubits. Single-qubit gates and
/// CNOTs run as stride kernels; dense payloads act on their target subspace.
StateVector run_statevector(const Circuit& c);

/// |<a|b>|^2 of normalized states.
double fidelity(const StateVector& a, const StateVector& b);

namespace detail {

// Kernels operate on a raw amplitude array of n_qubits. `shift` relocates
// every qubit index (the density path runs bra-side gates at shift = q with
// conjugated matrices). Dense payloads may be non-unitary; the kernels are
// plain linear maps.
void apply_1q(std::vector<cplx>& amps, std::size_t n_qubits, std::size_t qubit,
              const ComplexMatrix& u);
void apply_cnot(std::vector<cplx>& amps, std::size_t n_qubits, std::size_t control,
                std::size_t target);
void apply_dense(std::vector<cplx>& amps, std::size_t n_qubits,
                 const std::vector<std::size_t>& targets,
                 const std::vector<std::size_t>& controls,
                 const std::vector<std::size_t>& anti_controls, const ComplexMatrix& u);
void apply_gate(std::vector<cplx>& amps, std::size_t n_qubits, const Gate& g,
                std::size_t shift, bool conjugate);
void apply_operator(std::vector<cplx>& amps, std::size_t n_qubits,
                    const ComplexMatrix& op, const std::vector<std::size_t>& qubits,
                    std::size_t shift, bool conjugate);

}  // namespace detail

}  // namespace vqge
