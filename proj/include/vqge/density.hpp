#pragma once

#include "vqge/statevector.hpp"

namespace vqge {

/// 2^q x 2^q density operator, row-major entries.
struct DensityMatrix {
  std::size_t n_qubits = 0;
  std::vector<cplx> entries;

  const cplx& operator()(std::size_t r, std::size_t c) const {
    return entries[(r << n_qubits) + c];
  }
  cplx& operator()(std::size_t r, std::size_t c) {
    return entries[(r << n_qubits) + c];
  }
  std::size_t dim() const { return std::size_t{1} << n_qubits; }
};

cplx trace(const DensityMatrix& rho);
double hermiticity_residual(const DensityMatrix& rho);

/// Evolves |0..0><0..0| through the circuit: unitaries as rho -> U rho U†,
/// then any channels hooked on the gate as rho -> sum_k E_k rho E_k†.
/// Capped at 11 qubits (the vectorized form holds 4^q amplitudes).
DensityMatrix run_density(const Circuit& c);

DensityMatrix density_from_state(const StateVector& s);

}  // namespace vqge
