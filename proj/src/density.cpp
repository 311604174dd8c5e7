#include "vqge/density.hpp"

#include <cmath>

namespace vqge {

namespace {
constexpr std::size_t kDensityQubitCap = 11;
}

cplx trace(const DensityMatrix& rho) {
  cplx sum(0.0, 0.0);
  for (std::size_t i = 0; i < rho.dim(); ++i) sum += rho(i, i);
  return sum;
}

double hermiticity_residual(const DensityMatrix& rho) {
  double best = 0.0;
  for (std::size_t r = 0; r < rho.dim(); ++r)
    for (std::size_t c = r; c < rho.dim(); ++c)
      best = std::max(best, std::abs(rho(r, c) - std::conj(rho(c, r))));
  return best;
}

DensityMatrix run_density(const Circuit& c) {
  const std::size_t q = c.total_qubits();
  if (q > kDensityQubitCap)
    throw CapacityError("run_density: " + std::to_string(q) + " qubits exceeds cap " +
                        std::to_string(kDensityQubitCap));

  // rho is evolved in vectorized form over 2q "qubits": ket bits low, bra
  // bits high. A unitary acts as the gate on the ket half and its conjugate
  // on the bra half.
  const std::size_t vec_qubits = 2 * q;
  std::vector<cplx> vec(std::size_t{1} << vec_qubits, cplx(0.0, 0.0));
  vec[0] = 1.0;

  const auto& hooks = c.hooks();
  for (std::size_t gi = 0; gi < c.gates().size(); ++gi) {
    const Gate& g = c.gates()[gi];
    detail::apply_gate(vec, vec_qubits, g, 0, false);
    detail::apply_gate(vec, vec_qubits, g, q, true);
    for (const KrausChannel& channel : hooks[gi]) {
      std::vector<cplx> accum(vec.size(), cplx(0.0, 0.0));
      for (const ComplexMatrix& e : channel.operators) {
        std::vector<cplx> term = vec;
        detail::apply_operator(term, vec_qubits, e, channel.qubits, 0, false);
        detail::apply_operator(term, vec_qubits, e, channel.qubits, q, true);
        for (std::size_t i = 0; i < accum.size(); ++i) accum[i] += term[i];
      }
      vec = std::move(accum);
    }
  }

  DensityMatrix rho;
  rho.n_qubits = q;
  const std::size_t dim = std::size_t{1} << q;
  rho.entries.resize(dim * dim);
  for (std::size_t col = 0; col < dim; ++col)      // bra index (high bits)
    for (std::size_t row = 0; row < dim; ++row)    // ket index (low bits)
      rho(row, col) = vec[(col << q) | row];
  return rho;
}

DensityMatrix density_from_state(const StateVector& s) {
  DensityMatrix rho;
  rho.n_qubits = s.n_qubits;
  const std::size_t dim = std::size_t{1} << s.n_qubits;
  rho.entries.resize(dim * dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c)
      rho(r, c) = s.amplitudes[r] * std::conj(s.amplitudes[c]);
  return rho;
}

}  // namespace vqge
