#include "vqge/statevector.hpp"

#include <cmath>

namespace vqge {

namespace {
constexpr std::size_t kStatevectorQubitCap = 24;
}

StateVector StateVector::zero_state(std::size_t n_qubits) {
  StateVector s;
  s.n_qubits = n_qubits;
  s.amplitudes.assign(std::size_t{1} << n_qubits, cplx(0.0, 0.0));
  s.amplitudes[0] = 1.0;
  return s;
}

double norm_sq(const StateVector& s) {
  double sum = 0.0;
  for (const cplx& a : s.amplitudes) sum += std::norm(a);
  return sum;
}

double fidelity(const StateVector& a, const StateVector& b) {
  if (a.amplitudes.size() != b.amplitudes.size())
    throw ShapeError("fidelity: state dimensions differ");
  cplx overlap(0.0, 0.0);
  for (std::size_t i = 0; i < a.amplitudes.size(); ++i)
    overlap += std::conj(a.amplitudes[i]) * b.amplitudes[i];
  return std::norm(overlap) / (norm_sq(a) * norm_sq(b));
}

namespace detail {

void apply_1q(std::vector<cplx>& amps, std::size_t n_qubits, std::size_t qubit,
              const ComplexMatrix& u) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  const std::size_t stride = std::size_t{1} << qubit;
  const cplx u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
  for (std::size_t base = 0; base < dim; base += 2 * stride) {
    for (std::size_t low = 0; low < stride; ++low) {
      const std::size_t i0 = base + low;
      const std::size_t i1 = i0 + stride;
      const cplx a0 = amps[i0], a1 = amps[i1];
      amps[i0] = u00 * a0 + u01 * a1;
      amps[i1] = u10 * a0 + u11 * a1;
    }
  }
}

void apply_cnot(std::vector<cplx>& amps, std::size_t n_qubits, std::size_t control,
                std::size_t target) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  const std::size_t cbit = std::size_t{1} << control;
  const std::size_t tbit = std::size_t{1} << target;
  for (std::size_t i = 0; i < dim; ++i)
    if ((i & cbit) && !(i & tbit)) std::swap(amps[i], amps[i | tbit]);
}

void apply_dense(std::vector<cplx>& amps, std::size_t n_qubits,
                 const std::vector<std::size_t>& targets,
                 const std::vector<std::size_t>& controls,
                 const std::vector<std::size_t>& anti_controls, const ComplexMatrix& u) {
  const std::size_t k = targets.size();
  const std::size_t block = std::size_t{1} << k;

  std::size_t target_mask = 0;
  for (std::size_t t : targets) target_mask |= std::size_t{1} << t;
  std::size_t control_mask = 0;
  for (std::size_t c : controls) control_mask |= std::size_t{1} << c;
  std::size_t anti_mask = 0;
  for (std::size_t c : anti_controls) anti_mask |= std::size_t{1} << c;

  std::vector<std::size_t> free_positions;
  for (std::size_t q = 0; q < n_qubits; ++q)
    if (!(target_mask & (std::size_t{1} << q))) free_positions.push_back(q);

  // index offset of payload basis state t within a gather group
  std::vector<std::size_t> pattern(block, 0);
  for (std::size_t t = 1; t < block; ++t) {
    std::size_t p = 0;
    for (std::size_t bit = 0; bit < k; ++bit)
      if (t & (std::size_t{1} << bit)) p |= std::size_t{1} << targets[bit];
    pattern[t] = p;
  }

  std::vector<cplx> in(block), out(block);
  const std::size_t outer_count = std::size_t{1} << free_positions.size();
  for (std::size_t outer = 0; outer < outer_count; ++outer) {
    std::size_t base = 0;
    for (std::size_t bit = 0; bit < free_positions.size(); ++bit)
      if (outer & (std::size_t{1} << bit)) base |= std::size_t{1} << free_positions[bit];
    if ((base & control_mask) != control_mask) continue;
    if ((base & anti_mask) != 0) continue;

    for (std::size_t t = 0; t < block; ++t) in[t] = amps[base | pattern[t]];
    for (std::size_t r = 0; r < block; ++r) {
      cplx acc(0.0, 0.0);
      for (std::size_t s = 0; s < block; ++s) acc += u(r, s) * in[s];
      out[r] = acc;
    }
    for (std::size_t t = 0; t < block; ++t) amps[base | pattern[t]] = out[t];
  }
}

void apply_operator(std::vector<cplx>& amps, std::size_t n_qubits,
                    const ComplexMatrix& op, const std::vector<std::size_t>& qubits,
                    std::size_t shift, bool conjugate) {
  ComplexMatrix u = op;
  if (conjugate)
    for (cplx& v : u.data()) v = std::conj(v);
  std::vector<std::size_t> shifted = qubits;
  for (std::size_t& q : shifted) q += shift;
  if (qubits.size() == 1) {
    apply_1q(amps, n_qubits, shifted[0], u);
  } else {
    apply_dense(amps, n_qubits, shifted, {}, {}, u);
  }
}

void apply_gate(std::vector<cplx>& amps, std::size_t n_qubits, const Gate& g,
                std::size_t shift, bool conjugate) {
  if (g.is_single_qubit()) {
    ComplexMatrix u = gate_matrix_1q(g.kind, g.angle);
    if (conjugate)
      for (cplx& v : u.data()) v = std::conj(v);
    apply_1q(amps, n_qubits, g.targets[0] + shift, u);
    return;
  }
  if (g.kind == GateKind::CNOT) {
    apply_cnot(amps, n_qubits, g.controls[0] + shift, g.targets[0] + shift);
    return;
  }
  ComplexMatrix u = g.payload;
  if (conjugate)
    for (cplx& v : u.data()) v = std::conj(v);
  std::vector<std::size_t> targets = g.targets, controls = g.controls,
                           antis = g.anti_controls;
  for (std::size_t& q : targets) q += shift;
  for (std::size_t& q : controls) q += shift;
  for (std::size_t& q : antis) q += shift;
  apply_dense(amps, n_qubits, targets, controls, antis, u);
}

}  // namespace detail

StateVector run_statevector(const Circuit& c) {
  if (c.has_noise())
    throw ModeError("run_statevector: circuit has noise hooks, use run_density");
  if (c.total_qubits() > kStatevectorQubitCap)
    throw CapacityError("run_statevector: " + std::to_string(c.total_qubits()) +
                        " qubits exceeds cap " + std::to_string(kStatevectorQubitCap));
  StateVector s = StateVector::zero_state(c.total_qubits());
  for (const Gate& g : c.gates())
    detail::apply_gate(s.amplitudes, s.n_qubits, g, 0, false);
  return s;
}

}  // namespace vqge
