#include "vqge/lcu.hpp"

#include <cmath>

namespace vqge {

namespace {

std::size_t ancilla_count_for(std::size_t term_count) {
  std::size_t m = 0;
  while ((std::size_t{1} << m) < term_count) ++m;
  return std::max<std::size_t>(m, 1);
}

}  // namespace

LcuDecomposition pauli_decompose(const ComplexMatrix& m) {
  LcuDecomposition lcu;
  lcu.terms = pauli_coefficients(m);
  std::size_t n = 0;
  while ((std::size_t{1} << n) < m.rows()) ++n;
  lcu.n_qubits = n;
  for (const PauliTerm& t : lcu.terms) lcu.c += std::abs(t.coefficient);
  lcu.m = ancilla_count_for(lcu.terms.size());
  return lcu;
}

LcuDecomposition pad_ancillas(const LcuDecomposition& lcu, std::size_t m_target) {
  if (m_target < lcu.m)
    throw ShapeError("pad_ancillas: target ancilla count below required minimum");
  LcuDecomposition out = lcu;
  out.m = m_target;
  return out;
}

ComplexMatrix reconstruct(const LcuDecomposition& lcu) {
  const std::size_t dim = std::size_t{1} << lcu.n_qubits;
  ComplexMatrix sum(dim, dim);
  for (const PauliTerm& t : lcu.terms) sum = sum + pauli_matrix(t.ops) * t.coefficient;
  return sum;
}

ComplexMatrix term_unitary(const PauliTerm& term) {
  const cplx phase = term.coefficient / std::abs(term.coefficient);
  return pauli_matrix(term.ops) * phase;
}

ComplexMatrix build_prep(const LcuDecomposition& lcu) {
  const std::size_t dim = std::size_t{1} << lcu.m;
  if (lcu.terms.size() > dim)
    throw ShapeError("build_prep: more terms than ancilla basis states");
  if (lcu.c <= 0.0) throw ShapeError("build_prep: zero decomposition");

  ComplexMatrix prep(dim, dim);
  for (std::size_t i = 0; i < lcu.terms.size(); ++i)
    prep(i, 0) = std::sqrt(std::abs(lcu.terms[i].coefficient) / lcu.c);

  // complete the remaining columns by Gram-Schmidt over the standard basis
  std::size_t next_col = 1;
  for (std::size_t cand = 0; cand < dim && next_col < dim; ++cand) {
    std::vector<cplx> col(dim, cplx(0.0, 0.0));
    col[cand] = 1.0;
    for (std::size_t k = 0; k < next_col; ++k) {
      cplx dot(0.0, 0.0);
      for (std::size_t i = 0; i < dim; ++i) dot += std::conj(prep(i, k)) * col[i];
      for (std::size_t i = 0; i < dim; ++i) col[i] -= dot * prep(i, k);
    }
    double nrm = 0.0;
    for (const cplx& x : col) nrm += std::norm(x);
    nrm = std::sqrt(nrm);
    if (nrm < 1e-8) continue;  // candidate already spanned
    for (std::size_t i = 0; i < dim; ++i) prep(i, next_col) = col[i] / nrm;
    ++next_col;
  }
  if (next_col != dim) throw std::runtime_error("build_prep: completion failed");
  return prep;
}

ComplexMatrix build_select(const LcuDecomposition& lcu) {
  const std::size_t adim = std::size_t{1} << lcu.m;
  const std::size_t sdim = std::size_t{1} << lcu.n_qubits;
  ComplexMatrix select(adim * sdim, adim * sdim);
  for (std::size_t i = 0; i < adim; ++i) {
    const ComplexMatrix block = (i < lcu.terms.size())
                                    ? term_unitary(lcu.terms[i])
                                    : ComplexMatrix::identity(sdim);
    for (std::size_t r = 0; r < sdim; ++r)
      for (std::size_t c = 0; c < sdim; ++c)
        select((i << lcu.n_qubits) + r, (i << lcu.n_qubits) + c) = block(r, c);
  }
  return select;
}

ComplexMatrix build_block_unitary(const LcuDecomposition& lcu) {
  const std::size_t sdim = std::size_t{1} << lcu.n_qubits;
  const ComplexMatrix prep = build_prep(lcu);
  const ComplexMatrix select = build_select(lcu);
  const ComplexMatrix sys_id = ComplexMatrix::identity(sdim);
  const ComplexMatrix prep_full = kron(prep, sys_id);
  // UNPREP is the adjoint preparation, so the ancilla-zero block is M/c
  return matmul(adjoint(prep_full), matmul(select, prep_full));
}

double verify_block_encoding(const LcuDecomposition& lcu,
                             const ComplexMatrix& original) {
  const std::size_t sdim = std::size_t{1} << lcu.n_qubits;
  if (original.rows() != sdim || original.cols() != sdim)
    throw ShapeError("verify_block_encoding: dimension mismatch");
  const ComplexMatrix w = build_block_unitary(lcu);
  double worst = 0.0;
  for (std::size_t r = 0; r < sdim; ++r)
    for (std::size_t c = 0; c < sdim; ++c)
      worst = std::max(worst, std::abs(lcu.c * w(r, c) - original(r, c)));
  return worst;
}

}  // namespace vqge
