#pragma once

#include "vqge/pauli.hpp"

namespace vqge {

/// Weighted-Pauli expansion of a 2^n matrix, M = sum_i alpha_i P_i, along
/// with the LCU bookkeeping: normalization c = sum |alpha_i| and ancilla
/// count m = max(1, ceil(log2 #terms)). Coefficient phases are absorbed into
/// the selected unitaries (A_i = e^{i arg alpha_i} P_i), so preparation
/// amplitudes are real non-negative.
struct LcuDecomposition {
  std::size_t n_qubits = 0;
  std::vector<PauliTerm> terms;
  double c = 0.0;
  std::size_t m = 1;
};

/// Full Pauli-basis decomposition of a 2^n x 2^n matrix.
LcuDecomposition pauli_decompose(const ComplexMatrix& m);

/// Same decomposition presented on a wider ancilla register (extra slots are
/// zero-amplitude and select the identity).
LcuDecomposition pad_ancillas(const LcuDecomposition& lcu, std::size_t m_target);

/// Weighted sum of the stored terms; equals the source matrix up to the
/// drop tolerance.
ComplexMatrix reconstruct(const LcuDecomposition& lcu);

/// Phase-absorbed unitary of term i: e^{i arg alpha_i} P_i.
ComplexMatrix term_unitary(const PauliTerm& term);

/// 2^m unitary whose first column is (sqrt(|alpha_i|/c))_i, completed to an
/// orthonormal basis deterministically.
ComplexMatrix build_prep(const LcuDecomposition& lcu);

/// Dense 2^(m+n) selection oracle sum_i |i><i| (x) A_i (ancilla on the high
/// bits; unused ancilla values select the identity).
ComplexMatrix build_select(const LcuDecomposition& lcu);

/// (PREP† (x) I) SELECT (PREP (x) I): the block-encoding of M/c in the
/// ancilla-zero block.
ComplexMatrix build_block_unitary(const LcuDecomposition& lcu);

/// Max-entry |c * <0|W|0> - original|: the block-encoding self-check.
double verify_block_encoding(const LcuDecomposition& lcu, const ComplexMatrix& original);

}  // namespace vqge
