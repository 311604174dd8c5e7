#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vqge/complex_matrix.hpp"

namespace vqge {

/// One weighted Pauli string. The word is written in tensor order: character
/// 0 acts on the most significant qubit (n-1), the last character on qubit 0.
struct PauliTerm {
  std::string ops;   // over {I, X, Y, Z}
  cplx coefficient;  // nonzero for stored terms
};

/// Dense 2^n x 2^n matrix of a Pauli word.
ComplexMatrix pauli_matrix(const std::string& ops);

/// Permutation-with-phase action: P|basis> = phase * |mapped basis>.
struct PauliAction {
  std::uint64_t mapped;
  cplx phase;
};
PauliAction pauli_action(const std::string& ops, std::uint64_t basis);

/// Coefficients alpha_P = Tr(P† M) / 2^n over all 4^n words, in the
/// deterministic I<X<Y<Z lexicographic order; entries with |alpha| <= 1e-12
/// are dropped. Requires a square 2^n-dimensional matrix.
std::vector<PauliTerm> pauli_coefficients(const ComplexMatrix& m);

}  // namespace vqge
