#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "vqge/complex_matrix.hpp"
#include "vqge/rng.hpp"

namespace vqge {

/// Eigenvalues of a general complex square matrix via Householder Hessenberg
/// reduction followed by explicit-shift QR iteration (first sweep per window
/// unshifted, then Wilkinson shifts, exceptional shifts on stagnation).
/// Subdiagonal convergence tolerance 1e-12, hard cap of 1000*N sweeps.
/// Intended for desk-scale matrices (N <= 64); throws on non-convergence.
std::vector<cplx> dense_eigenvalues(const ComplexMatrix& m);

struct Svd {
  ComplexMatrix u;            // left singular vectors, columns
  std::vector<double> sigma;  // descending, >= 0
  ComplexMatrix v;            // right singular vectors, columns; m = u diag(sigma) v†
};

/// One-sided Jacobi SVD. Robust for the small dense matrices used here.
Svd svd(const ComplexMatrix& m);

/// Solves a x = b for x via LU with partial pivoting (a square, b may have
/// several columns). Throws on numerically singular a.
ComplexMatrix solve_linear(const ComplexMatrix& a, const ComplexMatrix& b);

/// Haar-distributed random unitary (QR of a Ginibre matrix, phases fixed).
ComplexMatrix random_unitary(std::size_t n, Philox& rng);

struct MultisetMatch {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (got idx, want idx)
  double max_abs_distance = 0.0;
  // per-pair |got - want| / max(1, |want|), maximised over pairs
  double max_rel_distance = 0.0;
  std::size_t unmatched = 0;  // |size difference|
};

/// Greedy minimal-distance bipartite matching between two eigenvalue
/// multisets. Ordering of eigenvalues is arbitrary, so comparisons go
/// through this instead of positional diffs.
MultisetMatch match_eigenvalue_multisets(const std::vector<cplx>& got,
                                         const std::vector<cplx>& want);

}  // namespace vqge
