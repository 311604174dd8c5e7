#pragma once

#include <cstddef>
#include <vector>

#include "vqge/complex_matrix.hpp"
#include "vqge/eigen.hpp"

namespace vqge {

/// The problem instance: a pair (A, B) of equal-dimension square matrices.
struct MatrixPencil {
  ComplexMatrix a;
  ComplexMatrix b;

  MatrixPencil(ComplexMatrix a_in, ComplexMatrix b_in);
  std::size_t dim() const { return a.rows(); }
};

struct GeneralizedEigenResult {
  std::vector<cplx> eigenvalues;   // finite eigenvalues only
  std::size_t infinite_count = 0;  // diagonal pairs with s ~ 0, t not
  // Some diagonal pair has t and s both ~ 0: every complex number is an
  // eigenvalue and the finite list above is unreliable.
  bool degenerate = false;
};

/// Relative rank tolerance used when callers pass 0 or want the default.
constexpr double kDefaultRankTol = 1e-10;

/// Classical reference solver. For invertible B this is a dense eigensolve of
/// B^{-1}A; for singular B the pencil is first compressed onto B's
/// non-singular subspace (see project_singular_pencil) and the dropped
/// dimensions are counted as infinite eigenvalues. A randomized
/// det(A - lambda B) probe flags degenerate (singular) pencils.
/// Capacity-capped at dimension 64.
GeneralizedEigenResult classical_generalized_eigenvalues(const MatrixPencil& p,
                                                         double tol = kDefaultRankTol);

/// Pads both matrices block-diagonally with the identity up to the next power
/// of two. Adds eigenvalues equal to 1 and nothing else.
MatrixPencil embed_to_power_of_two(const MatrixPencil& p);

/// Compresses (A, B) onto the rank-r subspace of B via the SVD B = U S V†:
/// returns (U_r† A V_r, S_r). Finite eigenvalues are preserved approximately;
/// dimensions annihilated by B drop out. Throws EmptyPencilError for B = 0.
MatrixPencil project_singular_pencil(const MatrixPencil& p,
                                     double tol = kDefaultRankTol);

}  // namespace vqge
