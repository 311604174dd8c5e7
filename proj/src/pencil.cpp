#include "vqge/pencil.hpp"

#include <cmath>

#include "vqge/rng.hpp"

namespace vqge {

namespace {

constexpr std::size_t kOracleDimCap = 64;

std::size_t numerical_rank(const std::vector<double>& sigma, double tol) {
  if (sigma.empty()) return 0;
  const double cutoff = tol * sigma.front();
  std::size_t r = 0;
  while (r < sigma.size() && sigma[r] > cutoff) ++r;
  return r;
}

// A pencil is singular (degenerate) exactly when det(A - lambda B) vanishes
// identically; probing random lambdas separates that from isolated eigenvalue
// hits with overwhelming probability. Probes are seeded, so the oracle stays
// deterministic.
bool degenerate_probe(const MatrixPencil& p) {
  const double scale_a = frobenius_norm(p.a);
  const double scale_b = frobenius_norm(p.b);
  if (scale_a == 0.0 && scale_b == 0.0) return true;
  Philox rng(0x0DE6E2A7E5EEDULL, 0);
  const std::size_t n = p.dim();
  const double mag = (scale_b > 0.0) ? (scale_a + scale_b) / scale_b : 1.0;
  for (int probe = 0; probe < 3; ++probe) {
    const cplx lambda = mag * cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    ComplexMatrix shifted(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        shifted(i, j) = p.a(i, j) - lambda * p.b(i, j);
    const Svd dec = svd(shifted);
    if (dec.sigma.front() <= 1e-300) continue;  // counts as vanishing
    if (dec.sigma.back() > kDefaultRankTol * dec.sigma.front()) return false;
  }
  return true;
}

}  // namespace

MatrixPencil::MatrixPencil(ComplexMatrix a_in, ComplexMatrix b_in)
    : a(std::move(a_in)), b(std::move(b_in)) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
    throw ShapeError("MatrixPencil: matrices must be square and equal-sized");
  if (!a.all_finite() || !b.all_finite())
    throw ShapeError("MatrixPencil: matrices must have finite entries");
}

GeneralizedEigenResult classical_generalized_eigenvalues(const MatrixPencil& p,
                                                         double tol) {
  const std::size_t n = p.dim();
  if (n > kOracleDimCap)
    throw CapacityError("classical_generalized_eigenvalues: dimension " +
                        std::to_string(n) + " exceeds cap " +
                        std::to_string(kOracleDimCap));
  if (tol <= 0.0) tol = kDefaultRankTol;

  GeneralizedEigenResult result;
  const Svd b_svd = svd(p.b);
  const std::size_t rank =
      (b_svd.sigma.front() > 0.0) ? numerical_rank(b_svd.sigma, tol) : 0;

  if (rank == n) {
    const ComplexMatrix binv_a = solve_linear(p.b, p.a);
    result.eigenvalues = dense_eigenvalues(binv_a);
    return result;
  }

  if (degenerate_probe(p)) {
    // every complex number is an eigenvalue; nothing trustworthy to report
    result.degenerate = true;
    return result;
  }
  if (rank == 0) {
    // B vanishes and the pencil is regular: only infinite eigenvalues
    result.infinite_count = n;
    return result;
  }

  // Singular B: map the spectrum through nu = 1/(lambda - mu) with a random
  // shift mu, i.e. eigensolve M = (A - mu B)^{-1} B. Finite eigenvalues come
  // back as lambda = mu + 1/nu; infinite ones land at nu = 0. This handles
  // defective structure at infinity, which a one-sided compression of B does
  // not.
  Philox rng(0x6E0B1A52ULL, 1);
  const double mag =
      (frobenius_norm(p.a) + frobenius_norm(p.b)) / std::max(frobenius_norm(p.b), 1e-300);
  for (int attempt = 0; attempt < 5; ++attempt) {
    const cplx mu = mag * cplx(rng.uniform(0.3, 1.0) * (rng.next_below(2) ? 1 : -1),
                               rng.uniform(0.3, 1.0) * (rng.next_below(2) ? 1 : -1));
    ComplexMatrix shifted(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        shifted(i, j) = p.a(i, j) - mu * p.b(i, j);
    ComplexMatrix m;
    try {
      m = solve_linear(shifted, p.b);
    } catch (const std::runtime_error&) {
      continue;  // mu hit (near) an eigenvalue; re-draw
    }
    const std::vector<cplx> nu = dense_eigenvalues(m);
    double nu_max = 0.0;
    for (const cplx& v : nu) nu_max = std::max(nu_max, std::abs(v));
    const double cutoff = 1e-8 * std::max(nu_max, 1e-300);
    for (const cplx& v : nu) {
      if (std::abs(v) <= cutoff) {
        ++result.infinite_count;
      } else {
        result.eigenvalues.push_back(mu + 1.0 / v);
      }
    }
    return result;
  }
  throw std::runtime_error(
      "classical_generalized_eigenvalues: shifted solves kept failing");
}

MatrixPencil embed_to_power_of_two(const MatrixPencil& p) {
  const std::size_t n = p.dim();
  std::size_t padded = 1;
  while (padded < n) padded *= 2;
  if (padded == n) return p;

  ComplexMatrix a(padded, padded), b(padded, padded);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a(i, j) = p.a(i, j);
      b(i, j) = p.b(i, j);
    }
  for (std::size_t i = n; i < padded; ++i) {
    a(i, i) = 1.0;
    b(i, i) = 1.0;
  }
  return {std::move(a), std::move(b)};
}

MatrixPencil project_singular_pencil(const MatrixPencil& p, double tol) {
  if (tol <= 0.0) tol = kDefaultRankTol;
  const std::size_t n = p.dim();
  const Svd b_svd = svd(p.b);
  const std::size_t rank =
      (b_svd.sigma.front() > 0.0) ? numerical_rank(b_svd.sigma, tol) : 0;
  if (rank == 0) throw EmptyPencilError("project_singular_pencil: B is zero");

  // Rotate into the singular basis of B: (U† A V, Sigma). Sigma's trailing
  // n-r rows/columns vanish there.
  ComplexMatrix a_rot = matmul(adjoint(b_svd.u), matmul(p.a, b_svd.v));
  if (rank == n) {
    ComplexMatrix b_diag(n, n);
    for (std::size_t i = 0; i < n; ++i) b_diag(i, i) = b_svd.sigma[i];
    return {std::move(a_rot), std::move(b_diag)};
  }

  const std::size_t tail = n - rank;
  ComplexMatrix a11(rank, rank), a12(rank, tail), a21(tail, rank), a22(tail, tail);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i < rank && j < rank)
        a11(i, j) = a_rot(i, j);
      else if (i < rank)
        a12(i, j - rank) = a_rot(i, j);
      else if (j < rank)
        a21(i - rank, j) = a_rot(i, j);
      else
        a22(i - rank, j - rank) = a_rot(i, j);
    }

  ComplexMatrix a_proj = a11;
  const Svd a22_svd = svd(a22);
  const bool a22_invertible =
      a22_svd.sigma.front() > 0.0 &&
      a22_svd.sigma.back() > tol * std::max(a22_svd.sigma.front(), max_abs(p.a));
  if (a22_invertible) {
    // Schur-complement deflation: finite eigenvalues carry over exactly.
    a_proj = a11 - matmul(a12, solve_linear(a22, a21));
  }
  // If A22 is numerically singular the pencil has nested structure at
  // infinity (or is degenerate) and the plain compression A11 is only an
  // approximation; the oracle never relies on it.

  ComplexMatrix b_proj(rank, rank);
  for (std::size_t i = 0; i < rank; ++i) b_proj(i, i) = b_svd.sigma[i];
  return {std::move(a_proj), std::move(b_proj)};
}

}  // namespace vqge
