#include "vqge/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace vqge {

namespace {

constexpr double kSubdiagTol = 1e-12;

struct Givens {
  cplx g00, g01, g10, g11;  // unitary 2x2 sending (a,b) to (r,0)
};

Givens make_givens(cplx a, cplx b) {
  const double r = std::sqrt(std::norm(a) + std::norm(b));
  if (r == 0.0) return {1.0, 0.0, 0.0, 1.0};
  return {std::conj(a) / r, std::conj(b) / r, -b / r, a / r};
}

void apply_left(ComplexMatrix& h, const Givens& g, std::size_t k) {
  const std::size_t n = h.cols();
  for (std::size_t j = 0; j < n; ++j) {
    const cplx x = h(k, j), y = h(k + 1, j);
    h(k, j) = g.g00 * x + g.g01 * y;
    h(k + 1, j) = g.g10 * x + g.g11 * y;
  }
}

void apply_right_adjoint(ComplexMatrix& h, const Givens& g, std::size_t k) {
  const std::size_t n = h.rows();
  for (std::size_t i = 0; i < n; ++i) {
    const cplx x = h(i, k), y = h(i, k + 1);
    h(i, k) = x * std::conj(g.g00) + y * std::conj(g.g01);
    h(i, k + 1) = x * std::conj(g.g10) + y * std::conj(g.g11);
  }
}

// Reduce to upper Hessenberg form by complex Householder reflectors.
void hessenberg_reduce(ComplexMatrix& h) {
  const std::size_t n = h.rows();
  if (n < 3) return;
  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t len = n - k - 1;
    std::vector<cplx> v(len);
    double norm_sq = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
      v[i] = h(k + 1 + i, k);
      norm_sq += std::norm(v[i]);
    }
    double tail_sq = norm_sq - std::norm(v[0]);
    if (tail_sq <= 0.0) continue;
    const double norm = std::sqrt(norm_sq);
    if (norm == 0.0) continue;
    const cplx alpha = (v[0] == cplx(0.0, 0.0))
                           ? cplx(-norm, 0.0)
                           : -(v[0] / std::abs(v[0])) * norm;
    v[0] -= alpha;
    double vnorm = 0.0;
    for (const cplx& x : v) vnorm += std::norm(x);
    if (vnorm == 0.0) continue;
    vnorm = std::sqrt(vnorm);
    for (cplx& x : v) x /= vnorm;

    // H <- (I - 2vv†) H  on rows k+1..n-1
    for (std::size_t j = 0; j < n; ++j) {
      cplx dot(0.0, 0.0);
      for (std::size_t i = 0; i < len; ++i) dot += std::conj(v[i]) * h(k + 1 + i, j);
      dot *= 2.0;
      for (std::size_t i = 0; i < len; ++i) h(k + 1 + i, j) -= v[i] * dot;
    }
    // H <- H (I - 2vv†)  on columns k+1..n-1
    for (std::size_t i = 0; i < n; ++i) {
      cplx dot(0.0, 0.0);
      for (std::size_t j = 0; j < len; ++j) dot += h(i, k + 1 + j) * v[j];
      dot *= 2.0;
      for (std::size_t j = 0; j < len; ++j) h(i, k + 1 + j) -= dot * std::conj(v[j]);
    }
    h(k + 1, k) = alpha;
    for (std::size_t i = k + 2; i < n; ++i) h(i, k) = 0.0;
  }
}

cplx wilkinson_shift(const ComplexMatrix& h, std::size_t hi) {
  const cplx a = h(hi - 1, hi - 1), b = h(hi - 1, hi);
  const cplx c = h(hi, hi - 1), d = h(hi, hi);
  const cplx mean = (a + d) * 0.5;
  const cplx disc = std::sqrt(mean * mean - (a * d - b * c));
  const cplx l1 = mean + disc, l2 = mean - disc;
  return (std::abs(l1 - d) < std::abs(l2 - d)) ? l1 : l2;
}

bool subdiag_negligible(const ComplexMatrix& h, std::size_t k, double scale) {
  const double diag = std::abs(h(k - 1, k - 1)) + std::abs(h(k, k));
  const double ref = (diag > 0.0) ? diag : scale;
  return std::abs(h(k, k - 1)) <= kSubdiagTol * ref;
}

}  // namespace

std::vector<cplx> dense_eigenvalues(const ComplexMatrix& m) {
  if (!m.is_square()) throw ShapeError("dense_eigenvalues: matrix not square");
  const std::size_t n = m.rows();
  if (n == 1) return {m(0, 0)};

  ComplexMatrix h = m;
  hessenberg_reduce(h);
  const double scale = std::max(frobenius_norm(h), 1e-300);

  std::vector<cplx> eigenvalues;
  eigenvalues.reserve(n);

  std::size_t hi = n - 1;
  std::size_t iters_at_hi = 0;
  std::size_t total_iters = 0;
  const std::size_t max_iters = 1000 * n;

  while (true) {
    // deflate fully converged trailing 1x1 blocks
    while (hi > 0 && subdiag_negligible(h, hi, scale)) {
      h(hi, hi - 1) = 0.0;
      eigenvalues.push_back(h(hi, hi));
      --hi;
      iters_at_hi = 0;
    }
    if (hi == 0) {
      eigenvalues.push_back(h(0, 0));
      break;
    }

    std::size_t lo = hi;
    while (lo > 0 && !subdiag_negligible(h, lo, scale)) --lo;
    if (lo > 0) h(lo, lo - 1) = 0.0;

    if (++total_iters > max_iters)
      throw std::runtime_error("dense_eigenvalues: QR iteration did not converge");

    cplx sigma(0.0, 0.0);
    if (iters_at_hi == 0) {
      sigma = 0.0;  // opening unshifted sweep for a fresh window
    } else if (iters_at_hi % 25 == 0) {
      // exceptional shift to break limit cycles
      sigma = h(hi, hi) + cplx(0.75, 0.4) * std::abs(h(hi, hi - 1));
    } else {
      sigma = wilkinson_shift(h, hi);
    }
    ++iters_at_hi;

    for (std::size_t k = lo; k <= hi; ++k) h(k, k) -= sigma;
    std::vector<Givens> rotations;
    rotations.reserve(hi - lo);
    for (std::size_t k = lo; k < hi; ++k) {
      const Givens g = make_givens(h(k, k), h(k + 1, k));
      apply_left(h, g, k);
      h(k + 1, k) = 0.0;
      rotations.push_back(g);
    }
    for (std::size_t k = lo; k < hi; ++k) apply_right_adjoint(h, rotations[k - lo], k);
    for (std::size_t k = lo; k <= hi; ++k) h(k, k) += sigma;
    // keep exact Hessenberg structure
    for (std::size_t i = lo + 2; i <= hi; ++i)
      for (std::size_t j = lo; j + 1 < i; ++j) h(i, j) = 0.0;
  }
  return eigenvalues;
}

Svd svd(const ComplexMatrix& m) {
  // one-sided Jacobi wants rows >= cols; transpose if needed and swap back
  if (m.rows() < m.cols()) {
    Svd t = svd(adjoint(m));
    return {std::move(t.v), std::move(t.sigma), std::move(t.u)};
  }
  const std::size_t rows = m.rows(), cols = m.cols();
  ComplexMatrix w = m;
  ComplexMatrix v = ComplexMatrix::identity(cols);

  const double eps = 1e-14;
  const int max_sweeps = 60;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < cols; ++p) {
      for (std::size_t q = p + 1; q < cols; ++q) {
        double app = 0.0, aqq = 0.0;
        cplx apq(0.0, 0.0);
        for (std::size_t i = 0; i < rows; ++i) {
          app += std::norm(w(i, p));
          aqq += std::norm(w(i, q));
          apq += std::conj(w(i, p)) * w(i, q);
        }
        const double off = std::abs(apq);
        if (off <= eps * std::sqrt(app * aqq) || off < 1e-300) continue;
        rotated = true;

        // absorb the phase of the cross term into column q, then rotate real
        const cplx phase = apq / off;
        for (std::size_t i = 0; i < rows; ++i) w(i, q) *= std::conj(phase);
        for (std::size_t i = 0; i < cols; ++i) v(i, q) *= std::conj(phase);

        const double tau = (aqq - app) / (2.0 * off);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double cs = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = cs * t;
        for (std::size_t i = 0; i < rows; ++i) {
          const cplx wp = w(i, p), wq = w(i, q);
          w(i, p) = cs * wp - sn * wq;
          w(i, q) = sn * wp + cs * wq;
        }
        for (std::size_t i = 0; i < cols; ++i) {
          const cplx vp = v(i, p), vq = v(i, q);
          v(i, p) = cs * vp - sn * vq;
          v(i, q) = sn * vp + cs * vq;
        }
      }
    }
    if (!rotated) break;
  }

  std::vector<double> sigma(cols, 0.0);
  ComplexMatrix u(rows, cols);
  std::vector<std::size_t> order(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < rows; ++i) s += std::norm(w(i, j));
    sigma[j] = std::sqrt(s);
    order[j] = j;
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return sigma[a] > sigma[b]; });

  Svd out;
  out.sigma.resize(cols);
  out.u = ComplexMatrix(rows, cols);
  out.v = ComplexMatrix(cols, cols);
  // Below this the column direction is rounding noise; report the sigma but
  // rebuild the u column by orthogonal completion.
  double sigma_max = 0.0;
  for (std::size_t j = 0; j < cols; ++j) sigma_max = std::max(sigma_max, sigma[j]);
  const double tiny = std::max(1e-300, 1e-14 * sigma_max);
  for (std::size_t jj = 0; jj < cols; ++jj) {
    const std::size_t j = order[jj];
    out.sigma[jj] = sigma[j];
    for (std::size_t i = 0; i < cols; ++i) out.v(i, jj) = v(i, j);
    if (sigma[j] > tiny) {
      for (std::size_t i = 0; i < rows; ++i) out.u(i, jj) = w(i, j) / sigma[j];
    }
  }
  // complete zero-sigma columns of u to an orthonormal set
  for (std::size_t jj = 0; jj < cols; ++jj) {
    if (out.sigma[jj] > tiny) continue;
    for (std::size_t cand = 0; cand < rows; ++cand) {
      std::vector<cplx> col(rows, cplx(0.0, 0.0));
      col[cand] = 1.0;
      for (std::size_t k = 0; k < cols; ++k) {
        cplx dot(0.0, 0.0);
        for (std::size_t i = 0; i < rows; ++i) dot += std::conj(out.u(i, k)) * col[i];
        for (std::size_t i = 0; i < rows; ++i) col[i] -= dot * out.u(i, k);
      }
      double nrm = 0.0;
      for (const cplx& x : col) nrm += std::norm(x);
      nrm = std::sqrt(nrm);
      if (nrm > 1e-6) {
        for (std::size_t i = 0; i < rows; ++i) out.u(i, jj) = col[i] / nrm;
        break;
      }
    }
  }
  return out;
}

ComplexMatrix solve_linear(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (!a.is_square()) throw ShapeError("solve_linear: coefficient matrix not square");
  if (a.rows() != b.rows()) throw ShapeError("solve_linear: rhs row mismatch");
  const std::size_t n = a.rows();
  ComplexMatrix lu = a;
  ComplexMatrix x = b;
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    double best = std::abs(lu(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double cand = std::abs(lu(i, k));
      if (cand > best) {
        best = cand;
        pivot = i;
      }
    }
    if (best < 1e-300)
      throw std::runtime_error("solve_linear: matrix numerically singular");
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(pivot, j));
      for (std::size_t j = 0; j < x.cols(); ++j) std::swap(x(k, j), x(pivot, j));
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const cplx factor = lu(i, k) / lu(k, k);
      lu(i, k) = factor;
      for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= factor * lu(k, j);
      for (std::size_t j = 0; j < x.cols(); ++j) x(i, j) -= factor * x(k, j);
    }
  }
  // back substitution
  for (std::size_t col = 0; col < x.cols(); ++col) {
    for (std::size_t ii = n; ii-- > 0;) {
      cplx sum = x(ii, col);
      for (std::size_t j = ii + 1; j < n; ++j) sum -= lu(ii, j) * x(j, col);
      x(ii, col) = sum / lu(ii, ii);
    }
  }
  return x;
}

ComplexMatrix random_unitary(std::size_t n, Philox& rng) {
  ComplexMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = cplx(rng.normal(), rng.normal());

  // Gram-Schmidt QR; phases of the implicit R diagonal are divided out so the
  // result is Haar distributed.
  ComplexMatrix q(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<cplx> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = g(i, j);
    for (std::size_t k = 0; k < j; ++k) {
      cplx dot(0.0, 0.0);
      for (std::size_t i = 0; i < n; ++i) dot += std::conj(q(i, k)) * col[i];
      for (std::size_t i = 0; i < n; ++i) col[i] -= dot * q(i, k);
    }
    double nrm = 0.0;
    for (const cplx& x : col) nrm += std::norm(x);
    nrm = std::sqrt(nrm);
    if (nrm < 1e-12) {
      // astronomically unlikely for Ginibre input; restart with fresh column
      for (std::size_t i = 0; i < n; ++i) g(i, j) = cplx(rng.normal(), rng.normal());
      --j;
      continue;
    }
    for (std::size_t i = 0; i < n; ++i) q(i, j) = col[i] / nrm;
  }
  return q;
}

MultisetMatch match_eigenvalue_multisets(const std::vector<cplx>& got,
                                         const std::vector<cplx>& want) {
  MultisetMatch out;
  std::vector<bool> got_used(got.size(), false), want_used(want.size(), false);
  const std::size_t n_pairs = std::min(got.size(), want.size());
  out.unmatched = std::max(got.size(), want.size()) - n_pairs;

  for (std::size_t step = 0; step < n_pairs; ++step) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = 0; i < got.size(); ++i) {
      if (got_used[i]) continue;
      for (std::size_t j = 0; j < want.size(); ++j) {
        if (want_used[j]) continue;
        const double d = std::abs(got[i] - want[j]);
        if (d < best) {
          best = d;
          bi = i;
          bj = j;
        }
      }
    }
    got_used[bi] = true;
    want_used[bj] = true;
    out.pairs.emplace_back(bi, bj);
    out.max_abs_distance = std::max(out.max_abs_distance, best);
    out.max_rel_distance =
        std::max(out.max_rel_distance, best / std::max(1.0, std::abs(want[bj])));
  }
  return out;
}

}  // namespace vqge
