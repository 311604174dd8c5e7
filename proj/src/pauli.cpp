#include "vqge/pauli.hpp"

#include <cmath>

namespace vqge {

namespace {

constexpr double kDropTol = 1e-12;
constexpr char kAlphabet[4] = {'I', 'X', 'Y', 'Z'};

std::size_t log2_exact(std::size_t dim) {
  std::size_t n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  if ((std::size_t{1} << n) != dim)
    throw ShapeError("dimension " + std::to_string(dim) + " is not a power of two");
  return n;
}

}  // namespace

PauliAction pauli_action(const std::string& ops, std::uint64_t basis) {
  const std::size_t n = ops.size();
  std::uint64_t mapped = basis;
  cplx phase(1.0, 0.0);
  const cplx i(0.0, 1.0);
  for (std::size_t q = 0; q < n; ++q) {
    const char op = ops[n - 1 - q];  // character order is tensor order
    const bool bit = (basis >> q) & 1;
    switch (op) {
      case 'I':
        break;
      case 'X':
        mapped ^= std::uint64_t{1} << q;
        break;
      case 'Z':
        if (bit) phase = -phase;
        break;
      case 'Y':
        mapped ^= std::uint64_t{1} << q;
        phase *= bit ? -i : i;
        break;
      default:
        throw ShapeError(std::string("pauli word has invalid character '") + op + "'");
    }
  }
  return {mapped, phase};
}

ComplexMatrix pauli_matrix(const std::string& ops) {
  const std::size_t dim = std::size_t{1} << ops.size();
  ComplexMatrix m(dim, dim);
  for (std::uint64_t col = 0; col < dim; ++col) {
    const PauliAction act = pauli_action(ops, col);
    m(act.mapped, col) = act.phase;
  }
  return m;
}

std::vector<PauliTerm> pauli_coefficients(const ComplexMatrix& m) {
  if (!m.is_square()) throw ShapeError("pauli_coefficients: matrix not square");
  const std::size_t n = log2_exact(m.rows());
  const std::size_t dim = m.rows();

  std::vector<PauliTerm> terms;
  std::string word(n, 'I');
  const std::size_t word_count = std::size_t{1} << (2 * n);
  for (std::size_t code = 0; code < word_count; ++code) {
    std::size_t rem = code;
    for (std::size_t pos = n; pos-- > 0;) {  // last character varies fastest
      word[pos] = kAlphabet[rem & 3];
      rem >>= 2;
    }
    // Tr(P† M) = sum_c conj(phase(c)) M(mapped(c), c)
    cplx tr(0.0, 0.0);
    for (std::uint64_t col = 0; col < dim; ++col) {
      const PauliAction act = pauli_action(word, col);
      tr += std::conj(act.phase) * m(act.mapped, col);
    }
    const cplx alpha = tr / static_cast<double>(dim);
    if (std::abs(alpha) > kDropTol) terms.push_back({word, alpha});
  }
  return terms;
}

}  // namespace vqge
