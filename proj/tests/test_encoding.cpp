#include <cmath>

#include "doctest.h"
#include "vqge/eigen.hpp"
#include "vqge/lcu.hpp"
#include "vqge/rng.hpp"

using namespace vqge;

namespace {

const cplx kI(0.0, 1.0);

ComplexMatrix random_matrix(std::size_t n, Philox& rng) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
  return m;
}

const ComplexMatrix kExample1A = ComplexMatrix::from_rows({
    {-0.846053, -3.121318, 1.130982, -0.135525},
    {-0.274860, 0.540084, 0.832479, 0.530499},
    {-0.135770, 0.613640, 0.947157, -0.638468},
    {1.730607, -1.242851, -2.299600, 0.060833},
});

}  // namespace

TEST_CASE("pauli words act as their dense matrices") {
  for (const std::string word : {"X", "Y", "Z", "I", "XY", "ZI", "YZX"}) {
    const ComplexMatrix dense = pauli_matrix(word);
    CHECK(unitarity_residual(dense) < 1e-14);
    for (std::uint64_t col = 0; col < dense.cols(); ++col) {
      const PauliAction act = pauli_action(word, col);
      CHECK(std::abs(dense(act.mapped, col) - act.phase) < 1e-15);
    }
  }
  // spot values: Y in tensor slot 0 of "YZ" acts on qubit 1
  const ComplexMatrix yz = pauli_matrix("YZ");
  const ComplexMatrix expect =
      kron(pauli_matrix("Y"), pauli_matrix("Z"));
  CHECK(max_abs_diff(yz, expect) == 0.0);
}

TEST_CASE("identity decomposes to a single term") {
  const LcuDecomposition lcu = pauli_decompose(ComplexMatrix::identity(2));
  REQUIRE(lcu.terms.size() == 1);
  CHECK(lcu.terms[0].ops == "I");
  CHECK(std::abs(lcu.terms[0].coefficient - cplx(1.0)) < 1e-15);
  CHECK(lcu.c == doctest::Approx(1.0));
  CHECK(lcu.m == 1);  // ancilla register never shrinks below one qubit
}

TEST_CASE("raising operator is (X + iY)/2") {
  const ComplexMatrix raise = ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}});
  const LcuDecomposition lcu = pauli_decompose(raise);
  REQUIRE(lcu.terms.size() == 2);
  CHECK(lcu.terms[0].ops == "X");
  CHECK(std::abs(lcu.terms[0].coefficient - cplx(0.5)) < 1e-15);
  CHECK(lcu.terms[1].ops == "Y");
  CHECK(std::abs(lcu.terms[1].coefficient - cplx(0.0, 0.5)) < 1e-15);
  CHECK(lcu.c == doctest::Approx(1.0));
}

TEST_CASE("decomposition rejects non-power-of-two input") {
  CHECK_THROWS_AS(pauli_decompose(ComplexMatrix::identity(3)), ShapeError);
  CHECK_THROWS_AS(pauli_decompose(ComplexMatrix(2, 4)), ShapeError);
}

TEST_CASE("reconstruction matches the source for a random corpus") {
  Philox rng(2, 0);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexMatrix m = random_matrix(4, rng);
    const LcuDecomposition lcu = pauli_decompose(m);
    CHECK(max_abs_diff(reconstruct(lcu), m) < 1e-10);
    CHECK(verify_block_encoding(lcu, m) < 1e-10);
  }
}

TEST_CASE("normalization dominates the spectral norm") {
  Philox rng(3, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix m = random_matrix(4, rng);
    const LcuDecomposition lcu = pauli_decompose(m);
    const Svd dec = svd(m);
    CHECK(lcu.c >= dec.sigma.front() - 1e-10);
  }
}

TEST_CASE("phase absorption leaves the weighted sum unchanged") {
  Philox rng(4, 0);
  const ComplexMatrix m = random_matrix(4, rng);
  const LcuDecomposition lcu = pauli_decompose(m);
  const std::size_t dim = 4;
  ComplexMatrix absorbed(dim, dim);
  for (const PauliTerm& t : lcu.terms)
    absorbed = absorbed + term_unitary(t) * std::abs(t.coefficient);
  CHECK(max_abs_diff(absorbed, m) < 1e-10);
}

TEST_CASE("prep columns and single-term prep") {
  SUBCASE("single term gives the identity column") {
    const LcuDecomposition lcu = pauli_decompose(ComplexMatrix::identity(2));
    const ComplexMatrix prep = build_prep(lcu);
    CHECK(std::abs(prep(0, 0) - cplx(1.0)) < 1e-15);
    CHECK(unitarity_residual(prep) < 1e-12);
  }
  SUBCASE("two equal magnitudes give a balanced column") {
    const ComplexMatrix raise = ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}});
    const ComplexMatrix prep = build_prep(pauli_decompose(raise));
    CHECK(std::abs(prep(0, 0) - cplx(1.0 / std::sqrt(2.0))) < 1e-12);
    CHECK(std::abs(prep(1, 0) - cplx(1.0 / std::sqrt(2.0))) < 1e-12);
    CHECK(unitarity_residual(prep) < 1e-12);
  }
  SUBCASE("example-1 A: amplitudes square to |alpha|/c") {
    const LcuDecomposition lcu = pauli_decompose(kExample1A);
    const ComplexMatrix prep = build_prep(lcu);
    CHECK(unitarity_residual(prep) < 1e-12);
    double total = 0.0;
    for (std::size_t i = 0; i < lcu.terms.size(); ++i) {
      const double p = std::norm(prep(i, 0));
      CHECK(p == doctest::Approx(std::abs(lcu.terms[i].coefficient) / lcu.c));
      total += p;
    }
    CHECK(total == doctest::Approx(1.0));
  }
}

TEST_CASE("select applies the phase-absorbed term per ancilla value") {
  const ComplexMatrix two_term = ComplexMatrix::from_rows({{1.0, 1.0}, {1.0, -1.0}});
  // decomposes to X + Z exactly
  const LcuDecomposition lcu = pauli_decompose(two_term);
  REQUIRE(lcu.terms.size() == 2);
  const ComplexMatrix select = build_select(lcu);
  REQUIRE(select.rows() == 4);
  CHECK(unitarity_residual(select) < 1e-12);
  const ComplexMatrix x = pauli_matrix("X"), z = pauli_matrix("Z");
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) {
      CHECK(std::abs(select(r, c) - x(r, c)) < 1e-14);
      CHECK(std::abs(select(2 + r, 2 + c) - z(r, c)) < 1e-14);
      CHECK(std::abs(select(r, 2 + c)) == 0.0);
    }
}

TEST_CASE("select stays unitary for example-1 A") {
  const LcuDecomposition lcu = pauli_decompose(kExample1A);
  CHECK(lcu.terms.size() <= 16);
  CHECK(unitarity_residual(build_select(lcu)) < 1e-10);
}

TEST_CASE("block encoding residuals") {
  SUBCASE("identity is exact") {
    const LcuDecomposition lcu = pauli_decompose(ComplexMatrix::identity(2));
    CHECK(verify_block_encoding(lcu, ComplexMatrix::identity(2)) < 1e-14);
  }
  SUBCASE("two-term raising operator is exact") {
    const ComplexMatrix raise = ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}});
    CHECK(verify_block_encoding(pauli_decompose(raise), raise) < 1e-12);
  }
  SUBCASE("example-1 matrices") {
    const ComplexMatrix b = ComplexMatrix::from_rows({
        {0.217329, 0.418199, 1.206862, 1.458747},
        {-0.208682, -1.124809, 0.288132, 2.032686},
        {1.272089, -0.145261, 1.799622, 1.183555},
        {0.0, 0.0, 0.0, 0.0},
    });
    CHECK(verify_block_encoding(pauli_decompose(kExample1A), kExample1A) < 1e-10);
    CHECK(verify_block_encoding(pauli_decompose(b), b) < 1e-10);
  }
}

TEST_CASE("padding widens the ancilla register only") {
  const ComplexMatrix raise = ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}});
  const LcuDecomposition lcu = pauli_decompose(raise);
  const LcuDecomposition padded = pad_ancillas(lcu, 3);
  CHECK(padded.m == 3);
  CHECK(padded.terms.size() == lcu.terms.size());
  CHECK(verify_block_encoding(padded, raise) < 1e-12);
  CHECK_THROWS_AS(pad_ancillas(padded, 1), ShapeError);
}
