#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "vqge/complex_matrix.hpp"
#include "vqge/matrix_io.hpp"
#include "vqge/pencil.hpp"
#include "vqge/rng.hpp"

using namespace vqge;

namespace {

const cplx kI(0.0, 1.0);

ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, Philox& rng) {
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
  return m;
}

// independent oracle for matmul: naive triple loop kept free of the
// production code path
ComplexMatrix triple_loop_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      cplx sum(0.0, 0.0);
      for (std::size_t k = 0; k < a.cols(); ++k) sum += a(i, k) * b(k, j);
      out(i, j) = sum;
    }
  return out;
}

const ComplexMatrix kExample1A = ComplexMatrix::from_rows({
    {-0.846053, -3.121318, 1.130982, -0.135525},
    {-0.274860, 0.540084, 0.832479, 0.530499},
    {-0.135770, 0.613640, 0.947157, -0.638468},
    {1.730607, -1.242851, -2.299600, 0.060833},
});

}  // namespace

TEST_CASE("matmul identity and X squared") {
  const ComplexMatrix x = ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
  const ComplexMatrix id = ComplexMatrix::identity(2);

  Philox rng(11, 0);
  const ComplexMatrix m = random_matrix(2, 2, rng);
  CHECK(max_abs_diff(matmul(id, m), m) == doctest::Approx(0.0));
  CHECK(max_abs_diff(matmul(x, x), id) == doctest::Approx(0.0));
}

TEST_CASE("matmul matches triple-loop oracle on example-1 A times random unitary") {
  Philox rng(21, 0);
  const ComplexMatrix z = random_unitary(4, rng);
  CHECK(max_abs_diff(matmul(kExample1A, z), triple_loop_product(kExample1A, z)) < 1e-12);
}

TEST_CASE("matmul shape error") {
  const ComplexMatrix a(2, 3), b(2, 2);
  CHECK_THROWS_AS(matmul(a, b), ShapeError);
}

TEST_CASE("adjoint basics") {
  const ComplexMatrix y = ComplexMatrix::from_rows({{0.0, -kI}, {kI, 0.0}});
  CHECK(max_abs_diff(adjoint(y), y) == doctest::Approx(0.0));

  const ComplexMatrix n = ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}});
  const ComplexMatrix nt = ComplexMatrix::from_rows({{0.0, 0.0}, {1.0, 0.0}});
  CHECK(max_abs_diff(adjoint(n), nt) == doctest::Approx(0.0));

  Philox rng(31, 0);
  const ComplexMatrix m = random_matrix(3, 5, rng);
  CHECK(max_abs_diff(adjoint(adjoint(m)), m) == doctest::Approx(0.0));
}

TEST_CASE("adjoint of product reverses factors") {
  Philox rng(41, 0);
  const ComplexMatrix a = random_matrix(3, 4, rng);
  const ComplexMatrix b = random_matrix(4, 2, rng);
  CHECK(max_abs_diff(adjoint(matmul(a, b)), matmul(adjoint(b), adjoint(a))) < 1e-12);
}

TEST_CASE("is_upper_triangular") {
  CHECK(is_upper_triangular(ComplexMatrix::from_rows({{1.0, 2.0}, {0.0, 3.0}}), 0.0));
  CHECK_FALSE(
      is_upper_triangular(ComplexMatrix::from_rows({{1.0, 0.0}, {2.0, 3.0}}), 0.0));
  CHECK(is_upper_triangular(ComplexMatrix::from_rows({{1.0, 0.0}, {1e-4, 3.0}}), 1e-3));
  CHECK_THROWS_AS(is_upper_triangular(ComplexMatrix(2, 3), 0.0), ShapeError);
}

TEST_CASE("matrix file format round-trips bit-faithfully") {
  Philox rng(51, 0);
  ComplexMatrix m = random_matrix(3, 2, rng);
  m(0, 0) = cplx(1.0 / 3.0, -2.0 / 7.0);
  m(2, 1) = cplx(1e-300, 3.14159265358979);

  const std::string text = format_matrix(m);
  const ComplexMatrix back = parse_matrix(text);
  REQUIRE(back.rows() == m.rows());
  REQUIRE(back.cols() == m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      CHECK(back(i, j).real() == m(i, j).real());
      CHECK(back(i, j).imag() == m(i, j).imag());
    }

  const auto path = std::filesystem::temp_directory_path() / "vqge_io_test.mat";
  write_matrix(path, m);
  const ComplexMatrix from_file = read_matrix(path);
  CHECK(max_abs_diff(from_file, m) == 0.0);
  std::filesystem::remove(path);
}

TEST_CASE("matrix parse errors name the line") {
  CHECK_THROWS_WITH_AS(parse_matrix("2 2\n1,0 2,0\n"), doctest::Contains("line 3"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_matrix("2 2\n1,0\n2,0 3,0\n"), doctest::Contains("line 2"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_matrix("2 2\n1,0 banana,0\n0,0 0,0\n"),
                       doctest::Contains("line 2"), ParseError);
  CHECK_THROWS_AS(parse_matrix(""), ParseError);
}

TEST_CASE("pencil construction validates shapes") {
  CHECK_THROWS_AS(MatrixPencil(ComplexMatrix(2, 2), ComplexMatrix(3, 3)), ShapeError);
  CHECK_THROWS_AS(MatrixPencil(ComplexMatrix(2, 3), ComplexMatrix(2, 3)), ShapeError);
}

TEST_CASE("embed_to_power_of_two") {
  SUBCASE("4x4 stays untouched") {
    Philox rng(61, 0);
    const MatrixPencil p{random_matrix(4, 4, rng), random_matrix(4, 4, rng)};
    const MatrixPencil e = embed_to_power_of_two(p);
    CHECK(e.dim() == 4);
    CHECK(max_abs_diff(e.a, p.a) == 0.0);
  }
  SUBCASE("3x3 diagonal gains a trailing 1") {
    ComplexMatrix a(3, 3);
    a(0, 0) = 2.0;
    a(1, 1) = 3.0;
    a(2, 2) = 4.0;
    const MatrixPencil e = embed_to_power_of_two({a, ComplexMatrix::identity(3)});
    REQUIRE(e.dim() == 4);
    const auto result = classical_generalized_eigenvalues(e);
    const auto match = match_eigenvalue_multisets(
        result.eigenvalues, {cplx(2.0), cplx(3.0), cplx(4.0), cplx(1.0)});
    CHECK(match.max_abs_distance < 1e-10);
  }
  SUBCASE("5x5 random pencil embeds to 8x8 preserving the spectrum") {
    Philox rng(71, 0);
    const MatrixPencil p{random_matrix(5, 5, rng), random_matrix(5, 5, rng)};
    const MatrixPencil e = embed_to_power_of_two(p);
    REQUIRE(e.dim() == 8);
    auto inner = classical_generalized_eigenvalues(p);
    inner.eigenvalues.insert(inner.eigenvalues.end(), 3, cplx(1.0));
    const auto outer = classical_generalized_eigenvalues(e);
    REQUIRE(outer.eigenvalues.size() == inner.eigenvalues.size());
    const auto match = match_eigenvalue_multisets(outer.eigenvalues, inner.eigenvalues);
    CHECK(match.max_abs_distance < 1e-9);
  }
}

TEST_CASE("project_singular_pencil") {
  SUBCASE("full-rank B keeps the spectrum") {
    Philox rng(81, 0);
    const MatrixPencil p{random_matrix(4, 4, rng), ComplexMatrix::identity(4)};
    const MatrixPencil q = project_singular_pencil(p);
    REQUIRE(q.dim() == 4);
    const auto before = classical_generalized_eigenvalues(p);
    const auto after = classical_generalized_eigenvalues(q);
    const auto match = match_eigenvalue_multisets(after.eigenvalues, before.eigenvalues);
    CHECK(match.max_abs_distance < 1e-10);
  }
  SUBCASE("rank-1 B compresses to the surviving ratio") {
    ComplexMatrix a(2, 2), b(2, 2);
    a(0, 0) = 1.0;
    a(1, 1) = 2.0;
    b(0, 0) = 1.0;
    const MatrixPencil q = project_singular_pencil({a, b});
    REQUIRE(q.dim() == 1);
    CHECK(std::abs(q.a(0, 0) / q.b(0, 0) - cplx(1.0)) < 1e-12);
  }
  SUBCASE("zero B is an empty pencil") {
    CHECK_THROWS_AS(project_singular_pencil({ComplexMatrix::identity(2),
                                             ComplexMatrix(2, 2)}),
                    EmptyPencilError);
  }
}

TEST_CASE("oracle on diagonal and identity pencils") {
  ComplexMatrix a(2, 2), b(2, 2);
  a(0, 0) = 2.0;
  a(1, 1) = 6.0;
  b(0, 0) = 1.0;
  b(1, 1) = 3.0;
  const auto res = classical_generalized_eigenvalues({a, b});
  REQUIRE(res.eigenvalues.size() == 2);
  const auto match = match_eigenvalue_multisets(res.eigenvalues, {cplx(2.0), cplx(2.0)});
  CHECK(match.max_abs_distance < 1e-12);
  CHECK(res.infinite_count == 0);
  CHECK_FALSE(res.degenerate);

  const auto res4 = classical_generalized_eigenvalues(
      {ComplexMatrix::identity(4), ComplexMatrix::identity(4)});
  REQUIRE(res4.eigenvalues.size() == 4);
  for (const cplx& v : res4.eigenvalues) CHECK(std::abs(v - cplx(1.0)) < 1e-12);
}

TEST_CASE("oracle flags degenerate pencils and capacity") {
  ComplexMatrix a(2, 2), b(2, 2);
  a(0, 0) = 1.0;
  b(0, 0) = 1.0;  // det(A - lambda B) == 0 identically
  const auto res = classical_generalized_eigenvalues({a, b});
  CHECK(res.degenerate);

  CHECK_THROWS_AS(classical_generalized_eigenvalues(
                      {ComplexMatrix::identity(65), ComplexMatrix::identity(65)}),
                  CapacityError);
}

TEST_CASE("oracle spectrum is invariant under two-sided unitary equivalence") {
  Philox rng(91, 0);
  for (int trial = 0; trial < 4; ++trial) {
    const std::size_t n = 4;
    const MatrixPencil p{random_matrix(n, n, rng), random_matrix(n, n, rng)};
    const ComplexMatrix u = random_unitary(n, rng);
    const ComplexMatrix v = random_unitary(n, rng);
    const MatrixPencil rotated{matmul(adjoint(u), matmul(p.a, v)),
                               matmul(adjoint(u), matmul(p.b, v))};
    const auto base = classical_generalized_eigenvalues(p);
    const auto rot = classical_generalized_eigenvalues(rotated);
    REQUIRE(base.eigenvalues.size() == rot.eigenvalues.size());
    const auto match = match_eigenvalue_multisets(rot.eigenvalues, base.eigenvalues);
    CHECK(match.max_abs_distance < 1e-8);
  }
}

TEST_CASE("oracle on the example-1 pencil: three finite eigenvalues plus one infinite") {
  const ComplexMatrix b = ComplexMatrix::from_rows({
      {0.217329, 0.418199, 1.206862, 1.458747},
      {-0.208682, -1.124809, 0.288132, 2.032686},
      {1.272089, -0.145261, 1.799622, 1.183555},
      {0.000000, 0.000000, 0.000000, 0.000000},
  });
  const MatrixPencil p{kExample1A, b};
  const auto res = classical_generalized_eigenvalues(p);
  CHECK(res.infinite_count == 1);
  CHECK_FALSE(res.degenerate);
  REQUIRE(res.eigenvalues.size() == 3);

  // cross-check against the (B + eps I)^{-1} A limit
  for (const double eps : {1e-7, 1e-9}) {
    ComplexMatrix shifted = b;
    for (std::size_t i = 0; i < 4; ++i) shifted(i, i) += eps;
    const auto perturbed = dense_eigenvalues(solve_linear(shifted, kExample1A));
    // three of the four perturbed eigenvalues approximate the finite spectrum
    std::vector<cplx> finite;
    for (const cplx& v : perturbed)
      if (std::abs(v) < 1.0 / (1e3 * eps)) finite.push_back(v);
    REQUIRE(finite.size() == 3);
    const auto match = match_eigenvalue_multisets(finite, res.eigenvalues);
    CHECK(match.max_abs_distance < 1e-5);
  }

  // projection route agrees with the uncompressed finite spectrum
  const MatrixPencil proj = project_singular_pencil(p);
  REQUIRE(proj.dim() == 3);
  const auto proj_res = classical_generalized_eigenvalues(proj);
  const auto match = match_eigenvalue_multisets(proj_res.eigenvalues, res.eigenvalues);
  CHECK(match.max_abs_distance < 1e-6);
}

TEST_CASE("greedy multiset matching reports distances") {
  const std::vector<cplx> got = {cplx(1.0, 0.0), cplx(0.0, 2.0)};
  const std::vector<cplx> want = {cplx(0.0, 2.00001), cplx(1.0, 0.0)};
  const auto match = match_eigenvalue_multisets(got, want);
  CHECK(match.unmatched == 0);
  CHECK(match.max_abs_distance == doctest::Approx(1e-5).epsilon(0.05));
}
