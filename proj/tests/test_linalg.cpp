#include <doctest.h>

#include "helpers.hpp"
#include "repkit/randomgen.hpp"

using namespace repkit;
using linalg::Field;
using linalg::Matrix;
using linalg::Scalar;
using testutil::mat;

namespace {

const Field Q = linalg::rationals();
const Field F2 = linalg::prime_field(2);
const Field F5 = linalg::prime_field(5);

Matrix random_matrix(Field f, std::size_t r, std::size_t c,
                     randomgen::Rng& rng) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m.set(i, j, f.is_rationals()
                      ? Scalar(f, rng.range(-4, 4))
                      : Scalar(f, (long)rng.below(f.p)));
  return m;
}

}  // namespace

TEST_CASE("scalar arithmetic stays canonical") {
  Scalar a = Scalar::from_string(Q, "2/4");
  CHECK(a.str() == "1/2");
  Scalar b = Scalar::from_string(Q, "1/6");
  CHECK((a + b).str() == "2/3");
  CHECK((a * b).str() == "1/12");
  CHECK((a - a).is_zero());
  CHECK(a.inverse().str() == "2");

  Scalar c(F5, 7);
  CHECK(c.str() == "2");
  CHECK((c * c.inverse()).is_one());
  CHECK((-c).str() == "3");
  CHECK_THROWS_AS((void)(a + c), FieldMismatch);
}

TEST_CASE("rank_and_kernel on the stated examples") {
  // diagonal case over Q
  auto rk = linalg::rank_and_kernel(mat(Q, 2, 2, {1, 0, 0, 0}));
  CHECK(rk.rank == 1);
  REQUIRE(rk.kernel_basis.cols() == 1);
  CHECK(rk.kernel_basis.at(0, 0).is_zero());
  CHECK(rk.kernel_basis.at(1, 0).is_one());

  // characteristic-2 symmetry
  auto rk2 = linalg::rank_and_kernel(mat(F2, 1, 2, {1, 1}));
  CHECK(rk2.rank == 1);
  REQUIRE(rk2.kernel_basis.cols() == 1);
  CHECK(rk2.kernel_basis.at(0, 0).is_one());
  CHECK(rk2.kernel_basis.at(1, 0).is_one());
}

TEST_CASE("phi_4 blocks of the Figure-1 representation") {
  // single-arrow block: the 7x3 coordinate inclusion, rank 3, kernel 0
  Matrix inc(Q, 7, 3);
  for (std::size_t i = 0; i < 3; ++i) inc.set(i, i, 1);
  auto block = linalg::rank_and_kernel(inc);
  CHECK(block.rank == 3);
  CHECK(block.kernel_basis.cols() == 0);

  // assembled phi_4 = [inc1 | inc2]: 7x6 of rank 6, kernel 0
  Matrix inc2(Q, 7, 3);
  for (std::size_t i = 0; i < 3; ++i) inc2.set(3 + i, i, 1);
  auto assembled = linalg::rank_and_kernel(Matrix::hconcat({inc, inc2}));
  CHECK(assembled.rank == 6);
  CHECK(assembled.kernel_basis.cols() == 0);
}

TEST_CASE("solve_linear examples") {
  Matrix id2 = Matrix::identity(Q, 2);
  Matrix b = mat(Q, 2, 1, {3, -7});
  auto s = linalg::solve_linear(id2, b);
  REQUIRE(s.solution.has_value());
  CHECK(*s.solution == b);
  CHECK(s.solution_space_dim == 0);

  auto s2 = linalg::solve_linear(mat(Q, 1, 2, {1, 1}), mat(Q, 1, 1, {2}));
  REQUIRE(s2.solution.has_value());
  CHECK(s2.solution->at(0, 0).str() == "2");
  CHECK(s2.solution->at(1, 0).is_zero());
  CHECK(s2.solution_space_dim == 1);

  auto s3 = linalg::solve_linear(mat(Q, 1, 1, {0}), mat(Q, 1, 1, {1}));
  CHECK(!s3.solution.has_value());
}

TEST_CASE("solve_linear solvability matches the rank criterion") {
  randomgen::Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    Field f = t % 2 ? Q : F5;
    std::size_t r = 1 + rng.below(5), c = 1 + rng.below(5);
    Matrix a = random_matrix(f, r, c, rng);
    Matrix b = random_matrix(f, r, 1, rng);
    bool solvable = linalg::solve_linear(a, b).solution.has_value();
    std::size_t rank_a = linalg::rank_and_kernel(a).rank;
    std::size_t rank_ab =
        linalg::rank_and_kernel(Matrix::hconcat({a, b})).rank;
    CHECK(solvable == (rank_a == rank_ab));
  }
}

TEST_CASE("cokernel_data examples") {
  auto zero_map = linalg::cokernel_data(mat(Q, 1, 1, {0}));
  CHECK(zero_map.dim == 1);
  CHECK(zero_map.proj.is_identity());

  auto iso = linalg::cokernel_data(Matrix::identity(Q, 3));
  CHECK(iso.dim == 0);
  CHECK(iso.proj.rows() == 0);

  Matrix inc(Q, 3, 2);
  inc.set(0, 0, 1);
  inc.set(1, 1, 1);
  auto third = linalg::cokernel_data(inc);
  CHECK(third.dim == 1);
  CHECK(third.proj == mat(Q, 1, 3, {0, 0, 1}));
}

TEST_CASE("rank accounting: kernel and cokernel") {
  randomgen::Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    Field f = t % 2 ? Q : F5;
    std::size_t r = rng.below(6), c = rng.below(6);
    Matrix m = random_matrix(f, r, c, rng);
    auto rk = linalg::rank_and_kernel(m);
    auto ck = linalg::cokernel_data(m);
    CHECK(rk.rank + rk.kernel_basis.cols() == c);
    CHECK(rk.rank + ck.dim == r);
    if (rk.kernel_basis.cols() > 0)
      CHECK((m * rk.kernel_basis).is_zero());
    if (r > 0 && c > 0) CHECK((ck.proj * m).is_zero());
  }
}

TEST_CASE("nilpotent_jordan examples") {
  auto one_block = linalg::nilpotent_jordan(mat(Q, 2, 2, {0, 1, 0, 0}));
  CHECK(one_block.blocks == std::vector<std::size_t>{2});

  auto zero3 = linalg::nilpotent_jordan(Matrix(Q, 3, 3));
  CHECK(zero3.blocks == std::vector<std::size_t>{1, 1, 1});

  CHECK_THROWS_AS(linalg::nilpotent_jordan(Matrix::identity(Q, 2)),
                  NotNilpotent);
  CHECK_THROWS_AS(linalg::nilpotent_jordan(mat(Q, 1, 2, {0, 0})),
                  NotNilpotent);
}

TEST_CASE("nilpotent_jordan recovers a scrambled partition") {
  // blocks {2,1,1} conjugated by a fixed invertible matrix
  Matrix j = linalg::jordan_matrix(Q, {2, 1, 1});
  Matrix t = mat(Q, 4, 4, {1, 2, 0, 1,
                           0, 1, 1, 0,
                           1, 0, 1, 0,
                           0, 1, 0, 1});
  REQUIRE(linalg::rank_and_kernel(t).rank == 4);
  Matrix n = t * j * linalg::inverse(t);
  auto jd = linalg::nilpotent_jordan(n);
  CHECK(jd.blocks == std::vector<std::size_t>{2, 1, 1});
  CHECK(linalg::inverse(jd.basis) * n * jd.basis ==
        linalg::jordan_matrix(Q, jd.blocks));
}

TEST_CASE("block sizes match the rank sequence of powers") {
  randomgen::Rng rng(13);
  for (int t = 0; t < 50; ++t) {
    Field f = t % 2 ? Q : F5;
    // random nilpotent: strictly upper triangular entries
    std::size_t d = 1 + rng.below(5);
    Matrix n(f, d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j)
        n.set(i, j, f.is_rationals()
                        ? Scalar(f, rng.range(-2, 2))
                        : Scalar(f, (long)rng.below(f.p)));
    auto jd = linalg::nilpotent_jordan(n);
    // oracle: #blocks of size >= s equals rank n^{s-1} - rank n^s
    for (std::size_t s = 1; s <= d; ++s) {
      std::size_t oracle =
          linalg::rank_and_kernel(n.power(s - 1)).rank -
          linalg::rank_and_kernel(n.power(s)).rank;
      std::size_t got = 0;
      for (std::size_t b : jd.blocks)
        if (b >= s) ++got;
      CHECK(got == oracle);
    }
    CHECK(linalg::inverse(jd.basis) * n * jd.basis ==
          linalg::jordan_matrix(f, jd.blocks));
  }
}

TEST_CASE("degenerate shapes are first-class") {
  Matrix empty_cols(Q, 3, 0);
  auto rk = linalg::rank_and_kernel(empty_cols);
  CHECK(rk.rank == 0);
  CHECK(rk.kernel_basis.cols() == 0);
  auto ck = linalg::cokernel_data(empty_cols);
  CHECK(ck.dim == 3);

  Matrix empty_rows(Q, 0, 3);
  auto rk2 = linalg::rank_and_kernel(empty_rows);
  CHECK(rk2.rank == 0);
  CHECK(rk2.kernel_basis.cols() == 3);
}

TEST_CASE("field mismatch is rejected") {
  CHECK_THROWS_AS(
      (void)(Matrix::identity(Q, 2) * Matrix::identity(F5, 2)),
      FieldMismatch);
  CHECK_THROWS_AS(
      (void)linalg::solve_linear(Matrix::identity(Q, 2),
                                 Matrix::identity(F2, 2)),
      FieldMismatch);
}
