#include "skewlab/matrix.hpp"

#include <doctest.h>
#include <random>

using namespace skewlab;

namespace {

Matrix random_matrix(const Field &f, int rows, int cols, std::mt19937_64 &rng) {
  Matrix m(f, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      m.at(i, j) = f.is_finite()
                       ? f.from_long(static_cast<long>(rng() % f.p()))
                       : f.from_long(static_cast<long>(rng() % 9) - 4);
  return m;
}

} // namespace

TEST_CASE("rref is idempotent and rank is well defined") {
  std::mt19937_64 rng(3);
  for (const Field &f : {Field::rationals(), Field::prime(13)}) {
    for (int t = 0; t < 20; ++t) {
      Matrix m = random_matrix(f, 4 + static_cast<int>(rng() % 4),
                               3 + static_cast<int>(rng() % 4), rng);
      RrefResult r = rref(m);
      RrefResult rr = rref(r.mat);
      CHECK(rr.mat == r.mat);
      CHECK(rr.rank == r.rank);
    }
  }
}

TEST_CASE("parallel kernels agree with the serial reference") {
  std::mt19937_64 rng(4);
  for (const Field &f : {Field::rationals(), Field::prime(97)}) {
    for (int t = 0; t < 10; ++t) {
      Matrix a = random_matrix(f, 12, 15, rng);
      Matrix b = random_matrix(f, 15, 9, rng);
      CHECK(matmul(a, b) == matmul_serial(a, b));
      RrefResult p = rref(a), s = rref_serial(a);
      CHECK(p.mat == s.mat);
      CHECK(p.rank == s.rank);
      CHECK(p.pivots == s.pivots);
    }
  }
}

TEST_CASE("rank-nullity: rank + dim kernel = columns") {
  std::mt19937_64 rng(5);
  Field f = Field::rationals();
  for (int t = 0; t < 25; ++t) {
    Matrix m = random_matrix(f, 3 + static_cast<int>(rng() % 5),
                             3 + static_cast<int>(rng() % 5), rng);
    Matrix k = kernel(m);
    CHECK(rank(m) + k.rows() == m.cols());
    Matrix lk = left_kernel(m);
    CHECK(rank(m) + lk.rows() == m.rows());
    // kernel rows really are annihilated
    if (k.rows() > 0)
      CHECK(matmul(m, k.transpose()).is_zero());
    if (lk.rows() > 0)
      CHECK(matmul(lk, m).is_zero());
  }
}

TEST_CASE("kronecker mixed-product property") {
  std::mt19937_64 rng(6);
  Field f = Field::prime(11);
  Matrix a = random_matrix(f, 3, 2, rng), b = random_matrix(f, 2, 2, rng);
  Matrix c = random_matrix(f, 2, 3, rng), d = random_matrix(f, 2, 4, rng);
  CHECK(matmul(kronecker(a, b), kronecker(c, d)) ==
        kronecker(matmul(a, c), matmul(b, d)));
}

TEST_CASE("inverse and solve") {
  std::mt19937_64 rng(8);
  Field f = Field::rationals();
  for (int t = 0; t < 10; ++t) {
    Matrix m = random_matrix(f, 5, 5, rng);
    if (rank(m) < 5)
      continue;
    Matrix inv = inverse(m);
    CHECK(matmul(m, inv).is_identity());
    CHECK(matmul(inv, m).is_identity());
  }
  Matrix sing(f, 2, 2);
  sing.at(0, 0) = f.one();
  CHECK_THROWS(inverse(sing));
}

TEST_CASE("solve_all finds particular and homogeneous solutions") {
  Field f = Field::rationals();
  std::mt19937_64 rng(9);
  Matrix a = random_matrix(f, 4, 6, rng);
  Matrix x = random_matrix(f, 6, 2, rng);
  Matrix b = matmul(a, x);
  SolveResult s = solve_all(a, b);
  REQUIRE(s.consistent);
  CHECK(matmul(a, s.particular) == b);
  CHECK(s.kernel_basis.rows() == 6 - rank(a));
}

TEST_CASE("subspace lattice") {
  Field f = Field::rationals();
  Matrix m(f, 2, 4);
  m.at(0, 0) = f.one();
  m.at(1, 1) = f.one();
  Subspace u = Subspace::from_span(m);
  Matrix n(f, 1, 4);
  n.at(0, 1) = f.one();
  Subspace v = Subspace::from_span(n);
  CHECK(u.dim() == 2);
  CHECK(u.contains(v));
  CHECK(u.sum(v) == u);
  CHECK(u.intersect(v) == v);
  CHECK(u.contains(std::vector<Fel>{Fel(2), Fel(-3), Fel(0), Fel(0)}));
  CHECK(!u.contains(std::vector<Fel>{Fel(0), Fel(0), Fel(1), Fel(0)}));
}
