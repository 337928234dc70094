#include "skewlab/algebra.hpp"

#include <doctest.h>
#include <random>

using namespace skewlab;

namespace {

Algebra kxk(const Field &f) {
  // split 2-dimensional semisimple algebra as an arrowless path algebra
  return Algebra::path_algebra(Quiver({"0", "1"}, {}), f);
}

Algebra quaternions(const Field &f) {
  std::vector<Fel> st(64, f.zero());
  auto set = [&](int a, int b, int c, long s) {
    st[(a * 4 + b) * 4 + c] = f.from_long(s);
  };
  set(0, 0, 0, 1); set(0, 1, 1, 1); set(0, 2, 2, 1); set(0, 3, 3, 1);
  set(1, 0, 1, 1); set(1, 1, 0, -1); set(1, 2, 3, 1); set(1, 3, 2, -1);
  set(2, 0, 2, 1); set(2, 1, 3, -1); set(2, 2, 0, -1); set(2, 3, 1, 1);
  set(3, 0, 3, 1); set(3, 1, 2, 1); set(3, 2, 1, -1); set(3, 3, 0, -1);
  return Algebra(f, {"1", "i", "j", "k"}, st,
                 {f.one(), f.zero(), f.zero(), f.zero()},
                 {{f.zero(), f.one(), f.zero(), f.zero()},
                  {f.zero(), f.zero(), f.one(), f.zero()}});
}

Algebra mat2(const Field &f) {
  // 2x2 matrix algebra on E11, E12, E21, E22 with Eab * Ecd = [b=c] Ead
  std::vector<Fel> st(64, f.zero());
  auto idx = [](int a, int b) { return a * 2 + b; };
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d)
          if (b == c)
            st[(idx(a, b) * 4 + idx(c, d)) * 4 + idx(a, d)] = f.one();
  std::vector<Fel> unit(4, f.zero());
  unit[idx(0, 0)] = f.one();
  unit[idx(1, 1)] = f.one();
  return Algebra(f, {"E11", "E12", "E21", "E22"}, st, unit);
}

} // namespace

TEST_CASE("path algebra dimensions") {
  Field F = Field::rationals();
  CHECK(Algebra::path_algebra(Quiver({"v"}, {}), F).dim() == 1);
  CHECK(Algebra::path_algebra(Quiver({"1", "2"}, {{"a", 0, 1}}), F).dim() == 3);
  CHECK(Algebra::path_algebra(
            Quiver({"0", "1", "2"}, {{"a", 0, 1}, {"b", 0, 2}}), F)
            .dim() == 5);
  // A3 line 0 -> 1 -> 2 has paths e0, e1, e2, a, b, ab
  CHECK(Algebra::path_algebra(
            Quiver({"0", "1", "2"}, {{"a", 0, 1}, {"b", 1, 2}}), F)
            .dim() == 6);
}

TEST_CASE("cyclic quivers are rejected and the message names the cycle") {
  Field F = Field::rationals();
  try {
    Algebra::path_algebra(
        Quiver({"x", "y"}, {{"a", 0, 1}, {"b", 1, 0}}), F);
    FAIL("expected AlgebraError");
  } catch (const AlgebraError &e) {
    std::string msg = e.what();
    CHECK(msg.find("x") != std::string::npos);
    CHECK(msg.find("y") != std::string::npos);
  }
}

TEST_CASE("path composition convention: e1*a = a, a*e1 = 0") {
  Field F = Field::rationals();
  Algebra A = Algebra::path_algebra(Quiver({"1", "2"}, {{"a", 0, 1}}), F);
  // basis order: e_1, e_2, a
  std::vector<Fel> e1 = A.basis_vector(0), e2 = A.basis_vector(1),
                   a = A.basis_vector(2);
  CHECK(A.multiply(e1, a) == a);
  CHECK(A.multiply(a, e1) == std::vector<Fel>(3, F.zero()));
  CHECK(A.multiply(a, e2) == a);
  CHECK(A.multiply(e2, a) == std::vector<Fel>(3, F.zero()));
  CHECK(A.multiply(A.unit(), a) == a);
}

TEST_CASE("validation rejects 100 perturbed structure tables") {
  Field F = Field::rationals();
  Algebra good = quaternions(F);
  std::mt19937_64 rng(2024);
  int rejected = 0;
  for (int t = 0; t < 100; ++t) {
    std::vector<Fel> st = good.structure();
    size_t pos = rng() % st.size();
    st[pos] = F.add(st[pos], F.from_long(1 + static_cast<long>(rng() % 3)));
    try {
      Algebra bad(F, good.basis_labels(), st, good.unit());
      (void)bad;
    } catch (const AlgebraError &) {
      ++rejected;
    }
  }
  CHECK(rejected == 100);
}

TEST_CASE("radical of semisimple algebras vanishes; arrows span the radical") {
  Field F = Field::rationals();
  CHECK(radical(kxk(F)).dim() == 0);
  CHECK(radical(quaternions(F)).dim() == 0);
  CHECK(radical(mat2(F)).dim() == 0);
  Algebra A2 = Algebra::path_algebra(Quiver({"1", "2"}, {{"a", 0, 1}}), F);
  Subspace r = radical(A2);
  CHECK(r.dim() == 1);
  CHECK(r.contains(A2.basis_vector(2)));
  // quotient by the radical is the split semisimple k x k
  QuotientResult q = quotient(A2, r);
  CHECK(q.algebra.dim() == 2);
  CHECK(radical(q.algebra).dim() == 0);
}

TEST_CASE("certified radical works in small characteristic") {
  // F5 with a 6-dimensional algebra: p < dim, the trace-form radical is
  // still certified via nilpotency + nondegenerate quotient form
  Field F = Field::prime(5);
  Algebra A3 = Algebra::path_algebra(
      Quiver({"0", "1", "2"}, {{"a", 0, 1}, {"b", 1, 2}}), F);
  CHECK(A3.dim() == 6);
  CHECK(radical(A3).dim() == 3); // a, b, ab
}

TEST_CASE("center of the 2x2 matrix algebra is the scalars") {
  Field F = Field::rationals();
  CenterResult c = center(mat2(F));
  CHECK(c.subspace.dim() == 1);
  CHECK(c.subspace.contains(mat2(F).unit()));
}

TEST_CASE("minimal polynomials") {
  Field F = Field::rationals();
  Algebra A = kxk(F);
  // idempotent e0: x^2 - x
  Poly m = min_poly(A, A.basis_vector(0));
  CHECK(m == Poly(F, {F.zero(), F.from_long(-1), F.one()}));
  CHECK(eval_poly(A, m, A.basis_vector(0)) ==
        std::vector<Fel>(2, F.zero()));
  // i in the quaternions: x^2 + 1
  Algebra H = quaternions(F);
  CHECK(min_poly(H, H.basis_vector(1)) ==
        Poly(F, {F.one(), F.zero(), F.one()}));
}

TEST_CASE("split_commutative on k x k") {
  Field F = Field::rationals();
  SplitResult s = split_commutative(kxk(F), 1);
  REQUIRE(s.idempotents.size() == 2);
  CHECK(s.certified);
  Algebra A = kxk(F);
  std::vector<Fel> sum(2, F.zero());
  for (const auto &e : s.idempotents) {
    CHECK(A.multiply(e, e) == e);
    for (int k = 0; k < 2; ++k)
      sum[k] = F.add(sum[k], e[k]);
  }
  CHECK(sum == A.unit());
}

TEST_CASE("division algebra certification") {
  Field Q = Field::rationals();
  // rational quaternions: certified division via pure quaternion squares
  DivisionReport h = is_division_algebra(quaternions(Q), 1);
  CHECK(h.status == DivisionStatus::Yes);
  // 2x2 matrices: zero divisor witness
  DivisionReport m = is_division_algebra(mat2(Q), 1);
  REQUIRE(m.status == DivisionStatus::No);
  Algebra M = mat2(Q);
  CHECK(M.multiply(m.witness_x, m.witness_y) ==
        std::vector<Fel>(4, Q.zero()));
  // k x k: zero divisor
  CHECK(is_division_algebra(kxk(Q), 1).status == DivisionStatus::No);
  // Q[x]/(x^2+1) = Q(i), a field: structure table of a 2-dim field ext
  std::vector<Fel> st{Q.one(),  Q.zero(), Q.zero(), Q.one(),
                      Q.zero(), Q.one(),  Q.from_long(-1), Q.zero()};
  Algebra Qi(Q, {"1", "i"}, st, {Q.one(), Q.zero()});
  CHECK(is_division_algebra(Qi, 1).status == DivisionStatus::Yes);
  // finite fields are decided exactly (Wedderburn)
  Field F7 = Field::prime(7);
  CHECK(is_division_algebra(kxk(F7), 1).status == DivisionStatus::No);
}

TEST_CASE("quaternions over F_p split (no finite division rings)") {
  Field F = Field::prime(13);
  DivisionReport r = is_division_algebra(quaternions(F), 3);
  REQUIRE(r.status == DivisionStatus::No);
  Algebra H = quaternions(F);
  CHECK(H.multiply(r.witness_x, r.witness_y) ==
        std::vector<Fel>(4, F.zero()));
}

TEST_CASE("idempotent lifting along the radical") {
  Field F = Field::rationals();
  Algebra A2 = Algebra::path_algebra(Quiver({"1", "2"}, {{"a", 0, 1}}), F);
  Subspace r = radical(A2);
  // e_1 + a is idempotent modulo rad but not on the nose equal to e_1
  std::vector<Fel> ebar{F.one(), F.zero(), F.one()};
  std::vector<Fel> e = lift_idempotent(A2, ebar, r);
  CHECK(A2.multiply(e, e) == e);
  // difference to ebar lies in the radical
  std::vector<Fel> d(3);
  for (int k = 0; k < 3; ++k)
    d[k] = F.sub(e[k], ebar[k]);
  CHECK(r.contains(d));
}

TEST_CASE("proper idempotents exist exactly in non-division semisimples") {
  Field F = Field::rationals();
  CHECK(proper_idempotent(kxk(F), 1).has_value());
  CHECK(!proper_idempotent(quaternions(F), 1).has_value());
  auto e = proper_idempotent(mat2(F), 1);
  REQUIRE(e.has_value());
  Algebra M = mat2(F);
  CHECK(M.multiply(*e, *e) == *e);
  CHECK(*e != M.unit());
}

TEST_CASE("algebra on a subspace: the corner e A e") {
  Field F = Field::rationals();
  Algebra A = mat2(F);
  // corner at E11: span {E11}
  Matrix basis(F, 1, 4);
  basis.at(0, 0) = F.one();
  Algebra corner = algebra_on_subspace(A, basis, A.basis_vector(0));
  CHECK(corner.dim() == 1);
  CHECK(is_division_algebra(corner, 0).status == DivisionStatus::Yes);
}
