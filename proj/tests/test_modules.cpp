#include "skewlab/modules.hpp"

#include <doctest.h>

using namespace skewlab;

namespace {

AlgebraPtr a2(const Field &f) {
  return std::make_shared<Algebra>(
      Algebra::path_algebra(Quiver({"1", "2"}, {{"a", 0, 1}}), f));
}

AlgebraPtr kxk(const Field &f) {
  return std::make_shared<Algebra>(
      Algebra::path_algebra(Quiver({"0", "1"}, {}), f));
}

// simple module at a vertex: P(v) / rad P(v)
ModuleRep simple_at(AlgebraPtr A, int v) {
  ModuleRep p = ModuleRep::projective(A, v);
  const Field &f = A->field();
  std::vector<std::vector<Fel>> span{std::vector<Fel>(p.dim(), f.zero())};
  const PathBasis &pb = A->path_basis();
  for (size_t i = 0; i < pb.paths.size(); ++i)
    if (!pb.paths[i].arrows.empty())
      for (int r = 0; r < p.dim(); ++r)
        span.push_back(p.basis_action(static_cast<int>(i)).row(r));
  ModuleRep s = p.quotient_by(Subspace::from_span(Matrix::from_rows(f, span)));
  s.set_name("S(" + pb.quiver.vertices()[v] + ")");
  return s;
}

} // namespace

TEST_CASE("projectives of the A2 quiver") {
  Field F = Field::rationals();
  AlgebraPtr A = a2(F);
  CHECK(ModuleRep::projective(A, 0).dim() == 2);
  CHECK(ModuleRep::projective(A, 1).dim() == 1);
  CHECK(ModuleRep::regular(A).dim() == 3);
}

TEST_CASE("hom spaces between projectives and simples") {
  Field F = Field::rationals();
  AlgebraPtr A = a2(F);
  ModuleRep P0 = ModuleRep::projective(A, 0), P1 = ModuleRep::projective(A, 1);
  // maps flow against the arrow: Hom(P(target), P(source)) is 1-dimensional
  CHECK(hom_space(P1, P0).size() == 1);
  CHECK(hom_space(P0, P1).empty());
  AlgebraPtr K = kxk(F);
  CHECK(hom_space(simple_at(K, 0), simple_at(K, 1)).empty());
  ModuleRep M = ModuleRep::regular(A);
  // identity is always there
  bool has_identity = false;
  for (const Matrix &h : hom_space(M, M))
    if (h.is_identity())
      has_identity = true;
  CHECK((has_identity || hom_space(M, M).size() >= 1));
}

TEST_CASE("end_algebra of the regular module recovers the algebra") {
  Field F = Field::rationals();
  for (AlgebraPtr A : {a2(F), kxk(F)}) {
    EndAlgebra E = end_algebra(ModuleRep::regular(A));
    CHECK(E.algebra.dim() == A->dim());
    CHECK(E.algebra.is_commutative() == A->is_commutative());
    ModuleRep reg_e = ModuleRep::regular(std::make_shared<Algebra>(E.algebra));
    ModuleRep reg_a = ModuleRep::regular(A);
    // End_A(A) = A, not the opposite algebra: the regular modules match
    CHECK(hom_space(reg_a, reg_a).size() == hom_space(reg_e, reg_e).size());
  }
}

TEST_CASE("end_algebra of a square has dimension 4 dim End(M)") {
  Field F = Field::rationals();
  AlgebraPtr A = a2(F);
  ModuleRep P0 = ModuleRep::projective(A, 0);
  int d = static_cast<int>(end_algebra(P0).algebra.dim());
  ModuleRep sq = direct_sum(P0, P0);
  CHECK(end_algebra(sq).algebra.dim() == 4 * d);
}

TEST_CASE("iso_test distinguishes modules") {
  Field F = Field::rationals();
  AlgebraPtr A = a2(F);
  ModuleRep P0 = ModuleRep::projective(A, 0), P1 = ModuleRep::projective(A, 1);
  CHECK(iso_test(P0, P0, 3).has_value());
  CHECK(!iso_test(P0, P1, 3).has_value());
  ModuleRep s0 = simple_at(A, 0);
  CHECK(!iso_test(s0, P1, 3).has_value()); // same dim, different action
  auto phi = iso_test(direct_sum(P0, P1), ModuleRep::regular(A), 3);
  REQUIRE(phi.has_value());
  CHECK(rank(*phi) == 3);
}

TEST_CASE("KRS of the regular module of the A2 algebra") {
  Field F = Field::rationals();
  AlgebraPtr A = a2(F);
  auto krs = krs_decompose(ModuleRep::regular(A), 0);
  REQUIRE(krs.size() == 2);
  CHECK(krs[0].module.dim() == 1);
  CHECK(krs[0].multiplicity == 1);
  CHECK(krs[1].module.dim() == 2);
  CHECK(krs[1].multiplicity == 1);
}

TEST_CASE("KRS is seed independent") {
  Field F = Field::rationals();
  AlgebraPtr A = a2(F);
  ModuleRep r1 = ModuleRep::regular(A), r2 = ModuleRep::regular(A);
  ModuleRep m = direct_sum(r1, r2);
  std::vector<std::pair<int, int>> reference;
  for (std::uint64_t seed : {0ull, 1ull, 7ull, 99ull}) {
    auto krs = krs_decompose(m, seed);
    std::vector<std::pair<int, int>> shape;
    for (const auto &f : krs)
      shape.push_back({f.module.dim(), f.multiplicity});
    if (reference.empty())
      reference = shape;
    CHECK(shape == reference);
  }
  REQUIRE(reference.size() == 2);
  CHECK(reference[0] == std::pair<int, int>{1, 2});
  CHECK(reference[1] == std::pair<int, int>{2, 2});
}

TEST_CASE("indecomposability") {
  Field F = Field::rationals();
  AlgebraPtr A = a2(F);
  CHECK(is_indecomposable(ModuleRep::projective(A, 0), 1));
  CHECK(is_indecomposable(simple_at(A, 0), 1));
  CHECK(!is_indecomposable(ModuleRep::regular(A), 1));
}

TEST_CASE("Ext1 oracles for the A2 quiver") {
  Field F = Field::rationals();
  AlgebraPtr A = a2(F);
  ModuleRep S0 = simple_at(A, 0), S1 = ModuleRep::projective(A, 1);
  CHECK(ext1_dim(S0, S1) == 1); // the arrow 0 -> 1
  CHECK(ext1_dim(S1, S0) == 0);
  CHECK(ext1_dim(S0, S0) == 0);
  // the quiver-weight formula agrees with the projective-presentation one
  for (const ModuleRep *m : {&S0, &S1})
    for (const ModuleRep *n : {&S0, &S1})
      CHECK(ext1_dim(*m, *n) == ext1_dim_quiver(*m, *n));
}

TEST_CASE("Ext1 vanishes on projectives") {
  Field F = Field::rationals();
  std::vector<AlgebraPtr> algebras{
      a2(F), std::make_shared<Algebra>(Algebra::path_algebra(
                 Quiver({"0", "1", "2"}, {{"a", 0, 1}, {"b", 0, 2}}), F))};
  for (AlgebraPtr A : algebras) {
    int nv = A->path_basis().quiver.nvertices();
    for (int v = 0; v < nv; ++v) {
      ModuleRep P = ModuleRep::projective(A, v);
      CHECK(ext1_dim(P, ModuleRep::regular(A)) == 0);
      for (int w = 0; w < nv; ++w)
        CHECK(ext1_dim(P, ModuleRep::projective(A, w)) == 0);
    }
  }
}

TEST_CASE("submodule and quotient bookkeeping") {
  Field F = Field::rationals();
  AlgebraPtr A = a2(F);
  ModuleRep reg = ModuleRep::regular(A);
  // the span of the arrow a is a submodule of dimension 1
  Matrix span(F, 1, 3);
  span.at(0, 2) = F.one();
  ModuleRep sub = reg.submodule(span);
  CHECK(sub.dim() == 1);
  ModuleRep quo = reg.quotient_by(Subspace::from_span(span));
  CHECK(quo.dim() == 2);
  // a non-stable span is rejected: e_1 alone is not a submodule
  Matrix bad(F, 1, 3);
  bad.at(0, 0) = F.one();
  CHECK_THROWS_AS(reg.submodule(bad), ModuleError);
}
