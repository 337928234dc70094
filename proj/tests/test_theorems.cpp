#include "skewlab/theorems.hpp"

#include <doctest.h>

using namespace skewlab;

namespace {

ExceptionalSetup star(const Field &f, std::vector<int> block_order = {}) {
  Quiver q({"0", "1", "2"}, {{"a", 0, 1}, {"b", 0, 2}});
  auto A = std::make_shared<Algebra>(Algebra::path_algebra(q, f));
  auto G = std::make_shared<FiniteGroup>(FiniteGroup::cyclic(2));
  auto act = std::make_shared<const AlgebraAction>(
      AlgebraAction::on_path_algebra(A, G, {{0, 2, 1}}, {{1, 0}}));
  return make_setup(act, block_order);
}

ExceptionalSetup double_arrow(const Field &f) {
  Quiver q({"0", "1"}, {{"a", 0, 1}, {"b", 0, 1}});
  auto A = std::make_shared<Algebra>(Algebra::path_algebra(q, f));
  auto G = std::make_shared<FiniteGroup>(FiniteGroup::cyclic(2));
  auto act = std::make_shared<const AlgebraAction>(
      AlgebraAction::on_path_algebra(A, G, {{0, 1}}, {{1, 0}}));
  return make_setup(act);
}

std::vector<int> multiplicities(const MainTheoremReport &r) {
  std::vector<int> n;
  for (const auto &o : r.collection.objects)
    n.push_back(o.n);
  return n;
}

} // namespace

TEST_CASE("star setup: blocks, stabilizers, and validation") {
  ExceptionalSetup s = star(Field::rationals());
  REQUIRE(s.blocks.size() == 2);
  CHECK(s.blocks[0].orbit == std::vector<int>{0});
  CHECK(s.blocks[0].stabilizer.size() == 2);
  CHECK(s.blocks[1].orbit == std::vector<int>{1, 2});
  CHECK(s.blocks[1].stabilizer.size() == 1);
  CHECK(validate_setup(s).ok());
}

TEST_CASE("block order violating the path direction is reported") {
  // leaves first, center last: maps from the leaf block into the center
  // block exist, so semi-orthogonality must fail
  ExceptionalSetup bad = star(Field::rationals(), {1, 0});
  ValidationReport r = validate_setup(bad);
  CHECK(!r.ok());
  bool semi_failed = false;
  for (const auto &i : r.items)
    if (i.name == "between-block semi-orthogonality" && !i.pass)
      semi_failed = true;
  CHECK(semi_failed);
}

TEST_CASE("main theorem on the star quiver over Q") {
  MainTheoremReport r = verify_main_theorem(star(Field::rationals()), 1);
  CHECK(r.verified);
  CHECK(r.dim_skew == 10);
  CHECK(r.dim_end_big == 5);
  CHECK(r.dim_basic == 5);
  CHECK(multiplicities(r) == std::vector<int>{1, 1, 2});
}

TEST_CASE("main theorem on the star quiver over F5, F7, F13") {
  for (long p : {5L, 7L, 13L}) {
    MainTheoremReport r = verify_main_theorem(star(Field::prime(p)), 1);
    CHECK(r.verified);
    CHECK(r.dim_skew == 10);
    CHECK(r.dim_basic == 5);
    CHECK(multiplicities(r) == std::vector<int>{1, 1, 2});
  }
}

TEST_CASE("main theorem on the double arrow quiver") {
  MainTheoremReport r = verify_main_theorem(double_arrow(Field::rationals()), 1);
  CHECK(r.verified);
  CHECK(r.dim_skew == 8);
  CHECK(r.dim_basic == 8); // already basic: 4 distinct classes
  CHECK(multiplicities(r) == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("wreath example: S2 on (k x k) tensor (k x k)") {
  Field F = Field::rationals();
  auto kk = std::make_shared<Algebra>(
      Algebra::path_algebra(Quiver({"0", "1"}, {}), F));
  ExceptionalSetup w = wreath_build(kk, 2);
  REQUIRE(w.blocks.size() == 3);
  CHECK(w.algebra().dim() == 4);
  MainTheoremReport r = verify_main_theorem(w, 1);
  CHECK(r.verified);
  CHECK(r.dim_skew == 8);
  CHECK(r.dim_basic == 5);
  CHECK(multiplicities(r) == std::vector<int>{1, 1, 2, 1, 1});
  DemonetReport d = demonet_check(w, r, 1);
  CHECK(d.pass);
  CHECK(d.vertices == 5);
  CHECK(d.irr_counts == std::vector<int>{2, 1, 2});
}

TEST_CASE("wreath_build rejects oversized and unsupported inputs") {
  Field F = Field::rationals();
  auto kk = std::make_shared<Algebra>(
      Algebra::path_algebra(Quiver({"0", "1"}, {}), F));
  CHECK_THROWS_AS(wreath_build(kk, 2, 3), AlgebraError); // budget 3 < 4
  auto a2 = std::make_shared<Algebra>(
      Algebra::path_algebra(Quiver({"1", "2"}, {{"a", 0, 1}}), F));
  CHECK_THROWS_AS(wreath_build(a2, 2), AlgebraError); // arrows unsupported
}

TEST_CASE("basic reduction oracles") {
  Field F = Field::rationals();
  // a path algebra is already basic
  auto A2 = Algebra::path_algebra(Quiver({"1", "2"}, {{"a", 0, 1}}), F);
  BasicReductionReport r = basic_reduction(A2, 1);
  CHECK(r.basic().dim() == A2.dim());
  for (const auto &p : r.projectives)
    CHECK(p.multiplicity == 1);
  // C2 skew of k x k by the swap collapses to k
  auto kk = std::make_shared<Algebra>(
      Algebra::path_algebra(Quiver({"0", "1"}, {}), F));
  auto G = std::make_shared<FiniteGroup>(FiniteGroup::cyclic(2));
  auto act = std::make_shared<const AlgebraAction>(
      AlgebraAction::on_path_algebra(kk, G, {{1, 0}}, {{}}));
  SkewAlgebra sk = skew_algebra(act);
  BasicReductionReport rs = basic_reduction(*sk.algebra, 1);
  CHECK(rs.basic().dim() == 1);
  REQUIRE(rs.projectives.size() == 1);
  CHECK(rs.projectives[0].module.dim() == 2);
  CHECK(rs.projectives[0].multiplicity == 2);
}

TEST_CASE("basic reduction is idempotent") {
  Field F = Field::rationals();
  ExceptionalSetup s = star(F);
  SkewAlgebra sk = skew_algebra(s.action);
  BasicReductionReport r1 = basic_reduction(*sk.algebra, 1);
  BasicReductionReport r2 = basic_reduction(r1.basic(), 1);
  CHECK(r2.basic().dim() == r1.basic().dim());
  for (const auto &p : r2.projectives)
    CHECK(p.multiplicity == 1);
  CHECK(r2.cartan == r1.cartan);
}

TEST_CASE("primitive idempotents are complete and orthogonal") {
  Field F = Field::rationals();
  ExceptionalSetup s = star(F);
  SkewAlgebra sk = skew_algebra(s.action);
  BasicReductionReport r = basic_reduction(*sk.algebra, 1);
  auto idems = primitive_idempotents(r.basic(), 1);
  CHECK(idems.size() == 3); // one per simple of the basic algebra
}

TEST_CASE("quiver of the basic star skew algebra") {
  Field F = Field::rationals();
  MainTheoremReport r = verify_main_theorem(star(F), 1);
  QuiverReport q = quiver_of_basic(r.skew_basic.basic(), 1);
  CHECK(q.nvertices == 3);
  CHECK(q.vertex_end_dims == std::vector<int>{1, 1, 1});
  int arrows = 0;
  for (const auto &row : q.arrow_counts)
    for (int c : row)
      arrows += c;
  CHECK(arrows == 2);
  CHECK(q.quiver.has_value());
}

TEST_CASE("Demonet vertex counts: 3 = 2 + 1 and 4 = 2 + 2") {
  Field F = Field::rationals();
  {
    ExceptionalSetup s = star(F);
    MainTheoremReport r = verify_main_theorem(s, 1);
    DemonetReport d = demonet_check(s, r, 1);
    CHECK(d.pass);
    CHECK(d.vertices == 3);
    CHECK(d.irr_counts == std::vector<int>{2, 1});
  }
  {
    ExceptionalSetup s = double_arrow(F);
    MainTheoremReport r = verify_main_theorem(s, 1);
    DemonetReport d = demonet_check(s, r, 1);
    CHECK(d.pass);
    CHECK(d.vertices == 4);
    CHECK(d.irr_counts == std::vector<int>{2, 2});
  }
}

TEST_CASE("verification is seed independent") {
  Field F = Field::rationals();
  for (std::uint64_t seed : {0ull, 2ull, 17ull}) {
    MainTheoremReport r = verify_main_theorem(star(F), seed);
    CHECK(r.verified);
    CHECK(multiplicities(r) == std::vector<int>{1, 1, 2});
  }
}
