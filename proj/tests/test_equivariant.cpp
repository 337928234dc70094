#include "skewlab/equivariant.hpp"

#include <doctest.h>
#include <random>

using namespace skewlab;

namespace {

struct C2Swap {
  AlgebraPtr algebra;
  GroupPtr group;
  ActionPtr action;
};

C2Swap c2_on_kxk(const Field &f) {
  auto A = std::make_shared<Algebra>(
      Algebra::path_algebra(Quiver({"0", "1"}, {}), f));
  auto G = std::make_shared<FiniteGroup>(FiniteGroup::cyclic(2));
  auto act = std::make_shared<const AlgebraAction>(
      AlgebraAction::on_path_algebra(A, G, {{1, 0}}, {{}}));
  return {A, G, act};
}

} // namespace

TEST_CASE("skew group algebra of the swap action on k x k") {
  Field F = Field::rationals();
  C2Swap s = c2_on_kxk(F);
  SkewAlgebra sk = skew_algebra(s.action);
  CHECK(sk.algebra->dim() == 4);
  // (s, 1)(s, 1) = (e, 1): the group part squares to the identity
  std::vector<Fel> se(4, F.zero());
  se[sk.index(1, 0)] = F.one();
  se[sk.index(1, 1)] = F.one();
  CHECK(sk.algebra->multiply(se, se) == sk.algebra->unit());
  // (e,a)(s,1) = (s, a^s): the swap twists the algebra part
  std::vector<Fel> ea(4, F.zero()), expect(4, F.zero());
  ea[sk.index(0, 0)] = F.one(); // (e, e_0)
  expect[sk.index(1, 1)] = F.one(); // (s, e_1)
  CHECK(sk.algebra->multiply(ea, se) == expect);
}

TEST_CASE("trivial group: skew algebra echoes the algebra") {
  Field F = Field::rationals();
  auto A = std::make_shared<Algebra>(
      Algebra::path_algebra(Quiver({"1", "2"}, {{"a", 0, 1}}), F));
  auto G = std::make_shared<FiniteGroup>(FiniteGroup::trivial());
  auto act = std::make_shared<const AlgebraAction>(AlgebraAction::trivial(A, G));
  SkewAlgebra sk = skew_algebra(act);
  CHECK(sk.algebra->dim() == A->dim());
  CHECK(sk.algebra->structure() == A->structure());
}

TEST_CASE("to_skew_module / from_skew_module round trip") {
  Field F = Field::rationals();
  C2Swap s = c2_on_kxk(F);
  SkewAlgebra sk = skew_algebra(s.action);
  EquivariantModule canon = EquivariantModule::canonical(s.action);
  ModuleRep m = to_skew_module(sk, canon);
  EquivariantModule back = from_skew_module(sk, m);
  for (int i = 0; i < s.algebra->dim(); ++i)
    CHECK(back.underlying().basis_action(i) ==
          canon.underlying().basis_action(i));
  for (int g = 0; g < s.group->order(); ++g)
    CHECK(back.lin(g) == canon.lin(g));
}

TEST_CASE("dictionary: equivariant homs equal skew module homs, 50 pairs") {
  Field F = Field::rationals();
  C2Swap s = c2_on_kxk(F);
  SkewAlgebra sk = skew_algebra(s.action);
  EquivariantModule canon = EquivariantModule::canonical(s.action);
  // pool of equivariant modules: rho (x) canonical for every irreducible
  // rho of C2, induced modules from the trivial subgroup, and the regular mix
  std::vector<EquivariantModule> pool;
  auto irrs = irreducible_reps(*s.group, F, 1);
  for (const auto &ir : irrs)
    pool.push_back(tensor_rep_module(ir.rep, canon));
  pool.push_back(canon);
  Subgroup triv(*s.group, {s.group->identity()});
  RestrictedModule res = restrict_to(canon, triv);
  pool.push_back(induce(s.action, triv, res.module, res.to_parent));
  GroupRep reg = GroupRep::regular(*s.group, F);
  pool.push_back(tensor_rep_module(reg, canon));
  std::mt19937_64 rng(77);
  int checked = 0;
  while (checked < 50) {
    const EquivariantModule &m = pool[rng() % pool.size()];
    const EquivariantModule &n = pool[rng() % pool.size()];
    size_t de = equivariant_hom(m, n).size();
    size_t ds = hom_space(to_skew_module(sk, m), to_skew_module(sk, n)).size();
    CHECK(de == ds);
    ++checked;
  }
}

TEST_CASE("induction is adjoint to restriction, both ways") {
  Field F = Field::rationals();
  C2Swap s = c2_on_kxk(F);
  EquivariantModule canon = EquivariantModule::canonical(s.action);
  auto irrs = irreducible_reps(*s.group, F, 1);
  EquivariantModule sgn = tensor_rep_module(irrs[1].rep, canon);
  Subgroup triv(*s.group, {s.group->identity()});
  for (const EquivariantModule *n : {&canon, &sgn}) {
    RestrictedModule resn = restrict_to(*n, triv);
    RestrictedModule resc = restrict_to(canon, triv);
    EquivariantModule ind = induce(s.action, triv, resc.module, resc.to_parent);
    // Hom_G(Ind M, N) = Hom_H(M, Res N)
    CHECK(equivariant_hom(ind, *n).size() ==
          equivariant_hom(resc.module, resn.module).size());
    // Hom_G(N, Ind M) = Hom_H(Res N, M)
    CHECK(equivariant_hom(*n, ind).size() ==
          equivariant_hom(resn.module, resc.module).size());
  }
}

TEST_CASE("Ind of Res is tensoring with the regular representation") {
  Field F = Field::rationals();
  C2Swap s = c2_on_kxk(F);
  SkewAlgebra sk = skew_algebra(s.action);
  EquivariantModule canon = EquivariantModule::canonical(s.action);
  auto irrs = irreducible_reps(*s.group, F, 1);
  Subgroup triv(*s.group, {s.group->identity()});
  GroupRep reg = GroupRep::regular(*s.group, F);
  EquivariantModule sgn = tensor_rep_module(irrs[1].rep, canon);
  for (const EquivariantModule *t : {&canon, &sgn}) {
    RestrictedModule res = restrict_to(*t, triv);
    EquivariantModule ind = induce(s.action, triv, res.module, res.to_parent);
    EquivariantModule tensored = tensor_rep_module(reg, *t);
    auto iso = iso_test(to_skew_module(sk, ind), to_skew_module(sk, tensored), 5);
    CHECK(iso.has_value());
  }
}

TEST_CASE("twists: identity, involution, and induction invariance") {
  Field F = Field::rationals();
  C2Swap s = c2_on_kxk(F);
  SkewAlgebra sk = skew_algebra(s.action);
  ModuleRep reg = ModuleRep::regular(s.algebra);
  ModuleRep te = twist_by_group_element(*s.action, reg, s.group->identity());
  for (int i = 0; i < s.algebra->dim(); ++i)
    CHECK(te.basis_action(i) == reg.basis_action(i));
  ModuleRep ts = twist_by_group_element(*s.action, reg, 1);
  ModuleRep tss = twist_by_group_element(*s.action, ts, 1);
  for (int i = 0; i < s.algebra->dim(); ++i)
    CHECK(tss.basis_action(i) == reg.basis_action(i));
  // Ind_1(M) and Ind_1(g_* M) are isomorphic
  Subgroup triv(*s.group, {s.group->identity()});
  EquivariantModule canon = EquivariantModule::canonical(s.action);
  RestrictedModule res = restrict_to(canon, triv);
  AlgebraAction::Restriction r = s.action->restricted(triv);
  EquivariantModule twisted(
      r.action, twist_by_group_element(*s.action, res.module.underlying(), 1),
      {Matrix::identity(F, 2)});
  EquivariantModule i1 = induce(s.action, triv, res.module, res.to_parent);
  EquivariantModule i2 = induce(s.action, triv, twisted, res.to_parent);
  CHECK(iso_test(to_skew_module(sk, i1), to_skew_module(sk, i2), 9).has_value());
}

TEST_CASE("end_of_induced: explicit isomorphism with the skew algebra") {
  Field F = Field::rationals();
  C2Swap s = c2_on_kxk(F);
  EquivariantModule canon = EquivariantModule::canonical(s.action);
  EndOfInduced e = end_of_induced(canon);
  CHECK(e.end_ind.algebra.dim() == 4); // |C2| * dim End(k x k)
  CHECK(e.skew_of_end.algebra->dim() == 4);
  CHECK(rank(e.iso) == 4);
  // trivial group: the isomorphism is a bijection on a dim-End basis
  auto A = std::make_shared<Algebra>(
      Algebra::path_algebra(Quiver({"1", "2"}, {{"a", 0, 1}}), F));
  auto G1 = std::make_shared<FiniteGroup>(FiniteGroup::trivial());
  auto act1 = std::make_shared<const AlgebraAction>(AlgebraAction::trivial(A, G1));
  EndOfInduced e1 = end_of_induced(EquivariantModule::canonical(act1));
  CHECK(e1.end_ind.algebra.dim() == A->dim());
  CHECK(rank(e1.iso) == A->dim());
}

TEST_CASE("equivariant module validation rejects broken linearisations") {
  Field F = Field::rationals();
  C2Swap s = c2_on_kxk(F);
  ModuleRep reg = ModuleRep::regular(s.algebra);
  // lambda_s = identity violates compatibility with the swap
  CHECK_THROWS(EquivariantModule(
      s.action, reg, {Matrix::identity(F, 2), Matrix::identity(F, 2)}));
}
