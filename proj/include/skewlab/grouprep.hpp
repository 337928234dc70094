#pragma once

#include "skewlab/groups.hpp"
#include "skewlab/modules.hpp"

namespace skewlab {

/// Group algebra k<G> on the basis of group elements;
/// generators = {1} and the group's generators.
Algebra group_algebra(const FiniteGroup &g, const Field &f);

/// Finite-dimensional representation of a group: one matrix per element in
/// the row convention, R(gh) = R(g) * R(h).
class GroupRep {
public:
  GroupRep(const FiniteGroup &g, std::vector<Matrix> mats,
           std::string name = "rho");

  static GroupRep trivial(const FiniteGroup &g, const Field &f);
  /// The regular representation (permutation matrices of right translation).
  static GroupRep regular(const FiniteGroup &g, const Field &f);
  /// Permutation representation of a right action.
  static GroupRep permutation(const GroupAction &action, const Field &f);

  const FiniteGroup &group() const { return *group_; }
  const Field &field() const { return mats_[0].field(); }
  int dim() const { return dim_; }
  const Matrix &mat(int g) const { return mats_[g]; }
  const std::string &name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  Fel character(int g) const { return trace(mats_[g]); }

  GroupRep tensor(const GroupRep &other) const;
  /// Restriction along a subgroup; `sub_group` must be the subgroup
  /// materialized by Subgroup::as_group with `to_parent`.
  GroupRep restricted(const FiniteGroup &sub_group,
                      const std::vector<int> &to_parent) const;

private:
  const FiniteGroup *group_;
  int dim_;
  std::vector<Matrix> mats_;
  std::string name_;
};

/// The representation as a module over the group algebra (basis-aligned).
ModuleRep rep_to_module(AlgebraPtr group_alg, const GroupRep &rep);
/// Inverse direction; the algebra must be a group algebra of `g`.
GroupRep module_to_rep(const FiniteGroup &g, const ModuleRep &m);

struct Irreducible {
  GroupRep rep;
  int multiplicity_in_regular;
  int end_dim; // dim of the endomorphism division algebra
};

/// Irreducible representations over the given field (char 0 or p > |G|,
/// so Maschke applies), obtained by decomposing the regular representation.
/// Sorted by (dim, end_dim); deterministic for a fixed seed.
std::vector<Irreducible> irreducible_reps(const FiniteGroup &g, const Field &f,
                                          std::uint64_t seed = 0);

/// dim Hom_G(a, b).
int hom_dim(const GroupRep &a, const GroupRep &b);

/// Multiplicities of each irreducible inside `rep`:
/// dim Hom(irr, rep) / end_dim(irr).
std::vector<int> decompose_against(const std::vector<Irreducible> &irrs,
                                   const GroupRep &rep);

} // namespace skewlab
