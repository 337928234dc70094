#pragma once

#include "skewlab/grouprep.hpp"

#include <map>
#include <memory>

namespace skewlab {

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Right action of a finite group on an algebra by automorphisms:
/// a |-> a^g, with matrices U_g in the row convention, so U_{gh} = U_g U_h.
class AlgebraAction {
public:
  AlgebraAction(AlgebraPtr algebra, GroupPtr group,
                std::vector<Matrix> per_element);

  static AlgebraAction trivial(AlgebraPtr algebra, GroupPtr group);
  /// Matrices for the group's generators (aligned with
  /// generator_indices()); the closure is computed and re-validated.
  static AlgebraAction from_generator_matrices(AlgebraPtr algebra,
                                               GroupPtr group,
                                               const std::vector<Matrix> &gens);
  /// Action on a path algebra from quiver automorphisms, one per group
  /// generator: vertex permutation, arrow permutation, and a sign per arrow
  /// (the image of arrow a is sign[a] times arrow arrow_perm[a]).
  static AlgebraAction
  on_path_algebra(AlgebraPtr path_alg, GroupPtr group,
                  const std::vector<Perm> &vertex_perms,
                  const std::vector<Perm> &arrow_perms,
                  const std::vector<std::vector<Fel>> &arrow_signs = {});

  const Algebra &algebra() const { return *algebra_; }
  AlgebraPtr algebra_ptr() const { return algebra_; }
  const FiniteGroup &group() const { return *group_; }
  GroupPtr group_ptr() const { return group_; }
  const Matrix &mat(int g) const { return mats_[g]; }
  std::vector<Fel> apply(const std::vector<Fel> &a, int g) const;

  struct Restriction {
    std::shared_ptr<const AlgebraAction> action; // of H as standalone group
    std::vector<int> to_parent; // H element index -> parent element index
  };
  Restriction restricted(const Subgroup &h) const;

private:
  AlgebraPtr algebra_;
  GroupPtr group_;
  std::vector<Matrix> mats_;
};

using ActionPtr = std::shared_ptr<const AlgebraAction>;

/// The skew group algebra G |x A with basis (g, a_i) at index g*dim(A)+i and
/// multiplication (g,a)(h,b) = (gh, a^h b).
struct SkewAlgebra {
  ActionPtr action;
  AlgebraPtr algebra; // the skew algebra itself

  int base_dim() const { return action->algebra().dim(); }
  int index(int g, int i) const { return g * base_dim() + i; }
  std::pair<int, int> unindex(int k) const {
    return {k / base_dim(), k % base_dim()};
  }
  /// Image of a under the embedding a |-> (e, a).
  std::vector<Fel> embed(const std::vector<Fel> &a) const;
};

SkewAlgebra skew_algebra(ActionPtr action);

/// A-module with a G-linearisation: invertible L_g with
/// L_{gh} = L_g L_h, L_e = 1, and M_a L_g = L_g M_{a^g}.
class EquivariantModule {
public:
  EquivariantModule(ActionPtr action, ModuleRep underlying,
                    std::vector<Matrix> lin);

  /// A over itself with lambda_g = U_g.
  static EquivariantModule canonical(ActionPtr action);

  const AlgebraAction &action() const { return *action_; }
  ActionPtr action_ptr() const { return action_; }
  const ModuleRep &underlying() const { return underlying_; }
  const Matrix &lin(int g) const { return lin_[g]; }
  int dim() const { return underlying_.dim(); }
  const Field &field() const { return underlying_.field(); }

private:
  ActionPtr action_;
  ModuleRep underlying_;
  std::vector<Matrix> lin_;
};

/// m . (g,a) := lambda_g(m) a.
ModuleRep to_skew_module(const SkewAlgebra &skew, const EquivariantModule &m);
/// lambda_g(m) := m . (g,1).
EquivariantModule from_skew_module(const SkewAlgebra &skew,
                                   const ModuleRep &n);

struct RestrictedModule {
  EquivariantModule module; // over the subgroup's standalone action
  std::vector<int> to_parent;
};
RestrictedModule restrict_to(const EquivariantModule &m, const Subgroup &h);

/// Ind_H^G(M) = coset-indexed direct sum of twists of M; `m` is equivariant
/// for the restricted action of `h` (materialized with `to_parent`).
EquivariantModule induce(ActionPtr g_action, const Subgroup &h,
                         const EquivariantModule &m,
                         const std::vector<int> &to_parent);

/// G-invariant homs: A-linear maps X with L^M_g X = X L^N_g. Coincides with
/// hom_space over the skew algebra after to_skew_module.
std::vector<Matrix> equivariant_hom(const EquivariantModule &m,
                                    const EquivariantModule &n);

/// g_*M: same space, action a |-> a^g precomposed.
ModuleRep twist_by_group_element(const AlgebraAction &action,
                                 const ModuleRep &m, int g);

/// rho (x) M: underlying A-module M^{dim rho}, linearisation rho_g (x) L_g.
EquivariantModule tensor_rep_module(const GroupRep &rho,
                                    const EquivariantModule &m);

struct EndOfInduced {
  EndAlgebra end_ind;      // End over the skew algebra of Ind_1^G(T)
  SkewAlgebra skew_of_end; // G |x End_A(T) for the conjugation action
  /// Row i: coordinates in end_ind's basis of the image of skew basis i.
  Matrix iso;
};

/// The explicit isomorphism End(Ind_1^G T) ~ G |x End_A(T), verified
/// bijective, multiplicative, and unital. Throws on failure.
EndOfInduced end_of_induced(const EquivariantModule &t);

} // namespace skewlab
