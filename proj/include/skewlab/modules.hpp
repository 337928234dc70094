#pragma once

#include "skewlab/algebra.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace skewlab {

struct ModuleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Finite-dimensional right module over an Algebra. The action of the i-th
/// algebra basis element is a matrix in the row convention (m |-> m * b_i),
/// so action(a*b) = action(a) * action(b).
class ModuleRep {
public:
  ModuleRep(AlgebraPtr algebra, std::vector<Matrix> basis_actions,
            std::string name = "M");

  /// The algebra as a right module over itself.
  static ModuleRep regular(AlgebraPtr algebra);
  /// Zero-dimensional module.
  static ModuleRep zero(AlgebraPtr algebra);
  /// e_v * A for a path algebra: the indecomposable projective at a vertex.
  static ModuleRep projective(AlgebraPtr algebra, int vertex);

  const Algebra &algebra() const { return *algebra_; }
  AlgebraPtr algebra_ptr() const { return algebra_; }
  const Field &field() const { return algebra_->field(); }
  int dim() const { return dim_; }
  const std::string &name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  const Matrix &basis_action(int i) const { return actions_[i]; }
  /// Action matrix of an arbitrary algebra element.
  Matrix action(const std::vector<Fel> &a) const;
  std::vector<Fel> apply(const std::vector<Fel> &m,
                         const std::vector<Fel> &a) const;

  /// Restriction of the action to a submodule given by a spanning set;
  /// throws if the span is not action-stable.
  ModuleRep submodule(const Matrix &span_rows, Matrix *inclusion = nullptr) const;
  /// Quotient by an action-stable subspace.
  ModuleRep quotient_by(const Subspace &sub, Matrix *projection = nullptr) const;

private:
  AlgebraPtr algebra_;
  int dim_;
  std::vector<Matrix> actions_;
  std::string name_;
};

ModuleRep direct_sum(const ModuleRep &m, const ModuleRep &n);
ModuleRep direct_sum(const std::vector<const ModuleRep *> &parts);

/// Basis of Hom_A(M, N) as dim(M) x dim(N) matrices (row convention).
/// The intertwiner conditions are imposed for the algebra's generator set,
/// which suffices because generators generate.
std::vector<Matrix> hom_space(const ModuleRep &m, const ModuleRep &n);

struct EndAlgebra {
  Algebra algebra;           // End_A(M) with product phi*psi = phi o psi
  std::vector<Matrix> basis; // aligned with the algebra basis
  /// Matrix of an element of the End algebra, from its coordinates.
  Matrix matrix_of(const std::vector<Fel> &coords) const;
  /// Coordinates of an endomorphism matrix; throws if not in the span.
  std::vector<Fel> coords_of(const Matrix &endo) const;
};

/// End_A(M). With phi*psi := "apply psi, then phi" the regular module
/// satisfies End_A(A) isomorphic to A (not the opposite algebra).
EndAlgebra end_algebra(const ModuleRep &m);

/// Module isomorphism test; returns an invertible intertwiner if one exists.
std::optional<Matrix> iso_test(const ModuleRep &m, const ModuleRep &n,
                               std::uint64_t seed = 0, int budget = 64);

bool is_indecomposable(const ModuleRep &m, std::uint64_t seed = 0,
                       int budget = 64);

struct KrsFactor {
  ModuleRep module;
  int multiplicity;
};

/// Krull-Remak-Schmidt decomposition into indecomposables with
/// multiplicities, grouped by isomorphism. Deterministic for a fixed seed;
/// the factor list is sorted by (dim, then End-algebra dim).
std::vector<KrsFactor> krs_decompose(const ModuleRep &m,
                                     std::uint64_t seed = 0, int budget = 64);

/// dim Ext^1_A(M, N) for a finite-dimensional algebra A of global
/// dimension <= 1 (checked for path algebras; trusted by the caller
/// otherwise, e.g. for skew algebras of hereditary algebras).
int ext1_dim(const ModuleRep &m, const ModuleRep &n);

/// Path-algebra-only cross-check of ext1_dim via the weight-space formula.
int ext1_dim_quiver(const ModuleRep &m, const ModuleRep &n);

} // namespace skewlab
