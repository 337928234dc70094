#pragma once

#include "skewlab/equivariant.hpp"

#include <optional>

namespace skewlab {

struct CheckItem {
  std::string name;
  bool pass;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckItem> items;
  bool ok() const {
    for (const auto &i : items)
      if (!i.pass)
        return false;
    return true;
  }
};

/// One G-orbit of quiver vertices with a chosen representative and its
/// stabilizer, listed in semi-orthogonal block order.
struct Block {
  std::vector<int> orbit;        // sorted vertex indices
  int representative;            // smallest member
  std::vector<int> stabilizer;   // parent-group element indices
};

/// Acyclic path algebra with a vertex-permuting action and an ordered list
/// of vertex orbits; the equivariant structures on the projectives P(i) are
/// derived from the action itself.
struct ExceptionalSetup {
  ActionPtr action;
  std::vector<Block> blocks;

  const Algebra &algebra() const { return action->algebra(); }
  const FiniteGroup &group() const { return action->group(); }
};

/// Builds the setup from an action on a path algebra. `block_order` lists
/// orbit representatives in the desired order; empty means orbits ordered by
/// smallest member. Throws if the action does not permute trivial paths or
/// preserve the arrow span.
ExceptionalSetup make_setup(ActionPtr action,
                            const std::vector<int> &block_order = {});

/// Vertex image table: vertex_action[g][v] = v.g on quiver vertices.
std::vector<std::vector<int>> vertex_action(const AlgebraAction &action);

ValidationReport validate_setup(const ExceptionalSetup &setup);

/// The canonical H_i-equivariant structure on P(i): lambda_h restricts the
/// algebra action to the paths out of the representative.
struct BlockProjective {
  std::shared_ptr<const AlgebraAction> h_action; // of H_i standalone
  std::vector<int> to_parent;
  EquivariantModule module; // underlying P(i)
};
BlockProjective block_projective(const ExceptionalSetup &setup, int block);

struct InducedObject {
  int block;
  int rho;          // index into the block's irreducible list
  std::string label;
  ModuleRep skew_module;
  int n;            // multiplicity n_{i,rho} = [G:H_i] m_{i,rho}
  int end_dim;      // dim End over the skew algebra
  std::string division; // "yes" / "probably" for End mod radical
};

struct InducedCollection {
  SkewAlgebra skew;
  /// Kept alive here: the irreducibles in `irrs` reference the stabilizer
  /// groups owned by these actions.
  std::vector<BlockProjective> block_data;
  std::vector<std::vector<Irreducible>> irrs; // per block, over H_i
  std::vector<InducedObject> objects;
  ModuleRep big;        // direct sum of the objects, multiplicity one
  EndAlgebra end_big;
  ValidationReport checks; // orthogonality and bookkeeping
};

InducedCollection induced_collection(const ExceptionalSetup &setup,
                                     std::uint64_t seed = 0);

struct BasicReductionReport {
  std::vector<KrsFactor> projectives; // iso classes with multiplicities
  ModuleRep rep_sum;                  // one representative per class
  EndAlgebra end;                     // A^b = End(rep_sum)
  std::vector<std::vector<int>> cartan; // dim Hom(P_i, P_j)
  const Algebra &basic() const { return end.algebra; }
};

BasicReductionReport basic_reduction(const Algebra &a, std::uint64_t seed = 0);

struct MainTheoremReport {
  bool verified = false;
  std::vector<CheckItem> items;
  InducedCollection collection;
  BasicReductionReport skew_basic;
  /// objects[k] is isomorphic to skew_basic.projectives[matching[k]].
  std::vector<int> matching;
  /// Row r: coordinates in skew_basic.basic's basis of the image of the
  /// r-th basis element of End(big) under the assembled isomorphism.
  Matrix iso;
  int dim_skew = 0, dim_end_big = 0, dim_basic = 0;
};

MainTheoremReport verify_main_theorem(const ExceptionalSetup &setup,
                                      std::uint64_t seed = 0);

/// Complete set of orthogonal primitive idempotents summing to 1.
std::vector<std::vector<Fel>> primitive_idempotents(const Algebra &a,
                                                    std::uint64_t seed = 0);

struct QuiverReport {
  int nvertices = 0;
  std::vector<int> vertex_end_dims;      // dim_k End(simple at vertex)
  std::vector<std::vector<int>> arrow_counts; // [u][v] = dim e_v (r/r^2) e_u
  std::optional<Quiver> quiver;          // assembled when acyclic
};

QuiverReport quiver_of_basic(const Algebra &b, std::uint64_t seed = 0);

struct DemonetReport {
  int vertices = 0;
  std::vector<int> irr_counts; // per block, |irr(Stab)|
  bool pass = false;
};

DemonetReport demonet_check(const ExceptionalSetup &setup,
                            const MainTheoremReport &main,
                            std::uint64_t seed = 0);

/// S_n acting on A^{(x)n} by permuting tensor factors, as an
/// ExceptionalSetup. Supported for arrowless path algebras (split
/// semisimple A), the case in which the tensor power is again a path
/// algebra. Blocks are orbits of vertex tuples in lexicographic order.
ExceptionalSetup wreath_build(AlgebraPtr a, int n, int size_budget = 4096);

} // namespace skewlab
