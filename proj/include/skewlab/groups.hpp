#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace skewlab {

/// Permutation of {0,...,deg-1} as an image table.
using Perm = std::vector<int>;

Perm perm_identity(int degree);
Perm perm_compose(const Perm &a, const Perm &b); // first a, then b
Perm perm_inverse(const Perm &a);
bool perm_valid(const Perm &a);

/// Finite group materialized from permutation generators: full element list,
/// multiplication table, inverses. Desk scale by design.
class FiniteGroup {
public:
  static FiniteGroup from_generators(int degree, std::vector<Perm> generators,
                                     int order_bound = 720);
  static FiniteGroup trivial();
  static FiniteGroup symmetric(int n, int order_bound = 720);
  static FiniteGroup cyclic(int n);

  int degree() const { return degree_; }
  int order() const { return static_cast<int>(elements_.size()); }
  int identity() const { return identity_; }
  const Perm &element(int i) const { return elements_[i]; }
  const std::vector<int> &generator_indices() const { return gen_indices_; }

  int mult(int i, int j) const { return mult_[i * order() + j]; } // first i, then j
  int inverse(int i) const { return inv_[i]; }
  int index_of(const Perm &p) const;

private:
  int degree_ = 1;
  std::vector<Perm> elements_;
  std::vector<int> mult_;
  std::vector<int> inv_;
  std::map<Perm, int> index_;
  std::vector<int> gen_indices_;
  int identity_ = 0;
};

/// Right action of a group on {0,...,npoints-1}: point -> point . g.
class GroupAction {
public:
  /// images[g][x] = x . g, one row per group element.
  GroupAction(const FiniteGroup &g, std::vector<std::vector<int>> images);
  /// Action by the permutations defining the group itself.
  static GroupAction natural(const FiniteGroup &g);

  const FiniteGroup &group() const { return *group_; }
  int npoints() const { return npoints_; }
  int apply(int point, int g) const { return images_[g][point]; }

private:
  const FiniteGroup *group_;
  int npoints_;
  std::vector<std::vector<int>> images_;
};

class Subgroup {
public:
  Subgroup(const FiniteGroup &parent, std::vector<int> member_indices);

  const FiniteGroup &parent() const { return *parent_; }
  const std::vector<int> &members() const { return members_; }
  int order() const { return static_cast<int>(members_.size()); }
  int index_in_parent() const { return parent_->order() / order(); }
  bool contains(int g) const;

  /// Representatives r of the right cosets H\G (G = union of H*r).
  const std::vector<int> &right_coset_reps() const { return right_reps_; }
  /// Representatives r of the left cosets G/H (G = union of r*H).
  const std::vector<int> &left_coset_reps() const { return left_reps_; }
  /// Index of the right coset containing g, plus the H-part: g = h * rep.
  void right_decompose(int g, int &h, int &rep_index) const;

  /// The subgroup as a standalone group (same permutation degree);
  /// to_parent maps its element indices back into the parent.
  FiniteGroup as_group(std::vector<int> &to_parent) const;

private:
  const FiniteGroup *parent_;
  std::vector<int> members_;
  std::vector<bool> member_mask_;
  std::vector<int> right_reps_, left_reps_;
  std::vector<int> right_coset_of_; // element -> index into right_reps_
};

Subgroup stabilizer(const GroupAction &action, int point);
/// Orbit partition; each orbit sorted, orbits ordered by smallest member.
std::vector<std::vector<int>> orbits(const GroupAction &action);

std::string perm_to_string(const Perm &p);

} // namespace skewlab
