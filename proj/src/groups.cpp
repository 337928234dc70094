#include "skewlab/groups.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace skewlab {

Perm perm_identity(int degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm perm_compose(const Perm &a, const Perm &b) {
  if (a.size() != b.size())
    throw std::invalid_argument("permutation degree mismatch");
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    r[i] = b[a[i]];
  return r;
}

Perm perm_inverse(const Perm &a) {
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    r[a[i]] = static_cast<int>(i);
  return r;
}

bool perm_valid(const Perm &a) {
  std::vector<bool> seen(a.size(), false);
  for (int x : a) {
    if (x < 0 || x >= static_cast<int>(a.size()) || seen[x])
      return false;
    seen[x] = true;
  }
  return true;
}

std::string perm_to_string(const Perm &p) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < p.size(); ++i)
    os << (i ? " " : "") << p[i];
  os << "]";
  return os.str();
}

FiniteGroup FiniteGroup::from_generators(int degree,
                                         std::vector<Perm> generators,
                                         int order_bound) {
  if (degree < 1)
    throw std::invalid_argument("group degree must be positive");
  for (const Perm &g : generators) {
    if (static_cast<int>(g.size()) != degree || !perm_valid(g))
      throw std::invalid_argument("invalid generator permutation");
  }
  FiniteGroup G;
  G.degree_ = degree;
  Perm id = perm_identity(degree);
  G.elements_.push_back(id);
  G.index_[id] = 0;
  // BFS closure under right multiplication by generators
  for (size_t head = 0; head < G.elements_.size(); ++head) {
    for (const Perm &g : generators) {
      Perm next = perm_compose(G.elements_[head], g);
      if (G.index_.count(next))
        continue;
      if (static_cast<int>(G.elements_.size()) >= order_bound)
        throw std::runtime_error("group order bound " +
                                 std::to_string(order_bound) + " exceeded");
      G.index_[next] = static_cast<int>(G.elements_.size());
      G.elements_.push_back(std::move(next));
    }
  }
  int n = G.order();
  G.mult_.resize(static_cast<size_t>(n) * n);
  G.inv_.resize(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      G.mult_[i * n + j] = G.index_.at(perm_compose(G.elements_[i], G.elements_[j]));
    G.inv_[i] = G.index_.at(perm_inverse(G.elements_[i]));
  }
  G.identity_ = 0;
  for (const Perm &g : generators)
    G.gen_indices_.push_back(G.index_.at(g));
  if (G.gen_indices_.empty())
    G.gen_indices_.push_back(G.identity_);
  return G;
}

FiniteGroup FiniteGroup::trivial() { return from_generators(1, {}); }

FiniteGroup FiniteGroup::symmetric(int n, int order_bound) {
  if (n <= 1)
    return trivial();
  Perm cycle(n), swap01 = perm_identity(n);
  for (int i = 0; i < n; ++i)
    cycle[i] = (i + 1) % n;
  std::swap(swap01[0], swap01[1]);
  std::vector<Perm> gens{cycle};
  if (n > 2)
    gens.push_back(swap01);
  return from_generators(n, gens, order_bound);
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n <= 1)
    return trivial();
  Perm cycle(n);
  for (int i = 0; i < n; ++i)
    cycle[i] = (i + 1) % n;
  return from_generators(n, {cycle});
}

int FiniteGroup::index_of(const Perm &p) const {
  auto it = index_.find(p);
  if (it == index_.end())
    throw std::invalid_argument("permutation not in group");
  return it->second;
}

GroupAction::GroupAction(const FiniteGroup &g,
                         std::vector<std::vector<int>> images)
    : group_(&g), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != g.order())
    throw std::invalid_argument("action needs one image row per group element");
  npoints_ = images_.empty() ? 0 : static_cast<int>(images_[0].size());
  for (const auto &row : images_)
    if (static_cast<int>(row.size()) != npoints_ || !perm_valid(row))
      throw std::invalid_argument("action rows must be permutations");
  // right-action law: x.(gh) = (x.g).h
  for (int i = 0; i < g.order(); ++i)
    for (int j = 0; j < g.order(); ++j) {
      int ij = g.mult(i, j);
      for (int x = 0; x < npoints_; ++x)
        if (images_[ij][x] != images_[j][images_[i][x]])
          throw std::invalid_argument("action is not a homomorphism");
    }
}

GroupAction GroupAction::natural(const FiniteGroup &g) {
  std::vector<std::vector<int>> images;
  images.reserve(g.order());
  for (int i = 0; i < g.order(); ++i)
    images.push_back(g.element(i));
  return GroupAction(g, std::move(images));
}

Subgroup::Subgroup(const FiniteGroup &parent, std::vector<int> member_indices)
    : parent_(&parent), members_(std::move(member_indices)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  member_mask_.assign(parent.order(), false);
  for (int m : members_) {
    if (m < 0 || m >= parent.order())
      throw std::invalid_argument("subgroup member out of range");
    member_mask_[m] = true;
  }
  if (members_.empty() || !member_mask_[parent.identity()])
    throw std::invalid_argument("subgroup must contain the identity");
  for (int a : members_) {
    if (!member_mask_[parent.inverse(a)])
      throw std::invalid_argument("subgroup not closed under inverses");
    for (int b : members_)
      if (!member_mask_[parent.mult(a, b)])
        throw std::invalid_argument("subgroup not closed under products");
  }
  if (parent.order() % order() != 0)
    throw std::logic_error("Lagrange violation");
  // right cosets H\G: scan elements, mark H*g
  right_coset_of_.assign(parent.order(), -1);
  for (int g = 0; g < parent.order(); ++g) {
    if (right_coset_of_[g] >= 0)
      continue;
    int rep = g;
    int idx = static_cast<int>(right_reps_.size());
    right_reps_.push_back(rep);
    for (int h : members_)
      right_coset_of_[parent.mult(h, rep)] = idx;
  }
  for (int g = 0; g < parent.order(); ++g) {
    bool fresh = true;
    for (int h : members_)
      for (int r : left_reps_)
        if (parent.mult(r, h) == g)
          fresh = false;
    if (fresh)
      left_reps_.push_back(g);
  }
}

bool Subgroup::contains(int g) const {
  return g >= 0 && g < parent_->order() && member_mask_[g];
}

void Subgroup::right_decompose(int g, int &h, int &rep_index) const {
  rep_index = right_coset_of_[g];
  int rep = right_reps_[rep_index];
  h = parent_->mult(g, parent_->inverse(rep));
  if (!member_mask_[h])
    throw std::logic_error("coset decomposition failure");
}

FiniteGroup Subgroup::as_group(std::vector<int> &to_parent) const {
  std::vector<Perm> gens;
  for (int m : members_)
    gens.push_back(parent_->element(m));
  FiniteGroup H = FiniteGroup::from_generators(parent_->degree(), gens,
                                               parent_->order() + 1);
  to_parent.assign(H.order(), -1);
  for (int i = 0; i < H.order(); ++i)
    to_parent[i] = parent_->index_of(H.element(i));
  return H;
}

Subgroup stabilizer(const GroupAction &action, int point) {
  if (point < 0 || point >= action.npoints())
    throw std::invalid_argument("stabilizer point out of range");
  std::vector<int> members;
  for (int g = 0; g < action.group().order(); ++g)
    if (action.apply(point, g) == point)
      members.push_back(g);
  return Subgroup(action.group(), std::move(members));
}

std::vector<std::vector<int>> orbits(const GroupAction &action) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(action.npoints(), false);
  for (int x = 0; x < action.npoints(); ++x) {
    if (seen[x])
      continue;
    std::vector<int> orbit;
    for (int g = 0; g < action.group().order(); ++g) {
      int y = action.apply(x, g);
      if (!seen[y]) {
        seen[y] = true;
        orbit.push_back(y);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

} // namespace skewlab
