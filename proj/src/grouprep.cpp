#include "skewlab/grouprep.hpp"

#include <algorithm>

namespace skewlab {

Algebra group_algebra(const FiniteGroup &g, const Field &f) {
  int n = g.order();
  std::vector<Fel> structure(static_cast<size_t>(n) * n * n, f.zero());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      structure[(static_cast<size_t>(i) * n + j) * n + g.mult(i, j)] = f.one();
  std::vector<Fel> unit(n, f.zero());
  unit[g.identity()] = f.one();
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i)
    labels.push_back("g" + std::to_string(i));
  std::vector<std::vector<Fel>> gens;
  auto basis_vec = [&](int i) {
    std::vector<Fel> v(n, f.zero());
    v[i] = f.one();
    return v;
  };
  gens.push_back(basis_vec(g.identity()));
  for (int i : g.generator_indices())
    gens.push_back(basis_vec(i));
  return Algebra(f, std::move(labels), std::move(structure), std::move(unit),
                 std::move(gens));
}

GroupRep::GroupRep(const FiniteGroup &g, std::vector<Matrix> mats,
                   std::string name)
    : group_(&g), mats_(std::move(mats)), name_(std::move(name)) {
  if (static_cast<int>(mats_.size()) != g.order())
    throw ModuleError("representation needs one matrix per group element");
  dim_ = mats_[0].rows();
  for (const Matrix &m : mats_)
    if (m.rows() != dim_ || m.cols() != dim_)
      throw ModuleError("representation matrices must be square, equal size");
  if (!mats_[g.identity()].is_identity())
    throw ModuleError("identity must act as the identity matrix");
  for (int i = 0; i < g.order(); ++i)
    for (int j = 0; j < g.order(); ++j)
      if (matmul(mats_[i], mats_[j]) != mats_[g.mult(i, j)])
        throw ModuleError("representation law fails at (" + std::to_string(i) +
                          ", " + std::to_string(j) + ")");
}

GroupRep GroupRep::trivial(const FiniteGroup &g, const Field &f) {
  std::vector<Matrix> mats(g.order(), Matrix::identity(f, 1));
  return GroupRep(g, std::move(mats), "triv");
}

GroupRep GroupRep::regular(const FiniteGroup &g, const Field &f) {
  std::vector<Matrix> mats;
  for (int gi = 0; gi < g.order(); ++gi) {
    Matrix m(f, g.order(), g.order());
    for (int x = 0; x < g.order(); ++x)
      m.at(x, g.mult(x, gi)) = f.one();
    mats.push_back(std::move(m));
  }
  return GroupRep(g, std::move(mats), "reg");
}

GroupRep GroupRep::permutation(const GroupAction &action, const Field &f) {
  std::vector<Matrix> mats;
  for (int gi = 0; gi < action.group().order(); ++gi) {
    Matrix m(f, action.npoints(), action.npoints());
    for (int x = 0; x < action.npoints(); ++x)
      m.at(x, action.apply(x, gi)) = f.one();
    mats.push_back(std::move(m));
  }
  return GroupRep(action.group(), std::move(mats), "perm");
}

GroupRep GroupRep::tensor(const GroupRep &other) const {
  if (group_ != other.group_)
    throw ModuleError("tensor of representations of different groups");
  std::vector<Matrix> mats;
  for (int gi = 0; gi < group_->order(); ++gi)
    mats.push_back(kronecker(mats_[gi], other.mats_[gi]));
  return GroupRep(*group_, std::move(mats), name_ + "*" + other.name_);
}

GroupRep GroupRep::restricted(const FiniteGroup &sub_group,
                              const std::vector<int> &to_parent) const {
  std::vector<Matrix> mats;
  for (int i = 0; i < sub_group.order(); ++i)
    mats.push_back(mats_[to_parent[i]]);
  return GroupRep(sub_group, std::move(mats), name_ + "|H");
}

ModuleRep rep_to_module(AlgebraPtr group_alg, const GroupRep &rep) {
  if (group_alg->dim() != rep.group().order())
    throw ModuleError("group algebra / group size mismatch");
  std::vector<Matrix> acts;
  for (int i = 0; i < group_alg->dim(); ++i)
    acts.push_back(rep.mat(i));
  return ModuleRep(std::move(group_alg), std::move(acts), rep.name());
}

GroupRep module_to_rep(const FiniteGroup &g, const ModuleRep &m) {
  if (m.algebra().dim() != g.order())
    throw ModuleError("module is not over the group algebra of this group");
  std::vector<Matrix> mats;
  for (int i = 0; i < g.order(); ++i)
    mats.push_back(m.basis_action(i));
  return GroupRep(g, std::move(mats), m.name());
}

int hom_dim(const GroupRep &a, const GroupRep &b) {
  if (&a.group() != &b.group())
    throw ModuleError("hom_dim of representations of different groups");
  const Field &F = a.field();
  int da = a.dim(), db = b.dim();
  if (da == 0 || db == 0)
    return 0;
  const auto &gens = a.group().generator_indices();
  Matrix sys(F, static_cast<int>(gens.size()) * da * db, da * db);
  int row = 0;
  for (int g : gens) {
    const Matrix &A = a.mat(g);
    const Matrix &B = b.mat(g);
    for (int i = 0; i < da; ++i)
      for (int j = 0; j < db; ++j, ++row) {
        for (int k = 0; k < da; ++k)
          if (sgn(A.at(i, k)) != 0)
            sys.at(row, k * db + j) = F.add(sys.at(row, k * db + j), A.at(i, k));
        for (int l = 0; l < db; ++l)
          if (sgn(B.at(l, j)) != 0)
            sys.at(row, i * db + l) = F.sub(sys.at(row, i * db + l), B.at(l, j));
      }
  }
  return da * db - rank(sys);
}

std::vector<Irreducible> irreducible_reps(const FiniteGroup &g, const Field &f,
                                          std::uint64_t seed) {
  long p = f.characteristic();
  if (p != 0 && g.order() % p == 0)
    throw AlgebraError("characteristic divides the group order; "
                       "semisimple decomposition unavailable");
  auto ga = std::make_shared<Algebra>(group_algebra(g, f));
  ModuleRep reg = ModuleRep::regular(ga);
  std::vector<KrsFactor> krs = krs_decompose(reg, seed);
  std::vector<Irreducible> out;
  int idx = 0;
  for (KrsFactor &fac : krs) {
    GroupRep rep = module_to_rep(g, fac.module);
    int ed = hom_dim(rep, rep);
    rep.set_name("irr" + std::to_string(idx++));
    out.push_back({std::move(rep), fac.multiplicity, ed});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Irreducible &a, const Irreducible &b) {
                     if (a.rep.dim() != b.rep.dim())
                       return a.rep.dim() < b.rep.dim();
                     return a.end_dim < b.end_dim;
                   });
  for (size_t i = 0; i < out.size(); ++i)
    out[i].rep.set_name("irr" + std::to_string(i));
  // sanity: sum of dim * multiplicity = |G|
  int total = 0;
  for (const Irreducible &ir : out)
    total += ir.rep.dim() * ir.multiplicity_in_regular;
  if (total != g.order())
    throw AlgebraError("regular representation decomposition is inconsistent");
  return out;
}

std::vector<int> decompose_against(const std::vector<Irreducible> &irrs,
                                   const GroupRep &rep) {
  std::vector<int> mult;
  int total = 0;
  for (const Irreducible &ir : irrs) {
    int h = hom_dim(ir.rep, rep);
    if (h % ir.end_dim != 0)
      throw AlgebraError("hom dimension not divisible by End dimension");
    mult.push_back(h / ir.end_dim);
    total += mult.back() * ir.rep.dim();
  }
  if (total != rep.dim())
    throw AlgebraError("representation does not decompose against the "
                       "irreducible list");
  return mult;
}

} // namespace skewlab
