#include "skewlab/equivariant.hpp"

#include <algorithm>

namespace skewlab {

AlgebraAction::AlgebraAction(AlgebraPtr algebra, GroupPtr group,
                             std::vector<Matrix> per_element)
    : algebra_(std::move(algebra)), group_(std::move(group)),
      mats_(std::move(per_element)) {
  const Algebra &A = *algebra_;
  const FiniteGroup &G = *group_;
  const Field &F = A.field();
  if (static_cast<int>(mats_.size()) != G.order())
    throw AlgebraError("action needs one matrix per group element");
  for (const Matrix &m : mats_)
    if (m.rows() != A.dim() || m.cols() != A.dim())
      throw AlgebraError("action matrices must be dim(A) x dim(A)");
  if (!mats_[G.identity()].is_identity())
    throw AlgebraError("identity must act as the identity on the algebra");
  for (int i = 0; i < G.order(); ++i)
    for (int j = 0; j < G.order(); ++j)
      if (matmul(mats_[i], mats_[j]) != mats_[G.mult(i, j)])
        throw AlgebraError("action composition law fails");
  for (int g = 0; g < G.order(); ++g) {
    if (apply(A.unit(), g) != A.unit())
      throw AlgebraError("action does not fix the unit");
    for (int i = 0; i < A.dim(); ++i)
      for (int j = 0; j < A.dim(); ++j) {
        std::vector<Fel> lhs =
            apply(A.multiply(A.basis_vector(i), A.basis_vector(j)), g);
        std::vector<Fel> rhs = A.multiply(apply(A.basis_vector(i), g),
                                          apply(A.basis_vector(j), g));
        if (lhs != rhs)
          throw AlgebraError("action is not by algebra automorphisms");
      }
  }
  (void)F;
}

std::vector<Fel> AlgebraAction::apply(const std::vector<Fel> &a, int g) const {
  const Field &F = algebra_->field();
  const Matrix &U = mats_[g];
  std::vector<Fel> r(algebra_->dim(), F.zero());
  for (int i = 0; i < algebra_->dim(); ++i)
    if (sgn(a[i]) != 0)
      for (int j = 0; j < algebra_->dim(); ++j)
        r[j] = F.add(r[j], F.mul(a[i], U.at(i, j)));
  return r;
}

AlgebraAction AlgebraAction::trivial(AlgebraPtr algebra, GroupPtr group) {
  std::vector<Matrix> mats(group->order(),
                           Matrix::identity(algebra->field(), algebra->dim()));
  return AlgebraAction(std::move(algebra), std::move(group), std::move(mats));
}

AlgebraAction
AlgebraAction::from_generator_matrices(AlgebraPtr algebra, GroupPtr group,
                                       const std::vector<Matrix> &gens) {
  const FiniteGroup &G = *group;
  const auto &gidx = G.generator_indices();
  if (gens.size() != gidx.size())
    throw AlgebraError("need one action matrix per group generator");
  const Field &F = algebra->field();
  int n = G.order();
  std::vector<Matrix> mats(n, Matrix(F, 0, 0));
  std::vector<bool> known(n, false);
  mats[G.identity()] = Matrix::identity(F, algebra->dim());
  known[G.identity()] = true;
  // closure: U_{tg} = U_t U_g
  bool progress = true;
  while (progress) {
    progress = false;
    for (int t = 0; t < n; ++t) {
      if (!known[t])
        continue;
      for (size_t k = 0; k < gidx.size(); ++k) {
        int s = G.mult(t, gidx[k]);
        if (!known[s]) {
          mats[s] = matmul(mats[t], gens[k]);
          known[s] = true;
          progress = true;
        }
      }
    }
  }
  for (bool b : known)
    if (!b)
      throw AlgebraError("generators do not generate the group");
  return AlgebraAction(std::move(algebra), std::move(group), std::move(mats));
}

AlgebraAction AlgebraAction::on_path_algebra(
    AlgebraPtr path_alg, GroupPtr group, const std::vector<Perm> &vertex_perms,
    const std::vector<Perm> &arrow_perms,
    const std::vector<std::vector<Fel>> &arrow_signs) {
  const PathBasis &pb = path_alg->path_basis();
  const Quiver &q = pb.quiver;
  const Field &F = path_alg->field();
  size_t ngen = group->generator_indices().size();
  if (vertex_perms.size() != ngen || arrow_perms.size() != ngen)
    throw AlgebraError("need one quiver automorphism per group generator");
  std::map<std::pair<int, std::vector<int>>, int> index;
  for (size_t i = 0; i < pb.paths.size(); ++i)
    index[{pb.paths[i].source, pb.paths[i].arrows}] = static_cast<int>(i);
  std::vector<Matrix> gens;
  for (size_t k = 0; k < ngen; ++k) {
    const Perm &sv = vertex_perms[k];
    const Perm &sa = arrow_perms[k];
    if (static_cast<int>(sv.size()) != q.nvertices() || !perm_valid(sv) ||
        static_cast<int>(sa.size()) != q.narrows() || !perm_valid(sa))
      throw AlgebraError("invalid quiver automorphism data");
    for (int a = 0; a < q.narrows(); ++a)
      if (q.arrows()[sa[a]].source != sv[q.arrows()[a].source] ||
          q.arrows()[sa[a]].target != sv[q.arrows()[a].target])
        throw AlgebraError("vertex/arrow permutations are incompatible");
    Matrix m(F, path_alg->dim(), path_alg->dim());
    for (size_t p = 0; p < pb.paths.size(); ++p) {
      std::vector<int> img;
      Fel sign = F.one();
      for (int a : pb.paths[p].arrows) {
        img.push_back(sa[a]);
        if (!arrow_signs.empty())
          sign = F.mul(sign, arrow_signs[k][a]);
      }
      m.at(static_cast<int>(p), index.at({sv[pb.paths[p].source], img})) = sign;
    }
    gens.push_back(std::move(m));
  }
  return from_generator_matrices(std::move(path_alg), std::move(group), gens);
}

AlgebraAction::Restriction
AlgebraAction::restricted(const Subgroup &h) const {
  if (&h.parent() != group_.get())
    throw AlgebraError("subgroup of a different group");
  std::vector<int> to_parent;
  auto H = std::make_shared<FiniteGroup>(h.as_group(to_parent));
  std::vector<Matrix> mats;
  for (int i = 0; i < H->order(); ++i)
    mats.push_back(mats_[to_parent[i]]);
  auto act = std::make_shared<const AlgebraAction>(algebra_, std::move(H),
                                                   std::move(mats));
  return {std::move(act), std::move(to_parent)};
}

std::vector<Fel> SkewAlgebra::embed(const std::vector<Fel> &a) const {
  const Field &F = algebra->field();
  std::vector<Fel> v(algebra->dim(), F.zero());
  int e = action->group().identity();
  for (int i = 0; i < base_dim(); ++i)
    v[index(e, i)] = a[i];
  return v;
}

SkewAlgebra skew_algebra(ActionPtr action) {
  const Algebra &A = action->algebra();
  const FiniteGroup &G = action->group();
  const Field &F = A.field();
  int da = A.dim(), n = G.order(), d = n * da;
  auto idx = [da](int g, int i) { return g * da + i; };
  std::vector<Fel> structure(static_cast<size_t>(d) * d * d, F.zero());
  for (int g = 0; g < n; ++g)
    for (int i = 0; i < da; ++i) {
      for (int h = 0; h < n; ++h) {
        // (g, b_i) (h, b_j) = (gh, b_i^h b_j)
        std::vector<Fel> tw = action->apply(A.basis_vector(i), h);
        int gh = G.mult(g, h);
        for (int j = 0; j < da; ++j) {
          std::vector<Fel> prod = A.multiply(tw, A.basis_vector(j));
          for (int k = 0; k < da; ++k)
            structure[(static_cast<size_t>(idx(g, i)) * d + idx(h, j)) * d +
                      idx(gh, k)] = prod[k];
        }
      }
    }
  std::vector<Fel> unit(d, F.zero());
  for (int k = 0; k < da; ++k)
    unit[idx(G.identity(), k)] = A.unit()[k];
  std::vector<std::string> labels;
  for (int g = 0; g < n; ++g)
    for (int i = 0; i < da; ++i)
      labels.push_back("(g" + std::to_string(g) + "," + A.basis_labels()[i] +
                       ")");
  // generators: (e, a_gen) for algebra generators, (g_gen, 1) for the group
  std::vector<std::vector<Fel>> gens;
  int e = G.identity();
  for (const auto &ag : A.generators()) {
    std::vector<Fel> v(d, F.zero());
    for (int i = 0; i < da; ++i)
      v[idx(e, i)] = ag[i];
    gens.push_back(std::move(v));
  }
  for (int gg : G.generator_indices()) {
    std::vector<Fel> v(d, F.zero());
    for (int k = 0; k < da; ++k)
      v[idx(gg, k)] = A.unit()[k];
    gens.push_back(std::move(v));
  }
  auto alg = std::make_shared<Algebra>(F, std::move(labels),
                                       std::move(structure), std::move(unit),
                                       std::move(gens));
  return SkewAlgebra{std::move(action), std::move(alg)};
}

EquivariantModule::EquivariantModule(ActionPtr action, ModuleRep underlying,
                                     std::vector<Matrix> lin)
    : action_(std::move(action)), underlying_(std::move(underlying)),
      lin_(std::move(lin)) {
  const FiniteGroup &G = action_->group();
  const Algebra &A = action_->algebra();
  if (underlying_.algebra().structure() != A.structure())
    throw ModuleError("equivariant module must be over the acted-on algebra");
  if (static_cast<int>(lin_.size()) != G.order())
    throw ModuleError("one linearisation matrix per group element required");
  int d = underlying_.dim();
  for (const Matrix &l : lin_)
    if (l.rows() != d || l.cols() != d)
      throw ModuleError("linearisation matrices must be dim(M) x dim(M)");
  if (!lin_[G.identity()].is_identity())
    throw ModuleError("linearisation at the identity must be the identity");
  for (int i = 0; i < G.order(); ++i)
    for (int j = 0; j < G.order(); ++j)
      if (matmul(lin_[i], lin_[j]) != lin_[G.mult(i, j)])
        throw ModuleError("linearisation cocycle fails");
  // compatibility M_a L_g = L_g M_{a^g} on the algebra basis
  for (int g = 0; g < G.order(); ++g)
    for (int i = 0; i < A.dim(); ++i) {
      Matrix lhs = matmul(underlying_.basis_action(i), lin_[g]);
      Matrix rhs = matmul(
          lin_[g], underlying_.action(action_->apply(A.basis_vector(i), g)));
      if (lhs != rhs)
        throw ModuleError("linearisation incompatible with the action");
    }
}

EquivariantModule EquivariantModule::canonical(ActionPtr action) {
  ModuleRep reg = ModuleRep::regular(action->algebra_ptr());
  std::vector<Matrix> lin;
  for (int g = 0; g < action->group().order(); ++g)
    lin.push_back(action->mat(g));
  return EquivariantModule(std::move(action), std::move(reg), std::move(lin));
}

ModuleRep to_skew_module(const SkewAlgebra &skew, const EquivariantModule &m) {
  if (skew.action.get() != &m.action())
    throw ModuleError("skew algebra built from a different action");
  std::vector<Matrix> acts;
  int n = skew.action->group().order(), da = skew.base_dim();
  for (int g = 0; g < n; ++g)
    for (int i = 0; i < da; ++i)
      acts.push_back(matmul(m.lin(g), m.underlying().basis_action(i)));
  return ModuleRep(skew.algebra, std::move(acts), m.underlying().name());
}

EquivariantModule from_skew_module(const SkewAlgebra &skew,
                                   const ModuleRep &n) {
  if (n.algebra().structure() != skew.algebra->structure())
    throw ModuleError("module is not over this skew algebra");
  const FiniteGroup &G = skew.action->group();
  const Algebra &A = skew.action->algebra();
  const Field &F = A.field();
  int e = G.identity();
  std::vector<Matrix> acts;
  for (int i = 0; i < A.dim(); ++i)
    acts.push_back(n.basis_action(skew.index(e, i)));
  ModuleRep under(skew.action->algebra_ptr(), std::move(acts), n.name());
  std::vector<Matrix> lin;
  for (int g = 0; g < G.order(); ++g) {
    Matrix l(F, n.dim(), n.dim());
    for (int k = 0; k < A.dim(); ++k)
      if (sgn(A.unit()[k]) != 0)
        l = l + n.basis_action(skew.index(g, k)) * A.unit()[k];
    lin.push_back(std::move(l));
  }
  return EquivariantModule(skew.action, std::move(under), std::move(lin));
}

RestrictedModule restrict_to(const EquivariantModule &m, const Subgroup &h) {
  AlgebraAction::Restriction r = m.action().restricted(h);
  std::vector<Matrix> lin;
  for (int i = 0; i < r.action->group().order(); ++i)
    lin.push_back(m.lin(r.to_parent[i]));
  EquivariantModule out(r.action, m.underlying(), std::move(lin));
  return {std::move(out), std::move(r.to_parent)};
}

EquivariantModule induce(ActionPtr g_action, const Subgroup &h,
                         const EquivariantModule &m,
                         const std::vector<int> &to_parent) {
  const FiniteGroup &G = g_action->group();
  const FiniteGroup &H = m.action().group();
  if (&h.parent() != &G)
    throw ModuleError("subgroup of a different group");
  if (H.order() != h.order() ||
      static_cast<int>(to_parent.size()) != H.order())
    throw ModuleError("module is not over the restricted action of H");
  if (m.action().algebra().structure() != g_action->algebra().structure())
    throw ModuleError("actions on different algebras");
  std::vector<int> to_local(G.order(), -1);
  for (int i = 0; i < H.order(); ++i)
    to_local[to_parent[i]] = i;
  const Field &F = m.field();
  const Algebra &A = g_action->algebra();
  const std::vector<int> &reps = h.right_coset_reps();
  int r = static_cast<int>(reps.size()), dm = m.dim();
  int d = r * dm;
  // skew action of (g, b_i) on slot t: with rep_t * g = h * rep_{t'},
  // (x at t) . (g, a) = x . (h_local, a^{rep_{t'}^{-1}}) at t'
  auto block_action = [&](int g, const std::vector<Fel> &a) {
    Matrix big(F, d, d);
    for (int t = 0; t < r; ++t) {
      int hp = 0, tp = 0;
      h.right_decompose(G.mult(reps[t], g), hp, tp);
      int hl = to_local[hp];
      if (hl < 0)
        throw ModuleError("coset decomposition left the subgroup");
      std::vector<Fel> tw = g_action->apply(a, G.inverse(reps[tp]));
      Matrix blk = matmul(m.lin(hl), m.underlying().action(tw));
      for (int x = 0; x < dm; ++x)
        for (int y = 0; y < dm; ++y)
          big.at(t * dm + x, tp * dm + y) = blk.at(x, y);
    }
    return big;
  };
  std::vector<Matrix> acts;
  for (int i = 0; i < A.dim(); ++i)
    acts.push_back(block_action(G.identity(), A.basis_vector(i)));
  ModuleRep under(g_action->algebra_ptr(), std::move(acts),
                  "Ind(" + m.underlying().name() + ")");
  std::vector<Matrix> lin;
  for (int g = 0; g < G.order(); ++g)
    lin.push_back(block_action(g, A.unit()));
  return EquivariantModule(std::move(g_action), std::move(under),
                           std::move(lin));
}

std::vector<Matrix> equivariant_hom(const EquivariantModule &m,
                                    const EquivariantModule &n) {
  if (&m.action() != &n.action() &&
      (m.action().algebra().structure() != n.action().algebra().structure() ||
       m.action().group().order() != n.action().group().order()))
    throw ModuleError("equivariant_hom over different actions");
  const Field &F = m.field();
  int dm = m.dim(), dn = n.dim();
  if (dm == 0 || dn == 0)
    return {};
  // A-linearity on algebra generators, G-invariance on group generators:
  // act_M(a) X = X act_N(a) and L^M_g X = X L^N_g
  std::vector<std::pair<Matrix, Matrix>> conds;
  for (const auto &a : m.action().algebra().generators())
    conds.push_back({m.underlying().action(a), n.underlying().action(a)});
  for (int g : m.action().group().generator_indices())
    conds.push_back({m.lin(g), n.lin(g)});
  Matrix sys(F, static_cast<int>(conds.size()) * dm * dn, dm * dn);
  int row = 0;
  for (const auto &[A, B] : conds)
    for (int i = 0; i < dm; ++i)
      for (int j = 0; j < dn; ++j, ++row) {
        for (int k = 0; k < dm; ++k)
          if (sgn(A.at(i, k)) != 0)
            sys.at(row, k * dn + j) = F.add(sys.at(row, k * dn + j), A.at(i, k));
        for (int l = 0; l < dn; ++l)
          if (sgn(B.at(l, j)) != 0)
            sys.at(row, i * dn + l) = F.sub(sys.at(row, i * dn + l), B.at(l, j));
      }
  Matrix sols = kernel(sys);
  std::vector<Matrix> out;
  for (int s = 0; s < sols.rows(); ++s)
    out.push_back(Matrix::unvec(F, sols.row(s), dm, dn));
  return out;
}

ModuleRep twist_by_group_element(const AlgebraAction &action,
                                 const ModuleRep &m, int g) {
  const Algebra &A = action.algebra();
  if (m.algebra().structure() != A.structure())
    throw ModuleError("module is not over the acted-on algebra");
  std::vector<Matrix> acts;
  for (int i = 0; i < A.dim(); ++i)
    acts.push_back(m.action(action.apply(A.basis_vector(i), g)));
  return ModuleRep(m.algebra_ptr(), std::move(acts),
                   "g" + std::to_string(g) + "*" + m.name());
}

EquivariantModule tensor_rep_module(const GroupRep &rho,
                                    const EquivariantModule &m) {
  if (&rho.group() != &m.action().group())
    throw ModuleError("representation of a different group");
  const Field &F = m.field();
  Matrix id = Matrix::identity(F, rho.dim());
  std::vector<Matrix> acts;
  for (int i = 0; i < m.action().algebra().dim(); ++i)
    acts.push_back(kronecker(id, m.underlying().basis_action(i)));
  ModuleRep under(m.underlying().algebra_ptr(), std::move(acts),
                  rho.name() + "(x)" + m.underlying().name());
  std::vector<Matrix> lin;
  for (int g = 0; g < rho.group().order(); ++g)
    lin.push_back(kronecker(rho.mat(g), m.lin(g)));
  return EquivariantModule(m.action_ptr(), std::move(under), std::move(lin));
}

EndOfInduced end_of_induced(const EquivariantModule &t) {
  const FiniteGroup &G = t.action().group();
  const Field &F = t.field();
  // End over the skew algebra of Ind_1^G(T)
  Subgroup triv(G, {G.identity()});
  RestrictedModule r = restrict_to(t, triv);
  EquivariantModule ind = induce(t.action_ptr(), triv, r.module, r.to_parent);
  SkewAlgebra skew = skew_algebra(t.action_ptr());
  ModuleRep nmod = to_skew_module(skew, ind);
  EndAlgebra e1 = end_algebra(nmod);
  // G |x End_A(T) for the conjugation action phi^v = L_{v^-1} X L_{v^-1}^-1
  EndAlgebra et = end_algebra(t.underlying());
  int de = et.algebra.dim();
  if (e1.algebra.dim() != G.order() * de)
    throw ModuleError("End(Ind T) dimension mismatch with |G| dim End(T)");
  std::vector<Matrix> conj;
  for (int v = 0; v < G.order(); ++v) {
    const Matrix &L = t.lin(G.inverse(v));
    Matrix Linv = inverse(L);
    Matrix cm(F, de, de);
    for (int i = 0; i < de; ++i) {
      std::vector<Fel> c = et.coords_of(matmul(matmul(L, et.basis[i]), Linv));
      cm.set_row(i, c);
    }
    conj.push_back(std::move(cm));
  }
  auto et_alg = std::make_shared<Algebra>(et.algebra);
  auto gptr = std::make_shared<FiniteGroup>(G);
  auto conj_action = std::make_shared<const AlgebraAction>(et_alg, gptr, conj);
  SkewAlgebra skew_end = skew_algebra(conj_action);
  // the isomorphism on basis elements: (v, phi) acts on Ind by
  // (x at slot s) |-> x X_phi L_{v^-1} at slot v s
  int dt = t.dim(), dind = G.order() * dt;
  Matrix iso(F, skew_end.algebra->dim(), e1.algebra.dim());
  std::vector<std::vector<Fel>> images;
  for (int v = 0; v < G.order(); ++v) {
    Matrix xl(F, dt, dt); // placeholder
    const Matrix &Lvi = t.lin(G.inverse(v));
    for (int i = 0; i < de; ++i) {
      Matrix blk = matmul(et.basis[i], Lvi);
      Matrix theta(F, dind, dind);
      for (int s = 0; s < G.order(); ++s) {
        int sp = G.mult(v, s);
        for (int x = 0; x < dt; ++x)
          for (int y = 0; y < dt; ++y)
            theta.at(s * dt + x, sp * dt + y) = blk.at(x, y);
      }
      std::vector<Fel> c = e1.coords_of(theta);
      iso.set_row(skew_end.index(v, i), c);
      images.push_back(std::move(c));
    }
    (void)xl;
  }
  // verify: bijective, unital, multiplicative
  if (rank(iso) != iso.rows())
    throw ModuleError("end_of_induced map is not bijective");
  auto map_through = [&](const std::vector<Fel> &z) {
    std::vector<Fel> out(e1.algebra.dim(), F.zero());
    for (int k = 0; k < skew_end.algebra->dim(); ++k)
      if (sgn(z[k]) != 0)
        for (int l = 0; l < e1.algebra.dim(); ++l)
          out[l] = F.add(out[l], F.mul(z[k], iso.at(k, l)));
    return out;
  };
  if (map_through(skew_end.algebra->unit()) !=
      e1.coords_of(Matrix::identity(F, dind)))
    throw ModuleError("end_of_induced map is not unital");
  int dsk = skew_end.algebra->dim();
  for (int i = 0; i < dsk; ++i)
    for (int j = 0; j < dsk; ++j) {
      std::vector<Fel> prod = skew_end.algebra->multiply(
          skew_end.algebra->basis_vector(i), skew_end.algebra->basis_vector(j));
      std::vector<Fel> lhs = map_through(prod);
      std::vector<Fel> rhs = e1.algebra.multiply(map_through(
          skew_end.algebra->basis_vector(i)),
          map_through(skew_end.algebra->basis_vector(j)));
      if (lhs != rhs)
        throw ModuleError("end_of_induced map is not multiplicative");
    }
  return {std::move(e1), std::move(skew_end), std::move(iso)};
}

} // namespace skewlab
