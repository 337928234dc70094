#include "skewlab/modules.hpp"

#include <algorithm>
#include <random>

namespace skewlab {

ModuleRep::ModuleRep(AlgebraPtr algebra, std::vector<Matrix> basis_actions,
                     std::string name)
    : algebra_(std::move(algebra)), actions_(std::move(basis_actions)),
      name_(std::move(name)) {
  const Algebra &A = *algebra_;
  if (static_cast<int>(actions_.size()) != A.dim())
    throw ModuleError("module needs one action matrix per algebra basis "
                      "element");
  dim_ = actions_.empty() ? 0 : actions_[0].rows();
  for (const Matrix &m : actions_)
    if (m.rows() != dim_ || m.cols() != dim_)
      throw ModuleError("action matrices must be square of equal size");
  if (dim_ == 0)
    return;
  // unit acts as the identity
  if (!action(A.unit()).is_identity())
    throw ModuleError("unit does not act as the identity");
  // compatibility with the structure table: act(b_i) act(b_j) = act(b_i b_j)
  const Field &F = A.field();
  bool ok = true;
  std::string offender;
#ifdef SKEWLAB_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) if (A.dim() >= 8)
#endif
  for (int i = 0; i < A.dim(); ++i) {
    if (!ok)
      continue;
    for (int j = 0; j < A.dim(); ++j) {
      Matrix lhs = matmul(actions_[i], actions_[j]);
      Matrix rhs(F, dim_, dim_);
      for (int k = 0; k < A.dim(); ++k)
        if (sgn(A.c(i, j, k)) != 0)
          rhs = rhs + actions_[k] * A.c(i, j, k);
      if (lhs != rhs) {
#ifdef SKEWLAB_HAVE_OPENMP
#pragma omp critical
#endif
        {
          ok = false;
          offender = "(" + A.basis_labels()[i] + ", " + A.basis_labels()[j] +
                     ")";
        }
      }
    }
  }
  if (!ok)
    throw ModuleError("action is not multiplicative at " + offender);
}

ModuleRep ModuleRep::regular(AlgebraPtr algebra) {
  std::vector<Matrix> acts;
  for (int i = 0; i < algebra->dim(); ++i)
    acts.push_back(algebra->right_mult(algebra->basis_vector(i)));
  return ModuleRep(algebra, std::move(acts), "A");
}

ModuleRep ModuleRep::zero(AlgebraPtr algebra) {
  std::vector<Matrix> acts(algebra->dim(),
                           Matrix(algebra->field(), 0, 0));
  return ModuleRep(algebra, std::move(acts), "0");
}

ModuleRep ModuleRep::projective(AlgebraPtr algebra, int vertex) {
  const PathBasis &pb = algebra->path_basis();
  if (vertex < 0 || vertex >= pb.quiver.nvertices())
    throw ModuleError("projective: vertex out of range");
  std::vector<std::vector<Fel>> span;
  for (size_t i = 0; i < pb.paths.size(); ++i)
    if (pb.paths[i].source == vertex)
      span.push_back(algebra->basis_vector(static_cast<int>(i)));
  ModuleRep reg = regular(algebra);
  ModuleRep p = reg.submodule(Matrix::from_rows(algebra->field(), span));
  p.set_name("P(" + pb.quiver.vertices()[vertex] + ")");
  return p;
}

Matrix ModuleRep::action(const std::vector<Fel> &a) const {
  const Field &F = field();
  Matrix m(F, dim_, dim_);
  for (int i = 0; i < algebra_->dim(); ++i)
    if (sgn(a[i]) != 0)
      m = m + actions_[i] * a[i];
  return m;
}

std::vector<Fel> ModuleRep::apply(const std::vector<Fel> &m,
                                  const std::vector<Fel> &a) const {
  Matrix act = action(a);
  const Field &F = field();
  std::vector<Fel> r(dim_, F.zero());
  for (int i = 0; i < dim_; ++i)
    if (sgn(m[i]) != 0)
      for (int j = 0; j < dim_; ++j)
        r[j] = F.add(r[j], F.mul(m[i], act.at(i, j)));
  return r;
}

ModuleRep ModuleRep::submodule(const Matrix &span_rows,
                               Matrix *inclusion) const {
  const Field &F = field();
  Subspace sub = Subspace::from_span(span_rows);
  int d = sub.dim();
  Matrix bt = sub.basis().transpose(); // dim_ x d
  std::vector<Matrix> acts;
  for (int i = 0; i < algebra_->dim(); ++i) {
    // rows of basis * action must lie in the span; express in coordinates
    Matrix img = matmul(sub.basis(), actions_[i]); // d x dim_
    SolveResult s = solve_all(bt, img.transpose());
    if (!s.consistent)
      throw ModuleError("span is not stable under the action");
    acts.push_back(s.particular.transpose()); // d x d
  }
  if (inclusion)
    *inclusion = sub.basis();
  return ModuleRep(algebra_, std::move(acts), name_ + "'");
}

ModuleRep ModuleRep::quotient_by(const Subspace &sub,
                                 Matrix *projection) const {
  const Field &F = field();
  int d = dim_, di = sub.dim();
  for (int i = 0; i < di; ++i)
    for (int j = 0; j < algebra_->dim(); ++j) {
      std::vector<Fel> img(d, F.zero());
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l)
          img[l] = F.add(img[l],
                         F.mul(sub.basis().at(i, k), actions_[j].at(k, l)));
      if (!sub.contains(img))
        throw ModuleError("subspace is not a submodule");
    }
  // complement coordinates at non-pivot columns of the RREF basis
  std::vector<bool> is_pivot(d, false);
  for (int i = 0; i < di; ++i)
    for (int j = 0; j < d; ++j)
      if (sgn(sub.basis().at(i, j)) != 0) {
        is_pivot[j] = true;
        break;
      }
  std::vector<int> comp;
  for (int j = 0; j < d; ++j)
    if (!is_pivot[j])
      comp.push_back(j);
  int dq = static_cast<int>(comp.size());
  auto project = [&](std::vector<Fel> v) {
    for (int i = 0; i < di; ++i) {
      int lead = -1;
      for (int j = 0; j < d; ++j)
        if (sgn(sub.basis().at(i, j)) != 0) {
          lead = j;
          break;
        }
      Fel c = v[lead];
      if (sgn(c) == 0)
        continue;
      for (int j = 0; j < d; ++j)
        v[j] = F.sub(v[j], F.mul(c, sub.basis().at(i, j)));
    }
    std::vector<Fel> q(dq);
    for (int t = 0; t < dq; ++t)
      q[t] = v[comp[t]];
    return q;
  };
  std::vector<Matrix> acts;
  for (int i = 0; i < algebra_->dim(); ++i) {
    Matrix m(F, dq, dq);
    for (int t = 0; t < dq; ++t)
      m.set_row(t, project(actions_[i].row(comp[t])));
    acts.push_back(std::move(m));
  }
  if (projection) {
    *projection = Matrix(F, d, dq);
    for (int i = 0; i < d; ++i) {
      std::vector<Fel> v(d, F.zero());
      v[i] = F.one();
      projection->set_row(i, project(v));
    }
  }
  return ModuleRep(algebra_, std::move(acts), name_ + "/~");
}

ModuleRep direct_sum(const ModuleRep &m, const ModuleRep &n) {
  return direct_sum({&m, &n});
}

ModuleRep direct_sum(const std::vector<const ModuleRep *> &parts) {
  if (parts.empty())
    throw ModuleError("direct_sum of an empty list");
  AlgebraPtr A = parts[0]->algebra_ptr();
  const Field &F = A->field();
  int total = 0;
  for (const ModuleRep *p : parts) {
    if (p->algebra_ptr().get() != A.get())
      throw ModuleError("direct_sum over different algebras");
    total += p->dim();
  }
  std::vector<Matrix> acts;
  std::string name;
  for (int i = 0; i < A->dim(); ++i) {
    Matrix m(F, total, total);
    int off = 0;
    for (const ModuleRep *p : parts) {
      const Matrix &b = p->basis_action(i);
      for (int r = 0; r < p->dim(); ++r)
        for (int c = 0; c < p->dim(); ++c)
          m.at(off + r, off + c) = b.at(r, c);
      off += p->dim();
    }
    acts.push_back(std::move(m));
  }
  for (size_t i = 0; i < parts.size(); ++i)
    name += (i ? "+" : "") + parts[i]->name();
  return ModuleRep(A, std::move(acts), name);
}

std::vector<Matrix> hom_space(const ModuleRep &m, const ModuleRep &n) {
  if (m.algebra_ptr().get() != n.algebra_ptr().get() &&
      m.algebra().structure() != n.algebra().structure())
    throw ModuleError("hom_space over different algebras");
  const Field &F = m.field();
  int dm = m.dim(), dn = n.dim();
  if (dm == 0 || dn == 0)
    return {};
  const auto &gens = m.algebra().generators();
  // unknown X (dm x dn), conditions act_M(g) X = X act_N(g), vectorized
  // row-major: x[k*dn + l] = X[k][l]
  Matrix sys(F, static_cast<int>(gens.size()) * dm * dn, dm * dn);
  int row = 0;
  for (const auto &g : gens) {
    Matrix A = m.action(g), B = n.action(g);
    for (int i = 0; i < dm; ++i)
      for (int j = 0; j < dn; ++j, ++row) {
        for (int k = 0; k < dm; ++k)
          if (sgn(A.at(i, k)) != 0)
            sys.at(row, k * dn + j) = F.add(sys.at(row, k * dn + j), A.at(i, k));
        for (int l = 0; l < dn; ++l)
          if (sgn(B.at(l, j)) != 0)
            sys.at(row, i * dn + l) = F.sub(sys.at(row, i * dn + l), B.at(l, j));
      }
  }
  Matrix sols = kernel(sys); // rows x with sys * x^T = 0
  std::vector<Matrix> out;
  for (int r = 0; r < sols.rows(); ++r)
    out.push_back(Matrix::unvec(F, sols.row(r), dm, dn));
  return out;
}

Matrix EndAlgebra::matrix_of(const std::vector<Fel> &coords) const {
  const Field &F = algebra.field();
  Matrix m(F, basis[0].rows(), basis[0].cols());
  for (size_t i = 0; i < basis.size(); ++i)
    if (sgn(coords[i]) != 0)
      m = m + basis[i] * coords[i];
  return m;
}

std::vector<Fel> EndAlgebra::coords_of(const Matrix &endo) const {
  const Field &F = algebra.field();
  std::vector<std::vector<Fel>> rows;
  for (const Matrix &b : basis)
    rows.push_back(b.vec());
  RrefResult rr = rref(Matrix::from_rows(F, rows));
  // re-derive the change of basis: coordinates in the RREF basis, then map
  // back through the RREF transform; simpler: solve directly
  Matrix bt(F, static_cast<int>(basis.size()), endo.rows() * endo.cols());
  for (size_t i = 0; i < basis.size(); ++i)
    bt.set_row(static_cast<int>(i), basis[i].vec());
  Matrix rhs(F, endo.rows() * endo.cols(), 1);
  std::vector<Fel> v = endo.vec();
  for (size_t i = 0; i < v.size(); ++i)
    rhs.at(static_cast<int>(i), 0) = v[i];
  SolveResult s = solve_all(bt.transpose(), rhs);
  if (!s.consistent)
    throw ModuleError("matrix is not an endomorphism in the computed basis");
  std::vector<Fel> c(basis.size());
  for (size_t i = 0; i < basis.size(); ++i)
    c[i] = s.particular.at(static_cast<int>(i), 0);
  return c;
}

EndAlgebra end_algebra(const ModuleRep &m) {
  const Field &F = m.field();
  std::vector<Matrix> basis = hom_space(m, m);
  int d = static_cast<int>(basis.size());
  if (d == 0)
    throw ModuleError("end_algebra of the zero module");
  EndAlgebra out{Algebra::scalar(F), basis};
  // product phi * psi = "apply psi, then phi": matrix X_psi * X_phi
  std::vector<std::vector<Fel>> rows;
  for (const Matrix &b : basis)
    rows.push_back(b.vec());
  RrefResult rr = rref(Matrix::from_rows(F, rows));
  Matrix bt = Matrix::from_rows(F, rows).transpose();
  auto coords = [&](const Matrix &x) {
    Matrix rhs(F, bt.rows(), 1);
    std::vector<Fel> v = x.vec();
    for (size_t i = 0; i < v.size(); ++i)
      rhs.at(static_cast<int>(i), 0) = v[i];
    SolveResult s = solve_all(bt, rhs);
    if (!s.consistent)
      throw ModuleError("endomorphism product left the computed span");
    std::vector<Fel> c(d);
    for (int i = 0; i < d; ++i)
      c[i] = s.particular.at(i, 0);
    return c;
  };
  std::vector<Fel> structure(static_cast<size_t>(d) * d * d, F.zero());
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      std::vector<Fel> pc = coords(matmul(basis[j], basis[i]));
      for (int k = 0; k < d; ++k)
        structure[(static_cast<size_t>(i) * d + j) * d + k] = pc[k];
    }
  std::vector<std::string> labels;
  for (int i = 0; i < d; ++i)
    labels.push_back("f" + std::to_string(i));
  out.algebra = Algebra(F, std::move(labels), std::move(structure),
                        coords(Matrix::identity(F, m.dim())));
  return out;
}

namespace {

std::optional<Matrix> invertible_in_span(const std::vector<Matrix> &homs,
                                         int n, std::uint64_t seed,
                                         int budget) {
  if (homs.empty() || n == 0)
    return std::nullopt;
  const Field &F = homs[0].field();
  auto try_mat = [&](const Matrix &x) -> std::optional<Matrix> {
    if (rank(x) == n)
      return x;
    return std::nullopt;
  };
  for (const Matrix &h : homs)
    if (auto r = try_mat(h))
      return r;
  for (size_t i = 0; i < homs.size(); ++i)
    for (size_t j = i + 1; j < homs.size(); ++j)
      if (auto r = try_mat(homs[i] + homs[j]))
        return r;
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  long span = F.is_finite() ? F.p() : 19;
  std::uniform_int_distribution<long> dist(0, span - 1);
  for (int t = 0; t < budget; ++t) {
    Matrix x(F, n, n);
    for (const Matrix &h : homs) {
      long c = dist(rng) - (F.is_finite() ? 0 : span / 2);
      if (c != 0)
        x = x + h * F.from_long(c);
    }
    if (auto r = try_mat(x))
      return r;
  }
  // small finite search space: enumerate the span exhaustively
  if (F.is_finite()) {
    double total = 1;
    for (size_t i = 0; i < homs.size() && total <= 1 << 16; ++i)
      total *= static_cast<double>(F.p());
    if (total <= 1 << 16) {
      std::vector<long> c(homs.size(), 0);
      while (true) {
        Matrix x(F, n, n);
        for (size_t i = 0; i < homs.size(); ++i)
          if (c[i] != 0)
            x = x + homs[i] * F.from_long(c[i]);
        if (auto r = try_mat(x))
          return r;
        size_t pos = 0;
        while (pos < c.size() && ++c[pos] == F.p()) {
          c[pos] = 0;
          ++pos;
        }
        if (pos == c.size())
          break;
      }
    }
  }
  return std::nullopt;
}

} // namespace

std::optional<Matrix> iso_test(const ModuleRep &m, const ModuleRep &n,
                               std::uint64_t seed, int budget) {
  if (m.dim() != n.dim())
    return std::nullopt;
  if (m.dim() == 0)
    return Matrix(m.field(), 0, 0);
  std::vector<Matrix> homs = hom_space(m, n);
  return invertible_in_span(homs, m.dim(), seed, budget);
}

bool is_indecomposable(const ModuleRep &m, std::uint64_t seed, int budget) {
  if (m.dim() == 0)
    return false;
  EndAlgebra e = end_algebra(m);
  Subspace rad = radical(e.algebra);
  if (rad.dim() == e.algebra.dim())
    throw ModuleError("endomorphism radical cannot be everything");
  Algebra top = rad.dim() == 0 ? e.algebra
                               : quotient(e.algebra, rad).algebra;
  DivisionReport rep = is_division_algebra(top, seed, budget);
  if (rep.status == DivisionStatus::ProbablyYes)
    throw UndecidedError("indecomposability undecided: " + rep.detail);
  return rep.status == DivisionStatus::Yes;
}

namespace {

void krs_split(const ModuleRep &m, std::uint64_t seed, int budget,
               std::vector<ModuleRep> &out) {
  if (m.dim() == 0)
    return;
  EndAlgebra e = end_algebra(m);
  Subspace rad = radical(e.algebra);
  const Field &F = m.field();
  // top of the endomorphism algebra
  std::optional<QuotientResult> q;
  const Algebra *top = &e.algebra;
  if (rad.dim() > 0) {
    q.emplace(quotient(e.algebra, rad));
    top = &q->algebra;
  }
  std::optional<std::vector<Fel>> split_idem =
      proper_idempotent(*top, seed, budget);
  if (!split_idem) {
    out.push_back(m);
    return;
  }
  const std::vector<Fel> &e_top = *split_idem;
  // pull back to End(M) modulo its radical, then lift to an exact idempotent
  std::vector<Fel> e_bar;
  if (q) {
    e_bar.assign(e.algebra.dim(), F.zero());
    for (int t = 0; t < q->section.rows(); ++t)
      for (int k = 0; k < e.algebra.dim(); ++k)
        e_bar[k] = F.add(e_bar[k], F.mul(e_top[t], q->section.at(t, k)));
  } else {
    e_bar = e_top;
  }
  std::vector<Fel> idem = lift_idempotent(e.algebra, e_bar, rad);
  Matrix proj = e.matrix_of(idem);
  // image and kernel of the projection are complementary submodules
  ModuleRep img = m.submodule(proj);
  ModuleRep ker = m.submodule(left_kernel(proj));
  if (img.dim() == 0 || ker.dim() == 0 || img.dim() + ker.dim() != m.dim())
    throw ModuleError("projection did not split the module");
  krs_split(img, seed, budget, out);
  krs_split(ker, seed, budget, out);
}

} // namespace

std::vector<KrsFactor> krs_decompose(const ModuleRep &m, std::uint64_t seed,
                                     int budget) {
  std::vector<ModuleRep> parts;
  krs_split(m, seed, budget, parts);
  // group by isomorphism
  std::vector<KrsFactor> out;
  for (ModuleRep &p : parts) {
    bool merged = false;
    for (KrsFactor &f : out)
      if (f.module.dim() == p.dim() &&
          iso_test(f.module, p, seed, budget)) {
        ++f.multiplicity;
        merged = true;
        break;
      }
    if (!merged)
      out.push_back({std::move(p), 1});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const KrsFactor &a, const KrsFactor &b) {
                     if (a.module.dim() != b.module.dim())
                       return a.module.dim() < b.module.dim();
                     return false;
                   });
  return out;
}

int ext1_dim(const ModuleRep &m, const ModuleRep &n) {
  if (m.dim() == 0 || n.dim() == 0)
    return 0;
  AlgebraPtr A = m.algebra_ptr();
  const Field &F = m.field();
  const Algebra &alg = m.algebra();
  // minimal generators of M: a complement of M * rad(A)
  Subspace radA = radical(alg);
  std::vector<std::vector<Fel>> mrad;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < radA.dim(); ++j) {
      Matrix act = m.action(radA.basis().row(j));
      std::vector<Fel> v(m.dim(), F.zero());
      for (int k = 0; k < m.dim(); ++k)
        v[k] = act.at(i, k);
      mrad.push_back(std::move(v));
    }
  mrad.push_back(std::vector<Fel>(m.dim(), F.zero()));
  Subspace mr = Subspace::from_span(Matrix::from_rows(F, mrad));
  std::vector<bool> is_pivot(m.dim(), false);
  for (int i = 0; i < mr.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j)
      if (sgn(mr.basis().at(i, j)) != 0) {
        is_pivot[j] = true;
        break;
      }
  std::vector<std::vector<Fel>> gens;
  for (int j = 0; j < m.dim(); ++j)
    if (!is_pivot[j]) {
      std::vector<Fel> v(m.dim(), F.zero());
      v[j] = F.one();
      gens.push_back(std::move(v));
    }
  int g = static_cast<int>(gens.size());
  // free cover A^g --> M, (a_t) |-> sum gens[t] * a_t  (Nakayama:
  // complements of M*rad generate)
  Matrix cover(F, g * alg.dim(), m.dim());
  for (int t = 0; t < g; ++t)
    for (int i = 0; i < alg.dim(); ++i)
      cover.set_row(t * alg.dim() + i,
                    m.apply(gens[t], alg.basis_vector(i)));
  ModuleRep reg = ModuleRep::regular(A);
  std::vector<const ModuleRep *> copies(g, &reg);
  ModuleRep p0 = direct_sum(copies);
  Matrix kbasis = left_kernel(cover);
  int dim_hom_k;
  if (kbasis.rows() == 0) {
    dim_hom_k = 0;
  } else {
    ModuleRep kmod = p0.submodule(kbasis);
    dim_hom_k = static_cast<int>(hom_space(kmod, n).size());
  }
  int dim_hom_p0 = static_cast<int>(hom_space(p0, n).size());
  int dim_hom_m = static_cast<int>(hom_space(m, n).size());
  // Hom(P0,N) -> Hom(K,N) has cokernel Ext^1(M,N); the kernel of the
  // restriction is Hom(M,N)
  int ext = dim_hom_k - dim_hom_p0 + dim_hom_m;
  if (ext < 0)
    throw ModuleError("Ext^1 bookkeeping went negative");
  return ext;
}

int ext1_dim_quiver(const ModuleRep &m, const ModuleRep &n) {
  const Algebra &alg = m.algebra();
  if (!alg.has_path_basis())
    throw ModuleError("ext1_dim_quiver needs a path algebra");
  const PathBasis &pb = alg.path_basis();
  const Quiver &q = pb.quiver;
  const Field &F = m.field();
  // vertex spaces: images of the vertex idempotents
  struct VertexSpace {
    Matrix basis_m; // rows: basis of M_v inside M
    Matrix basis_n;
  };
  std::vector<Matrix> mv, nv;
  for (int v = 0; v < q.nvertices(); ++v) {
    Matrix em = m.basis_action(pb.vertex_idempotent[v]);
    Matrix en = n.basis_action(pb.vertex_idempotent[v]);
    mv.push_back(Subspace::from_span(em).basis());
    nv.push_back(Subspace::from_span(en).basis());
  }
  auto coords_in = [&](const Matrix &basis, const std::vector<Fel> &v) {
    Matrix rhs(F, basis.cols(), 1);
    for (int i = 0; i < basis.cols(); ++i)
      rhs.at(i, 0) = v[i];
    SolveResult s = solve_all(basis.transpose(), rhs);
    if (!s.consistent)
      throw ModuleError("vector outside its weight space");
    std::vector<Fel> c(basis.rows());
    for (int i = 0; i < basis.rows(); ++i)
      c[i] = s.particular.at(i, 0);
    return c;
  };
  // arrow action M_{s(a)} -> M_{t(a)} in weight-space coordinates
  auto arrow_block = [&](const ModuleRep &mod, const std::vector<Matrix> &vs,
                         int a) {
    int src = q.arrows()[a].source, tgt = q.arrows()[a].target;
    // basis index of the length-one path "a"
    int pa = -1;
    for (size_t i = 0; i < pb.paths.size(); ++i)
      if (pb.paths[i].arrows.size() == 1 && pb.paths[i].arrows[0] == a)
        pa = static_cast<int>(i);
    Matrix act = mod.basis_action(pa);
    Matrix blk(F, vs[src].rows(), vs[tgt].rows());
    for (int r = 0; r < vs[src].rows(); ++r) {
      std::vector<Fel> img(mod.dim(), F.zero());
      for (int k = 0; k < mod.dim(); ++k)
        for (int l = 0; l < mod.dim(); ++l)
          img[l] = F.add(img[l], F.mul(vs[src].at(r, k), act.at(k, l)));
      blk.set_row(r, coords_in(vs[tgt], img));
    }
    return blk;
  };
  // d: (phi_v)_v |-> (M_a phi_{t(a)} - phi_{s(a)} N_a)_a
  std::vector<int> phi_off(q.nvertices() + 1, 0), tgt_off(q.narrows() + 1, 0);
  for (int v = 0; v < q.nvertices(); ++v)
    phi_off[v + 1] = phi_off[v] + mv[v].rows() * nv[v].rows();
  for (int a = 0; a < q.narrows(); ++a)
    tgt_off[a + 1] =
        tgt_off[a] +
        mv[q.arrows()[a].source].rows() * nv[q.arrows()[a].target].rows();
  Matrix d(F, phi_off.back(), tgt_off.back());
  for (int a = 0; a < q.narrows(); ++a) {
    int src = q.arrows()[a].source, tgt = q.arrows()[a].target;
    Matrix ma = arrow_block(m, mv, a); // M_src -> M_tgt
    Matrix na = arrow_block(n, nv, a); // N_src -> N_tgt
    int rs = mv[src].rows(), rt = mv[tgt].rows();
    int cs = nv[src].rows(), ct = nv[tgt].rows();
    // contribution of phi_tgt (rt x ct): entry (i,j) of the output block
    // (rs x ct) gets sum_k ma[i][k] phi_tgt[k][j]
    for (int i = 0; i < rs; ++i)
      for (int j = 0; j < ct; ++j)
        for (int k = 0; k < rt; ++k)
          if (sgn(ma.at(i, k)) != 0)
            d.at(phi_off[tgt] + k * ct + j, tgt_off[a] + i * ct + j) =
                F.add(d.at(phi_off[tgt] + k * ct + j, tgt_off[a] + i * ct + j),
                      ma.at(i, k));
    // contribution of phi_src (rs x cs): -(phi_src na)[i][j]
    for (int i = 0; i < rs; ++i)
      for (int j = 0; j < ct; ++j)
        for (int k = 0; k < cs; ++k)
          if (sgn(na.at(k, j)) != 0)
            d.at(phi_off[src] + i * cs + k, tgt_off[a] + i * ct + j) =
                F.sub(d.at(phi_off[src] + i * cs + k, tgt_off[a] + i * ct + j),
                      na.at(k, j));
  }
  return tgt_off.back() - rank(d);
}

} // namespace skewlab
