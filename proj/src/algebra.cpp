#include "skewlab/algebra.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <sstream>

namespace skewlab {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  std::set<std::string> labels;
  for (const auto &v : vertices_)
    if (!labels.insert(v).second)
      throw AlgebraError("duplicate vertex label '" + v + "'");
  for (const auto &a : arrows_) {
    if (!labels.insert(a.name).second)
      throw AlgebraError("duplicate label '" + a.name + "'");
    if (a.source < 0 || a.source >= nvertices() || a.target < 0 ||
        a.target >= nvertices())
      throw AlgebraError("arrow '" + a.name + "' has an unknown endpoint");
  }
  // acyclicity: Kahn's algorithm
  std::vector<int> indeg(nvertices(), 0);
  for (const auto &a : arrows_)
    ++indeg[a.target];
  std::queue<int> q;
  for (int v = 0; v < nvertices(); ++v)
    if (indeg[v] == 0)
      q.push(v);
  int removed = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    ++removed;
    for (const auto &a : arrows_)
      if (a.source == v && --indeg[a.target] == 0)
        q.push(a.target);
  }
  if (removed != nvertices()) {
    std::ostringstream os;
    os << "quiver has a directed cycle through vertices {";
    bool first = true;
    for (int v = 0; v < nvertices(); ++v)
      if (indeg[v] > 0) {
        os << (first ? "" : ", ") << vertices_[v];
        first = false;
      }
    os << "}";
    throw AlgebraError(os.str());
  }
}

int Quiver::vertex_index(const std::string &label) const {
  for (int i = 0; i < nvertices(); ++i)
    if (vertices_[i] == label)
      return i;
  throw AlgebraError("unknown vertex '" + label + "'");
}

Algebra::Algebra(const Field &f, std::vector<std::string> basis_labels,
                 std::vector<Fel> structure, std::vector<Fel> unit,
                 std::vector<std::vector<Fel>> generators)
    : field_(f), dim_(static_cast<int>(basis_labels.size())),
      labels_(std::move(basis_labels)), structure_(std::move(structure)),
      unit_(std::move(unit)), gens_(std::move(generators)) {
  if (dim_ <= 0)
    throw AlgebraError("algebra dimension must be positive");
  if (structure_.size() != static_cast<size_t>(dim_) * dim_ * dim_)
    throw AlgebraError("structure table has wrong size");
  if (unit_.size() != static_cast<size_t>(dim_))
    throw AlgebraError("unit vector has wrong size");
  for (auto &x : structure_)
    x = field_.reduce(x);
  for (auto &x : unit_)
    x = field_.reduce(x);
  if (gens_.empty())
    for (int i = 0; i < dim_; ++i)
      gens_.push_back(basis_vector(i));
  validate();
}

std::vector<Fel> Algebra::basis_vector(int i) const {
  std::vector<Fel> v(dim_, field_.zero());
  v[i] = field_.one();
  return v;
}

std::vector<Fel> Algebra::multiply(const std::vector<Fel> &x,
                                   const std::vector<Fel> &y) const {
  if (x.size() != static_cast<size_t>(dim_) ||
      y.size() != static_cast<size_t>(dim_))
    throw AlgebraError("coordinate vector dimension mismatch");
  std::vector<Fel> r(dim_, field_.zero());
  for (int i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0)
      continue;
    for (int j = 0; j < dim_; ++j) {
      if (sgn(y[j]) == 0)
        continue;
      Fel xy = field_.mul(x[i], y[j]);
      for (int k = 0; k < dim_; ++k) {
        const Fel &ck = c(i, j, k);
        if (sgn(ck) != 0)
          r[k] = field_.add(r[k], field_.mul(xy, ck));
      }
    }
  }
  return r;
}

Matrix Algebra::left_mult(const std::vector<Fel> &x) const {
  Matrix m(field_, dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    std::vector<Fel> r = multiply(x, basis_vector(j));
    for (int k = 0; k < dim_; ++k)
      m.at(j, k) = r[k];
  }
  return m;
}

Matrix Algebra::right_mult(const std::vector<Fel> &x) const {
  Matrix m(field_, dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    std::vector<Fel> r = multiply(basis_vector(j), x);
    for (int k = 0; k < dim_; ++k)
      m.at(j, k) = r[k];
  }
  return m;
}

bool Algebra::is_commutative() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        if (c(i, j, k) != c(j, i, k))
          return false;
  return true;
}

const PathBasis &Algebra::path_basis() const {
  if (!path_basis_)
    throw AlgebraError("algebra has no path basis");
  return *path_basis_;
}

void Algebra::validate() const {
  // unit law
  for (int i = 0; i < dim_; ++i) {
    std::vector<Fel> b = basis_vector(i);
    if (multiply(unit_, b) != b || multiply(b, unit_) != b)
      throw AlgebraError("unit law fails at basis element " + labels_[i]);
  }
  // associativity: (b_i b_j) b_k = b_i (b_j b_k)
  bool ok = true;
  std::string offender;
#ifdef SKEWLAB_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) collapse(2) if (dim_ >= 12)
#endif
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      if (!ok)
        continue;
      for (int k = 0; k < dim_; ++k)
        for (int l = 0; l < dim_; ++l) {
          Fel lhs = field_.zero(), rhs = field_.zero();
          for (int m = 0; m < dim_; ++m) {
            if (sgn(c(i, j, m)) != 0)
              lhs = field_.add(lhs, field_.mul(c(i, j, m), c(m, k, l)));
            if (sgn(c(j, k, m)) != 0)
              rhs = field_.add(rhs, field_.mul(c(i, m, l), c(j, k, m)));
          }
          if (lhs != rhs) {
#ifdef SKEWLAB_HAVE_OPENMP
#pragma omp critical
#endif
            {
              ok = false;
              offender = "(" + labels_[i] + "," + labels_[j] + "," + labels_[k] + ")";
            }
          }
        }
    }
  if (!ok)
    throw AlgebraError("structure table is not associative at " + offender);
}

Algebra Algebra::scalar(const Field &f) {
  return Algebra(f, {"1"}, {f.one()}, {f.one()});
}

Algebra Algebra::path_algebra(const Quiver &q, const Field &f) {
  // enumerate all paths; acyclicity bounds their number
  std::vector<PathBasis::Path> paths;
  std::vector<int> vertex_idem(q.nvertices(), -1);
  for (int v = 0; v < q.nvertices(); ++v) {
    vertex_idem[v] = static_cast<int>(paths.size());
    paths.push_back({v, v, {}});
  }
  // BFS by length
  size_t head = 0;
  while (head < paths.size()) {
    PathBasis::Path p = paths[head++];
    for (int a = 0; a < q.narrows(); ++a)
      if (q.arrows()[a].source == p.target) {
        PathBasis::Path ext = p;
        ext.arrows.push_back(a);
        ext.target = q.arrows()[a].target;
        paths.push_back(std::move(ext));
      }
  }
  int d = static_cast<int>(paths.size());
  auto label_of = [&](const PathBasis::Path &p) {
    if (p.arrows.empty())
      return "e_" + q.vertices()[p.source];
    std::string s;
    for (int a : p.arrows)
      s += (s.empty() ? "" : "*") + q.arrows()[a].name;
    return s;
  };
  std::map<std::pair<int, std::vector<int>>, int> index;
  for (int i = 0; i < d; ++i)
    index[{paths[i].source, paths[i].arrows}] = i;
  std::vector<Fel> structure(static_cast<size_t>(d) * d * d, f.zero());
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      // p*q = concatenation "first p, then q" when target(p) = source(q)
      if (paths[i].target != paths[j].source)
        continue;
      std::vector<int> cat = paths[i].arrows;
      cat.insert(cat.end(), paths[j].arrows.begin(), paths[j].arrows.end());
      int k = index.at({paths[i].source, cat});
      structure[(static_cast<size_t>(i) * d + j) * d + k] = f.one();
    }
  std::vector<Fel> unit(d, f.zero());
  for (int v = 0; v < q.nvertices(); ++v)
    unit[vertex_idem[v]] = f.one();
  std::vector<std::string> labels;
  for (const auto &p : paths)
    labels.push_back(label_of(p));
  std::vector<std::vector<Fel>> gens;
  for (int i = 0; i < q.nvertices() + q.narrows(); ++i) {
    std::vector<Fel> g(d, f.zero());
    g[i] = f.one();
    gens.push_back(std::move(g));
  }
  Algebra A(f, std::move(labels), std::move(structure), std::move(unit),
            std::move(gens));
  A.path_basis_ = PathBasis{q, std::move(paths), std::move(vertex_idem)};
  return A;
}

Algebra algebra_on_subspace(const Algebra &ambient, const Matrix &basis_rows,
                            const std::vector<Fel> &unit_ambient,
                            const std::string &label_prefix) {
  const Field &F = ambient.field();
  int d = basis_rows.rows();
  if (d == 0)
    throw AlgebraError("empty basis for subalgebra");
  Matrix bt = basis_rows.transpose();
  auto coords = [&](const std::vector<Fel> &v) {
    Matrix rhs(F, ambient.dim(), 1);
    for (int i = 0; i < ambient.dim(); ++i)
      rhs.at(i, 0) = v[i];
    SolveResult s = solve_all(bt, rhs);
    if (!s.consistent)
      throw AlgebraError("subspace is not multiplicatively closed");
    std::vector<Fel> c(d);
    for (int i = 0; i < d; ++i)
      c[i] = s.particular.at(i, 0);
    return c;
  };
  std::vector<Fel> structure(static_cast<size_t>(d) * d * d, F.zero());
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      std::vector<Fel> prod =
          ambient.multiply(basis_rows.row(i), basis_rows.row(j));
      std::vector<Fel> pc = coords(prod);
      for (int k = 0; k < d; ++k)
        structure[(static_cast<size_t>(i) * d + j) * d + k] = pc[k];
    }
  std::vector<std::string> labels;
  for (int i = 0; i < d; ++i)
    labels.push_back(label_prefix + std::to_string(i));
  return Algebra(F, std::move(labels), std::move(structure),
                 coords(unit_ambient));
}

namespace {

Matrix trace_form_gram(const Algebra &a) {
  const Field &F = a.field();
  std::vector<Matrix> lmul;
  for (int i = 0; i < a.dim(); ++i)
    lmul.push_back(a.left_mult(a.basis_vector(i)));
  Matrix gram(F, a.dim(), a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i; j < a.dim(); ++j) {
      Fel t = F.zero();
      for (int r = 0; r < a.dim(); ++r)
        for (int s = 0; s < a.dim(); ++s)
          if (sgn(lmul[i].at(r, s)) != 0)
            t = F.add(t, F.mul(lmul[i].at(r, s), lmul[j].at(s, r)));
      gram.at(i, j) = t;
      gram.at(j, i) = t;
    }
  return gram;
}

} // namespace

Subspace radical(const Algebra &a) {
  const Field &F = a.field();
  // Kernel of the trace form tr(L_x L_y). The radical is always contained
  // in it; equality is certified below (nilpotency + nondegenerate quotient),
  // which covers char 0 and every prime for which the criterion is valid.
  Subspace rad = Subspace::from_span(left_kernel(trace_form_gram(a)));
  const std::string advice =
      "trace-form radical criterion failed in characteristic " +
      std::to_string(F.characteristic()) + " (dim " + std::to_string(a.dim()) +
      "); pick a larger prime";
  // verify nilpotency: powers of the ideal must reach zero
  Subspace power = rad;
  for (int iter = 0; iter <= a.dim() && power.dim() > 0; ++iter) {
    std::vector<std::vector<Fel>> span;
    for (int i = 0; i < power.dim(); ++i)
      for (int j = 0; j < rad.dim(); ++j)
        span.push_back(
            a.multiply(power.basis().row(i), rad.basis().row(j)));
    Subspace next = Subspace::from_span(Matrix::from_rows(F, span.empty()
        ? std::vector<std::vector<Fel>>{std::vector<Fel>(a.dim(), F.zero())}
        : span));
    if (next.dim() == power.dim())
      throw AlgebraError(advice);
    power = next;
  }
  if (power.dim() != 0)
    throw AlgebraError(advice);
  // certify maximality: the trace form of A / kernel must be nondegenerate
  // (then the quotient is semisimple, so the kernel is the whole radical)
  if (rad.dim() > 0) {
    Algebra q = quotient(a, rad).algebra;
    if (rank(trace_form_gram(q)) != q.dim())
      throw AlgebraError(advice);
  }
  return rad;
}

QuotientResult quotient(const Algebra &a, const Subspace &ideal) {
  const Field &F = a.field();
  int d = a.dim(), di = ideal.dim();
  // validate two-sided ideal
  for (int i = 0; i < di; ++i)
    for (int j = 0; j < d; ++j) {
      if (!ideal.contains(a.multiply(ideal.basis().row(i), a.basis_vector(j))) ||
          !ideal.contains(a.multiply(a.basis_vector(j), ideal.basis().row(i))))
        throw AlgebraError("subspace is not a two-sided ideal");
    }
  if (di == d)
    throw AlgebraError("quotient by the whole algebra is the zero algebra, "
                       "which is not unital");
  // complement basis: standard basis vectors at non-pivot coordinates
  std::vector<bool> is_pivot(d, false);
  for (int i = 0; i < di; ++i) {
    for (int j = 0; j < d; ++j)
      if (sgn(ideal.basis().at(i, j)) != 0) {
        is_pivot[j] = true;
        break;
      }
  }
  std::vector<int> comp;
  for (int j = 0; j < d; ++j)
    if (!is_pivot[j])
      comp.push_back(j);
  int dq = static_cast<int>(comp.size());
  // projection: reduce modulo the RREF ideal basis, read complement coords
  auto project = [&](std::vector<Fel> v) {
    for (int i = 0; i < di; ++i) {
      int lead = -1;
      for (int j = 0; j < d; ++j)
        if (sgn(ideal.basis().at(i, j)) != 0) {
          lead = j;
          break;
        }
      Fel c = v[lead];
      if (sgn(c) == 0)
        continue;
      for (int j = 0; j < d; ++j)
        v[j] = F.sub(v[j], F.mul(c, ideal.basis().at(i, j)));
    }
    std::vector<Fel> q(dq);
    for (int t = 0; t < dq; ++t)
      q[t] = v[comp[t]];
    return q;
  };
  std::vector<Fel> structure(static_cast<size_t>(dq) * dq * dq, F.zero());
  for (int i = 0; i < dq; ++i)
    for (int j = 0; j < dq; ++j) {
      std::vector<Fel> prod =
          a.multiply(a.basis_vector(comp[i]), a.basis_vector(comp[j]));
      std::vector<Fel> pc = project(prod);
      for (int k = 0; k < dq; ++k)
        structure[(static_cast<size_t>(i) * dq + j) * dq + k] = pc[k];
    }
  std::vector<std::string> labels;
  for (int t = 0; t < dq; ++t)
    labels.push_back(a.basis_labels()[comp[t]] + "~");
  std::vector<std::vector<Fel>> gens;
  for (const auto &g : a.generators())
    gens.push_back(project(g));
  Matrix projm(F, d, dq);
  for (int i = 0; i < d; ++i) {
    std::vector<Fel> pi = project(a.basis_vector(i));
    for (int j = 0; j < dq; ++j)
      projm.at(i, j) = pi[j];
  }
  Matrix section(F, dq, d);
  for (int t = 0; t < dq; ++t)
    section.at(t, comp[t]) = F.one();
  Algebra q(F, std::move(labels), std::move(structure),
            project(a.unit()), std::move(gens));
  return {std::move(q), std::move(projm), std::move(section)};
}

CenterResult center(const Algebra &a) {
  const Field &F = a.field();
  int d = a.dim();
  // z with z*b_i = b_i*z for all i: stack (L_i - R_i)^T constraints on z
  Matrix constraints(F, d, d * d);
  for (int i = 0; i < d; ++i) {
    Matrix li = a.left_mult(a.basis_vector(i));   // y -> b_i * y
    Matrix ri = a.right_mult(a.basis_vector(i));  // y -> y * b_i
    // row z: z * b_i - b_i * z = z (Ri - Li) as row vector maps
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        constraints.at(j, i * d + k) = F.sub(ri.at(j, k), li.at(j, k));
  }
  Matrix zbasis = left_kernel(constraints);
  Subspace sub = Subspace::from_span(zbasis);
  Algebra calg = algebra_on_subspace(a, sub.basis(), a.unit(), "z");
  Matrix basis = sub.basis();
  return {std::move(sub), std::move(calg), std::move(basis)};
}

Poly min_poly(const Algebra &a, const std::vector<Fel> &x) {
  const Field &F = a.field();
  int d = a.dim();
  std::vector<std::vector<Fel>> powers;
  powers.push_back(a.unit());
  std::vector<Fel> cur = a.unit();
  for (int k = 1; k <= d + 1; ++k) {
    cur = a.multiply(cur, x);
    powers.push_back(cur);
    // first linear dependence among 1, x, ..., x^k
    Matrix m(F, k + 1, d);
    for (int i = 0; i <= k; ++i)
      m.set_row(i, powers[i]);
    Matrix rel = left_kernel(m);
    if (rel.rows() > 0) {
      // relation with nonzero coefficient at the highest power
      for (int r = 0; r < rel.rows(); ++r)
        if (sgn(rel.at(r, k)) != 0) {
          std::vector<Fel> coeffs(k + 1);
          for (int i = 0; i <= k; ++i)
            coeffs[i] = rel.at(r, i);
          return Poly(F, std::move(coeffs)).monic();
        }
      // dependence among lower powers would have been found earlier
      throw AlgebraError("minimal polynomial search failed");
    }
  }
  throw AlgebraError("minimal polynomial not found (non-associative data?)");
}

std::vector<Fel> eval_poly(const Algebra &a, const Poly &p,
                           const std::vector<Fel> &x) {
  const Field &F = a.field();
  std::vector<Fel> acc(a.dim(), F.zero());
  for (int i = p.degree(); i >= 0; --i) {
    acc = a.multiply(acc, x);
    const Fel &ci = p.coeff(i);
    if (sgn(ci) != 0)
      for (int k = 0; k < a.dim(); ++k)
        acc[k] = F.add(acc[k], F.mul(ci, a.unit()[k]));
  }
  return acc;
}

namespace {

bool is_zero_vec(const Field &F, const std::vector<Fel> &v) {
  for (const auto &x : v)
    if (sgn(x) != 0)
      return false;
  return true;
}

/// Candidate elements for minimal-polynomial based splitting, in the
/// deterministic order: basis, pairwise sums, seeded random combinations.
class CandidateSchedule {
public:
  CandidateSchedule(const Algebra &a, std::uint64_t seed)
      : a_(a), rng_(seed ^ 0xa0761d6478bd642fULL) {}

  std::optional<std::vector<Fel>> next() {
    const Field &F = a_.field();
    int d = a_.dim();
    if (phase_ == 0) {
      if (i_ < d)
        return a_.basis_vector(i_++);
      phase_ = 1;
      i_ = 0;
      j_ = 1;
    }
    if (phase_ == 1) {
      if (d >= 2 && i_ < d - 1) {
        std::vector<Fel> v = a_.basis_vector(i_);
        const std::vector<Fel> w = a_.basis_vector(j_);
        for (int k = 0; k < d; ++k)
          v[k] = F.add(v[k], w[k]);
        if (++j_ >= d) {
          ++i_;
          j_ = i_ + 1;
        }
        return v;
      }
      phase_ = 2;
    }
    // random small-coefficient combinations
    std::vector<Fel> v(d, F.zero());
    long span = F.is_finite() ? F.p() : 7;
    std::uniform_int_distribution<long> dist(0, span - 1);
    for (int k = 0; k < d; ++k)
      v[k] = F.from_long(dist(rng_) - (F.is_finite() ? 0 : span / 2));
    return v;
  }

private:
  const Algebra &a_;
  std::mt19937_64 rng_;
  int phase_ = 0;
  int i_ = 0, j_ = 1;
};

} // namespace

std::optional<std::pair<std::vector<Fel>, std::vector<Fel>>>
find_zero_divisor(const Algebra &a, std::uint64_t seed, int budget) {
  const Field &F = a.field();
  CandidateSchedule sched(a, seed);
  for (int tries = 0; tries < budget; ++tries) {
    auto cand = sched.next();
    if (!cand || is_zero_vec(F, *cand))
      continue;
    Poly mp = min_poly(a, *cand);
    auto factors = poly_factor(mp, seed + tries);
    if (factors.size() == 1 && factors[0].multiplicity == 1)
      continue;
    // mp = f1 * rest with both of degree >= 1: f1(z) * rest(z) = 0
    Poly f1 = factors[0].factor;
    Poly rest = Poly::constant(F, F.one());
    bool first = true;
    for (const auto &fm : factors) {
      int m = fm.multiplicity;
      if (first) {
        --m;
        first = false;
      }
      for (int t = 0; t < m; ++t)
        rest = rest * fm.factor;
    }
    std::vector<Fel> x = eval_poly(a, f1, *cand);
    std::vector<Fel> y = eval_poly(a, rest, *cand);
    if (!is_zero_vec(F, x) && !is_zero_vec(F, y))
      return std::make_pair(x, y);
  }
  return std::nullopt;
}

SplitResult split_commutative(const Algebra &a, std::uint64_t seed,
                              int budget) {
  const Field &F = a.field();
  if (!a.is_commutative())
    throw AlgebraError("split_commutative requires a commutative algebra");
  if (radical(a).dim() != 0)
    throw AlgebraError("split_commutative requires a semisimple algebra");

  struct Component {
    std::vector<Fel> idem; // in ambient coordinates
    bool certified;
  };
  std::vector<Component> done;
  std::vector<std::vector<Fel>> work{a.unit()};
  bool all_certified = true;

  while (!work.empty()) {
    std::vector<Fel> e = work.back();
    work.pop_back();
    // component algebra e*A on an explicit basis
    std::vector<std::vector<Fel>> span;
    for (int j = 0; j < a.dim(); ++j)
      span.push_back(a.multiply(e, a.basis_vector(j)));
    Subspace comp = Subspace::from_span(Matrix::from_rows(F, span));
    if (comp.dim() == 1) {
      done.push_back({e, true});
      continue;
    }
    Algebra C = algebra_on_subspace(a, comp.basis(), e);
    auto to_ambient = [&](const std::vector<Fel> &v) {
      std::vector<Fel> r(a.dim(), F.zero());
      for (int i = 0; i < comp.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
          r[j] = F.add(r[j], F.mul(v[i], comp.basis().at(i, j)));
      return r;
    };
    CandidateSchedule sched(C, seed);
    bool split = false, certified = false;
    for (int tries = 0; tries < budget && !split; ++tries) {
      auto cand = sched.next();
      if (!cand || is_zero_vec(F, *cand))
        continue;
      Poly mp = min_poly(C, *cand);
      auto factors = poly_factor(mp, seed + tries);
      for (const auto &fm : factors)
        if (fm.multiplicity > 1)
          throw AlgebraError("non-squarefree minimal polynomial in a "
                             "semisimple commutative algebra");
      if (factors.size() == 1) {
        if (mp.degree() == C.dim()) {
          // primitive element with irreducible minimal polynomial:
          // the component is the field k[z]
          certified = true;
          break;
        }
        continue;
      }
      // CRT idempotents: e_i = g_i(z)*h_i(z), g_i = mp/f_i,
      // h_i = g_i^{-1} mod f_i
      for (const auto &fm : factors) {
        Poly gi = Poly::constant(F, F.one());
        for (const auto &other : factors)
          if (&other != &fm)
            gi = gi * other.factor;
        // invert gi modulo fm.factor
        Poly r0 = fm.factor, r1 = gi % fm.factor;
        Poly s0(F), s1 = Poly::constant(F, F.one());
        while (!r1.is_zero()) {
          Poly q(F), r(F);
          Poly::divmod(r0, r1, q, r);
          r0 = r1;
          r1 = r;
          Poly s2 = s0 - q * s1;
          s0 = s1;
          s1 = s2;
        }
        Poly hi = (s0 * F.inv(r0.leading())) % fm.factor;
        Poly idem_poly = (gi * hi);
        std::vector<Fel> ei = eval_poly(C, idem_poly % mp, *cand);
        // reduce modulo nothing: already exact idempotent in C
        work.push_back(to_ambient(ei));
      }
      split = true;
    }
    if (!split) {
      done.push_back({e, certified});
      if (!certified)
        all_certified = false;
    }
  }
  SplitResult out;
  for (auto &c : done)
    out.idempotents.push_back(c.idem);
  // deterministic order
  std::sort(out.idempotents.begin(), out.idempotents.end(),
            [](const std::vector<Fel> &x, const std::vector<Fel> &y) {
              for (size_t i = 0; i < x.size(); ++i)
                if (x[i] != y[i])
                  return x[i] < y[i];
              return false;
            });
  out.certified = all_certified;
  if (!all_certified)
    out.note = "undecided: a component could not be certified a field "
               "within the search budget";
  return out;
}

std::vector<Fel> lift_idempotent(const Algebra &a,
                                 const std::vector<Fel> &e_bar,
                                 const Subspace &rad) {
  const Field &F = a.field();
  std::vector<Fel> defect = a.multiply(e_bar, e_bar);
  for (int k = 0; k < a.dim(); ++k)
    defect[k] = F.sub(defect[k], e_bar[k]);
  if (!rad.contains(defect))
    throw AlgebraError("e_bar is not idempotent modulo the radical");
  std::vector<Fel> e = e_bar;
  int max_iters = 2;
  for (int d = a.dim(); d > 1; d >>= 1)
    ++max_iters;
  for (int it = 0; it < max_iters; ++it) {
    std::vector<Fel> e2 = a.multiply(e, e);
    if (e2 == e)
      return e;
    std::vector<Fel> e3 = a.multiply(e2, e);
    for (int k = 0; k < a.dim(); ++k)
      e[k] = F.sub(F.mul(F.from_long(3), e2[k]), F.mul(F.from_long(2), e3[k]));
  }
  std::vector<Fel> e2 = a.multiply(e, e);
  if (e2 == e)
    return e;
  throw AlgebraError("idempotent lifting did not converge "
                     "(precondition violated)");
}

namespace {

// Quaternion certification over Q: find an orthogonal pair i', j' with
// i'^2 = alpha, j'^2 = beta scalars and i'j' = -j'i'.
DivisionReport quaternion_certify(const Algebra &a, std::uint64_t seed,
                                  int budget) {
  const Field &F = a.field();
  DivisionReport rep{DivisionStatus::ProbablyYes, {}, {}, "", 0};
  auto scalar_of = [&](const std::vector<Fel> &v) -> std::optional<Fel> {
    // v = c * unit?
    int lead = -1;
    for (int k = 0; k < a.dim(); ++k)
      if (sgn(a.unit()[k]) != 0) {
        lead = k;
        break;
      }
    Fel c = F.div(v[lead], a.unit()[lead]);
    for (int k = 0; k < a.dim(); ++k)
      if (v[k] != F.mul(c, a.unit()[k]))
        return std::nullopt;
    return c;
  };
  CandidateSchedule sched(a, seed);
  std::vector<std::pair<std::vector<Fel>, Fel>> pures; // (u, u^2 scalar)
  for (int tries = 0; tries < budget; ++tries) {
    auto cand = sched.next();
    if (!cand)
      continue;
    Poly mp = min_poly(a, *cand);
    if (mp.degree() != 2)
      continue;
    // u = z + t/2 has u^2 scalar, where mp = x^2 - tr x + nm... shift
    Fel tr = F.neg(mp.coeff(1));
    std::vector<Fel> u = *cand;
    Fel half_tr = F.div(tr, F.from_long(2));
    for (int k = 0; k < a.dim(); ++k)
      u[k] = F.sub(u[k], F.mul(half_tr, a.unit()[k]));
    auto alpha = scalar_of(a.multiply(u, u));
    if (!alpha || is_zero_vec(F, u))
      continue;
    if (sgn(*alpha) == 0)
      continue;
    // try to pair with an earlier pure element
    for (auto &[v, beta0] : pures) {
      // s = uv + vu should be scalar; orthogonalize w := v - s/(2 alpha) u
      std::vector<Fel> uv = a.multiply(u, v), vu = a.multiply(v, u);
      std::vector<Fel> s(a.dim());
      for (int k = 0; k < a.dim(); ++k)
        s[k] = F.add(uv[k], vu[k]);
      auto sc = scalar_of(s);
      if (!sc)
        continue;
      std::vector<Fel> w = v;
      Fel coef = F.div(*sc, F.mul(F.from_long(2), *alpha));
      for (int k = 0; k < a.dim(); ++k)
        w[k] = F.sub(w[k], F.mul(coef, u[k]));
      if (is_zero_vec(F, w))
        continue;
      auto beta = scalar_of(a.multiply(w, w));
      if (!beta || sgn(*beta) == 0)
        continue;
      // quaternion algebra (alpha, beta / Q): definite iff both negative
      if (sgn(*alpha) < 0 && sgn(*beta) < 0) {
        rep.status = DivisionStatus::Yes;
        rep.detail = "anisotropic quaternion norm form (alpha, beta both "
                     "negative): " +
                     F.to_string(*alpha) + ", " + F.to_string(*beta);
        return rep;
      }
    }
    pures.emplace_back(u, *alpha);
    // alpha a perfect square => (u - c)(u + c) = 0
    if (sgn(*alpha) > 0) {
      mpq_class al = *alpha;
      mpz_class nr, dr;
      if (mpz_perfect_square_p(al.get_num().get_mpz_t()) &&
          mpz_perfect_square_p(al.get_den().get_mpz_t())) {
        mpz_sqrt(nr.get_mpz_t(), al.get_num().get_mpz_t());
        mpz_sqrt(dr.get_mpz_t(), al.get_den().get_mpz_t());
        Fel c = F.reduce(mpq_class(nr, dr));
        std::vector<Fel> x = u, y = u;
        for (int k = 0; k < a.dim(); ++k) {
          x[k] = F.sub(u[k], F.mul(c, a.unit()[k]));
          y[k] = F.add(u[k], F.mul(c, a.unit()[k]));
        }
        return {DivisionStatus::No, x, y, "square element of the norm form",
                tries};
      }
    }
  }
  rep.detail = "dim 4 over the center without an anisotropy certificate";
  return rep;
}

} // namespace

DivisionReport is_division_algebra(const Algebra &a, std::uint64_t seed,
                                   int budget) {
  const Field &F = a.field();
  if (a.dim() == 1)
    return {DivisionStatus::Yes, {}, {}, "one-dimensional algebra", 0};
  // nonzero radical: nilpotent witness
  Subspace rad = radical(a);
  if (rad.dim() > 0) {
    std::vector<Fel> n = rad.basis().row(0);
    std::vector<Fel> x = n, prev = n;
    while (!is_zero_vec(F, x)) {
      prev = x;
      x = a.multiply(x, n);
    }
    return {DivisionStatus::No, prev, n, "nonzero radical", 0};
  }
  if (auto zd = find_zero_divisor(a, seed, budget))
    return {DivisionStatus::No, zd->first, zd->second,
            "zero divisor from a reducible minimal polynomial", 0};
  if (F.is_finite()) {
    // Wedderburn: finite division algebras are fields
    if (a.is_commutative()) {
      SplitResult s = split_commutative(a, seed, budget);
      if (s.idempotents.size() > 1) {
        return {DivisionStatus::No, s.idempotents[0], s.idempotents[1],
                "orthogonal idempotents", 0};
      }
      if (s.certified)
        return {DivisionStatus::Yes, {}, {}, "finite field component", 0};
      // keep searching for a primitive element; bounded by field size
    }
    // not a division algebra; a zero divisor exists, enlarge the search
    int extended = budget;
    while (true) {
      extended *= 4;
      if (a.is_commutative()) {
        SplitResult s = split_commutative(a, seed + extended, extended);
        if (s.idempotents.size() > 1)
          return {DivisionStatus::No, s.idempotents[0], s.idempotents[1],
                  "orthogonal idempotents", extended};
        if (s.certified)
          return {DivisionStatus::Yes, {}, {}, "finite field component",
                  extended};
      } else if (auto zd = find_zero_divisor(a, seed + extended, extended)) {
        return {DivisionStatus::No, zd->first, zd->second,
                "zero divisor (extended search)", extended};
      }
      if (extended > 1 << 20)
        throw UndecidedError("finite-field division certification budget "
                             "exhausted unexpectedly");
    }
  }
  // char 0: analyze over the center
  CenterResult z = center(a);
  SplitResult zsplit = split_commutative(z.algebra, seed, budget);
  if (zsplit.idempotents.size() > 1) {
    auto lift = [&](const std::vector<Fel> &v) {
      std::vector<Fel> r(a.dim(), F.zero());
      for (int i = 0; i < z.basis.rows(); ++i)
        for (int j = 0; j < a.dim(); ++j)
          r[j] = F.add(r[j], F.mul(v[i], z.basis.at(i, j)));
      return r;
    };
    return {DivisionStatus::No, lift(zsplit.idempotents[0]),
            lift(zsplit.idempotents[1]), "central orthogonal idempotents", 0};
  }
  if (!zsplit.certified)
    return {DivisionStatus::ProbablyYes, {}, {},
            "center not certified a field within budget", budget};
  if (a.dim() == z.subspace.dim())
    return {DivisionStatus::Yes, {}, {}, "commutative with field center", 0};
  if (z.subspace.dim() * 4 == a.dim() && F.kind() == Field::Kind::Rationals &&
      z.subspace.dim() == 1)
    return quaternion_certify(a, seed, budget);
  return {DivisionStatus::ProbablyYes, {}, {},
          "no zero divisor found within budget; certification out of scope "
          "beyond quaternions",
          budget};
}

std::optional<std::vector<Fel>> proper_idempotent(const Algebra &a,
                                                  std::uint64_t seed,
                                                  int budget) {
  const Field &F = a.field();
  DivisionReport rep = is_division_algebra(a, seed, budget);
  if (rep.status == DivisionStatus::ProbablyYes)
    throw UndecidedError("idempotent search undecided: " + rep.detail);
  if (rep.status == DivisionStatus::Yes)
    return std::nullopt;
  // the left ideal A*z for the zero divisor z is proper and nonzero; in a
  // semisimple algebra it has a right identity, which is idempotent
  const std::vector<Fel> &z = rep.witness_x;
  std::vector<std::vector<Fel>> span;
  for (int i = 0; i < a.dim(); ++i)
    span.push_back(a.multiply(a.basis_vector(i), z));
  Subspace ideal = Subspace::from_span(Matrix::from_rows(F, span));
  if (ideal.dim() == 0 || ideal.dim() == a.dim())
    throw AlgebraError("zero-divisor left ideal is not proper");
  int di = ideal.dim();
  Matrix sys(F, di * a.dim(), di);
  Matrix rhs(F, di * a.dim(), 1);
  for (int b = 0; b < di; ++b) {
    std::vector<Fel> bv = ideal.basis().row(b);
    for (int j = 0; j < di; ++j) {
      std::vector<Fel> prod = a.multiply(bv, ideal.basis().row(j));
      for (int k = 0; k < a.dim(); ++k)
        sys.at(b * a.dim() + k, j) = prod[k];
    }
    for (int k = 0; k < a.dim(); ++k)
      rhs.at(b * a.dim() + k, 0) = bv[k];
  }
  SolveResult s = solve_all(sys, rhs);
  if (!s.consistent)
    throw AlgebraError("no right identity in a left ideal of a semisimple "
                       "algebra");
  std::vector<Fel> e(a.dim(), F.zero());
  for (int j = 0; j < di; ++j)
    for (int k = 0; k < a.dim(); ++k)
      e[k] = F.add(e[k], F.mul(s.particular.at(j, 0), ideal.basis().at(j, k)));
  if (a.multiply(e, e) != e || e == a.unit())
    throw AlgebraError("right identity is not a proper idempotent");
  return e;
}

} // namespace skewlab
