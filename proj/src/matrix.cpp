#include "skewlab/matrix.hpp"

#include <sstream>

#ifdef SKEWLAB_HAVE_OPENMP
#include <omp.h>
#endif

namespace skewlab {

namespace {
constexpr long kParallelThreshold = 1 << 13; // entries touched per pass
}

Matrix::Matrix(const Field &f, int rows, int cols)
    : field_(f), rows_(rows), cols_(cols),
      a_(static_cast<size_t>(rows) * cols, f.zero()) {
  if (rows < 0 || cols < 0)
    throw FieldError("negative matrix dimensions");
}

Matrix Matrix::identity(const Field &f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i)
    m.at(i, i) = f.one();
  return m;
}

Matrix Matrix::from_rows(const Field &f,
                         const std::vector<std::vector<Fel>> &rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Matrix m(f, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw FieldError("ragged rows in matrix literal");
    for (int j = 0; j < c; ++j)
      m.at(i, j) = f.reduce(rows[i][j]);
  }
  return m;
}

static void check_field(const Matrix &a, const Matrix &b) {
  if (a.field() != b.field())
    throw FieldError("field mismatch between matrices");
}

Matrix Matrix::operator+(const Matrix &o) const {
  check_field(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw FieldError("shape mismatch in matrix addition");
  Matrix r(field_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i)
    r.a_[i] = field_.add(a_[i], o.a_[i]);
  return r;
}

Matrix Matrix::operator-(const Matrix &o) const {
  check_field(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw FieldError("shape mismatch in matrix subtraction");
  Matrix r(field_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i)
    r.a_[i] = field_.sub(a_[i], o.a_[i]);
  return r;
}

Matrix Matrix::operator*(const Matrix &o) const { return matmul(*this, o); }

Matrix Matrix::operator*(const Fel &s) const {
  Matrix r(field_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i)
    r.a_[i] = field_.mul(a_[i], s);
  return r;
}

bool Matrix::operator==(const Matrix &o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ &&
         a_ == o.a_;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      r.at(j, i) = at(i, j);
  return r;
}

bool Matrix::is_zero() const {
  for (const auto &x : a_)
    if (sgn(x) != 0)
      return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_)
    return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? field_.one() : field_.zero()))
        return false;
  return true;
}

std::vector<Fel> Matrix::row(int i) const {
  return std::vector<Fel>(a_.begin() + static_cast<size_t>(i) * cols_,
                          a_.begin() + static_cast<size_t>(i + 1) * cols_);
}

void Matrix::set_row(int i, const std::vector<Fel> &v) {
  if (static_cast<int>(v.size()) != cols_)
    throw FieldError("row length mismatch");
  for (int j = 0; j < cols_; ++j)
    at(i, j) = field_.reduce(v[j]);
}

std::vector<Fel> Matrix::vec() const { return a_; }

Matrix Matrix::unvec(const Field &f, const std::vector<Fel> &v, int rows,
                     int cols) {
  if (static_cast<int>(v.size()) != rows * cols)
    throw FieldError("unvec size mismatch");
  Matrix m(f, rows, cols);
  m.a_ = v;
  for (auto &x : m.a_)
    x = f.reduce(x);
  return m;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << "[";
    for (int j = 0; j < cols_; ++j)
      os << (j ? " " : "") << field_.to_string(at(i, j));
    os << "]\n";
  }
  return os.str();
}

Matrix matmul_serial(const Matrix &a, const Matrix &b) {
  check_field(a, b);
  if (a.cols() != b.rows())
    throw FieldError("shape mismatch in matrix product");
  const Field &F = a.field();
  Matrix r(F, a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Fel &aik = a.at(i, k);
      if (sgn(aik) == 0)
        continue;
      for (int j = 0; j < b.cols(); ++j) {
        const Fel &bkj = b.at(k, j);
        if (sgn(bkj) != 0)
          r.at(i, j) = F.add(r.at(i, j), F.mul(aik, bkj));
      }
    }
  return r;
}

Matrix matmul(const Matrix &a, const Matrix &b) {
  check_field(a, b);
  if (a.cols() != b.rows())
    throw FieldError("shape mismatch in matrix product");
#ifdef SKEWLAB_HAVE_OPENMP
  long work = static_cast<long>(a.rows()) * a.cols() * b.cols();
  if (work >= kParallelThreshold && a.rows() > 1) {
    const Field &F = a.field();
    Matrix r(F, a.rows(), b.cols());
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < a.rows(); ++i)
      for (int k = 0; k < a.cols(); ++k) {
        const Fel &aik = a.at(i, k);
        if (sgn(aik) == 0)
          continue;
        for (int j = 0; j < b.cols(); ++j) {
          const Fel &bkj = b.at(k, j);
          if (sgn(bkj) != 0)
            r.at(i, j) = F.add(r.at(i, j), F.mul(aik, bkj));
        }
      }
    return r;
  }
#endif
  return matmul_serial(a, b);
}

RrefResult rref_serial(const Matrix &m) {
  const Field &F = m.field();
  Matrix a = m;
  std::vector<int> pivots;
  int r = 0;
  for (int col = 0; col < a.cols() && r < a.rows(); ++col) {
    int pr = -1;
    for (int i = r; i < a.rows(); ++i)
      if (sgn(a.at(i, col)) != 0) {
        pr = i;
        break;
      }
    if (pr < 0)
      continue;
    if (pr != r)
      for (int j = 0; j < a.cols(); ++j)
        swap(a.at(pr, j), a.at(r, j));
    Fel inv = F.inv(a.at(r, col));
    for (int j = col; j < a.cols(); ++j)
      a.at(r, j) = F.mul(a.at(r, j), inv);
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || sgn(a.at(i, col)) == 0)
        continue;
      Fel f = a.at(i, col);
      for (int j = col; j < a.cols(); ++j)
        a.at(i, j) = F.sub(a.at(i, j), F.mul(f, a.at(r, j)));
    }
    pivots.push_back(col);
    ++r;
  }
  return {std::move(a), std::move(pivots), r};
}

RrefResult rref(const Matrix &m) {
#ifdef SKEWLAB_HAVE_OPENMP
  long work = static_cast<long>(m.rows()) * m.cols();
  if (work >= kParallelThreshold && m.rows() > 1) {
    const Field &F = m.field();
    Matrix a = m;
    std::vector<int> pivots;
    int r = 0;
    for (int col = 0; col < a.cols() && r < a.rows(); ++col) {
      int pr = -1;
      for (int i = r; i < a.rows(); ++i)
        if (sgn(a.at(i, col)) != 0) {
          pr = i;
          break;
        }
      if (pr < 0)
        continue;
      if (pr != r)
        for (int j = 0; j < a.cols(); ++j)
          swap(a.at(pr, j), a.at(r, j));
      Fel inv = F.inv(a.at(r, col));
      for (int j = col; j < a.cols(); ++j)
        a.at(r, j) = F.mul(a.at(r, j), inv);
      // row eliminations are independent of one another
#pragma omp parallel for schedule(dynamic)
      for (int i = 0; i < a.rows(); ++i) {
        if (i == r || sgn(a.at(i, col)) == 0)
          continue;
        Fel f = a.at(i, col);
        for (int j = col; j < a.cols(); ++j)
          a.at(i, j) = F.sub(a.at(i, j), F.mul(f, a.at(r, j)));
      }
      pivots.push_back(col);
      ++r;
    }
    return {std::move(a), std::move(pivots), r};
  }
#endif
  return rref_serial(m);
}

int rank(const Matrix &m) { return rref(m).rank; }

Matrix left_kernel(const Matrix &m) {
  // Solve v*M = 0 <=> M^T v^T = 0: nullspace of M^T via RREF.
  const Field &F = m.field();
  RrefResult r = rref(m.transpose());
  int n = m.rows();
  std::vector<bool> is_pivot(n, false);
  for (int p : r.pivots)
    is_pivot[p] = true;
  Matrix basis(F, n - r.rank, n);
  int bi = 0;
  for (int freec = 0; freec < n; ++freec) {
    if (is_pivot[freec])
      continue;
    basis.at(bi, freec) = F.one();
    for (int pr = 0; pr < r.rank; ++pr)
      basis.at(bi, r.pivots[pr]) = F.neg(r.mat.at(pr, freec));
    ++bi;
  }
  // already in (reversed-order) echelon form; canonicalize anyway
  return rref(basis).mat;
}

Matrix kernel(const Matrix &m) { return left_kernel(m.transpose()); }

Matrix kronecker(const Matrix &a, const Matrix &b) {
  check_field(a, b);
  const Field &F = a.field();
  Matrix r(F, a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const Fel &aij = a.at(i, j);
      if (sgn(aij) == 0)
        continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          r.at(i * b.rows() + k, j * b.cols() + l) = F.mul(aij, b.at(k, l));
    }
  return r;
}

Matrix inverse(const Matrix &m) {
  if (m.rows() != m.cols())
    throw FieldError("inverse of a non-square matrix");
  const Field &F = m.field();
  int n = m.rows();
  Matrix aug(F, n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = F.one();
  }
  RrefResult r = rref(aug);
  if (r.rank < n || r.pivots[n - 1] >= n)
    throw FieldError("matrix is singular");
  for (int i = 0; i < n; ++i)
    if (r.pivots[i] != i)
      throw FieldError("matrix is singular");
  Matrix inv(F, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      inv.at(i, j) = r.mat.at(i, n + j);
  return inv;
}

Fel trace(const Matrix &m) {
  if (m.rows() != m.cols())
    throw FieldError("trace of a non-square matrix");
  const Field &F = m.field();
  Fel t = F.zero();
  for (int i = 0; i < m.rows(); ++i)
    t = F.add(t, m.at(i, i));
  return t;
}

SolveResult solve_all(const Matrix &a, const Matrix &b) {
  check_field(a, b);
  if (a.rows() != b.rows())
    throw FieldError("shape mismatch in solve");
  const Field &F = a.field();
  int n = a.cols(), k = b.cols();
  Matrix aug(F, a.rows(), n + k);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < n; ++j)
      aug.at(i, j) = a.at(i, j);
    for (int j = 0; j < k; ++j)
      aug.at(i, n + j) = b.at(i, j);
  }
  RrefResult r = rref(aug);
  Matrix particular(F, n, k);
  for (int pr = 0; pr < r.rank; ++pr) {
    if (r.pivots[pr] >= n)
      return {false, Matrix(F, n, k), kernel(a)};
    for (int j = 0; j < k; ++j)
      particular.at(r.pivots[pr], j) = r.mat.at(pr, n + j);
  }
  return {true, std::move(particular), kernel(a)};
}

std::vector<Fel> coordinates_in_rref(const RrefResult &basis,
                                     const std::vector<Fel> &v) {
  const Field &F = basis.mat.field();
  std::vector<Fel> residual = v;
  std::vector<Fel> coords(basis.rank, F.zero());
  for (int i = 0; i < basis.rank; ++i) {
    const Fel &c = residual[basis.pivots[i]];
    if (sgn(c) == 0)
      continue;
    coords[i] = c;
    for (int j = 0; j < basis.mat.cols(); ++j)
      residual[j] = F.sub(residual[j], F.mul(coords[i], basis.mat.at(i, j)));
  }
  for (const auto &x : residual)
    if (sgn(x) != 0)
      throw FieldError("vector outside subspace in coordinate solve");
  return coords;
}

Subspace::Subspace(const Field &f, int ambient_dim)
    : basis_(f, 0, ambient_dim) {}

Subspace Subspace::from_span(const Matrix &span) {
  RrefResult r = rref(span);
  Matrix b(span.field(), r.rank, span.cols());
  for (int i = 0; i < r.rank; ++i)
    for (int j = 0; j < span.cols(); ++j)
      b.at(i, j) = r.mat.at(i, j);
  return Subspace(std::move(b));
}

bool Subspace::contains(const std::vector<Fel> &v) const {
  const Field &F = field();
  std::vector<Fel> residual = v;
  for (auto &x : residual)
    x = F.reduce(x);
  for (int i = 0; i < dim(); ++i) {
    int lead = -1;
    for (int j = 0; j < ambient_dim(); ++j)
      if (sgn(basis_.at(i, j)) != 0) {
        lead = j;
        break;
      }
    const Fel c = residual[lead];
    if (sgn(c) == 0)
      continue;
    for (int j = 0; j < ambient_dim(); ++j)
      residual[j] = F.sub(residual[j], F.mul(c, basis_.at(i, j)));
  }
  for (const auto &x : residual)
    if (sgn(x) != 0)
      return false;
  return true;
}

bool Subspace::contains(const Subspace &other) const {
  for (int i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i)))
      return false;
  return true;
}

bool Subspace::operator==(const Subspace &o) const { return basis_ == o.basis_; }

Subspace Subspace::sum(const Subspace &o) const {
  if (ambient_dim() != o.ambient_dim())
    throw FieldError("ambient dimension mismatch");
  Matrix stacked(field(), dim() + o.dim(), ambient_dim());
  for (int i = 0; i < dim(); ++i)
    stacked.set_row(i, basis_.row(i));
  for (int i = 0; i < o.dim(); ++i)
    stacked.set_row(dim() + i, o.basis_.row(i));
  return from_span(stacked);
}

Subspace Subspace::intersect(const Subspace &o) const {
  if (ambient_dim() != o.ambient_dim())
    throw FieldError("ambient dimension mismatch");
  if (field() != o.field())
    throw FieldError("field mismatch");
  // (a,b) with a*U + b*V = 0  =>  a*U spans the intersection
  Matrix stacked(field(), dim() + o.dim(), ambient_dim());
  for (int i = 0; i < dim(); ++i)
    stacked.set_row(i, basis_.row(i));
  for (int i = 0; i < o.dim(); ++i)
    stacked.set_row(dim() + i, o.basis_.row(i));
  Matrix relations = left_kernel(stacked);
  Matrix span(field(), relations.rows(), ambient_dim());
  for (int i = 0; i < relations.rows(); ++i)
    for (int j = 0; j < ambient_dim(); ++j) {
      Fel acc = field().zero();
      for (int t = 0; t < dim(); ++t)
        acc = field().add(acc, field().mul(relations.at(i, t), basis_.at(t, j)));
      span.at(i, j) = acc;
    }
  return from_span(span);
}

} // namespace skewlab
