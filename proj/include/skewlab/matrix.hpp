#pragma once

#include "skewlab/field.hpp"

#include <vector>

namespace skewlab {

/// Dense matrix over an exact field, row-major. The library-wide convention
/// is row vectors acting on the right: a map is v |-> v*M.
class Matrix {
public:
  Matrix(const Field &f, int rows, int cols);
  static Matrix identity(const Field &f, int n);
  static Matrix from_rows(const Field &f,
                          const std::vector<std::vector<Fel>> &rows);

  const Field &field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Fel &at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Fel &at(int i, int j) const {
    return a_[static_cast<size_t>(i) * cols_ + j];
  }

  Matrix operator+(const Matrix &o) const;
  Matrix operator-(const Matrix &o) const;
  Matrix operator*(const Matrix &o) const;
  Matrix operator*(const Fel &s) const;
  bool operator==(const Matrix &o) const;
  bool operator!=(const Matrix &o) const { return !(*this == o); }

  Matrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;
  std::vector<Fel> row(int i) const;
  void set_row(int i, const std::vector<Fel> &v);
  /// Row-major flattening.
  std::vector<Fel> vec() const;
  static Matrix unvec(const Field &f, const std::vector<Fel> &v, int rows,
                      int cols);
  std::string to_string() const;

private:
  Field field_;
  int rows_, cols_;
  std::vector<Fel> a_;
};

struct RrefResult {
  Matrix mat;
  std::vector<int> pivots;
  int rank;
};

/// Reduced row echelon form. Uses OpenMP for large inputs.
RrefResult rref(const Matrix &m);
/// Textbook serial implementation, kept as the reference for testing.
RrefResult rref_serial(const Matrix &m);

Matrix matmul(const Matrix &a, const Matrix &b);
Matrix matmul_serial(const Matrix &a, const Matrix &b);

int rank(const Matrix &m);
/// Rows span {v : v*M = 0}; RREF-canonical.
Matrix left_kernel(const Matrix &m);
/// Rows span {x : M*x^T = 0}; satisfies rank + dim = cols.
Matrix kernel(const Matrix &m);
Matrix kronecker(const Matrix &a, const Matrix &b);
/// Inverse of a square invertible matrix; throws if singular.
Matrix inverse(const Matrix &m);
Fel trace(const Matrix &m);

struct SolveResult {
  bool consistent;
  Matrix particular;   // X with A*X = B (zero matrix if inconsistent)
  Matrix kernel_basis; // rows span {x : A*x^T = 0}
};

/// All solutions of A*X = B.
SolveResult solve_all(const Matrix &a, const Matrix &b);

/// Coordinates of v in the row space of an RREF basis; throws if outside.
std::vector<Fel> coordinates_in_rref(const RrefResult &basis,
                                     const std::vector<Fel> &v);

/// Linear subspace of k^n canonicalized by the RREF of a spanning set.
class Subspace {
public:
  Subspace(const Field &f, int ambient_dim); // zero space
  /// Rows of `span` generate the subspace.
  static Subspace from_span(const Matrix &span);

  const Field &field() const { return basis_.field(); }
  int ambient_dim() const { return basis_.cols(); }
  int dim() const { return basis_.rows(); }
  const Matrix &basis() const { return basis_; }

  bool contains(const std::vector<Fel> &v) const;
  bool contains(const Subspace &other) const;
  bool operator==(const Subspace &o) const;

  Subspace sum(const Subspace &o) const;
  Subspace intersect(const Subspace &o) const;

private:
  explicit Subspace(Matrix rref_basis) : basis_(std::move(rref_basis)) {}
  Matrix basis_; // RREF, no zero rows
};

} // namespace skewlab
