#pragma once

#include "skewlab/matrix.hpp"
#include "skewlab/poly.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace skewlab {

struct AlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Undecided outcomes are surfaced, never guessed around.
struct UndecidedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Quiver {
public:
  struct Arrow {
    std::string name;
    int source;
    int target;
  };

  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  int nvertices() const { return static_cast<int>(vertices_.size()); }
  int narrows() const { return static_cast<int>(arrows_.size()); }
  const std::vector<std::string> &vertices() const { return vertices_; }
  const std::vector<Arrow> &arrows() const { return arrows_; }
  int vertex_index(const std::string &label) const;

private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

/// Basis tag for algebras built from quivers: basis elements are paths.
struct PathBasis {
  struct Path {
    int source;
    int target;
    std::vector<int> arrows; // empty = trivial path e_source
  };
  Quiver quiver;
  std::vector<Path> paths;            // aligned with the algebra basis
  std::vector<int> vertex_idempotent; // vertex -> basis index of e_v
};

/// Finite-dimensional associative unital algebra by structure constants:
/// b_i * b_j = sum_k c[i][j][k] b_k. Associativity and the unit law are
/// checked at construction.
class Algebra {
public:
  Algebra(const Field &f, std::vector<std::string> basis_labels,
          std::vector<Fel> structure, std::vector<Fel> unit,
          std::vector<std::vector<Fel>> generators = {});

  static Algebra path_algebra(const Quiver &q, const Field &f);
  /// The base field as a one-dimensional algebra.
  static Algebra scalar(const Field &f);

  const Field &field() const { return field_; }
  int dim() const { return dim_; }
  const std::vector<std::string> &basis_labels() const { return labels_; }
  const std::vector<Fel> &unit() const { return unit_; }
  const std::vector<std::vector<Fel>> &generators() const { return gens_; }

  const Fel &c(int i, int j, int k) const {
    return structure_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k];
  }
  const std::vector<Fel> &structure() const { return structure_; }

  std::vector<Fel> multiply(const std::vector<Fel> &x,
                            const std::vector<Fel> &y) const;
  /// Matrix of y |-> x*y in the row-vector convention.
  Matrix left_mult(const std::vector<Fel> &x) const;
  /// Matrix of y |-> y*x.
  Matrix right_mult(const std::vector<Fel> &x) const;
  std::vector<Fel> basis_vector(int i) const;
  bool is_commutative() const;

  bool has_path_basis() const { return path_basis_.has_value(); }
  const PathBasis &path_basis() const;

private:
  void validate() const;
  Field field_;
  int dim_;
  std::vector<std::string> labels_;
  std::vector<Fel> structure_;
  std::vector<Fel> unit_;
  std::vector<std::vector<Fel>> gens_;
  std::optional<PathBasis> path_basis_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Structure constants induced on an explicitly given basis of a
/// multiplicatively closed subspace (with the given unit).
Algebra algebra_on_subspace(const Algebra &ambient, const Matrix &basis_rows,
                            const std::vector<Fel> &unit_ambient,
                            const std::string &label_prefix = "c");

/// Jacobson radical via the trace form (Dickson criterion).
/// Requires char 0 or char p > dim.
Subspace radical(const Algebra &a);

struct QuotientResult {
  Algebra algebra;
  /// dim(A) x dim(A/I) matrix of the projection in the row convention.
  Matrix projection;
  /// Rows lift the quotient basis back into A.
  Matrix section;
};

/// Quotient by a validated two-sided ideal.
QuotientResult quotient(const Algebra &a, const Subspace &ideal);

struct CenterResult {
  Subspace subspace;
  Algebra algebra; // induced commutative algebra on the center
  Matrix basis;    // rows: center basis in ambient coordinates
};

CenterResult center(const Algebra &a);

/// Minimal polynomial of an element (monic).
Poly min_poly(const Algebra &a, const std::vector<Fel> &x);
/// p(x) evaluated in the algebra.
std::vector<Fel> eval_poly(const Algebra &a, const Poly &p,
                           const std::vector<Fel> &x);

struct SplitResult {
  std::vector<std::vector<Fel>> idempotents; // pairwise orthogonal, sum = 1
  bool certified; // every component certified a field (or dim 1)
  std::string note;
};

/// Primitive orthogonal idempotents of a commutative semisimple algebra.
SplitResult split_commutative(const Algebra &a, std::uint64_t seed = 0,
                              int budget = 64);

/// Lift of an idempotent modulo the radical to an exact idempotent,
/// via e <- 3e^2 - 2e^3.
std::vector<Fel> lift_idempotent(const Algebra &a,
                                 const std::vector<Fel> &e_bar,
                                 const Subspace &rad);

enum class DivisionStatus { Yes, No, ProbablyYes };

struct DivisionReport {
  DivisionStatus status;
  /// For status No: x, y nonzero with x*y = 0.
  std::vector<Fel> witness_x, witness_y;
  std::string detail;
  int samples = 0;
};

DivisionReport is_division_algebra(const Algebra &a, std::uint64_t seed = 0,
                                   int budget = 64);

/// Searches for a zero divisor through minimal polynomials of basis
/// elements, pairwise sums/products, and seeded random elements.
std::optional<std::pair<std::vector<Fel>, std::vector<Fel>>>
find_zero_divisor(const Algebra &a, std::uint64_t seed, int budget);

/// For a semisimple algebra: a nontrivial idempotent (e != 0, 1), or
/// nullopt if the algebra is division. Built as the right identity of the
/// proper left ideal generated by a zero divisor. Throws UndecidedError if
/// division certification stays inconclusive.
std::optional<std::vector<Fel>> proper_idempotent(const Algebra &a,
                                                  std::uint64_t seed = 0,
                                                  int budget = 64);

} // namespace skewlab
