#pragma once

#include <cstddef>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hopfcyc/scalar.hpp"

namespace hopfcyc {

/// Sparse vector: (index, value) pairs sorted by index, no stored zeros.
using SparseVec = std::vector<std::pair<int, Scalar>>;

SparseVec unit_vec(int i, const Field& f);
SparseVec vec_add(const SparseVec& a, const SparseVec& b);
/// a + c*b
SparseVec vec_axpy(const SparseVec& a, const Scalar& c, const SparseVec& b);
SparseVec vec_scale(const SparseVec& a, const Scalar& c);
Scalar vec_at(const SparseVec& a, int i, const Field& f);
/// Sorts by index and merges duplicates, dropping zeros.
SparseVec vec_normalize(std::vector<std::pair<int, Scalar>> entries);

/// Ordered basis with labels.
struct IndexedSpace {
  std::string name;
  std::vector<std::string> basis;
  int dim() const { return static_cast<int>(basis.size()); }
  /// -1 when absent.
  int index_of(const std::string& label) const;
  static IndexedSpace numbered(const std::string& name, int dim);
  /// Row-major tensor basis "a|b".
  static IndexedSpace tensor(const IndexedSpace& a, const IndexedSpace& b);
};

/// Column-major sparse matrix over a single field.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(int rows, int cols, const Field& f);

  static SparseMatrix identity(int n, const Field& f);
  static SparseMatrix zero(int rows, int cols, const Field& f) { return {rows, cols, f}; }
  static SparseMatrix from_columns(int rows, const Field& f, std::vector<SparseVec> cols);
  static SparseMatrix from_entries(int rows, int cols, const Field& f,
                                   const std::vector<std::tuple<int, int, Scalar>>& entries);

  int rows() const { return rows_; }
  int cols() const { return static_cast<int>(cols_.size()); }
  const Field& field() const { return field_; }

  const SparseVec& col(int j) const { return cols_[j]; }
  /// Replaces column j; zeros dropped, field and bounds checked.
  void set_col(int j, SparseVec v);
  Scalar at(int i, int j) const;
  std::size_t nnz() const;
  bool is_zero() const;

  SparseMatrix transpose() const;
  SparseMatrix operator*(const SparseMatrix& o) const;
  SparseMatrix operator+(const SparseMatrix& o) const;
  SparseMatrix operator-(const SparseMatrix& o) const;
  SparseMatrix scaled(const Scalar& c) const;
  SparseVec apply(const SparseVec& v) const;
  /// Columns [from, to).
  SparseMatrix column_range(int from, int to) const;
  SparseMatrix power(int k) const;

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator!=(const SparseMatrix& a, const SparseMatrix& b) { return !(a == b); }

  std::vector<std::vector<Scalar>> to_dense() const;
  std::string to_string() const;

 private:
  int rows_ = 0;
  Field field_;
  std::vector<SparseVec> cols_;
};

/// Kronecker product; basis e_i (x) e_j of the result has index i*dim_b + j.
SparseMatrix tensor(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix hstack(const std::vector<SparseMatrix>& blocks);
SparseMatrix vstack(const std::vector<SparseMatrix>& blocks);
SparseMatrix block_diagonal(const std::vector<SparseMatrix>& blocks);

/// Incremental row echelon form of a span.  Rows are normalized to 1 at their
/// pivot and vanish at the pivots of earlier rows; `make_reduced` upgrades to RREF.
class Echelon {
 public:
  Echelon(int dim, const Field& f);

  /// Adds v to the span; returns whether the rank grew.
  bool add(const SparseVec& v, int pivot_hint = -1);
  /// Adds many vectors, sparsest first, choosing pivots in short columns.
  void add_all(const std::vector<SparseVec>& vs);
  /// Residue of v after elimination against all rows.
  SparseVec reduce(const SparseVec& v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  void make_reduced();

  int rank() const { return static_cast<int>(rows_.size()); }
  int dim() const { return dim_; }
  const Field& field() const { return field_; }
  const std::vector<SparseVec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }
  /// Row index with the given pivot, or -1.
  int row_of_pivot(int coord) const { return pivot_row_[coord]; }
  bool reduced() const { return reduced_; }

 private:
  SparseVec reduce_impl(const SparseVec& v) const;

  int dim_;
  Field field_;
  std::vector<SparseVec> rows_;
  std::vector<int> pivots_;
  std::vector<int> pivot_row_;
  bool reduced_ = true;
  std::vector<int> col_weight_;
};

int rank(const SparseMatrix& m);
/// Null space basis, count = cols - rank.
std::vector<SparseVec> kernel_basis(const SparseMatrix& m);
int quotient_dim(int ambient_dim, const std::vector<SparseVec>& spanning);

/// Subspace of k^dim with an RREF basis; coordinates are read off at pivots.
class Subspace {
 public:
  Subspace() = default;
  Subspace(int ambient, const Field& f, const std::vector<SparseVec>& spanning);
  static Subspace whole(int ambient, const Field& f);

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<SparseVec>& basis() const { return basis_; }
  const Field& field() const { return field_; }
  /// Coordinates in the basis, or false if v is not in the subspace.
  bool coordinates(const SparseVec& v, SparseVec& out) const;
  /// Inclusion matrix ambient x dim.
  SparseMatrix inclusion() const;

 private:
  int ambient_ = 0;
  Field field_;
  std::vector<SparseVec> basis_;
  std::vector<int> pivots_;
  std::vector<int> pivot_pos_;
};

/// Quotient k^dim / span(relations), with the non-pivot coordinates as basis.
class Quotient {
 public:
  Quotient() = default;
  Quotient(int ambient, const Field& f, const std::vector<SparseVec>& relations);
  static Quotient whole(int ambient, const Field& f);

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(complement_.size()); }
  const Field& field() const { return field_; }
  /// Ambient coordinates standing for the quotient basis.
  const std::vector<int>& complement() const { return complement_; }
  SparseVec project(const SparseVec& v) const;
  SparseMatrix projection() const;
  SparseMatrix section() const;
  const Echelon& relations() const { return relations_; }

 private:
  int ambient_ = 0;
  Field field_;
  Echelon relations_{0, Field::rational()};
  std::vector<int> complement_;
  std::vector<int> position_;
};

/// Matrix of op restricted to src -> dst; throws RestrictionError when the
/// image of src is not contained in dst.
SparseMatrix restrict_to(const SparseMatrix& op, const Subspace& src, const Subspace& dst);
bool restricts(const SparseMatrix& op, const Subspace& src, const Subspace& dst);
/// Matrix induced on quotients; throws RestrictionError when op does not descend.
SparseMatrix descend_to(const SparseMatrix& op, const Quotient& src, const Quotient& dst);
bool descends(const SparseMatrix& op, const Quotient& src, const Quotient& dst);

/// Default ambient-dimension cap per chain degree.
constexpr long long kDefaultBudget = 200000;
void check_budget(long long dim, long long budget, const std::string& what);

}  // namespace hopfcyc
