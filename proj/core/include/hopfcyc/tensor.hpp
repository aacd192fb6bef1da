#pragma once

#include <vector>

#include "hopfcyc/linalg.hpp"

namespace hopfcyc {

/// Finite linear combination of pure basis tensors e_{i_1} (x) ... (x) e_{i_k}.
/// Leg operations take structure maps as matrices; a map into a tensor
/// square U (x) W is decoded with row index u*dim(W) + w.
class TensorExpr {
 public:
  struct Term {
    Scalar coef;
    std::vector<int> legs;
  };

  explicit TensorExpr(const Field& f) : field_(f) {}
  static TensorExpr basis(const std::vector<int>& legs, const Field& f);
  /// Unflattens index in the mixed radix given by dims (first leg most significant).
  static TensorExpr from_index(long long index, const std::vector<int>& dims, const Field& f);
  static std::vector<int> unflatten(long long index, const std::vector<int>& dims);
  static long long flatten_index(const std::vector<int>& legs, const std::vector<int>& dims);

  const Field& field() const { return field_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  void add_term(Scalar c, std::vector<int> legs);
  TensorExpr& add(const TensorExpr& o, const Scalar& c);
  TensorExpr& scale(const Scalar& c);

  /// leg <- m(leg)
  TensorExpr& map(int leg, const SparseMatrix& m);
  /// leg -> two legs (leg, leg+1) via m: U -> U1 (x) U2 with dim(U2) = d2.
  TensorExpr& split(int leg, const SparseMatrix& m, int d2);
  /// Legs i (left factor) and j (right factor) -> one leg through m: U (x) W -> X
  /// with dim(W) = dw.  The result sits where `keep` was; the other leg is removed.
  TensorExpr& merge(int i, int j, const SparseMatrix& m, int dw, int keep);
  TensorExpr& merge(int i, int j, const SparseMatrix& m, int dw) { return merge(i, j, m, dw, i); }
  /// Removes leg, multiplying by the covector (a 1 x d matrix) evaluated on it.
  TensorExpr& contract(int leg, const SparseMatrix& covector);
  /// Inserts a new leg at position pos holding vector v.
  TensorExpr& insert(int pos, const SparseVec& v);
  /// Moves leg `from` to position `to` (other legs keep their order).
  TensorExpr& move(int from, int to);
  /// Sums equal tensors and drops zeros.
  TensorExpr& compress();

  int arity() const;
  SparseVec flatten(const std::vector<int>& dims) const;

 private:
  Field field_;
  std::vector<Term> terms_;
};

/// Builds the matrix of a linear map on basis tensors.  `fn` receives the
/// unflattened input legs and returns the image.
template <class Fn>
SparseMatrix tensor_operator(const std::vector<int>& in_dims, const std::vector<int>& out_dims,
                             const Field& f, Fn&& fn) {
  long long in = 1, out = 1;
  for (int d : in_dims) in *= d;
  for (int d : out_dims) out *= d;
  SparseMatrix m(static_cast<int>(out), static_cast<int>(in), f);
  for (long long j = 0; j < in; ++j) {
    TensorExpr e = fn(TensorExpr::unflatten(j, in_dims));
    m.set_col(static_cast<int>(j), e.flatten(out_dims));
  }
  return m;
}

}  // namespace hopfcyc
