#include "hopfcyc/tensor.hpp"

#include <algorithm>
#include <map>

namespace hopfcyc {

TensorExpr TensorExpr::basis(const std::vector<int>& legs, const Field& f) {
  TensorExpr e(f);
  e.terms_.push_back({Scalar::one(f), legs});
  return e;
}

std::vector<int> TensorExpr::unflatten(long long index, const std::vector<int>& dims) {
  std::vector<int> legs(dims.size());
  for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
    legs[k] = static_cast<int>(index % dims[k]);
    index /= dims[k];
  }
  return legs;
}

long long TensorExpr::flatten_index(const std::vector<int>& legs, const std::vector<int>& dims) {
  long long idx = 0;
  for (size_t k = 0; k < dims.size(); ++k) idx = idx * dims[k] + legs[k];
  return idx;
}

TensorExpr TensorExpr::from_index(long long index, const std::vector<int>& dims, const Field& f) {
  return basis(unflatten(index, dims), f);
}

void TensorExpr::add_term(Scalar c, std::vector<int> legs) {
  if (!c.is_zero()) terms_.push_back({std::move(c), std::move(legs)});
}

TensorExpr& TensorExpr::add(const TensorExpr& o, const Scalar& c) {
  for (const auto& t : o.terms_) add_term(t.coef * c, t.legs);
  return *this;
}

TensorExpr& TensorExpr::scale(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coef *= c;
  return *this;
}

TensorExpr& TensorExpr::map(int leg, const SparseMatrix& m) {
  std::vector<Term> out;
  for (const auto& t : terms_)
    for (const auto& [r, v] : m.col(t.legs[leg])) {
      Term n{t.coef * v, t.legs};
      n.legs[leg] = r;
      out.push_back(std::move(n));
    }
  terms_ = std::move(out);
  return *this;
}

TensorExpr& TensorExpr::split(int leg, const SparseMatrix& m, int d2) {
  std::vector<Term> out;
  for (const auto& t : terms_)
    for (const auto& [r, v] : m.col(t.legs[leg])) {
      Term n{t.coef * v, {}};
      n.legs.reserve(t.legs.size() + 1);
      n.legs.insert(n.legs.end(), t.legs.begin(), t.legs.begin() + leg);
      n.legs.push_back(r / d2);
      n.legs.push_back(r % d2);
      n.legs.insert(n.legs.end(), t.legs.begin() + leg + 1, t.legs.end());
      out.push_back(std::move(n));
    }
  terms_ = std::move(out);
  return *this;
}

TensorExpr& TensorExpr::merge(int i, int j, const SparseMatrix& m, int dw, int keep) {
  int drop = keep == i ? j : i;
  std::vector<Term> out;
  for (const auto& t : terms_) {
    int col = t.legs[i] * dw + t.legs[j];
    for (const auto& [r, v] : m.col(col)) {
      Term n{t.coef * v, t.legs};
      n.legs[keep] = r;
      n.legs.erase(n.legs.begin() + drop);
      out.push_back(std::move(n));
    }
  }
  terms_ = std::move(out);
  return *this;
}

TensorExpr& TensorExpr::contract(int leg, const SparseMatrix& covector) {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const SparseVec& c = covector.col(t.legs[leg]);
    if (c.empty()) continue;
    Term n{t.coef * c.front().second, t.legs};
    n.legs.erase(n.legs.begin() + leg);
    out.push_back(std::move(n));
  }
  terms_ = std::move(out);
  return *this;
}

TensorExpr& TensorExpr::insert(int pos, const SparseVec& v) {
  std::vector<Term> out;
  for (const auto& t : terms_)
    for (const auto& [i, x] : v) {
      Term n{t.coef * x, t.legs};
      n.legs.insert(n.legs.begin() + pos, i);
      out.push_back(std::move(n));
    }
  terms_ = std::move(out);
  return *this;
}

TensorExpr& TensorExpr::move(int from, int to) {
  for (auto& t : terms_) {
    int x = t.legs[from];
    t.legs.erase(t.legs.begin() + from);
    t.legs.insert(t.legs.begin() + to, x);
  }
  return *this;
}

TensorExpr& TensorExpr::compress() {
  std::map<std::vector<int>, Scalar> acc;
  for (auto& t : terms_) {
    auto [it, ins] = acc.try_emplace(t.legs, t.coef);
    if (!ins) it->second += t.coef;
  }
  terms_.clear();
  for (auto& [legs, c] : acc)
    if (!c.is_zero()) terms_.push_back({c, legs});
  return *this;
}

int TensorExpr::arity() const { return terms_.empty() ? -1 : static_cast<int>(terms_[0].legs.size()); }

SparseVec TensorExpr::flatten(const std::vector<int>& dims) const {
  std::vector<std::pair<int, Scalar>> entries;
  entries.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (t.legs.size() != dims.size()) throw DimensionMismatch("tensor arity does not match target");
    for (size_t k = 0; k < dims.size(); ++k)
      if (t.legs[k] < 0 || t.legs[k] >= dims[k]) throw DimensionMismatch("tensor leg out of range");
    entries.emplace_back(static_cast<int>(flatten_index(t.legs, dims)), t.coef);
  }
  return vec_normalize(std::move(entries));
}

}  // namespace hopfcyc
