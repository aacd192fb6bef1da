#include "hopfcyc/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace hopfcyc {

SparseVec unit_vec(int i, const Field& f) { return {{i, Scalar::one(f)}}; }

SparseVec vec_axpy(const SparseVec& a, const Scalar& c, const SparseVec& b) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      Scalar v = c * b[j].second;
      if (!v.is_zero()) out.emplace_back(b[j].first, std::move(v));
      ++j;
    } else {
      Scalar v = a[i].second + c * b[j].second;
      if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec vec_add(const SparseVec& a, const SparseVec& b) {
  if (b.empty()) return a;
  return vec_axpy(a, Scalar::one(b.front().second.field()), b);
}

SparseVec vec_scale(const SparseVec& a, const Scalar& c) {
  SparseVec out;
  if (c.is_zero()) return out;
  out.reserve(a.size());
  for (const auto& [i, v] : a) out.emplace_back(i, v * c);
  return out;
}

Scalar vec_at(const SparseVec& a, int i, const Field& f) {
  auto it = std::lower_bound(a.begin(), a.end(), i,
                             [](const auto& e, int k) { return e.first < k; });
  if (it != a.end() && it->first == i) return it->second;
  return Scalar::zero(f);
}

SparseVec vec_normalize(std::vector<std::pair<int, Scalar>> entries) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  SparseVec out;
  out.reserve(entries.size());
  for (auto& e : entries) {
    if (!out.empty() && out.back().first == e.first) {
      out.back().second += e.second;
    } else {
      if (!out.empty() && out.back().second.is_zero()) out.pop_back();
      out.push_back(std::move(e));
    }
  }
  if (!out.empty() && out.back().second.is_zero()) out.pop_back();
  return out;
}

// ---- IndexedSpace ----

int IndexedSpace::index_of(const std::string& label) const {
  for (int i = 0; i < dim(); ++i)
    if (basis[i] == label) return i;
  return -1;
}

IndexedSpace IndexedSpace::numbered(const std::string& name, int dim) {
  IndexedSpace s{name, {}};
  for (int i = 0; i < dim; ++i) s.basis.push_back("e" + std::to_string(i));
  return s;
}

IndexedSpace IndexedSpace::tensor(const IndexedSpace& a, const IndexedSpace& b) {
  IndexedSpace s{a.name + "|" + b.name, {}};
  s.basis.reserve(static_cast<size_t>(a.dim()) * b.dim());
  for (const auto& x : a.basis)
    for (const auto& y : b.basis) s.basis.push_back(x + "|" + y);
  return s;
}

// ---- SparseMatrix ----

SparseMatrix::SparseMatrix(int rows, int cols, const Field& f)
    : rows_(rows), field_(f), cols_(cols) {
  if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix dimension");
}

SparseMatrix SparseMatrix::identity(int n, const Field& f) {
  SparseMatrix m(n, n, f);
  for (int i = 0; i < n; ++i) m.cols_[i] = unit_vec(i, f);
  return m;
}

SparseMatrix SparseMatrix::from_columns(int rows, const Field& f, std::vector<SparseVec> cols) {
  SparseMatrix m(rows, static_cast<int>(cols.size()), f);
  for (size_t j = 0; j < cols.size(); ++j) m.set_col(static_cast<int>(j), std::move(cols[j]));
  return m;
}

SparseMatrix SparseMatrix::from_entries(int rows, int cols, const Field& f,
                                        const std::vector<std::tuple<int, int, Scalar>>& entries) {
  std::vector<std::vector<std::pair<int, Scalar>>> buckets(cols);
  for (const auto& [i, j, v] : entries) {
    if (j < 0 || j >= cols) throw DimensionMismatch("column index out of range");
    buckets[j].emplace_back(i, v);
  }
  SparseMatrix m(rows, cols, f);
  for (int j = 0; j < cols; ++j) m.set_col(j, vec_normalize(std::move(buckets[j])));
  return m;
}

void SparseMatrix::set_col(int j, SparseVec v) {
  if (j < 0 || j >= cols()) throw DimensionMismatch("column index out of range");
  SparseVec clean;
  clean.reserve(v.size());
  int last = -1;
  for (auto& [i, x] : v) {
    if (i < 0 || i >= rows_) throw DimensionMismatch("row index out of range");
    if (i <= last) throw DimensionMismatch("column entries not strictly increasing");
    last = i;
    if (x.field() != field_)
      throw FieldMismatch("entry over " + x.field().name() + " in a matrix over " + field_.name());
    if (!x.is_zero()) clean.emplace_back(i, std::move(x));
  }
  cols_[j] = std::move(clean);
}

Scalar SparseMatrix::at(int i, int j) const { return vec_at(cols_[j], i, field_); }

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : cols_) n += c.size();
  return n;
}

bool SparseMatrix::is_zero() const {
  for (const auto& c : cols_)
    if (!c.empty()) return false;
  return true;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols(), rows_, field_);
  for (int j = 0; j < cols(); ++j)
    for (const auto& [i, v] : cols_[j]) t.cols_[i].emplace_back(j, v);
  return t;
}

SparseVec SparseMatrix::apply(const SparseVec& v) const {
  std::vector<std::pair<int, Scalar>> acc;
  for (const auto& [k, x] : v) {
    if (k < 0 || k >= cols()) throw DimensionMismatch("vector index out of range");
    for (const auto& [i, y] : cols_[k]) acc.emplace_back(i, x * y);
  }
  return vec_normalize(std::move(acc));
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
  if (cols() != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
  if (field_ != o.field_) throw FieldMismatch("matrix product over different fields");
  SparseMatrix r(rows_, o.cols(), field_);
  for (int j = 0; j < o.cols(); ++j) r.cols_[j] = apply(o.cols_[j]);
  return r;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& o) const {
  if (rows_ != o.rows_ || cols() != o.cols()) throw DimensionMismatch("matrix sum shape mismatch");
  if (field_ != o.field_) throw FieldMismatch("matrix sum over different fields");
  SparseMatrix r(rows_, cols(), field_);
  for (int j = 0; j < cols(); ++j) r.cols_[j] = vec_add(cols_[j], o.cols_[j]);
  return r;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& o) const {
  return *this + o.scaled(-Scalar::one(field_));
}

SparseMatrix SparseMatrix::scaled(const Scalar& c) const {
  SparseMatrix r(rows_, cols(), field_);
  for (int j = 0; j < cols(); ++j) r.cols_[j] = vec_scale(cols_[j], c);
  return r;
}

SparseMatrix SparseMatrix::column_range(int from, int to) const {
  SparseMatrix r(rows_, to - from, field_);
  for (int j = from; j < to; ++j) r.cols_[j - from] = cols_[j];
  return r;
}

SparseMatrix SparseMatrix::power(int k) const {
  if (rows_ != cols()) throw DimensionMismatch("power of a non-square matrix");
  SparseMatrix acc = identity(rows_, field_);
  for (int i = 0; i < k; ++i) acc = *this * acc;
  return acc;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols() != b.cols() || a.field_ != b.field_) return false;
  return a.cols_ == b.cols_;
}

std::vector<std::vector<Scalar>> SparseMatrix::to_dense() const {
  std::vector<std::vector<Scalar>> d(rows_, std::vector<Scalar>(cols(), Scalar::zero(field_)));
  for (int j = 0; j < cols(); ++j)
    for (const auto& [i, v] : cols_[j]) d[i][j] = v;
  return d;
}

std::string SparseMatrix::to_string() const {
  std::ostringstream os;
  auto d = to_dense();
  for (const auto& row : d) {
    for (size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j].to_string();
    os << "\n";
  }
  return os.str();
}

SparseMatrix tensor(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.field() != b.field()) throw FieldMismatch("tensor product over different fields");
  SparseMatrix r(a.rows() * b.rows(), a.cols() * b.cols(), a.field());
  for (int ja = 0; ja < a.cols(); ++ja)
    for (int jb = 0; jb < b.cols(); ++jb) {
      SparseVec c;
      c.reserve(a.col(ja).size() * b.col(jb).size());
      for (const auto& [ia, x] : a.col(ja))
        for (const auto& [ib, y] : b.col(jb)) c.emplace_back(ia * b.rows() + ib, x * y);
      r.set_col(ja * b.cols() + jb, std::move(c));
    }
  return r;
}

SparseMatrix hstack(const std::vector<SparseMatrix>& blocks) {
  if (blocks.empty()) throw DimensionMismatch("hstack of nothing");
  int cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != blocks[0].rows()) throw DimensionMismatch("hstack row mismatch");
    cols += b.cols();
  }
  SparseMatrix r(blocks[0].rows(), cols, blocks[0].field());
  int off = 0;
  for (const auto& b : blocks) {
    for (int j = 0; j < b.cols(); ++j) r.set_col(off + j, b.col(j));
    off += b.cols();
  }
  return r;
}

SparseMatrix vstack(const std::vector<SparseMatrix>& blocks) {
  if (blocks.empty()) throw DimensionMismatch("vstack of nothing");
  int rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != blocks[0].cols()) throw DimensionMismatch("vstack column mismatch");
    rows += b.rows();
  }
  SparseMatrix r(rows, blocks[0].cols(), blocks[0].field());
  for (int j = 0; j < r.cols(); ++j) {
    SparseVec c;
    int off = 0;
    for (const auto& b : blocks) {
      for (const auto& [i, v] : b.col(j)) c.emplace_back(off + i, v);
      off += b.rows();
    }
    r.set_col(j, std::move(c));
  }
  return r;
}

SparseMatrix block_diagonal(const std::vector<SparseMatrix>& blocks) {
  int rows = 0, cols = 0;
  Field f = blocks.empty() ? Field::rational() : blocks[0].field();
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  SparseMatrix r(rows, cols, f);
  int ro = 0, co = 0;
  for (const auto& b : blocks) {
    for (int j = 0; j < b.cols(); ++j) {
      SparseVec c;
      for (const auto& [i, v] : b.col(j)) c.emplace_back(ro + i, v);
      r.set_col(co + j, std::move(c));
    }
    ro += b.rows();
    co += b.cols();
  }
  return r;
}

// ---- Echelon ----

Echelon::Echelon(int dim, const Field& f) : dim_(dim), field_(f), pivot_row_(dim, -1) {}

SparseVec Echelon::reduce_impl(const SparseVec& v) const {
  std::map<int, Scalar> acc;
  std::set<int> pending;
  for (const auto& [i, x] : v) {
    if (i < 0 || i >= dim_) throw DimensionMismatch("vector index out of range");
    if (x.field() != field_) throw FieldMismatch("vector over a different field");
    acc.emplace(i, x);
    if (pivot_row_[i] >= 0) pending.insert(pivot_row_[i]);
  }
  while (!pending.empty()) {
    int k = *pending.begin();
    pending.erase(pending.begin());
    auto it = acc.find(pivots_[k]);
    if (it == acc.end()) continue;
    Scalar c = it->second;
    for (const auto& [j, y] : rows_[k]) {
      auto [pos, inserted] = acc.try_emplace(j, Scalar::zero(field_));
      pos->second -= c * y;
      if (pos->second.is_zero()) {
        acc.erase(pos);
      } else if (inserted && pivot_row_[j] > k) {
        pending.insert(pivot_row_[j]);
      }
    }
  }
  SparseVec out;
  out.reserve(acc.size());
  for (auto& [i, x] : acc) out.emplace_back(i, std::move(x));
  return out;
}

SparseVec Echelon::reduce(const SparseVec& v) const { return reduce_impl(v); }

bool Echelon::add(const SparseVec& v, int pivot_hint) {
  SparseVec r = reduce_impl(v);
  if (r.empty()) return false;
  int piv = -1;
  if (pivot_hint >= 0 && !vec_at(r, pivot_hint, field_).is_zero()) {
    piv = pivot_hint;
  } else if (!col_weight_.empty()) {
    int best = -1;
    for (const auto& [i, x] : r)
      if (best < 0 || col_weight_[i] < best) {
        best = col_weight_[i];
        piv = i;
      }
  } else {
    piv = r.front().first;
  }
  Scalar inv = vec_at(r, piv, field_).inverse();
  r = vec_scale(r, inv);
  if (!rows_.empty()) reduced_ = false;
  pivot_row_[piv] = static_cast<int>(rows_.size());
  pivots_.push_back(piv);
  rows_.push_back(std::move(r));
  return true;
}

void Echelon::add_all(const std::vector<SparseVec>& vs) {
  std::vector<int> order(vs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return vs[a].size() < vs[b].size(); });
  col_weight_.assign(dim_, 0);
  for (const auto& v : vs)
    for (const auto& e : v) {
      if (e.first < 0 || e.first >= dim_) throw DimensionMismatch("vector index out of range");
      ++col_weight_[e.first];
    }
  for (int idx : order) {
    if (rank() == dim_) break;
    add(vs[idx]);
  }
  col_weight_.clear();
}

void Echelon::make_reduced() {
  if (reduced_) return;
  for (int k = rank() - 1; k >= 0; --k) {
    bool touched = false;
    for (const auto& [j, y] : rows_[k])
      if (pivot_row_[j] > k) {
        touched = true;
        break;
      }
    if (!touched) continue;
    std::map<int, Scalar> acc;
    for (const auto& [j, y] : rows_[k]) acc.emplace(j, y);
    std::vector<std::pair<int, Scalar>> hits;
    for (const auto& [j, y] : rows_[k])
      if (pivot_row_[j] > k) hits.emplace_back(pivot_row_[j], y);
    for (const auto& [r, c] : hits) {
      for (const auto& [j, y] : rows_[r]) {
        auto [pos, inserted] = acc.try_emplace(j, Scalar::zero(field_));
        pos->second -= c * y;
        if (pos->second.is_zero()) acc.erase(pos);
      }
    }
    SparseVec out;
    for (auto& [i, x] : acc) out.emplace_back(i, std::move(x));
    rows_[k] = std::move(out);
  }
  reduced_ = true;
}

namespace {

void check_single_field(const SparseMatrix& m) {
  for (int j = 0; j < m.cols(); ++j)
    for (const auto& e : m.col(j))
      if (e.second.field() != m.field()) throw FieldMismatch("mixed-field matrix");
}

}  // namespace

int rank(const SparseMatrix& m) {
  check_single_field(m);
  bool by_rows = m.rows() < m.cols();
  const SparseMatrix& src = by_rows ? m.transpose() : m;
  Echelon e(src.rows(), src.field());
  std::vector<SparseVec> cols;
  cols.reserve(src.cols());
  for (int j = 0; j < src.cols(); ++j)
    if (!src.col(j).empty()) cols.push_back(src.col(j));
  e.add_all(cols);
  return e.rank();
}

std::vector<SparseVec> kernel_basis(const SparseMatrix& m) {
  check_single_field(m);
  SparseMatrix t = m.transpose();
  Echelon e(m.cols(), m.field());
  std::vector<SparseVec> rows;
  for (int j = 0; j < t.cols(); ++j)
    if (!t.col(j).empty()) rows.push_back(t.col(j));
  e.add_all(rows);
  e.make_reduced();
  std::vector<std::vector<std::pair<int, Scalar>>> ker(m.cols());
  for (int k = 0; k < e.rank(); ++k) {
    int p = e.pivots()[k];
    for (const auto& [f, y] : e.rows()[k])
      if (f != p) ker[f].emplace_back(p, -y);
  }
  std::vector<SparseVec> out;
  for (int f = 0; f < m.cols(); ++f) {
    if (e.row_of_pivot(f) >= 0) continue;
    ker[f].emplace_back(f, Scalar::one(m.field()));
    out.push_back(vec_normalize(std::move(ker[f])));
  }
  return out;
}

int quotient_dim(int ambient_dim, const std::vector<SparseVec>& spanning) {
  if (spanning.empty()) return ambient_dim;
  Field f = Field::rational();
  for (const auto& v : spanning)
    if (!v.empty()) {
      f = v.front().second.field();
      break;
    }
  Echelon e(ambient_dim, f);
  e.add_all(spanning);
  return ambient_dim - e.rank();
}

// ---- Subspace / Quotient ----

Subspace::Subspace(int ambient, const Field& f, const std::vector<SparseVec>& spanning)
    : ambient_(ambient), field_(f), pivot_pos_(ambient, -1) {
  Echelon e(ambient, f);
  e.add_all(spanning);
  e.make_reduced();
  std::vector<int> order(e.rank());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return e.pivots()[a] < e.pivots()[b]; });
  for (int k : order) {
    pivot_pos_[e.pivots()[k]] = static_cast<int>(basis_.size());
    pivots_.push_back(e.pivots()[k]);
    basis_.push_back(e.rows()[k]);
  }
}

Subspace Subspace::whole(int ambient, const Field& f) {
  Subspace s;
  s.ambient_ = ambient;
  s.field_ = f;
  s.pivot_pos_.resize(ambient);
  for (int i = 0; i < ambient; ++i) {
    s.basis_.push_back(unit_vec(i, f));
    s.pivots_.push_back(i);
    s.pivot_pos_[i] = i;
  }
  return s;
}

bool Subspace::coordinates(const SparseVec& v, SparseVec& out) const {
  out.clear();
  std::vector<std::pair<int, Scalar>> residual_terms;
  for (const auto& [i, x] : v)
    if (pivot_pos_[i] >= 0) out.emplace_back(pivot_pos_[i], x);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec residual = v;
  for (const auto& [k, c] : out) residual = vec_axpy(residual, -c, basis_[k]);
  return residual.empty();
}

SparseMatrix Subspace::inclusion() const { return SparseMatrix::from_columns(ambient_, field_, basis_); }

Quotient::Quotient(int ambient, const Field& f, const std::vector<SparseVec>& relations)
    : ambient_(ambient), field_(f), relations_(ambient, f), position_(ambient, -1) {
  relations_.add_all(relations);
  for (int i = 0; i < ambient; ++i)
    if (relations_.row_of_pivot(i) < 0) {
      position_[i] = static_cast<int>(complement_.size());
      complement_.push_back(i);
    }
}

Quotient Quotient::whole(int ambient, const Field& f) { return Quotient(ambient, f, {}); }

SparseVec Quotient::project(const SparseVec& v) const {
  SparseVec r = relations_.reduce(v);
  for (auto& e : r) e.first = position_[e.first];
  return r;
}

SparseMatrix Quotient::projection() const {
  SparseMatrix m(dim(), ambient_, field_);
  for (int i = 0; i < ambient_; ++i) m.set_col(i, project(unit_vec(i, field_)));
  return m;
}

SparseMatrix Quotient::section() const {
  SparseMatrix m(ambient_, dim(), field_);
  for (int j = 0; j < dim(); ++j) m.set_col(j, unit_vec(complement_[j], field_));
  return m;
}

SparseMatrix restrict_to(const SparseMatrix& op, const Subspace& src, const Subspace& dst) {
  if (op.cols() != src.ambient() || op.rows() != dst.ambient())
    throw DimensionMismatch("restriction shape mismatch");
  SparseMatrix r(dst.dim(), src.dim(), op.field());
  for (int k = 0; k < src.dim(); ++k) {
    SparseVec coords;
    if (!dst.coordinates(op.apply(src.basis()[k]), coords))
      throw RestrictionError("operator does not preserve the subspace");
    r.set_col(k, std::move(coords));
  }
  return r;
}

bool restricts(const SparseMatrix& op, const Subspace& src, const Subspace& dst) {
  SparseVec coords;
  for (const auto& b : src.basis())
    if (!dst.coordinates(op.apply(b), coords)) return false;
  return true;
}

SparseMatrix descend_to(const SparseMatrix& op, const Quotient& src, const Quotient& dst) {
  if (op.cols() != src.ambient() || op.rows() != dst.ambient())
    throw DimensionMismatch("descent shape mismatch");
  if (!descends(op, src, dst)) throw RestrictionError("operator does not descend to the quotient");
  SparseMatrix r(dst.dim(), src.dim(), op.field());
  for (int j = 0; j < src.dim(); ++j) r.set_col(j, dst.project(op.col(src.complement()[j])));
  return r;
}

bool descends(const SparseMatrix& op, const Quotient& src, const Quotient& dst) {
  for (const auto& rel : src.relations().rows())
    if (!dst.project(op.apply(rel)).empty()) return false;
  return true;
}

void check_budget(long long dim, long long budget, const std::string& what) {
  if (budget > 0 && dim > budget)
    throw BudgetExceeded(what + " has dimension " + std::to_string(dim) + ", over the budget of " +
                         std::to_string(budget));
}

}  // namespace hopfcyc
