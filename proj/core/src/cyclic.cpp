#include "hopfcyc/cyclic.hpp"

#include <map>
#include <tuple>

#include "hopfcyc/tensor.hpp"

namespace hopfcyc {

namespace {

struct NamedChecks {
  std::vector<std::string> order;
  std::map<std::string, bool> ok;
  std::vector<std::string>* witnesses;

  void record(const std::string& name, bool pass, const std::string& where) {
    if (!ok.count(name)) {
      order.push_back(name);
      ok[name] = true;
    }
    if (!pass) {
      if (ok[name] && witnesses) witnesses->push_back(name + " fails at " + where);
      ok[name] = false;
    }
  }
  AxiomReport report() const {
    AxiomReport r;
    for (const auto& n : order) r.add(n, ok.at(n));
    return r;
  }
};

std::string at(int n, int i = -1, int j = -1) {
  std::string s = "n=" + std::to_string(n);
  if (i >= 0) s += " i=" + std::to_string(i);
  if (j >= 0) s += " j=" + std::to_string(j);
  return s;
}

void expect_shape(const SparseMatrix& m, int rows, int cols, const std::string& what) {
  if (m.rows() != rows || m.cols() != cols)
    throw DimensionMismatch(what + ": expected " + std::to_string(rows) + "x" + std::to_string(cols) +
                            ", got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

// Source and target degree of faces[n][*] / degeneracies[n][*].
std::pair<int, int> face_degrees(Direction d, int n) {
  return d == Direction::homological ? std::pair{n, n - 1} : std::pair{n - 1, n};
}
std::pair<int, int> degeneracy_degrees(Direction d, int n) {
  return d == Direction::homological ? std::pair{n, n + 1} : std::pair{n + 1, n};
}

void check_shapes(const CyclicModuleData& c) {
  int top = c.nmax();
  if (static_cast<int>(c.faces.size()) != top + 1 || static_cast<int>(c.cyclic.size()) != top + 1 ||
      static_cast<int>(c.degeneracies.size()) != top + 1)
    throw DimensionMismatch("operator families must have one slot per degree");
  for (int n = 0; n <= top; ++n) {
    expect_shape(c.cyclic[n], c.dim(n), c.dim(n), "cyclic operator in degree " + std::to_string(n));
    if (n >= 1) {
      if (static_cast<int>(c.faces[n].size()) != n + 1)
        throw DimensionMismatch("degree " + std::to_string(n) + " needs " + std::to_string(n + 1) + " faces");
      auto [s, t] = face_degrees(c.direction, n);
      for (const auto& m : c.faces[n]) expect_shape(m, c.dim(t), c.dim(s), "face in degree " + std::to_string(n));
    }
    if (!c.degeneracies[n].empty()) {
      if (n >= top || static_cast<int>(c.degeneracies[n].size()) != n + 1)
        throw DimensionMismatch("bad degeneracy count in degree " + std::to_string(n));
      auto [s, t] = degeneracy_degrees(c.direction, n);
      for (const auto& m : c.degeneracies[n])
        expect_shape(m, c.dim(t), c.dim(s), "degeneracy in degree " + std::to_string(n));
    }
  }
}

std::vector<SparseVec> columns(const SparseMatrix& m) {
  std::vector<SparseVec> out;
  for (int j = 0; j < m.cols(); ++j)
    if (!m.col(j).empty()) out.push_back(m.col(j));
  return out;
}

// Places blocks (row block, col block, matrix) into one matrix.
SparseMatrix assemble(const std::vector<int>& row_dims, const std::vector<int>& col_dims, const Field& f,
                      const std::vector<std::tuple<int, int, const SparseMatrix*>>& blocks) {
  std::vector<int> roff(row_dims.size() + 1, 0), coff(col_dims.size() + 1, 0);
  for (size_t i = 0; i < row_dims.size(); ++i) roff[i + 1] = roff[i] + row_dims[i];
  for (size_t i = 0; i < col_dims.size(); ++i) coff[i + 1] = coff[i] + col_dims[i];
  std::vector<std::vector<std::pair<int, Scalar>>> cols(coff.back());
  for (const auto& [ri, ci, m] : blocks)
    for (int j = 0; j < m->cols(); ++j)
      for (const auto& [r, v] : m->col(j)) cols[coff[ci] + j].emplace_back(roff[ri] + r, v);
  std::vector<SparseVec> out;
  out.reserve(cols.size());
  for (auto& c : cols) out.push_back(vec_normalize(std::move(c)));
  return SparseMatrix::from_columns(roff.back(), f, std::move(out));
}

SparseMatrix minus_one_power(const SparseMatrix& m, int n) {
  return n % 2 == 0 ? m : m.scaled(Scalar::from_int(m.field(), -1));
}

}  // namespace

bool CyclicModuleData::has_degeneracies() const {
  for (int n = 0; n < nmax(); ++n)
    if (degeneracies[n].empty()) return false;
  return true;
}

CyclicModuleData CyclicModuleData::shell(const Field& f, Direction dir, std::vector<IndexedSpace> spaces) {
  CyclicModuleData c;
  c.field = f;
  c.direction = dir;
  c.spaces = std::move(spaces);
  c.faces.resize(c.spaces.size());
  c.degeneracies.resize(c.spaces.size());
  c.cyclic.resize(c.spaces.size());
  return c;
}

CyclicModuleData dual(const CyclicModuleData& c) {
  CyclicModuleData d = c;
  d.direction = c.direction == Direction::homological ? Direction::cohomological : Direction::homological;
  for (auto& fs : d.faces)
    for (auto& m : fs) m = m.transpose();
  for (auto& ss : d.degeneracies)
    for (auto& m : ss) m = m.transpose();
  for (auto& t : d.cyclic) t = t.transpose();
  return d;
}

CyclicReport check_cyclic(const CyclicModuleData& c) {
  check_shapes(c);
  if (c.direction == Direction::cohomological) return check_cyclic(dual(c));
  CyclicReport rep;
  NamedChecks nc{{}, {}, &rep.witnesses};
  const int top = c.nmax();
  const auto& d = c.faces;
  const auto& s = c.degeneracies;
  const auto& t = c.cyclic;
  auto has_s = [&](int n) { return n >= 0 && n < top && !s[n].empty(); };

  for (int n = 2; n <= top; ++n)
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        nc.record("d_i d_j = d_{j-1} d_i", d[n - 1][i] * d[n][j] == d[n - 1][j - 1] * d[n][i], at(n, i, j));

  for (int n = 0; n + 1 < top; ++n) {
    if (!has_s(n) || !has_s(n + 1)) continue;
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        nc.record("s_i s_j = s_{j+1} s_i", s[n + 1][i] * s[n][j] == s[n + 1][j + 1] * s[n][i], at(n, i, j));
  }

  for (int n = 0; n < top; ++n) {
    if (!has_s(n)) continue;
    SparseMatrix id = SparseMatrix::identity(c.dim(n), c.field);
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i) {
        SparseMatrix lhs = d[n + 1][i] * s[n][j];
        if (i == j || i == j + 1) {
          nc.record("d_i s_j = id", lhs == id, at(n, i, j));
        } else if (i < j) {
          if (has_s(n - 1)) nc.record("d_i s_j = s_{j-1} d_i", lhs == s[n - 1][j - 1] * d[n][i], at(n, i, j));
        } else if (has_s(n - 1)) {
          nc.record("d_i s_j = s_j d_{i-1}", lhs == s[n - 1][j] * d[n][i - 1], at(n, i, j));
        }
      }
  }

  for (int n = 1; n <= top; ++n) {
    for (int i = 1; i <= n; ++i)
      nc.record("d_i t = t d_{i-1}", d[n][i] * t[n] == t[n - 1] * d[n][i - 1], at(n, i));
    nc.record("d_0 t = d_n", d[n][0] * t[n] == d[n][n], at(n));
  }
  for (int n = 0; n < top; ++n) {
    if (!has_s(n)) continue;
    for (int i = 1; i <= n; ++i)
      nc.record("s_i t = t s_{i-1}", s[n][i] * t[n] == t[n + 1] * s[n][i - 1], at(n, i));
    nc.record("s_0 t = t^2 s_n", s[n][0] * t[n] == t[n + 1] * t[n + 1] * s[n][n], at(n));
  }
  rep.axioms = nc.report();

  rep.cyclic = true;
  for (int n = 0; n <= top; ++n) {
    if (t[n].power(n + 1) != SparseMatrix::identity(c.dim(n), c.field)) {
      if (rep.cyclic) rep.witnesses.push_back("t^{n+1} != id at " + at(n));
      rep.cyclic = false;
    }
  }
  return rep;
}

CyclicReport certify(CyclicModuleData& c) {
  CyclicReport r = check_cyclic(c);
  c.status = r.axioms.ok() && r.cyclic ? CyclicStatus::cyclic : CyclicStatus::paracyclic;
  return r;
}

CyclicModuleData build_twisted_algebra_module(const Field& f, const IndexedSpace& space,
                                              const SparseMatrix& mult, const SparseVec& unit,
                                              const SparseMatrix& g, int nmax) {
  const int d = space.dim();
  if (!check_algebra(f, d, mult, unit).ok()) throw PreconditionError("not an associative unital algebra");
  if (rank(g) != d || g * mult != mult * tensor(g, g) || g.apply(unit) != unit)
    throw PreconditionError("g is not an algebra automorphism");
  std::vector<IndexedSpace> spaces;
  IndexedSpace cur = space;
  for (int n = 0; n <= nmax; ++n) {
    if (n > 0) cur = IndexedSpace::tensor(cur, space);
    check_budget(cur.dim(), kDefaultBudget, "twisted algebra module");
    spaces.push_back(cur);
  }
  CyclicModuleData c = CyclicModuleData::shell(f, Direction::homological, std::move(spaces));
  for (int n = 0; n <= nmax; ++n) {
    std::vector<int> in(n + 1, d), out(n, d), up(n + 2, d);
    if (n >= 1)
      for (int i = 0; i <= n; ++i)
        c.faces[n].push_back(tensor_operator(in, out, f, [&](const std::vector<int>& legs) {
          TensorExpr e = TensorExpr::basis(legs, f);
          if (i < n) return e.merge(i, i + 1, mult, d), e;
          return e.map(n, g).merge(n, 0, mult, d, 0), e;
        }));
    if (n < nmax)
      for (int i = 0; i <= n; ++i)
        c.degeneracies[n].push_back(tensor_operator(in, up, f, [&](const std::vector<int>& legs) {
          TensorExpr e = TensorExpr::basis(legs, f);
          return e.insert(i + 1, unit), e;
        }));
    c.cyclic[n] = tensor_operator(in, in, f, [&](const std::vector<int>& legs) {
      TensorExpr e = TensorExpr::basis(legs, f);
      return e.map(n, g).move(n, 0), e;
    });
  }
  certify(c);
  return c;
}

CyclicModuleData build_twisted_coalgebra_module(const Field& f, const IndexedSpace& space,
                                                const SparseMatrix& comult, const SparseMatrix& counit,
                                                const SparseMatrix& theta, int nmax) {
  const int d = space.dim();
  if (!check_coalgebra(f, d, comult, counit).ok()) throw PreconditionError("not a coassociative counital coalgebra");
  if (rank(theta) != d || comult * theta != tensor(theta, theta) * comult || counit * theta != counit)
    throw PreconditionError("theta is not a coalgebra automorphism");
  std::vector<IndexedSpace> spaces;
  IndexedSpace cur = space;
  for (int n = 0; n <= nmax; ++n) {
    if (n > 0) cur = IndexedSpace::tensor(cur, space);
    check_budget(cur.dim(), kDefaultBudget, "twisted coalgebra module");
    spaces.push_back(cur);
  }
  CyclicModuleData c = CyclicModuleData::shell(f, Direction::cohomological, std::move(spaces));
  for (int n = 0; n <= nmax; ++n) {
    std::vector<int> cur_dims(n + 1, d), below(n, d), above(n + 2, d);
    if (n >= 1)
      for (int i = 0; i <= n; ++i)
        c.faces[n].push_back(tensor_operator(below, cur_dims, f, [&](const std::vector<int>& legs) {
          TensorExpr e = TensorExpr::basis(legs, f);
          if (i < n) return e.split(i, comult, d), e;
          return e.split(0, comult, d).map(0, theta).move(0, n), e;
        }));
    if (n < nmax)
      for (int i = 0; i <= n; ++i)
        c.degeneracies[n].push_back(tensor_operator(above, cur_dims, f, [&](const std::vector<int>& legs) {
          TensorExpr e = TensorExpr::basis(legs, f);
          return e.contract(i + 1, counit), e;
        }));
    c.cyclic[n] = tensor_operator(cur_dims, cur_dims, f, [&](const std::vector<int>& legs) {
      TensorExpr e = TensorExpr::basis(legs, f);
      return e.map(0, theta).move(0, n), e;
    });
  }
  certify(c);
  return c;
}

SparseMatrix hochschild_boundary(const CyclicModuleData& c, int n) {
  if (c.direction != Direction::homological) throw PreconditionError("boundary needs a homological module");
  if (n == 0) return SparseMatrix(0, c.dim(0), c.field);
  SparseMatrix b(c.dim(n - 1), c.dim(n), c.field);
  for (int i = 0; i <= n; ++i) b = b + minus_one_power(c.faces[n][i], i);
  return b;
}

SparseMatrix signed_cyclic(const CyclicModuleData& c, int n) { return minus_one_power(c.cyclic[n], n); }

AxiomReport check_mixed(const MixedComplexData& m) {
  bool bb = true, BB = true, bB = true;
  const int top = m.top();
  for (int n = 2; n <= top; ++n)
    if (!(m.b[n - 1] * m.b[n]).is_zero()) bb = false;
  for (int n = 0; n + 2 <= top; ++n)
    if (!(m.B[n + 1] * m.B[n]).is_zero()) BB = false;
  for (int n = 0; n < top; ++n) {
    // N_n -> N_n via b B + B b
    SparseMatrix x = m.b[n + 1] * m.B[n];
    if (n >= 1) x = x + m.B[n - 1] * m.b[n];
    if (!x.is_zero()) bB = false;
  }
  AxiomReport r;
  r.add("b^2 = 0", bb);
  r.add("B^2 = 0", BB);
  r.add("bB + Bb = 0", bB);
  return r;
}

MixedComplexData normalized_mixed_complex(const CyclicModuleData& c) {
  if (c.direction != Direction::homological) return normalized_mixed_complex(dual(c));
  if (!c.has_degeneracies()) throw PreconditionError("normalization needs degeneracies in every degree");
  const int top = c.nmax();
  std::vector<Quotient> q;
  for (int n = 0; n <= top; ++n) {
    check_budget(c.dim(n), kDefaultBudget, "normalized chains");
    std::vector<SparseVec> rel;
    if (n >= 1)
      for (const auto& s : c.degeneracies[n - 1])
        for (auto& v : columns(s)) rel.push_back(std::move(v));
    q.emplace_back(c.dim(n), c.field, rel);
  }
  MixedComplexData m;
  m.field = c.field;
  for (int n = 0; n <= top; ++n) m.dims.push_back(q[n].dim());
  for (int n = 0; n <= top; ++n) {
    if (n == 0)
      m.b.emplace_back(0, m.dims[0], c.field);
    else
      m.b.push_back(descend_to(hochschild_boundary(c, n), q[n], q[n - 1]));
  }
  for (int n = 0; n < top; ++n) {
    SparseMatrix lam = signed_cyclic(c, n);
    SparseMatrix norm = SparseMatrix::identity(c.dim(n), c.field), p = norm;
    for (int k = 1; k <= n; ++k) {
      p = lam * p;
      norm = norm + p;
    }
    SparseMatrix extra = c.cyclic[n + 1] * c.degeneracies[n][n];
    SparseMatrix one_minus = SparseMatrix::identity(c.dim(n + 1), c.field) - signed_cyclic(c, n + 1);
    m.B.push_back(descend_to(one_minus * extra * norm, q[n], q[n + 1]));
  }
  return m;
}

std::vector<int> total_dims(const MixedComplexData& m, int n) {
  std::vector<int> out;
  for (int k = n; k >= 0; k -= 2) out.push_back(m.dims[k]);
  return out;
}

SparseMatrix total_differential(const MixedComplexData& m, int n) {
  std::vector<int> cols = total_dims(m, n);
  if (n == 0) {
    return SparseMatrix(0, cols[0], m.field);
  }
  std::vector<int> rows = total_dims(m, n - 1);
  std::vector<std::tuple<int, int, const SparseMatrix*>> blocks;
  for (int i = 0; i < static_cast<int>(cols.size()); ++i) {
    int k = n - 2 * i;
    if (k >= 1) blocks.emplace_back(i, i, &m.b[k]);
    if (i >= 1) blocks.emplace_back(i - 1, i, &m.B[k]);
  }
  return assemble(rows, cols, m.field, blocks);
}

std::vector<int> hochschild_dims(const MixedComplexData& m) {
  std::vector<int> r(m.top() + 1);
  for (int n = 0; n <= m.top(); ++n) r[n] = rank(m.b[n]);
  std::vector<int> out;
  for (int n = 0; n < m.top(); ++n) out.push_back(m.dims[n] - r[n] - r[n + 1]);
  return out;
}

namespace {

int total_dim(const MixedComplexData& m, int n) {
  int s = 0;
  for (int d : total_dims(m, n)) s += d;
  return s;
}

// Rank of the map induced on homology by f : Z -> target, with target boundaries bdst.
int induced_rank(const std::vector<SparseVec>& images, const std::vector<SparseVec>& bdst, int dim, const Field& f) {
  Echelon e(dim, f);
  e.add_all(bdst);
  int r0 = e.rank();
  e.add_all(images);
  return e.rank() - r0;
}

std::vector<SparseVec> apply_all(const SparseMatrix& m, const std::vector<SparseVec>& vs) {
  std::vector<SparseVec> out;
  for (const auto& v : vs) out.push_back(m.apply(v));
  return out;
}

// Drops the leading `offset` coordinates.
std::vector<SparseVec> drop_prefix(const std::vector<SparseVec>& vs, int offset) {
  std::vector<SparseVec> out;
  for (const auto& v : vs) {
    SparseVec w;
    for (const auto& [i, x] : v)
      if (i >= offset) w.emplace_back(i - offset, x);
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<SparseVec> keep_prefix(const std::vector<SparseVec>& vs, int len) {
  std::vector<SparseVec> out;
  for (const auto& v : vs) {
    SparseVec w;
    for (const auto& [i, x] : v)
      if (i < len) w.emplace_back(i, x);
    out.push_back(std::move(w));
  }
  return out;
}

struct TotalCache {
  const MixedComplexData& m;
  std::map<int, SparseMatrix> D;
  std::map<int, int> ranks;
  std::map<int, std::vector<SparseVec>> cycles;

  const SparseMatrix& diff(int n) {
    auto it = D.find(n);
    if (it == D.end()) it = D.emplace(n, total_differential(m, n)).first;
    return it->second;
  }
  int rank_of(int n) {
    auto it = ranks.find(n);
    if (it == ranks.end()) it = ranks.emplace(n, rank(diff(n))).first;
    return it->second;
  }
  const std::vector<SparseVec>& z(int n) {
    auto it = cycles.find(n);
    if (it == cycles.end()) it = cycles.emplace(n, kernel_basis(diff(n))).first;
    return it->second;
  }
  std::vector<SparseVec> boundaries(int n) { return columns(diff(n + 1)); }
  int hc(int n) { return total_dim(m, n) - rank_of(n) - rank_of(n + 1); }
};

}  // namespace

std::vector<int> cyclic_dims(const MixedComplexData& m) {
  TotalCache tc{m, {}, {}, {}};
  std::vector<int> out;
  for (int n = 0; n < m.top(); ++n) out.push_back(tc.hc(n));
  return out;
}

std::vector<PeriodicEstimate> periodic_dims(const MixedComplexData& m, int window) {
  TotalCache tc{m, {}, {}, {}};
  std::vector<PeriodicEstimate> out;
  const int last = m.top() - 1;
  for (int n = 0; n <= last; ++n) {
    PeriodicEstimate pe;
    pe.degree = n;
    std::vector<SparseVec> bn = tc.boundaries(n);
    int dim_n = total_dim(m, n);
    for (int j = 0; n + 2 * j <= last; ++j) {
      int offset = 0;
      std::vector<int> blocks = total_dims(m, n + 2 * j);
      for (int k = 0; k < j; ++k) offset += blocks[k];
      pe.tower.push_back(induced_rank(drop_prefix(tc.z(n + 2 * j), offset), bn, dim_n, m.field));
    }
    pe.dim = pe.tower.back();
    int len = static_cast<int>(pe.tower.size());
    pe.stable = len > window;
    for (int k = len - 1 - window; pe.stable && k < len - 1; ++k)
      if (pe.tower[k] != pe.tower.back()) pe.stable = false;
    out.push_back(std::move(pe));
  }
  return out;
}

SbiReport sbi_check(const MixedComplexData& m) {
  SbiReport rep;
  TotalCache tc{m, {}, {}, {}};
  const int last = m.top() - 1;
  std::vector<int> hh = hochschild_dims(m);
  std::map<int, std::vector<SparseVec>> zh;
  auto hcycles = [&](int n) -> const std::vector<SparseVec>& {
    auto it = zh.find(n);
    if (it == zh.end()) it = zh.emplace(n, kernel_basis(m.b[n])).first;
    return it->second;
  };
  // I : HH_n -> HC_n
  auto rank_i = [&](int n) {
    return induced_rank(hcycles(n), tc.boundaries(n), total_dim(m, n), m.field);
  };
  // S : HC_n -> HC_{n-2}
  auto rank_s = [&](int n) {
    if (n < 2) return 0;
    return induced_rank(drop_prefix(tc.z(n), m.dims[n]), tc.boundaries(n - 2), total_dim(m, n - 2), m.field);
  };
  // B : HC_k -> HH_{k+1}, x |-> B(top component of x)
  auto rank_b = [&](int k) {
    if (k < 0) return 0;
    return induced_rank(apply_all(m.B[k], keep_prefix(tc.z(k), m.dims[k])), columns(m.b[k + 2]),
                        m.dims[k + 1], m.field);
  };
  auto check = [&](bool ok, const std::string& what) {
    ++rep.positions_checked;
    if (!ok) {
      rep.exact = false;
      rep.failures.push_back(what);
    }
  };
  for (int n = 0; n <= last; ++n) {
    int ri = rank_i(n), rs = rank_s(n);
    check(rank_b(n - 1) + ri == hh[n], "exactness at HH_" + std::to_string(n));
    check(ri + rs == tc.hc(n), "exactness at HC_" + std::to_string(n) + " (I then S)");
    if (n + 1 <= last && n + 2 <= last)
      check(rank_s(n + 2) + rank_b(n) == tc.hc(n), "exactness at HC_" + std::to_string(n) + " (S then B)");
  }
  return rep;
}

namespace {

const CyclicModuleData& homological_view(const CyclicModuleData& c, CyclicModuleData& storage) {
  if (c.direction == Direction::homological) return c;
  storage = dual(c);
  return storage;
}

}  // namespace

std::vector<int> hochschild_homology(const CyclicModuleData& c0) {
  CyclicModuleData storage;
  const CyclicModuleData& c = homological_view(c0, storage);
  std::vector<SparseMatrix> b;
  for (int n = 0; n <= c.nmax(); ++n) b.push_back(hochschild_boundary(c, n));
  for (int n = 2; n <= c.nmax(); ++n)
    if (!(b[n - 1] * b[n]).is_zero()) throw PreconditionError("b^2 != 0 in degree " + std::to_string(n));
  std::vector<int> r;
  for (const auto& m : b) r.push_back(rank(m));
  std::vector<int> out;
  for (int n = 0; n < c.nmax(); ++n) out.push_back(c.dim(n) - r[n] - r[n + 1]);
  return out;
}

std::vector<int> cyclic_homology(const CyclicModuleData& c) {
  if (c.status != CyclicStatus::cyclic) throw PreconditionError("cyclic homology needs a certified cyclic module");
  return cyclic_dims(normalized_mixed_complex(c));
}

std::vector<PeriodicEstimate> periodic_homology(const CyclicModuleData& c, int window) {
  if (c.status != CyclicStatus::cyclic) throw PreconditionError("periodic homology needs a certified cyclic module");
  return periodic_dims(normalized_mixed_complex(c), window);
}

bool contraction_check(const CyclicModuleData& c, const std::vector<SparseMatrix>& h) {
  if (c.direction != Direction::homological) throw PreconditionError("contraction check is homological");
  if (static_cast<int>(h.size()) < c.nmax()) throw DimensionMismatch("need h in degrees 0..nmax-1");
  for (int n = 1; n < c.nmax(); ++n) {
    expect_shape(h[n], c.dim(n + 1), c.dim(n), "homotopy");
    SparseMatrix x = h[n - 1] * hochschild_boundary(c, n) + hochschild_boundary(c, n + 1) * h[n];
    if (x != SparseMatrix::identity(c.dim(n), c.field)) return false;
  }
  return true;
}

namespace {

template <class Op>
CyclicModuleData transform_module(const CyclicModuleData& c, const std::vector<int>& dims, Op op) {
  std::vector<IndexedSpace> spaces;
  for (int n = 0; n <= c.nmax(); ++n) spaces.push_back(IndexedSpace::numbered(c.spaces[n].name, dims[n]));
  CyclicModuleData r = CyclicModuleData::shell(c.field, c.direction, std::move(spaces));
  for (int n = 0; n <= c.nmax(); ++n) {
    auto [fs, ft] = face_degrees(c.direction, n);
    for (const auto& m : c.faces[n]) r.faces[n].push_back(op(m, fs, ft));
    auto [ds, dt] = degeneracy_degrees(c.direction, n);
    for (const auto& m : c.degeneracies[n]) r.degeneracies[n].push_back(op(m, ds, dt));
    r.cyclic[n] = op(c.cyclic[n], n, n);
  }
  certify(r);
  return r;
}

}  // namespace

CyclicModuleData restrict_module(const CyclicModuleData& c, const std::vector<Subspace>& sub) {
  std::vector<int> dims;
  for (const auto& s : sub) dims.push_back(s.dim());
  return transform_module(c, dims, [&](const SparseMatrix& m, int s, int t) { return restrict_to(m, sub[s], sub[t]); });
}

CyclicModuleData descend_module(const CyclicModuleData& c, const std::vector<Quotient>& quo) {
  std::vector<int> dims;
  for (const auto& q : quo) dims.push_back(q.dim());
  return transform_module(c, dims, [&](const SparseMatrix& m, int s, int t) { return descend_to(m, quo[s], quo[t]); });
}

AxiomReport check_cyclic_map(const CyclicModuleData& c, const CyclicModuleData& d, const std::vector<SparseMatrix>& f) {
  NamedChecks nc{{}, {}, nullptr};
  for (int n = 0; n <= c.nmax() && n <= d.nmax(); ++n) {
    auto [fs, ft] = face_degrees(c.direction, n);
    for (size_t i = 0; i < c.faces[n].size() && i < d.faces[n].size(); ++i)
      nc.record("commutes with faces", f[ft] * c.faces[n][i] == d.faces[n][i] * f[fs], at(n));
    auto [ds, dt] = degeneracy_degrees(c.direction, n);
    if (dt <= d.nmax() && dt <= c.nmax())
      for (size_t i = 0; i < c.degeneracies[n].size() && i < d.degeneracies[n].size(); ++i)
        nc.record("commutes with degeneracies", f[dt] * c.degeneracies[n][i] == d.degeneracies[n][i] * f[ds], at(n));
    nc.record("commutes with the cyclic operator", f[n] * c.cyclic[n] == d.cyclic[n] * f[n], at(n));
  }
  return nc.report();
}

}  // namespace hopfcyc
