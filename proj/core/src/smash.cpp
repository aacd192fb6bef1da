#include "hopfcyc/smash.hpp"

#include <algorithm>
#include <tuple>

#include "hopfcyc/tensor.hpp"

namespace hopfcyc {

namespace {

using Legs = std::vector<int>;

template <class Fn>
SparseMatrix leg_operator(const Legs& in, const Legs& out, const Field& f, Fn&& op) {
  return tensor_operator(in, out, f, [&](const Legs& legs) {
    TensorExpr e = TensorExpr::basis(legs, f);
    op(e);
    return e;
  });
}

// new leg k is old leg order[k]
void permute(TensorExpr& e, const Legs& order) {
  TensorExpr out(e.field());
  for (const auto& t : e.terms()) {
    Legs l;
    for (int k : order) l.push_back(t.legs[k]);
    out.add_term(t.coef, std::move(l));
  }
  e = std::move(out);
}

// legs [pos, pos + len) multiplied left to right into one leg at pos
void merge_run(TensorExpr& e, int pos, int len, const HopfAlgebra& h) {
  for (int k = 1; k < len; ++k) e.merge(pos, pos + 1, h.mult, h.dim(), pos);
}

std::vector<SparseVec> columns(const SparseMatrix& m) {
  std::vector<SparseVec> out;
  for (int j = 0; j < m.cols(); ++j)
    if (!m.col(j).empty()) out.push_back(m.col(j));
  return out;
}

// b |-> (b)x on B
SparseMatrix right_act_by(const RightModuleAlgebra& b, const SparseVec& x, int dH, const Field& f) {
  SparseMatrix out(b.dim(), b.dim(), f);
  for (int j = 0; j < b.dim(); ++j) {
    SparseVec v;
    for (const auto& [h, c] : x) v = vec_axpy(v, c, b.action.col(j * dH + h));
    out.set_col(j, v);
  }
  return out;
}

struct Ctx {
  const HopfAlgebra& H;
  const RightModuleAlgebra& B;
  const HModule& M;
  SparseMatrix sigma_s;    // x |-> sigma S(x)
  SparseMatrix by_sigma;   // b |-> (b)sigma
  SparseMatrix by_sigma_inv;
  int dH, dB, dM;

  Ctx(const SmashProduct& s, const HModule& m, const SparseVec& sigma)
      : H(s.H), B(s.B), M(m), dH(s.H.dim()), dB(s.B.dim()), dM(m.dim()) {
    sigma_s = H.left_mult(sigma) * H.antipode;
    by_sigma = right_act_by(B, sigma, dH, H.field);
    by_sigma_inv = right_act_by(B, H.antipode.apply(sigma), dH, H.field);
  }

  Legs dims(int p, int q) const {
    Legs d{dM};
    d.insert(d.end(), p, dH);
    d.insert(d.end(), q + 1, dB);
    return d;
  }

  // [m, g_1 .. g_p, a_0 .. a_q] -> [m, g_1(2) .. g_p(2), a_0 .. a_{q-1}, (a_q)E],
  // E = sigma S(g_1(1) .. g_p(1)) g_1(3) .. g_p(3)
  void twist_last(int p, int q, TensorExpr& e) const {
    if (p == 0) {
      e.map(1 + q, by_sigma);
      return;
    }
    for (int j = p; j >= 1; --j) e.split(j, H.comult, dH).split(j + 1, H.comult, dH);
    Legs order{0};
    for (int k : {1, 0, 2})
      for (int j = 0; j < p; ++j) order.push_back(1 + 3 * j + k);
    for (int i = 0; i <= q; ++i) order.push_back(1 + 3 * p + i);
    permute(e, order);
    merge_run(e, p + 1, p, H);
    merge_run(e, p + 2, p, H);
    e.map(p + 1, sigma_s);
    e.merge(p + 1, p + 2, H.mult, dH, p + 1);
    e.merge(p + 2 + q, p + 1, B.action, dH, p + 2 + q);
  }

  void vface(int p, int q, int i, TensorExpr& e) const {
    if (i < q) {
      e.merge(1 + p + i, 2 + p + i, B.mult, dB);
      return;
    }
    twist_last(p, q, e);
    e.merge(1 + p + q, 1 + p, B.mult, dB, 1 + p);
  }
  void vdeg(int p, int i, TensorExpr& e) const { e.insert(2 + p + i, B.unit); }
  void vcyclic(int p, int q, TensorExpr& e) const {
    twist_last(p, q, e);
    e.move(1 + p + q, 1 + p);
  }

  // g at leg `at` split into `pieces`; pieces first_b .. act on the B legs through S^-1,
  // a_i receiving piece (first_b + q - i).  B legs follow the pieces.
  void act_on_b(int at, int pieces, int first_b, int q, TensorExpr& e) const {
    for (int k = 0; k + 1 < pieces; ++k) e.split(at + k, H.comult, dH);
    for (int k = first_b; k <= pieces; ++k) e.map(at + k - 1, H.antipode_inv);
    const int a = at + pieces;
    for (int i = 0; i <= q; ++i) e.merge(a, a - 1 - i, B.action, dH, a);
  }

  void hface(int p, int q, int i, TensorExpr& e) const {
    if (i == 0)
      e.contract(1, H.counit);
    else if (i < p)
      e.merge(i, i + 1, H.mult, dH);
    else {
      act_on_b(p, q + 2, 2, q, e);
      e.merge(p, 0, M.action, dM, 0);
    }
  }
  void hdeg(int i, TensorExpr& e) const { e.insert(1 + i, H.unit); }
  void hcyclic(int p, int q, TensorExpr& e) const {
    if (p == 0) {
      for (int i = 0; i <= q; ++i) e.map(1 + i, by_sigma_inv);
      return;
    }
    act_on_b(p, q + 3, 3, q, e);
    e.merge(p + 1, 0, M.action, dM, 0);
    for (int j = p - 1; j >= 1; --j) e.split(j, H.comult, dH);
    Legs order{0};
    for (int j = 0; j < p - 1; ++j) order.push_back(1 + 2 * j);
    order.push_back(2 * p - 1);
    for (int j = 0; j < p - 1; ++j) order.push_back(2 + 2 * j);
    for (int i = 0; i <= q; ++i) order.push_back(2 * p + i);
    permute(e, order);
    merge_run(e, 1, p, H);
    e.map(1, sigma_s);
  }
};

IndexedSpace cell_space(int p, int q, long long dim) {
  return IndexedSpace::numbered("X_" + std::to_string(p) + "," + std::to_string(q), static_cast<int>(dim));
}

long long product(const Legs& d) {
  long long x = 1;
  for (int v : d) x *= v;
  return x;
}

void record(AxiomReport& r, std::vector<std::string>& w, const std::string& name, bool ok, int p, int q) {
  r.add(name + " at (" + std::to_string(p) + "," + std::to_string(q) + ")", ok);
  if (!ok) w.push_back(name + " fails at (" + std::to_string(p) + "," + std::to_string(q) + ")");
}

// block matrix from (row block, col block, matrix) triples
SparseMatrix assemble(const std::vector<int>& rows, const std::vector<int>& cols, const Field& f,
                      const std::vector<std::tuple<int, int, SparseMatrix>>& blocks) {
  std::vector<int> ro{0}, co{0};
  for (int r : rows) ro.push_back(ro.back() + r);
  for (int c : cols) co.push_back(co.back() + c);
  std::vector<std::vector<std::pair<int, Scalar>>> acc(co.back());
  for (const auto& [i, j, m] : blocks)
    for (int c = 0; c < m.cols(); ++c)
      for (const auto& [r, v] : m.col(c)) acc[co[j] + c].emplace_back(ro[i] + r, v);
  SparseMatrix out(ro.back(), co.back(), f);
  for (int c = 0; c < co.back(); ++c) out.set_col(c, vec_normalize(std::move(acc[c])));
  return out;
}

}  // namespace

AxiomReport check_right_module_algebra(const HopfAlgebra& h, const RightModuleAlgebra& b) {
  const Field& f = h.field;
  const int dH = h.dim(), dB = b.dim();
  AxiomReport r = check_algebra(f, dB, b.mult, b.unit);
  bool shape = b.action.rows() == dB && b.action.cols() == dB * dH;
  r.add("action shape", shape);
  if (!shape) return r;
  bool unit = true, assoc = true, mod_alg = true, unital = true;
  SparseMatrix one = right_act_by(b, h.unit, dH, f);
  unit = one == SparseMatrix::identity(dB, f);
  for (int x = 0; x < dH && assoc; ++x)
    for (int y = 0; y < dH && assoc; ++y) {
      SparseMatrix lhs = right_act_by(b, h.mul(x, y), dH, f);
      SparseMatrix rhs = right_act_by(b, unit_vec(y, f), dH, f) * right_act_by(b, unit_vec(x, f), dH, f);
      assoc = lhs == rhs;
    }
  // (ab)h = (a)h(1) (b)h(2)
  Legs in{dB, dB, dH}, out{dB};
  SparseMatrix lhs = leg_operator(in, out, f, [&](TensorExpr& e) {
    e.merge(0, 1, b.mult, dB).merge(0, 1, b.action, dH);
  });
  SparseMatrix rhs = leg_operator(in, out, f, [&](TensorExpr& e) {
    e.split(2, h.comult, dH).merge(0, 2, b.action, dH).merge(1, 2, b.action, dH).merge(0, 1, b.mult, dB);
  });
  mod_alg = lhs == rhs;
  for (int x = 0; x < dH && unital; ++x)
    unital = right_act_by(b, unit_vec(x, f), dH, f).apply(b.unit) == vec_scale(b.unit, h.eps(x));
  r.add("unit acts trivially", unit);
  r.add("right action", assoc);
  r.add("module algebra", mod_alg);
  r.add("unit is invariant", unital);
  return r;
}

RightModuleAlgebra trivial_right_module_algebra(const HopfAlgebra& h, IndexedSpace space, SparseMatrix mult,
                                                SparseVec unit) {
  const int dB = space.dim(), dH = h.dim();
  SparseMatrix act(dB, dB * dH, h.field);
  for (int b = 0; b < dB; ++b)
    for (int x = 0; x < dH; ++x) act.set_col(b * dH + x, vec_scale(unit_vec(b, h.field), h.eps(x)));
  return RightModuleAlgebra{std::move(space), std::move(mult), std::move(unit), std::move(act)};
}

RightModuleAlgebra dual_numbers_sign(const HopfAlgebra& z2) {
  const Field& f = z2.field;
  auto [mult, unit] = truncated_polynomial(2, f);
  const int g = z2.space.index_of("g"), one = z2.space.index_of("1");
  if (z2.dim() != 2 || g < 0 || one < 0) throw PreconditionError("expected kZ/2 with basis 1, g");
  SparseMatrix act(2, 4, f);
  act.set_col(0 * 2 + one, unit_vec(0, f));
  act.set_col(0 * 2 + g, unit_vec(0, f));
  act.set_col(1 * 2 + one, unit_vec(1, f));
  act.set_col(1 * 2 + g, vec_scale(unit_vec(1, f), Scalar::from_int(f, -1)));
  return RightModuleAlgebra{IndexedSpace{"k[x]/(x^2)", {"1", "x"}}, mult, unit, act};
}

RightModuleAlgebra dual_numbers_sweedler(const HopfAlgebra& s) {
  const Field& f = s.field;
  if (s.dim() != 4) throw PreconditionError("expected the Sweedler algebra");
  auto [mult, unit] = truncated_polynomial(2, f);
  // generators on B, b |-> (b)g and b |-> (b)x
  SparseMatrix rg(2, 2, f), rx(2, 2, f);
  rg.set_col(0, unit_vec(0, f));
  rg.set_col(1, vec_scale(unit_vec(1, f), Scalar::from_int(f, -1)));
  rx.set_col(1, unit_vec(0, f));
  SparseMatrix act(2, 8, f);
  for (int a = 0; a < 2; ++a)
    for (int c = 0; c < 2; ++c) {
      // g^a x^c acts by g first, then x
      SparseMatrix m = rx.power(c) * rg.power(a);
      for (int b = 0; b < 2; ++b) act.set_col(b * 4 + a + 2 * c, m.col(b));
    }
  return RightModuleAlgebra{IndexedSpace{"k[y]/(y^2)", {"1", "y"}}, mult, unit, act};
}

SmashProduct build_smash(const HopfAlgebra& h, const RightModuleAlgebra& b) {
  AxiomReport rb = check_right_module_algebra(h, b);
  if (!rb.ok()) throw PreconditionError("right module algebra fails: " + rb.failures().front());
  const Field& f = h.field;
  const int dH = h.dim(), dB = b.dim(), dA = dH * dB;
  ComoduleAlgebra a;
  a.field = f;
  a.space = IndexedSpace::tensor(h.space, b.space);
  a.space.name = h.space.name + "#" + b.space.name;
  a.mult = leg_operator({dH, dB, dH, dB}, {dH, dB}, f, [&](TensorExpr& e) {
    e.split(2, h.comult, dH);              // [h, a, g1, g2, b]
    e.merge(1, 3, b.action, dH, 1);        // [h, (a)g2, g1, b]
    e.merge(1, 3, b.mult, dB, 1);          // [h, (a)g2 b, g1]
    e.merge(0, 2, h.mult, dH, 0);
  });
  {
    TensorExpr u(f);
    for (const auto& [x, c] : h.unit)
      for (const auto& [y, d] : b.unit) u.add_term(c * d, {x, y});
    a.unit = u.flatten({dH, dB});
  }
  a.coaction = leg_operator({dH, dB}, {dH, dH, dB}, f, [&](TensorExpr& e) { e.split(0, h.comult, dH); });
  a.fiber_dim = dB;
  SmashProduct s{h, b, std::move(a), {}};
  s.certificate.merge(rb, "B: ");
  s.certificate.merge(check_algebra(f, dA, s.A.mult, s.A.unit), "A: ");
  s.certificate.merge(check_comodule_algebra(h, s.A), "A: ");
  return s;
}

bool CylindricalModule::has(int p, int q) const {
  return p >= 0 && q >= 0 && p <= pmax && q <= qmax && (total < 0 || p + q <= total);
}

CylindricalModule build_cylindrical(const SmashProduct& s, const HModule& m, const SparseVec& sigma, int pmax,
                                    int qmax, int total, long long budget) {
  MatchedPairCertificate pair = check_matched_pair(s.H, m, sigma);
  if (!pair.compatible()) throw PreconditionError("(M, sigma) is not a matched pair in involution");
  if (pmax < 0 || qmax < 0) throw PreconditionError("negative grid size");
  const Field& f = s.H.field;
  Ctx c(s, m, sigma);
  CylindricalModule x;
  x.field = f;
  x.pmax = pmax;
  x.qmax = qmax;
  x.total = total;
  auto top_p = [&](int q) {
    int t = pmax;
    while (t >= 0 && !x.has(t, q)) --t;
    return t;
  };
  auto top_q = [&](int p) {
    int t = qmax;
    while (t >= 0 && !x.has(p, t)) --t;
    return t;
  };
  for (int p = 0; p <= pmax; ++p)
    for (int q = 0; q <= qmax; ++q)
      if (x.has(p, q)) check_budget(product(c.dims(p, q)), budget, "cylindrical cell");

  for (int p = 0; p <= pmax; ++p) {
    const int Q = top_q(p);
    std::vector<IndexedSpace> sp;
    for (int q = 0; q <= Q; ++q) sp.push_back(cell_space(p, q, product(c.dims(p, q))));
    CyclicModuleData col = CyclicModuleData::shell(f, Direction::homological, std::move(sp));
    for (int q = 0; q <= Q; ++q) {
      Legs in = c.dims(p, q);
      if (q >= 1)
        for (int i = 0; i <= q; ++i)
          col.faces[q].push_back(leg_operator(in, c.dims(p, q - 1), f, [&](TensorExpr& e) { c.vface(p, q, i, e); }));
      if (q < Q)
        for (int i = 0; i <= q; ++i)
          col.degeneracies[q].push_back(leg_operator(in, c.dims(p, q + 1), f, [&](TensorExpr& e) { c.vdeg(p, i, e); }));
      col.cyclic[q] = leg_operator(in, in, f, [&](TensorExpr& e) { c.vcyclic(p, q, e); });
    }
    x.columns.push_back(std::move(col));
  }
  for (int q = 0; q <= qmax; ++q) {
    const int P = top_p(q);
    std::vector<IndexedSpace> sp;
    for (int p = 0; p <= P; ++p) sp.push_back(cell_space(p, q, product(c.dims(p, q))));
    CyclicModuleData row = CyclicModuleData::shell(f, Direction::homological, std::move(sp));
    for (int p = 0; p <= P; ++p) {
      Legs in = c.dims(p, q);
      if (p >= 1)
        for (int i = 0; i <= p; ++i)
          row.faces[p].push_back(leg_operator(in, c.dims(p - 1, q), f, [&](TensorExpr& e) { c.hface(p, q, i, e); }));
      if (p < P)
        for (int i = 0; i <= p; ++i)
          row.degeneracies[p].push_back(leg_operator(in, c.dims(p + 1, q), f, [&](TensorExpr& e) { c.hdeg(i, e); }));
      row.cyclic[p] = leg_operator(in, in, f, [&](TensorExpr& e) { c.hcyclic(p, q, e); });
    }
    x.rows.push_back(std::move(row));
  }

  AxiomReport& r = x.certificate;
  for (int p = 0; p <= pmax; ++p) {
    CyclicReport cr = certify(x.columns[p]);
    record(r, x.witnesses, "column paracyclic", cr.axioms.ok(), p, -1);
  }
  for (int q = 0; q <= qmax; ++q) {
    CyclicReport cr = certify(x.rows[q]);
    record(r, x.witnesses, "row paracyclic", cr.axioms.ok(), -1, q);
  }
  // every horizontal operator commutes with every vertical one
  for (int p = 0; p <= pmax; ++p)
    for (int q = 0; q <= qmax; ++q) {
      if (!x.has(p, q)) continue;
      const CyclicModuleData& col = x.columns[p];
      const CyclicModuleData& row = x.rows[q];
      std::vector<std::pair<SparseMatrix, int>> hs, vs;  // operator, target shift
      hs.emplace_back(row.cyclic[p], 0);
      if (p >= 1)
        for (const auto& d : row.faces[p]) hs.emplace_back(d, -1);
      for (const auto& d : row.degeneracies[p]) hs.emplace_back(d, 1);
      vs.emplace_back(col.cyclic[q], 0);
      if (q >= 1)
        for (const auto& d : col.faces[q]) vs.emplace_back(d, -1);
      for (const auto& d : col.degeneracies[q]) vs.emplace_back(d, 1);
      bool ok = true;
      for (size_t a = 0; a < hs.size() && ok; ++a)
        for (size_t b = 0; b < vs.size() && ok; ++b) {
          const int p2 = p + hs[a].second, q2 = q + vs[b].second;
          if (!x.has(p2, q2) || !x.has(p2, q) || !x.has(p, q2)) continue;
          // the same operators one step over
          auto pick = [](const CyclicModuleData& mod, int n, size_t k, int shift) -> const SparseMatrix& {
            if (shift == 0) return mod.cyclic[n];
            size_t nf = n >= 1 ? mod.faces[n].size() : 0;
            if (shift < 0) return mod.faces[n][k - 1];
            return mod.degeneracies[n][k - 1 - nf];
          };
          const SparseMatrix& h2 = pick(x.rows[q2], p, a, hs[a].second);
          const SparseMatrix& v2 = pick(x.columns[p2], q, b, vs[b].second);
          ok = h2 * vs[b].first == v2 * hs[a].first;
        }
      record(r, x.witnesses, "horizontal and vertical commute", ok, p, q);
      SparseMatrix t = row.cyclic[p].power(p + 1) * col.cyclic[q].power(q + 1);
      record(r, x.witnesses, "t^{p+1} tau^{q+1} = id", t == SparseMatrix::identity(x.dim(p, q), f), p, q);
    }
  return x;
}

CyclicModuleData diagonal(const CylindricalModule& x, int nmax) {
  if (!x.has(nmax, nmax)) throw PreconditionError("diagonal needs cells up to (nmax, nmax)");
  std::vector<IndexedSpace> sp;
  for (int n = 0; n <= nmax; ++n) sp.push_back(x.columns[n].spaces[n]);
  CyclicModuleData d = CyclicModuleData::shell(x.field, Direction::homological, std::move(sp));
  for (int n = 0; n <= nmax; ++n) {
    if (n >= 1)
      for (int i = 0; i <= n; ++i) d.faces[n].push_back(x.rows[n - 1].faces[n][i] * x.columns[n].faces[n][i]);
    if (n < nmax)
      for (int i = 0; i <= n; ++i)
        d.degeneracies[n].push_back(x.rows[n + 1].degeneracies[n][i] * x.columns[n].degeneracies[n][i]);
    d.cyclic[n] = x.rows[n].cyclic[n] * x.columns[n].cyclic[n];
  }
  certify(d);
  return d;
}

MixedComplexData tot_mixed_complex(const CylindricalModule& x, int top) {
  const Field& f = x.field;
  for (int n = 0; n <= top; ++n)
    for (int p = 0; p <= n; ++p)
      if (!x.has(p, n - p)) throw PreconditionError("Tot needs every cell with p + q <= top");
  // normalized cells
  std::vector<std::vector<Quotient>> nq(top + 1);
  for (int p = 0; p <= top; ++p)
    for (int q = 0; p + q <= top; ++q) {
      std::vector<SparseVec> rel;
      if (p >= 1)
        for (const auto& s : x.rows[q].degeneracies[p - 1])
          for (auto& v : columns(s)) rel.push_back(std::move(v));
      if (q >= 1)
        for (const auto& s : x.columns[p].degeneracies[q - 1])
          for (auto& v : columns(s)) rel.push_back(std::move(v));
      nq[p].emplace_back(x.dim(p, q), f, rel);
    }
  auto block_dims = [&](int n) {
    std::vector<int> d;
    for (int p = 0; p <= n; ++p) d.push_back(nq[p][n - p].dim());
    return d;
  };
  auto sign = [&](int p) { return Scalar::from_int(f, p % 2 ? -1 : 1); };
  // (1 - lambda_{n+1}) t_{n+1} s_n N_n on a paracyclic module
  auto connes = [&](const CyclicModuleData& c, int n) {
    SparseMatrix lam = signed_cyclic(c, n);
    SparseMatrix norm = SparseMatrix::identity(c.dim(n), f), pw = norm;
    for (int k = 1; k <= n; ++k) {
      pw = lam * pw;
      norm = norm + pw;
    }
    SparseMatrix one_minus = SparseMatrix::identity(c.dim(n + 1), f) - signed_cyclic(c, n + 1);
    return one_minus * c.cyclic[n + 1] * c.degeneracies[n][n] * norm;
  };
  MixedComplexData m;
  m.field = f;
  for (int n = 0; n <= top; ++n) {
    std::vector<int> d = block_dims(n);
    int s = 0;
    for (int v : d) s += v;
    m.dims.push_back(s);
  }
  m.b.emplace_back(0, m.dims[0], f);
  for (int n = 1; n <= top; ++n) {
    std::vector<std::tuple<int, int, SparseMatrix>> blocks;
    for (int p = 0; p <= n; ++p) {
      const int q = n - p;
      if (p >= 1)
        blocks.emplace_back(p - 1, p, descend_to(hochschild_boundary(x.rows[q], p), nq[p][q], nq[p - 1][q]));
      if (q >= 1)
        blocks.emplace_back(p, p,
                            descend_to(hochschild_boundary(x.columns[p], q), nq[p][q], nq[p][q - 1]).scaled(sign(p)));
    }
    m.b.push_back(assemble(block_dims(n - 1), block_dims(n), f, blocks));
  }
  for (int n = 0; n < top; ++n) {
    std::vector<std::tuple<int, int, SparseMatrix>> blocks;
    for (int p = 0; p <= n; ++p) {
      const int q = n - p;
      blocks.emplace_back(p + 1, p, descend_to(connes(x.rows[q], p), nq[p][q], nq[p + 1][q]));
      SparseMatrix th = x.rows[q + 1].cyclic[p].power(p + 1);
      blocks.emplace_back(p, p, descend_to(th * connes(x.columns[p], q), nq[p][q], nq[p][q + 1]).scaled(sign(p)));
    }
    m.B.push_back(assemble(block_dims(n + 1), block_dims(n), f, blocks));
  }
  return m;
}

SparseMatrix smash_phi(const SmashProduct& s, int dim_m, int n) {
  const HopfAlgebra& h = s.H;
  const Field& f = h.field;
  const int dH = h.dim(), dB = s.B.dim(), dA = dH * dB;
  Legs in{dim_m, dB}, out{dim_m};
  in.insert(in.end(), n, dA);
  out.insert(out.end(), n, dH);
  out.insert(out.end(), n + 1, dB);
  return leg_operator(in, out, f, [&](TensorExpr& e) {
    for (int i = n; i >= 1; --i) e.split(1 + i, SparseMatrix::identity(dA, f), dB);
    Legs order{0};
    for (int j = 1; j <= n; ++j) order.push_back(2 * j);
    for (int k = 0; k <= n; ++k) order.push_back(2 * k + 1);
    permute(e, order);  // [m, g_1 .. g_n, a_0 .. a_n]
    // a_k picks up g_j(k+2) for j > k, in increasing j
    for (int j = 1; j <= n; ++j) {
      for (int k = 0; k < j; ++k) e.split(j + k, h.comult, dH);
      for (int k = j - 1; k >= 0; --k) {
        const int r = j - 1 - k;
        e.merge(n + 1 + k + j - r, j + k + 1, s.B.action, dH, n + 1 + k + j - r);
      }
    }
  });
}

SparseMatrix smash_psi(const SmashProduct& s, int dim_m, int n) {
  const HopfAlgebra& h = s.H;
  const Field& f = h.field;
  const int dH = h.dim(), dB = s.B.dim(), dA = dH * dB;
  Legs in{dim_m}, out{dim_m, dB};
  in.insert(in.end(), n, dH);
  in.insert(in.end(), n + 1, dB);
  out.insert(out.end(), n, dA);
  return leg_operator(in, out, f, [&](TensorExpr& e) {
    // a_k picks up S^-1(g_j(j+1-k)) for j > k, in decreasing j
    for (int j = n; j >= 1; --j) {
      for (int k = 0; k < j; ++k) e.split(j + k, h.comult, dH);
      for (int k = 1; k <= j; ++k) e.map(j + k, h.antipode_inv);
      for (int k = 0; k < j; ++k) e.merge(n + 1 + k + j - k, 2 * j - k, s.B.action, dH, n + 1 + k + j - k);
    }
    Legs order{0, n + 1};
    for (int j = 1; j <= n; ++j) {
      order.push_back(j);
      order.push_back(n + 1 + j);
    }
    permute(e, order);  // [m, a_0, g_1, a_1, ..]
    for (int j = 1; j <= n; ++j) e.merge(j + 1, j + 2, SparseMatrix::identity(dA, f), dB, j + 1);
  });
}

DiagonalComparison diagonal_vs_invariant(const SmashProduct& s, const HModule& m, const SparseVec& sigma, int nmax) {
  DiagonalComparison out;
  CylindricalModule x = build_cylindrical(s, m, sigma, nmax, nmax);
  out.diagonal = diagonal(x, nmax);
  HopfTriple t = make_triple(s.A, s.H, m, sigma);
  out.chains = coinvariant_chain_module(t, nmax, CoinvariantMethod::free_comodule);
  const Field& f = s.H.field;
  out.inverse = true;
  for (int n = 0; n <= nmax; ++n) {
    out.phi.push_back(smash_phi(s, m.dim(), n));
    out.psi.push_back(smash_psi(s, m.dim(), n));
    bool ok = out.phi[n] * out.psi[n] == SparseMatrix::identity(out.diagonal.dim(n), f) &&
              out.psi[n] * out.phi[n] == SparseMatrix::identity(out.chains.module.dim(n), f);
    if (!ok) {
      out.inverse = false;
      out.failures.push_back("phi and psi are not inverse in degree " + std::to_string(n));
    }
  }
  AxiomReport r = check_cyclic_map(out.chains.module, out.diagonal, out.phi);
  out.cyclic_map = r.ok();
  for (const auto& w : r.failures()) out.failures.push_back("phi: " + w);
  for (const auto& w : x.witnesses) out.failures.push_back(w);
  return out;
}

EzReport ez_compare(const SmashProduct& s, const HModule& m, const SparseVec& sigma, int nmax) {
  EzReport r;
  CylindricalModule tot = build_cylindrical(s, m, sigma, nmax, nmax, nmax);
  MixedComplexData mc = tot_mixed_complex(tot, nmax);
  r.mixed_ok = check_mixed(mc).ok();
  r.hc_tot = cyclic_dims(mc);
  CylindricalModule grid = build_cylindrical(s, m, sigma, nmax, nmax);
  CyclicModuleData d = diagonal(grid, nmax);
  r.hc_diagonal = cyclic_homology(d);
  r.equal = true;
  for (int n = 0; n <= nmax - 2; ++n)
    if (r.hc_tot[n] != r.hc_diagonal[n]) r.equal = false;
  return r;
}

HModule twisted_tensor_module(const SmashProduct& s, const HModule& m, int q) {
  const HopfAlgebra& h = s.H;
  const Field& f = h.field;
  const int dH = h.dim(), dB = s.B.dim(), dM = m.dim();
  Legs in{dH, dM}, out{dM};
  in.insert(in.end(), q + 1, dB);
  out.insert(out.end(), q + 1, dB);
  SparseMatrix act = leg_operator(in, out, f, [&](TensorExpr& e) {
    for (int k = 0; k <= q; ++k) e.split(k, h.comult, dH);  // [h(1) .. h(q+2), m, b_0 ..]
    for (int k = 1; k <= q + 1; ++k) e.map(k, h.antipode_inv);
    for (int i = 0; i <= q; ++i) e.merge(q + 3, q + 1 - i, s.B.action, dH, q + 3);
    e.merge(0, 1, m.action, dM, 1);
  });
  std::string name = m.space.name + "(x)" + s.B.space.name + "^" + std::to_string(q + 1);
  return HModule{IndexedSpace::numbered(name, static_cast<int>(product(out))), act};
}

SpectralSequenceReport spectral_sequence(const SmashProduct& s, const HModule& m, const SparseVec& sigma, int pmax,
                                         int qmax) {
  SpectralSequenceReport r;
  const Field& f = s.H.field;
  CylindricalModule x = build_cylindrical(s, m, sigma, pmax + 1, qmax + 1);
  r.e1.assign(pmax + 1, std::vector<int>(qmax + 1));
  r.e1_rows = r.e1;
  r.e2 = r.e1;
  for (int q = 0; q <= qmax; ++q) {
    std::vector<int> bar = hopf_homology(s.H, twisted_tensor_module(s, m, q), pmax + 1);
    std::vector<int> row = hochschild_homology(x.rows[q]);
    for (int p = 0; p <= pmax; ++p) {
      r.e1[p][q] = bar[p];
      r.e1_rows[p][q] = row[p];
    }
  }
  r.e1_agree = r.e1 == r.e1_rows;
  r.collapsed = true;
  for (int p = 1; p <= pmax; ++p)
    for (int q = 0; q <= qmax; ++q)
      if (r.e1[p][q] != 0) r.collapsed = false;
  // columns of horizontal homology with the induced vertical operators
  r.columns_cyclic = true;
  for (int p = 0; p <= pmax; ++p) {
    const CyclicModuleData& col = x.columns[p];
    std::vector<Subspace> z;
    for (int q = 0; q <= col.nmax(); ++q) {
      if (p == 0)
        z.push_back(Subspace::whole(x.dim(p, q), f));
      else
        z.emplace_back(x.dim(p, q), f, kernel_basis(hochschild_boundary(x.rows[q], p)));
    }
    CyclicModuleData zc = restrict_module(col, z);
    std::vector<Quotient> qs;
    for (int q = 0; q <= col.nmax(); ++q) {
      std::vector<SparseVec> rel;
      for (auto& v : columns(hochschild_boundary(x.rows[q], p + 1))) {
        SparseVec c;
        if (!z[q].coordinates(v, c)) throw RestrictionError("boundary outside cycles");
        rel.push_back(std::move(c));
      }
      qs.emplace_back(z[q].dim(), f, rel);
    }
    CyclicModuleData hc = descend_module(zc, qs);
    if (hc.status != CyclicStatus::cyclic) {
      r.columns_cyclic = false;
      continue;
    }
    std::vector<int> e2 = cyclic_homology(hc);
    for (int q = 0; q <= qmax; ++q) r.e2[p][q] = e2[q];
  }
  HopfTriple t = make_triple(s.A, s.H, m, sigma);
  InvariantChains ch = coinvariant_chain_module(t, qmax + 1);
  certify(ch.module);
  r.hc = cyclic_homology(ch.module);
  r.converges = r.columns_cyclic;
  for (int n = 0; n <= std::min(pmax, qmax); ++n) {
    int sum = 0;
    for (int p = 0; p <= n; ++p) sum += r.e2[p][n - p];
    r.e2_total.push_back(sum);
    if (sum != r.hc[n]) r.converges = false;
  }
  return r;
}

}  // namespace hopfcyc
