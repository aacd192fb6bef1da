#include "hopfcyc/cotriples.hpp"

#include "hopfcyc/tensor.hpp"

namespace hopfcyc {

namespace {

using Legs = std::vector<int>;

long long product(const Legs& dims) {
  long long p = 1;
  for (int d : dims) p *= d;
  return p;
}

template <class Fn>
SparseMatrix leg_operator(const Legs& in, const Legs& out, const Field& f, Fn&& op) {
  return tensor_operator(in, out, f, [&](const Legs& legs) {
    TensorExpr e = TensorExpr::basis(legs, f);
    op(e);
    return e;
  });
}

// [v, c_0 .. c_n]
Legs cochain_dims(const HopfCotriple& t, int n) {
  Legs d(n + 2, t.C.dim());
  d[0] = t.V.dim();
  return d;
}

// [v, h_1 .. h_n]
Legs reduced_dims(int dV, int dH, int n) {
  Legs d(n + 1, dH);
  d[0] = dV;
  return d;
}

bool trivial_coaction(const HopfAlgebra& h, const HComodule& v) {
  return v.dim() == 1 && v.coaction == SparseMatrix::from_columns(h.dim(), h.field, {h.unit});
}

std::vector<SparseVec> coinvariant_relations(const HopfCotriple& t, int n) {
  const Field& f = t.H.field;
  const int d = static_cast<int>(product(cochain_dims(t, n)));
  std::vector<SparseVec> rel;
  for (int h = 0; h < t.H.dim(); ++h) {
    SparseMatrix a = diagonal_action(t, n, h) - SparseMatrix::identity(d, f).scaled(t.delta.at(0, h));
    for (int j = 0; j < d; ++j)
      if (!a.col(j).empty()) rel.push_back(a.col(j));
  }
  return rel;
}

}  // namespace

HopfCotriple make_cotriple(ModuleCoalgebra C, HopfAlgebra H, HComodule V, SparseMatrix delta) {
  if (!(C.field == H.field)) throw PreconditionError("coalgebra and Hopf algebra over different fields");
  if (!H.certificate.ok()) throw PreconditionError("H fails its Hopf certificate");
  AxiomReport mc = check_module_coalgebra(H, C);
  if (!mc.ok()) throw PreconditionError("not a module coalgebra: " + mc.failures().front());
  AxiomReport cm = check_comodule(H, V);
  if (!cm.ok()) throw PreconditionError("not a comodule: " + cm.failures().front());
  if (delta.rows() != 1 || delta.cols() != H.dim() || !is_character(H, delta))
    throw PreconditionError("delta is not a character");
  return HopfCotriple{std::move(C), std::move(H), std::move(V), std::move(delta)};
}

HopfCotriple self_cotriple(const HopfAlgebra& h, HComodule v, SparseMatrix delta) {
  return make_cotriple(self_module_coalgebra(h), h, std::move(v), std::move(delta));
}

HopfCotriple trivial_cotriple(const Field& f, IndexedSpace space, SparseMatrix comult, SparseMatrix counit) {
  HopfAlgebra k = ground_field_hopf(f);
  ModuleCoalgebra c = trivial_module_coalgebra(k, std::move(space), std::move(comult), std::move(counit));
  HComodule v = grouplike_comodule(k, k.unit, "k");
  return make_cotriple(std::move(c), k, std::move(v), k.counit);
}

VTwistedAntipode v_twisted_antipode(const HopfAlgebra& h, const HComodule& v, const SparseMatrix& delta) {
  const Field& f = h.field;
  const int dH = h.dim(), dV = v.dim();
  SparseMatrix st = twisted_antipode(h, delta), sti = twisted_antipode_inverse(h, delta);
  Legs dims{dV, dH};
  VTwistedAntipode out;
  out.forward = leg_operator(dims, dims, f, [&](TensorExpr& e) {
    e.split(0, v.coaction, dV).map(0, h.antipode_inv).map(2, st).merge(0, 2, h.mult, dH, 2);
  });
  out.inverse = leg_operator(dims, dims, f, [&](TensorExpr& e) {
    e.split(0, v.coaction, dV).map(0, h.antipode_inv).map(2, sti).merge(2, 0, h.mult, dH, 2);
  });
  SparseMatrix id = SparseMatrix::identity(dV * dH, f);
  out.inverse_verified = out.forward * out.inverse == id && out.inverse * out.forward == id;
  return out;
}

ComatchedPairCertificate check_comatched_pair(const HopfAlgebra& h, const HComodule& v, const SparseMatrix& delta) {
  const Field& f = h.field;
  ComatchedPairCertificate c;
  SparseMatrix idV = SparseMatrix::identity(v.dim(), f);
  auto through = [&](const SparseMatrix& covec) { return tensor(covec, idV) * v.coaction; };
  c.delta_fixes_V = through(delta) == idV;
  if (!c.delta_fixes_V) c.witnesses.push_back("v(0) delta(v(-1)) != v");
  bool via_s = through(delta * h.antipode) == idV;
  bool via_si = through(delta * h.antipode_inv) == idV;
  c.antipode_forms = via_s && via_si;
  if (!via_s) c.witnesses.push_back("v(0) delta(S(v(-1))) != v");
  if (!via_si) c.witnesses.push_back("v(0) delta(S^-1(v(-1))) != v");
  VTwistedAntipode s = v_twisted_antipode(h, v, delta);
  if (!s.inverse_verified) c.witnesses.push_back("S~_V^-1 is not inverse to S~_V");
  c.involution = s.forward * s.forward == SparseMatrix::identity(v.dim() * h.dim(), f);
  if (!c.involution) c.witnesses.push_back("S~_V^2 != id");
  return c;
}

bool check_coinvariant_exchange(const HopfAlgebra& h, const HModule& m, const HModule& n, const SparseMatrix& delta) {
  const Field& f = h.field;
  const int dH = h.dim(), dM = m.dim(), dN = n.dim();
  Legs mn{dM, dN};
  std::vector<SparseVec> rel;
  for (int x = 0; x < dH; ++x) {
    SparseMatrix a = leg_operator(mn, mn, f, [&](TensorExpr& e) {
      e.insert(0, unit_vec(x, f)).split(0, h.comult, dH).merge(0, 2, m.action, dM, 2).merge(0, 2, n.action, dN, 2);
    });
    a = a - SparseMatrix::identity(dM * dN, f).scaled(delta.at(0, x));
    for (int j = 0; j < a.cols(); ++j)
      if (!a.col(j).empty()) rel.push_back(a.col(j));
  }
  Quotient q(dM * dN, f, rel);
  SparseMatrix st = twisted_antipode(h, delta);
  for (int x = 0; x < dH; ++x)
    for (int i = 0; i < dM; ++i)
      for (int j = 0; j < dN; ++j) {
        SparseVec lhs, rhs;
        for (const auto& [r, c] : m.act(x, i)) lhs.emplace_back(r * dN + j, c);
        SparseVec sx = st.col(x);
        SparseVec image = n.act_by(sx, dH).col(j);
        for (const auto& [r, c] : image) rhs.emplace_back(i * dN + r, c);
        if (q.project(vec_normalize(lhs)) != q.project(vec_normalize(rhs))) return false;
      }
  return true;
}

CyclicModuleData build_cochain_paracocyclic(const HopfCotriple& t, int nmax, long long budget) {
  const Field& f = t.H.field;
  const int dC = t.C.dim(), dV = t.V.dim();
  std::vector<IndexedSpace> spaces;
  for (int n = 0; n <= nmax; ++n) {
    long long d = product(cochain_dims(t, n));
    check_budget(d, budget, "cotriple cochains");
    spaces.push_back(IndexedSpace::numbered("C^" + std::to_string(n), static_cast<int>(d)));
  }
  CyclicModuleData m = CyclicModuleData::shell(f, Direction::cohomological, std::move(spaces));
  for (int n = 0; n <= nmax; ++n) {
    Legs here = cochain_dims(t, n);
    if (n >= 1)
      for (int i = 0; i <= n; ++i)
        m.faces[n].push_back(leg_operator(cochain_dims(t, n - 1), here, f, [&](TensorExpr& e) {
          if (i < n) {
            e.split(1 + i, t.C.comult, dC);
            return;
          }
          e.split(0, t.V.coaction, dV).split(2, t.C.comult, dC).merge(0, 2, t.C.action, dC, 2).move(1, n + 1);
        }));
    if (n < nmax)
      for (int i = 0; i <= n; ++i)
        m.degeneracies[n].push_back(
            leg_operator(cochain_dims(t, n + 1), here, f, [&](TensorExpr& e) { e.contract(2 + i, t.C.counit); }));
    m.cyclic[n] = leg_operator(here, here, f, [&](TensorExpr& e) {
      e.split(0, t.V.coaction, dV).merge(0, 2, t.C.action, dC, 2).move(1, n + 1);
    });
  }
  certify(m);
  return m;
}

SparseMatrix diagonal_action(const HopfCotriple& t, int n, int h) {
  const Field& f = t.H.field;
  const int dH = t.H.dim(), dC = t.C.dim();
  Legs here = cochain_dims(t, n);
  return leg_operator(here, here, f, [&](TensorExpr& e) {
    e.insert(n + 2, unit_vec(h, f));
    for (int k = 0; k < n; ++k) e.split(n + 2 + k, t.H.comult, dH);
    for (int i = n; i >= 0; --i) e.merge(n + 2 + i, 1 + i, t.C.action, dC, 1 + i);
  });
}

CoinvariantCochains coinvariant_cochain_module(const HopfCotriple& t, int nmax, long long budget) {
  CoinvariantCochains out;
  out.pair = check_comatched_pair(t.H, t.V, t.delta);
  if (!out.pair.compatible()) throw PreconditionError("not a comatched pair in involution");
  CyclicModuleData ambient = build_cochain_paracocyclic(t, nmax, budget);
  for (int n = 0; n <= nmax; ++n) out.quotients.emplace_back(ambient.dim(n), t.H.field, coinvariant_relations(t, n));
  out.module = descend_module(ambient, out.quotients);
  out.report = certify(out.module);
  return out;
}

CyclicModuleData reduced_cocyclic_model(const HopfAlgebra& h, const HComodule& v, const SparseMatrix& delta,
                                        int nmax) {
  const Field& f = h.field;
  const int dH = h.dim(), dV = v.dim();
  if (v.coaction.rows() != dH * dV || v.coaction.cols() != dV) throw DimensionMismatch("coaction shape");
  if (delta.rows() != 1 || delta.cols() != dH) throw DimensionMismatch("character shape");
  SparseMatrix st = twisted_antipode(h, delta);
  std::vector<IndexedSpace> spaces;
  for (int n = 0; n <= nmax; ++n) {
    long long d = product(reduced_dims(dV, dH, n));
    check_budget(d, kDefaultBudget, "reduced cochains");
    spaces.push_back(IndexedSpace::numbered("VH^" + std::to_string(n), static_cast<int>(d)));
  }
  CyclicModuleData m = CyclicModuleData::shell(f, Direction::cohomological, std::move(spaces));
  for (int n = 0; n <= nmax; ++n) {
    Legs here = reduced_dims(dV, dH, n);
    if (n >= 1)
      for (int i = 0; i <= n; ++i)
        m.faces[n].push_back(leg_operator(reduced_dims(dV, dH, n - 1), here, f, [&](TensorExpr& e) {
          if (i == 0)
            e.insert(1, h.unit);
          else if (i < n)
            e.split(i, h.comult, dH);
          else
            e.split(0, v.coaction, dV).move(0, n);
        }));
    if (n < nmax)
      for (int i = 0; i <= n; ++i)
        m.degeneracies[n].push_back(
            leg_operator(reduced_dims(dV, dH, n + 1), here, f, [&](TensorExpr& e) { e.contract(1 + i, h.counit); }));
    m.cyclic[n] = leg_operator(here, here, f, [&](TensorExpr& e) {
      if (n == 0) return;
      // [p, v, a_1 .. a_n, h_2 .. h_n] with a_k = h_1^(k)
      e.split(0, v.coaction, dV);
      for (int k = 0; k + 1 < n; ++k) e.split(2 + k, h.comult, dH);
      for (int k = 2; k <= n; ++k) e.map(1 + k, h.antipode);
      for (int j = 2; j <= n; ++j) e.merge(n + 3 - j, n + 2, h.mult, dH, n + 2);
      e.map(2, st).merge(2, 0, h.mult, dH, 2).move(1, n);
    });
  }
  certify(m);
  return m;
}

ReducedCocyclicComparison compare_reduced_cocyclic(const HopfAlgebra& h, const HComodule& v, const SparseMatrix& delta,
                                                   int nmax) {
  ReducedCocyclicComparison out;
  HopfCotriple t = self_cotriple(h, v, delta);
  out.quotient = coinvariant_cochain_module(t, nmax);
  out.reduced = reduced_cocyclic_model(h, v, delta, nmax);
  const Field& f = h.field;
  out.isomorphic = true;
  for (int n = 0; n <= nmax; ++n) {
    SparseMatrix ins = leg_operator(reduced_dims(v.dim(), h.dim(), n), cochain_dims(t, n), f,
                                    [&](TensorExpr& e) { e.insert(1, h.unit); });
    SparseMatrix phi = out.quotient.quotients[n].projection() * ins;
    if (phi.rows() != phi.cols() || rank(phi) != phi.cols()) {
      out.isomorphic = false;
      out.failures.push_back("phi_" + std::to_string(n) + " is not invertible");
    }
    out.phi.push_back(std::move(phi));
  }
  AxiomReport r = check_cyclic_map(out.reduced, out.quotient.module, out.phi);
  out.equivariant = r.ok();
  for (const auto& s : r.failures()) out.failures.push_back(s);
  return out;
}

CotraceSplitting cotrace_splitting(const HopfCotriple& t, const SparseVec& t_elem, int nmax) {
  if (!trivial_coaction(t.H, t.V)) throw PreconditionError("cotrace splitting needs V = k");
  if (!is_delta_integral(t.H, t.delta, t_elem)) throw PreconditionError("not a delta-integral");
  if (!is_cotrace(t.H, t_elem)) throw PreconditionError("not a cotrace");
  const Field& f = t.H.field;
  CotraceSplitting out;
  out.delta_t = evaluate(t.delta, t_elem);
  CoinvariantCochains q = coinvariant_cochain_module(t, nmax);
  CyclicModuleData ambient = build_cochain_paracocyclic(t, nmax);
  out.gamma_descends = true;
  out.pi_gamma_scalar = true;
  for (int n = 0; n <= nmax; ++n) {
    SparseMatrix hat(ambient.dim(n), ambient.dim(n), f);
    for (const auto& [x, c] : t_elem) hat = hat + diagonal_action(t, n, x).scaled(c);
    for (const SparseVec& r : q.quotients[n].relations().rows())
      if (!hat.apply(r).empty()) out.gamma_descends = false;
    out.pi.push_back(q.quotients[n].projection());
    out.gamma.push_back(hat * q.quotients[n].section());
    if (out.pi[n] * out.gamma[n] != SparseMatrix::identity(q.module.dim(n), f).scaled(out.delta_t))
      out.pi_gamma_scalar = false;
  }
  out.cyclic_map = check_cyclic_map(q.module, ambient, out.gamma).ok();
  out.summand = out.gamma_descends && out.cyclic_map && out.pi_gamma_scalar && !out.delta_t.is_zero();
  return out;
}

}  // namespace hopfcyc
