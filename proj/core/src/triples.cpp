#include "hopfcyc/triples.hpp"

#include <map>

#include "hopfcyc/tensor.hpp"

namespace hopfcyc {

namespace {

using Legs = std::vector<int>;
using ExprOp = std::function<void(TensorExpr&)>;

// Operators of a chain model given on pure tensors, in the CyclicModuleData layout.
struct ChainModel {
  Field field;
  std::string name;
  std::function<Legs(int)> dims;
  std::function<void(int, int, TensorExpr&)> face;
  std::function<void(int, int, TensorExpr&)> degeneracy;
  std::function<void(int, TensorExpr&)> cyclic;
};

long long product(const Legs& dims) {
  long long p = 1;
  for (int d : dims) p *= d;
  return p;
}

IndexedSpace chain_space(const std::string& name, int n, long long dim) {
  return IndexedSpace::numbered(name + "_" + std::to_string(n), static_cast<int>(dim));
}

SparseMatrix op_matrix(const ChainModel& c, const Legs& in, const Legs& out,
                       const std::function<void(TensorExpr&)>& op) {
  return tensor_operator(in, out, c.field, [&](const Legs& legs) {
    TensorExpr e = TensorExpr::basis(legs, c.field);
    op(e);
    return e;
  });
}

CyclicModuleData ambient_module(const ChainModel& c, int nmax, long long budget) {
  std::vector<IndexedSpace> spaces;
  for (int n = 0; n <= nmax; ++n) {
    long long d = product(c.dims(n));
    check_budget(d, budget, c.name + " chains");
    spaces.push_back(chain_space(c.name, n, d));
  }
  CyclicModuleData m = CyclicModuleData::shell(c.field, Direction::homological, std::move(spaces));
  for (int n = 0; n <= nmax; ++n) {
    Legs here = c.dims(n);
    if (n >= 1)
      for (int i = 0; i <= n; ++i)
        m.faces[n].push_back(op_matrix(c, here, c.dims(n - 1), [&](TensorExpr& e) { c.face(n, i, e); }));
    if (n < nmax)
      for (int i = 0; i <= n; ++i)
        m.degeneracies[n].push_back(op_matrix(c, here, c.dims(n + 1), [&](TensorExpr& e) { c.degeneracy(n, i, e); }));
    m.cyclic[n] = op_matrix(c, here, here, [&](TensorExpr& e) { c.cyclic(n, e); });
  }
  certify(m);
  return m;
}

// A subspace given by an explicit basis map eta with left inverse theta.
struct Transport {
  std::function<Legs(int)> dims;
  std::function<TensorExpr(int, const Legs&)> eta;
  std::function<SparseVec(int, const TensorExpr&)> theta;
};

CyclicModuleData transported_module(const ChainModel& c, const Transport& t, int nmax, long long budget,
                                    std::vector<SparseMatrix>& inclusion, const std::string& name) {
  std::vector<IndexedSpace> spaces;
  inclusion.clear();
  for (int n = 0; n <= nmax; ++n) {
    long long d = product(t.dims(n));
    long long amb = product(c.dims(n));
    check_budget(d, budget, name + " chains");
    check_budget(amb, budget * 8, name + " ambient chains");
    spaces.push_back(chain_space(name, n, d));
    Legs rd = t.dims(n), ad = c.dims(n);
    inclusion.push_back(tensor_operator(rd, ad, c.field, [&](const Legs& legs) { return t.eta(n, legs); }));
  }
  CyclicModuleData m = CyclicModuleData::shell(c.field, Direction::homological, std::move(spaces));
  auto transport = [&](int src, int dst, const std::function<void(TensorExpr&)>& op, const std::string& what) {
    Legs rd = t.dims(src), ad = c.dims(dst);
    SparseMatrix out(m.dim(dst), m.dim(src), c.field);
    for (int j = 0; j < m.dim(src); ++j) {
      TensorExpr e = t.eta(src, TensorExpr::unflatten(j, rd));
      op(e);
      e.compress();
      SparseVec coords = t.theta(dst, e);
      if (inclusion[dst].apply(coords) != e.flatten(ad))
        throw RestrictionError(what + " in degree " + std::to_string(src) + " leaves the coinvariants");
      out.set_col(j, std::move(coords));
    }
    return out;
  };
  for (int n = 0; n <= nmax; ++n) {
    if (n >= 1)
      for (int i = 0; i <= n; ++i)
        m.faces[n].push_back(transport(n, n - 1, [&](TensorExpr& e) { c.face(n, i, e); }, "face"));
    if (n < nmax)
      for (int i = 0; i <= n; ++i)
        m.degeneracies[n].push_back(transport(n, n + 1, [&](TensorExpr& e) { c.degeneracy(n, i, e); }, "degeneracy"));
    m.cyclic[n] = transport(n, n, [&](TensorExpr& e) { c.cyclic(n, e); }, "cyclic operator");
  }
  certify(m);
  return m;
}

TensorExpr rebuild(const TensorExpr& e, const std::function<void(const TensorExpr::Term&, TensorExpr&)>& fn) {
  TensorExpr out(e.field());
  for (const auto& t : e.terms()) fn(t, out);
  return out;
}

// legs [m, a_0 .. a_n] -> [P, m, a_0' .. a_n'] with P = a_0(-1) ... a_n(-1).
void coact_chain(TensorExpr& e, int n, const SparseMatrix& coaction, int dA, const SparseMatrix& hmult, int dH) {
  e.move(0, n + 1);  // [a_0 .. a_n, m]
  e.split(0, coaction, dA);
  for (int j = 1; j <= n; ++j) {
    e.split(1 + j, coaction, dA);
    e.merge(0, 1 + j, hmult, dH, 0);
  }
  e.move(n + 2, 1);
}

// legs [a_1 .. a_k, rest...] -> [P, a_1' .. a_k', rest...]; P = 1 when k = 0.
void coact_prefix(TensorExpr& e, int k, const SparseMatrix& coaction, int dA, const HopfAlgebra& h) {
  if (k == 0) {
    e.insert(0, h.unit);
    return;
  }
  e.split(0, coaction, dA);
  for (int j = 1; j < k; ++j) {
    e.split(1 + j, coaction, dA);
    e.merge(0, 1 + j, h.mult, h.dim(), 0);
  }
}

ChainModel triple_model(const HopfTriple& t) {
  ChainModel c;
  c.field = t.H.field;
  c.name = "C(" + t.A.space.name + "," + t.M.space.name + ")";
  const int dM = t.M.dim(), dA = t.A.dim();
  c.dims = [=](int n) {
    Legs d(n + 2, dA);
    d[0] = dM;
    return d;
  };
  c.face = [&t, dM, dA](int n, int i, TensorExpr& e) {
    if (i < n) {
      e.merge(1 + i, 2 + i, t.A.mult, dA);
      return;
    }
    e.split(1 + n, t.A.coaction, dA);   // [m, a_0 .. a_{n-1}, h, a_n']
    e.merge(n + 1, 0, t.M.action, dM, 0);
    e.merge(n + 1, 1, t.A.mult, dA, 1);
  };
  c.degeneracy = [&t](int, int i, TensorExpr& e) { e.insert(2 + i, t.A.unit); };
  c.cyclic = [&t, dM, dA](int n, TensorExpr& e) {
    e.split(1 + n, t.A.coaction, dA);
    e.merge(n + 1, 0, t.M.action, dM, 0);
    e.move(n + 1, 1);
  };
  return c;
}

ChainModel graded_model(const GradedTriple& t, std::map<std::string, SparseMatrix>& cache) {
  ChainModel c;
  c.field = t.A.field;
  c.name = "C(" + t.A.space.name + "," + t.m_space.name + ")";
  const int dM = t.m_space.dim(), dA = t.A.dim();
  auto act = [&t, &cache](const std::string& w) -> const SparseMatrix& {
    auto it = cache.find(w);
    if (it == cache.end()) it = cache.emplace(w, t.act(w)).first;
    return it->second;
  };
  // m <- w(a_leg) m
  auto twist = [&t, act](TensorExpr& e, int leg) {
    e = rebuild(e, [&](const TensorExpr::Term& term, TensorExpr& out) {
      const SparseMatrix& g = act(t.A.graded->weight[term.legs[leg]]);
      for (const auto& [r, v] : g.col(term.legs[0])) {
        Legs l = term.legs;
        l[0] = r;
        out.add_term(term.coef * v, l);
      }
    });
  };
  c.dims = [=](int n) {
    Legs d(n + 2, dA);
    d[0] = dM;
    return d;
  };
  c.face = [&t, twist, dA](int n, int i, TensorExpr& e) {
    if (i < n) {
      e.merge(1 + i, 2 + i, t.A.mult, dA);
      return;
    }
    twist(e, 1 + n);
    e.merge(1 + n, 1, t.A.mult, dA, 1);
  };
  c.degeneracy = [&t](int, int i, TensorExpr& e) { e.insert(2 + i, t.A.unit); };
  c.cyclic = [twist](int n, TensorExpr& e) {
    twist(e, 1 + n);
    e.move(1 + n, 1);
  };
  return c;
}

std::string describe(const SparseVec& v, const IndexedSpace& s) {
  std::string out;
  for (const auto& [i, x] : v) {
    if (!out.empty()) out += " + ";
    out += "(" + x.to_string() + ")" + (i < s.dim() ? s.basis[i] : std::to_string(i));
  }
  return out.empty() ? "0" : out;
}

bool is_counit_module(const HopfAlgebra& h, const HModule& m) {
  return m.dim() == 1 && m.action == character_module(h, h.counit, "").action;
}

}  // namespace

HopfTriple make_triple(ComoduleAlgebra A, HopfAlgebra H, HModule M, SparseVec sigma) {
  if (!H.certificate.ok()) throw PreconditionError("Hopf algebra fails: " + H.certificate.failures().front());
  AxiomReport ra = check_comodule_algebra(H, A);
  if (!ra.ok()) throw PreconditionError("comodule algebra fails: " + ra.failures().front());
  AxiomReport rm = check_module(H, M);
  if (!rm.ok()) throw PreconditionError("module fails: " + rm.failures().front());
  if (!is_grouplike(H, sigma)) throw PreconditionError("sigma is not grouplike");
  return HopfTriple{std::move(A), std::move(H), std::move(M), std::move(sigma)};
}

HopfTriple self_triple(const HopfAlgebra& h, HModule m, SparseVec sigma) {
  return make_triple(self_comodule_algebra(h), h, std::move(m), std::move(sigma));
}

HopfTriple trivial_triple(const Field& f, IndexedSpace space, SparseMatrix mult, SparseVec unit, int dim_m) {
  HopfAlgebra k = ground_field_hopf(f);
  ComoduleAlgebra a = trivial_comodule_algebra(k, f, std::move(space), std::move(mult), std::move(unit));
  HModule m{IndexedSpace::numbered("M", dim_m), SparseMatrix::identity(dim_m, f)};
  return make_triple(std::move(a), k, std::move(m), k.unit);
}

HatAntipode hat_antipode(const HopfAlgebra& h, const HModule& m, const SparseVec& sigma) {
  if (!is_grouplike(h, sigma)) throw PreconditionError("sigma is not grouplike");
  const int dH = h.dim(), dM = m.dim();
  const Field& f = h.field;
  SparseMatrix ls = h.left_mult(sigma) * h.antipode;
  SparseMatrix rs = h.right_mult(sigma) * h.antipode_inv;
  Legs dims{dM, dH};
  HatAntipode out;
  out.forward = tensor_operator(dims, dims, f, [&](const Legs& legs) {
    TensorExpr e = TensorExpr::basis(legs, f);
    e.split(1, h.comult, dH).merge(2, 0, m.action, dM, 0).map(1, ls);
    return e;
  });
  out.inverse = tensor_operator(dims, dims, f, [&](const Legs& legs) {
    TensorExpr e = TensorExpr::basis(legs, f);
    e.split(1, h.comult, dH).merge(1, 0, m.action, dM, 0).map(1, rs);
    return e;
  });
  SparseMatrix id = SparseMatrix::identity(dM * dH, f);
  out.inverse_verified = out.forward * out.inverse == id && out.inverse * out.forward == id;
  return out;
}

MatchedPairCertificate check_matched_pair(const HopfAlgebra& h, const HModule& m, const SparseVec& sigma) {
  MatchedPairCertificate c;
  SparseMatrix s = m.act_by(sigma, h.dim());
  c.sigma_fixes_M = s == SparseMatrix::identity(m.dim(), h.field);
  if (!c.sigma_fixes_M)
    for (int j = 0; j < m.dim(); ++j)
      if (s.col(j) != unit_vec(j, h.field)) {
        c.details.push_back("sigma moves " + m.space.basis[j] + " to " + describe(s.col(j), m.space));
        break;
      }
  HatAntipode hat = hat_antipode(h, m, sigma);
  SparseMatrix sq = hat.forward * hat.forward;
  c.involution = sq == SparseMatrix::identity(m.dim() * h.dim(), h.field);
  if (!c.involution)
    for (int j = 0; j < sq.cols(); ++j)
      if (sq.col(j) != unit_vec(j, h.field)) {
        std::string label = m.space.basis[j / h.dim()] + "|" + h.space.basis[j % h.dim()];
        c.details.push_back("hat antipode squared moves " + label);
        break;
      }
  return c;
}

bool check_coaction_identity(const HopfTriple& t) {
  const HopfAlgebra& h = t.H;
  const int dH = h.dim(), dA = t.A.dim(), dM = t.M.dim();
  const Field& f = h.field;
  SparseMatrix sigma_s = h.left_mult(t.sigma) * h.antipode;
  Legs in{dA, dM}, out{dH, dM, dA};
  SparseMatrix lhs = tensor_operator(in, out, f, [&](const Legs& legs) {
    TensorExpr e = TensorExpr::basis(legs, f);
    e.split(0, t.A.coaction, dA);  // [h, a', m]
    e.split(0, h.comult, dH);      // [h1, h23, a', m]
    e.split(1, h.comult, dH);      // [h1, h2, h3, a', m]
    e.map(0, sigma_s);             // sigma S(h1)
    e.merge(2, 0, h.mult, dH, 0);  // h3 sigma S(h1)
    e.merge(1, 3, t.M.action, dM, 3);  // [x, a', h2 m]
    e.move(2, 1);
    return e;
  });
  SparseMatrix rhs = tensor_operator(in, out, f, [&](const Legs& legs) {
    TensorExpr e = TensorExpr::basis(legs, f);
    e.split(0, t.A.coaction, dA);
    e.merge(0, 2, t.M.action, dM, 2);  // [a', h m]
    e.move(1, 0);
    e.insert(0, t.sigma);
    return e;
  });
  return lhs == rhs;
}

CyclicModuleData build_chain_paracyclic(const HopfTriple& t, int nmax, long long budget) {
  return ambient_module(triple_model(t), nmax, budget);
}

CyclicModuleData build_chain_paracyclic(const GradedTriple& t, int nmax, long long budget) {
  std::map<std::string, SparseMatrix> cache;
  return ambient_module(graded_model(t, cache), nmax, budget);
}

SparseMatrix chain_coaction(const HopfTriple& t, int n) {
  const int dA = t.A.dim(), dH = t.H.dim();
  Legs in(n + 2, dA), out(n + 3, dA);
  in[0] = t.M.dim();
  out[0] = dH;
  out[1] = t.M.dim();
  return tensor_operator(in, out, t.H.field, [&](const Legs& legs) {
    TensorExpr e = TensorExpr::basis(legs, t.H.field);
    coact_chain(e, n, t.A.coaction, dA, t.H.mult, dH);
    return e;
  });
}

namespace {

// eta on legs [m, w_0, a_1 .. a_n] for A = H (x) W with coaction Delta (x) id.
TensorExpr free_eta(const HopfTriple& t, int n, const Legs& legs, const SparseMatrix& sigma_s) {
  const int dA = t.A.dim(), fw = t.A.fiber_dim;
  TensorExpr e = TensorExpr::basis(legs, t.H.field);
  e.move(0, n + 1).move(0, n + 1);  // [a_1 .. a_n, m, w_0]
  coact_prefix(e, n, t.A.coaction, dA, t.H);  // [P, a_1' .. a_n', m, w_0]
  e.map(0, sigma_s);
  e.merge(0, n + 2, SparseMatrix::identity(dA, t.H.field), fw, 0);  // [a_0, a_1' .. a_n', m]
  e.move(n + 1, 0);
  return e;
}

SparseVec free_theta(const HopfTriple& t, int n, const TensorExpr& x) {
  const int dA = t.A.dim(), fw = t.A.fiber_dim;
  TensorExpr e = x;
  e.split(1, SparseMatrix::identity(dA, t.H.field), fw);  // [m, h_0, w_0, a_1 ..]
  e.contract(1, t.H.counit);
  Legs dims(n + 2, dA);
  dims[0] = t.M.dim();
  dims[1] = fw;
  return e.flatten(dims);
}

}  // namespace

InvariantChains coinvariant_chain_module(const HopfTriple& t, int nmax, CoinvariantMethod method, long long budget) {
  InvariantChains out;
  out.pair = check_matched_pair(t.H, t.M, t.sigma);
  if (method == CoinvariantMethod::automatic)
    method = t.A.fiber_dim > 0 ? CoinvariantMethod::free_comodule : CoinvariantMethod::kernel;
  out.method = method;
  ChainModel model = triple_model(t);
  const std::string name = "C^H(" + t.A.space.name + "," + t.M.space.name + ")";
  if (method == CoinvariantMethod::kernel) {
    CyclicModuleData amb = ambient_module(model, nmax, budget);
    std::vector<Subspace> subs;
    for (int n = 0; n <= nmax; ++n) {
      SparseMatrix rho = chain_coaction(t, n);
      SparseMatrix sig = tensor(SparseMatrix::from_columns(t.H.dim(), t.H.field, {t.sigma}),
                                SparseMatrix::identity(amb.dim(n), t.H.field));
      subs.emplace_back(amb.dim(n), t.H.field, kernel_basis(rho - sig));
      out.inclusion.push_back(subs.back().inclusion());
    }
    out.module = restrict_module(amb, subs);
  } else {
    if (t.A.fiber_dim <= 0) throw PreconditionError("free comodule method needs A = H (x) W");
    SparseMatrix sigma_s = t.H.left_mult(t.sigma) * t.H.antipode;
    Transport tr;
    const int dA = t.A.dim(), fw = t.A.fiber_dim, dM = t.M.dim();
    tr.dims = [=](int n) {
      Legs d(n + 2, dA);
      d[0] = dM;
      d[1] = fw;
      return d;
    };
    tr.eta = [&](int n, const Legs& legs) { return free_eta(t, n, legs, sigma_s); };
    tr.theta = [&](int n, const TensorExpr& e) { return free_theta(t, n, e); };
    out.module = transported_module(model, tr, nmax, budget, out.inclusion, name);
  }
  for (int n = 0; n <= nmax; ++n) out.module.spaces[n].name = name + "_" + std::to_string(n);
  out.report = check_cyclic(out.module);
  return out;
}

InvariantChains coinvariant_chain_module(const GradedTriple& t, int nmax, long long budget) {
  if (!t.A.graded) throw PreconditionError("graded triple needs a graded backend");
  const GradedBackend& g = *t.A.graded;
  const int dA = t.A.dim(), dM = t.m_space.dim();
  std::map<std::string, SparseMatrix> cache;
  ChainModel model = graded_model(t, cache);
  // chains of A-legs with total weight sigma, per degree
  std::vector<std::vector<Legs>> chains(nmax + 1);
  std::vector<std::map<Legs, int>> index(nmax + 1);
  std::vector<std::pair<Legs, std::string>> partial;
  for (int a = 0; a < dA; ++a) partial.push_back({{a}, g.weight[a]});
  for (int n = 0; n <= nmax; ++n) {
    if (n > 0) {
      std::vector<std::pair<Legs, std::string>> next;
      for (const auto& [legs, w] : partial)
        for (int a = 0; a < dA; ++a) {
          Legs l = legs;
          l.push_back(a);
          next.push_back({l, g.combine(w, g.weight[a])});
        }
      partial = std::move(next);
    }
    check_budget(static_cast<long long>(partial.size()), budget * 8, "graded chain enumeration");
    for (const auto& [legs, w] : partial)
      if (w == t.sigma) {
        index[n][legs] = static_cast<int>(chains[n].size());
        chains[n].push_back(legs);
      }
  }
  Transport tr;
  tr.dims = [&](int n) { return Legs{dM, static_cast<int>(chains[n].size())}; };
  tr.eta = [&](int n, const Legs& legs) {
    Legs full{legs[0]};
    for (int a : chains[n][legs[1]]) full.push_back(a);
    return TensorExpr::basis(full, t.A.field);
  };
  tr.theta = [&](int n, const TensorExpr& e) {
    std::vector<std::pair<int, Scalar>> v;
    const int k = static_cast<int>(chains[n].size());
    for (const auto& term : e.terms()) {
      Legs a(term.legs.begin() + 1, term.legs.end());
      auto it = index[n].find(a);
      if (it == index[n].end())
        throw RestrictionError("an operator leaves the weight-" + t.sigma + " chains in degree " + std::to_string(n));
      v.emplace_back(term.legs[0] * k + it->second, term.coef);
    }
    return vec_normalize(std::move(v));
  };
  InvariantChains out;
  out.method = CoinvariantMethod::kernel;
  const std::string name = "C^G(" + t.A.space.name + "," + t.m_space.name + ")";
  out.module = transported_module(model, tr, nmax, budget, out.inclusion, name);
  out.pair.sigma_fixes_M = t.act(t.sigma) == SparseMatrix::identity(dM, t.A.field);
  out.pair.involution = true;  // group algebras are cocommutative
  out.report = check_cyclic(out.module);
  return out;
}

namespace {

ChainModel reduced_chain_model(const HopfAlgebra& h, const HModule& m, const SparseVec& sigma) {
  ChainModel c;
  c.field = h.field;
  c.name = "M(x)H^n";
  const int dM = m.dim(), dH = h.dim();
  SparseMatrix sigma_s = h.left_mult(sigma) * h.antipode;
  c.dims = [=](int n) {
    Legs d(n + 1, dH);
    d[0] = dM;
    return d;
  };
  c.face = [&h, &m, dM, dH](int n, int i, TensorExpr& e) {
    if (i == 0)
      e.contract(1, h.counit);
    else if (i < n)
      e.merge(i, i + 1, h.mult, dH);
    else
      e.merge(n, 0, m.action, dM, 0);
  };
  c.degeneracy = [&h](int, int i, TensorExpr& e) { e.insert(i + 1, h.unit); };
  c.cyclic = [&h, &m, dM, dH, sigma_s](int n, TensorExpr& e) {
    if (n == 0) return;
    e.move(0, n);  // [h_1 .. h_n, m]
    e.split(0, h.comult, dH);
    for (int j = 2; j <= n; ++j) {
      e.split(j, h.comult, dH);
      e.merge(0, j, h.mult, dH, 0);
    }
    // [P, h_1(2) .. h_n(2), m]
    e.merge(n, n + 1, m.action, dM, n + 1);
    e.map(0, sigma_s);
    e.move(n, 0);
  };
  return c;
}

}  // namespace

CyclicModuleData reduced_model(const HopfAlgebra& h, const HModule& m, const SparseVec& sigma, int nmax) {
  if (!is_grouplike(h, sigma)) throw PreconditionError("sigma is not grouplike");
  ChainModel c = reduced_chain_model(h, m, sigma);
  CyclicModuleData r = ambient_module(c, nmax, kDefaultBudget);
  for (int n = 0; n <= nmax; ++n) r.spaces[n].name = m.space.name + "(x)H^" + std::to_string(n);
  return r;
}

SparseMatrix reduced_eta(const HopfAlgebra& h, const HModule& m, const SparseVec& sigma, int n) {
  HopfTriple t{self_comodule_algebra(h), h, m, sigma};
  SparseMatrix sigma_s = h.left_mult(sigma) * h.antipode;
  Legs in(n + 1, h.dim()), out(n + 2, h.dim());
  in[0] = out[0] = m.dim();
  return tensor_operator(in, out, h.field, [&](const Legs& legs) {
    Legs l = legs;
    l.insert(l.begin() + 1, 0);
    return free_eta(t, n, l, sigma_s);
  });
}

SparseMatrix reduced_theta(const HopfAlgebra& h, const HModule& m, int n) {
  Legs in(n + 2, h.dim()), out(n + 1, h.dim());
  in[0] = out[0] = m.dim();
  return tensor_operator(in, out, h.field, [&](const Legs& legs) {
    TensorExpr e = TensorExpr::basis(legs, h.field);
    return e.contract(1, h.counit), e;
  });
}

ReducedComparison compare_reduced_model(const HopfAlgebra& h, const HModule& m, const SparseVec& sigma, int nmax) {
  ReducedComparison rc;
  rc.reduced = reduced_model(h, m, sigma, nmax);
  rc.chains = coinvariant_chain_module(self_triple(h, m, sigma), nmax, CoinvariantMethod::kernel);
  std::vector<SparseMatrix> to_chains;
  rc.isomorphic = true;
  for (int n = 0; n <= nmax; ++n) {
    const SparseMatrix& inc = rc.chains.inclusion[n];
    Subspace sub(inc.rows(), h.field, [&] {
      std::vector<SparseVec> cols;
      for (int j = 0; j < inc.cols(); ++j) cols.push_back(inc.col(j));
      return cols;
    }());
    SparseMatrix eta = reduced_eta(h, m, sigma, n);
    SparseMatrix theta = reduced_theta(h, m, n);
    SparseMatrix coords(sub.dim(), eta.cols(), h.field);
    bool inside = true;
    for (int j = 0; j < eta.cols(); ++j) {
      SparseVec c;
      if (!sub.coordinates(eta.col(j), c)) {
        inside = false;
        break;
      }
      coords.set_col(j, std::move(c));
    }
    if (!inside || sub.dim() != rc.reduced.dim(n)) {
      rc.isomorphic = false;
      rc.failures.push_back("eta does not land in the coinvariants in degree " + std::to_string(n));
      to_chains.push_back(SparseMatrix(sub.dim(), rc.reduced.dim(n), h.field));
      continue;
    }
    SparseMatrix id_r = SparseMatrix::identity(rc.reduced.dim(n), h.field);
    SparseMatrix id_c = SparseMatrix::identity(sub.dim(), h.field);
    SparseMatrix back = theta * sub.inclusion();
    if (back * coords != id_r || coords * back != id_c) {
      rc.isomorphic = false;
      rc.failures.push_back("eta and theta are not inverse in degree " + std::to_string(n));
    }
    to_chains.push_back(std::move(coords));
  }
  AxiomReport eq = check_cyclic_map(rc.reduced, rc.chains.module, to_chains);
  rc.equivariant = eq.ok();
  for (const auto& f : eq.failures()) rc.failures.push_back("eta does not " + f);
  return rc;
}

int module_coinvariants_dim(const HopfAlgebra& h, const HModule& m, const SparseMatrix& chi) {
  std::vector<SparseVec> rel;
  for (int b = 0; b < h.dim(); ++b)
    for (int j = 0; j < m.dim(); ++j) rel.push_back(vec_axpy(m.act(b, j), -chi.at(0, b), unit_vec(j, h.field)));
  return quotient_dim(m.dim(), rel);
}

std::vector<SparseMatrix> integral_homotopy(const HopfAlgebra& h, const HModule& m, const SparseVec& t, int nmax) {
  std::vector<SparseMatrix> out;
  for (int n = 0; n < nmax; ++n) {
    Legs in(n + 1, h.dim()), up(n + 2, h.dim());
    in[0] = up[0] = m.dim();
    out.push_back(tensor_operator(in, up, h.field, [&](const Legs& legs) {
      TensorExpr e = TensorExpr::basis(legs, h.field);
      return e.insert(1, t), e;
    }));
  }
  return out;
}

SemisimpleReport semisimple_check(const HopfAlgebra& h, const HModule& m, const SparseVec& sigma, int nmax) {
  SemisimpleReport r;
  CyclicModuleData red = reduced_model(h, m, sigma, nmax);
  auto t = normalized_integral(h);
  r.has_integral = t.has_value();
  if (t) r.contraction = contraction_check(red, integral_homotopy(h, m, *t, nmax));
  r.hc = cyclic_homology(red);
  int mh = module_coinvariants_dim(h, m, h.counit);
  for (int n = 0; n < nmax; ++n) r.expected.push_back(n % 2 == 0 ? mh : 0);
  return r;
}

AveragingSplitting averaging_splitting(const HopfTriple& t, const SparseMatrix& trace, int nmax) {
  if (!is_counit_module(t.H, t.M)) throw PreconditionError("averaging needs M = k with the counit action");
  if (!is_sigma_invariant_trace(t.H, t.sigma, trace)) throw PreconditionError("trace is not sigma-invariant");
  AveragingSplitting s;
  const Field& f = t.H.field;
  s.trace_of_sigma = evaluate(trace, t.sigma);
  CyclicModuleData amb = build_chain_paracyclic(t, nmax);
  InvariantChains inv = coinvariant_chain_module(t, nmax);
  s.inclusion = inv.inclusion;
  const int dA = t.A.dim(), dH = t.H.dim();
  s.lands_in_coinvariants = s.cyclic_map = s.gamma_i_scalar = true;
  for (int n = 0; n <= nmax; ++n) {
    Legs dims(n + 2, dA);
    dims[0] = 1;
    SparseMatrix g = tensor_operator(dims, dims, f, [&](const Legs& legs) {
      TensorExpr e = TensorExpr::basis(legs, f);
      coact_chain(e, n, t.A.coaction, dA, t.H.mult, dH);
      return e.contract(0, trace), e;
    });
    SparseMatrix rho = chain_coaction(t, n);
    SparseMatrix sig = tensor(SparseMatrix::from_columns(dH, f, {t.sigma}), SparseMatrix::identity(amb.dim(n), f));
    if (rho * g != sig * g) s.lands_in_coinvariants = false;
    if (g * s.inclusion[n] != s.inclusion[n].scaled(s.trace_of_sigma)) s.gamma_i_scalar = false;
    s.gamma.push_back(std::move(g));
  }
  AxiomReport cm = check_cyclic_map(amb, amb, s.gamma);
  s.cyclic_map = cm.ok();
  s.summand = !s.trace_of_sigma.is_zero() && s.lands_in_coinvariants && s.cyclic_map && s.gamma_i_scalar;
  return s;
}

MoritaReport morita_compare(const HopfAlgebra& h, const HModule& m, const SparseVec& sigma, int k, int nmax,
                            long long budget) {
  MoritaReport r;
  HopfTriple base = self_triple(h, m, sigma);
  HopfTriple mat = make_triple(matrix_comodule_algebra(h, k), h, m, sigma);
  InvariantChains a = coinvariant_chain_module(base, nmax, CoinvariantMethod::automatic, budget);
  InvariantChains b = coinvariant_chain_module(mat, nmax, CoinvariantMethod::automatic, budget);
  r.hc_h = cyclic_homology(a.module);
  r.hc_matrix = cyclic_homology(b.module);
  r.equal = r.hc_h == r.hc_matrix;
  return r;
}

}  // namespace hopfcyc
