#include "hopfcyc/hopf.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <map>
#include <numeric>

namespace hopfcyc {

// ---- AxiomReport ----

void AxiomReport::merge(const AxiomReport& o, const std::string& prefix) {
  for (const auto& [n, ok] : o.checks) checks.emplace_back(prefix + n, ok);
}

bool AxiomReport::ok() const {
  for (const auto& c : checks)
    if (!c.second) return false;
  return true;
}

bool AxiomReport::passed(const std::string& name) const {
  for (const auto& c : checks)
    if (c.first == name) return c.second;
  return false;
}

std::vector<std::string> AxiomReport::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (!c.second) out.push_back(c.first);
  return out;
}

// ---- helpers ----

namespace {

SparseMatrix column_of(const SparseVec& v, int rows, const Field& f) {
  return SparseMatrix::from_columns(rows, f, {v});
}

/// e_i (x) e_j -> e_j (x) e_i on U (x) W.
SparseMatrix flip(int du, int dw, const Field& f) {
  SparseMatrix m(du * dw, du * dw, f);
  for (int i = 0; i < du; ++i)
    for (int j = 0; j < dw; ++j) m.set_col(i * dw + j, unit_vec(j * du + i, f));
  return m;
}

bool same_shape(const SparseMatrix& m, int rows, int cols) { return m.rows() == rows && m.cols() == cols; }

}  // namespace

Scalar evaluate(const SparseMatrix& covec, const SparseVec& v) {
  Scalar acc = Scalar::zero(covec.field());
  for (const auto& [i, x] : v) acc += covec.at(0, i) * x;
  return acc;
}

SparseMatrix covector(const Field& f, const std::vector<Scalar>& values) {
  SparseMatrix m(1, static_cast<int>(values.size()), f);
  for (size_t j = 0; j < values.size(); ++j)
    if (!values[j].is_zero()) m.set_col(static_cast<int>(j), {{0, values[j]}});
  return m;
}

// ---- HopfAlgebra ----

HopfAlgebra HopfAlgebra::make(const Field& f, IndexedSpace space, SparseMatrix mult, SparseVec unit,
                              SparseMatrix comult, SparseMatrix counit, SparseMatrix antipode,
                              SparseMatrix antipode_inv) {
  HopfAlgebra h{f,
                std::move(space),
                std::move(mult),
                std::move(unit),
                std::move(comult),
                std::move(counit),
                std::move(antipode),
                std::move(antipode_inv),
                {}};
  h.recertify();
  return h;
}

void HopfAlgebra::recertify() { certificate = check_hopf(*this); }

SparseVec HopfAlgebra::mul(const SparseVec& a, const SparseVec& b) const {
  std::vector<std::pair<int, Scalar>> acc;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) {
      Scalar c = x * y;
      for (const auto& [k, z] : mult.col(i * dim() + j)) acc.emplace_back(k, c * z);
    }
  return vec_normalize(std::move(acc));
}

Scalar HopfAlgebra::eps(const SparseVec& a) const { return evaluate(counit, a); }

SparseMatrix HopfAlgebra::unit_matrix() const { return column_of(unit, dim(), field); }

SparseMatrix HopfAlgebra::left_mult(const SparseVec& h) const {
  SparseMatrix m(dim(), dim(), field);
  for (int x = 0; x < dim(); ++x) m.set_col(x, mul(h, unit_vec(x, field)));
  return m;
}

SparseMatrix HopfAlgebra::right_mult(const SparseVec& h) const {
  SparseMatrix m(dim(), dim(), field);
  for (int x = 0; x < dim(); ++x) m.set_col(x, mul(unit_vec(x, field), h));
  return m;
}

bool HopfAlgebra::is_commutative() const { return mult * flip(dim(), dim(), field) == mult; }

bool HopfAlgebra::is_cocommutative() const { return flip(dim(), dim(), field) * comult == comult; }

SparseVec HopfAlgebra::element(const std::string& label) const {
  int i = space.index_of(label);
  if (i < 0) throw PreconditionError("no basis element '" + label + "' in " + space.name);
  return unit_vec(i, field);
}

AxiomReport check_algebra(const Field& f, int d, const SparseMatrix& mult, const SparseVec& unit) {
  AxiomReport r;
  bool shape = same_shape(mult, d, d * d);
  r.add("algebra shape", shape);
  if (!shape) return r;
  SparseMatrix id = SparseMatrix::identity(d, f);
  SparseMatrix u = column_of(unit, d, f);
  r.add("associativity", mult * tensor(mult, id) == mult * tensor(id, mult));
  r.add("unit", mult * tensor(u, id) == id && mult * tensor(id, u) == id);
  return r;
}

AxiomReport check_coalgebra(const Field& f, int d, const SparseMatrix& comult,
                            const SparseMatrix& counit) {
  AxiomReport r;
  bool shape = same_shape(comult, d * d, d) && same_shape(counit, 1, d);
  r.add("coalgebra shape", shape);
  if (!shape) return r;
  SparseMatrix id = SparseMatrix::identity(d, f);
  r.add("coassociativity", tensor(comult, id) * comult == tensor(id, comult) * comult);
  r.add("counit", tensor(counit, id) * comult == id && tensor(id, counit) * comult == id);
  return r;
}

AxiomReport check_hopf(const HopfAlgebra& h) {
  AxiomReport r;
  const int d = h.dim();
  const Field& f = h.field;
  bool shape = same_shape(h.mult, d, d * d) && same_shape(h.comult, d * d, d) &&
               same_shape(h.counit, 1, d) && same_shape(h.antipode, d, d) &&
               same_shape(h.antipode_inv, d, d);
  r.add("shape", shape);
  if (!shape) return r;
  r.merge(check_algebra(f, d, h.mult, h.unit));
  r.merge(check_coalgebra(f, d, h.comult, h.counit));
  SparseMatrix id = SparseMatrix::identity(d, f);
  SparseMatrix u = h.unit_matrix();
  SparseMatrix lhs = h.comult * h.mult;
  SparseMatrix rhs = tensor(h.mult, h.mult) * tensor(tensor(id, flip(d, d, f)), id) *
                     tensor(h.comult, h.comult);
  r.add("comultiplication is multiplicative", lhs == rhs);
  r.add("comultiplication is unital", h.comult * u == tensor(u, u));
  r.add("counit is multiplicative", h.counit * h.mult == tensor(h.counit, h.counit));
  r.add("counit is unital", h.counit * u == SparseMatrix::identity(1, f));
  SparseMatrix ue = u * h.counit;
  r.add("antipode", h.mult * tensor(h.antipode, id) * h.comult == ue &&
                        h.mult * tensor(id, h.antipode) * h.comult == ue);
  r.add("antipode inverse", h.antipode * h.antipode_inv == id && h.antipode_inv * h.antipode == id);
  return r;
}

// ---- built-in Hopf algebras ----

HopfAlgebra ground_field_hopf(const Field& f) {
  return group_algebra({{0}}, f, {"1"});
}

HopfAlgebra group_algebra(const std::vector<std::vector<int>>& table, const Field& f,
                          std::vector<std::string> labels) {
  const int n = static_cast<int>(table.size());
  auto bad = [](const std::string& why) { throw PreconditionError("not a group table: " + why); };
  if (n == 0) bad("empty");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) bad("not square");
    for (int x : row)
      if (x < 0 || x >= n) bad("entry out of range");
  }
  int e = -1;
  for (int i = 0; i < n && e < 0; ++i) {
    bool ok = true;
    for (int j = 0; j < n; ++j) ok = ok && table[i][j] == j && table[j][i] == j;
    if (ok) e = i;
  }
  if (e < 0) bad("no identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]]) bad("not associative");
  std::vector<int> inv(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (table[a][b] == e && table[b][a] == e) inv[a] = b;
  for (int a = 0; a < n; ++a)
    if (inv[a] < 0) bad("missing inverse");
  if (labels.empty())
    for (int i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
  if (static_cast<int>(labels.size()) != n) throw PreconditionError("label count mismatch");

  SparseMatrix mult(n, n * n, f), comult(n * n, n, f), counit(1, n, f), s(n, n, f);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) mult.set_col(a * n + b, unit_vec(table[a][b], f));
    comult.set_col(a, unit_vec(a * n + a, f));
    counit.set_col(a, unit_vec(0, f));
    s.set_col(a, unit_vec(inv[a], f));
  }
  return HopfAlgebra::make(f, IndexedSpace{"kG", labels}, mult, unit_vec(e, f), comult, counit, s, s);
}

HopfAlgebra cyclic_group_algebra(int n, const Field& f) {
  if (n < 1) throw PreconditionError("cyclic group order must be positive");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
    labels.push_back(a == 0 ? "1" : (a == 1 ? "g" : "g^" + std::to_string(a)));
  }
  HopfAlgebra h = group_algebra(table, f, labels);
  h.space.name = "kZ/" + std::to_string(n);
  return h;
}

HopfAlgebra symmetric_group_s3(const Field& f) {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const int n = static_cast<int>(perms.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      table[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
    std::string l;
    for (int i : perms[a]) l += static_cast<char>('1' + i);
    labels.push_back(l);
  }
  HopfAlgebra h = group_algebra(table, f, labels);
  h.space.name = "kS3";
  return h;
}

HopfAlgebra sweedler_algebra(const Field& f) {
  // basis g^a x^b  <->  index a + 2b
  auto idx = [](int a, int b) { return a + 2 * b; };
  const int d = 4;
  SparseMatrix mult(d, d * d, f), comult(d * d, d, f), counit(1, d, f), s(d, d, f), si(d, d, f);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int e = 0; e < 2; ++e) {
          if (b + e > 1) continue;
          Scalar sign = Scalar::from_int(f, (b * c) % 2 ? -1 : 1);
          mult.set_col(idx(a, b) * d + idx(c, e), {{idx((a + c) % 2, b + e), sign}});
        }
  Scalar one = Scalar::one(f), mone = -one;
  auto pair = [&](int i, int j) { return i * d + j; };
  comult.set_col(idx(0, 0), {{pair(0, 0), one}});
  comult.set_col(idx(1, 0), {{pair(1, 1), one}});
  // x -> x|1 + g|x ;  gx -> gx|g + 1|gx
  comult.set_col(idx(0, 1), vec_normalize({{pair(idx(0, 1), idx(0, 0)), one}, {pair(idx(1, 0), idx(0, 1)), one}}));
  comult.set_col(idx(1, 1), vec_normalize({{pair(idx(1, 1), idx(1, 0)), one}, {pair(idx(0, 0), idx(1, 1)), one}}));
  counit.set_col(idx(0, 0), {{0, one}});
  counit.set_col(idx(1, 0), {{0, one}});
  s.set_col(idx(0, 0), unit_vec(idx(0, 0), f));
  s.set_col(idx(1, 0), unit_vec(idx(1, 0), f));
  s.set_col(idx(0, 1), {{idx(1, 1), mone}});
  s.set_col(idx(1, 1), {{idx(0, 1), one}});
  si.set_col(idx(0, 0), unit_vec(idx(0, 0), f));
  si.set_col(idx(1, 0), unit_vec(idx(1, 0), f));
  si.set_col(idx(0, 1), {{idx(1, 1), one}});
  si.set_col(idx(1, 1), {{idx(0, 1), mone}});
  return HopfAlgebra::make(f, IndexedSpace{"Sweedler", {"1", "g", "x", "gx"}}, mult,
                           unit_vec(0, f), comult, counit, s, si);
}

HopfAlgebra dual_hopf(const HopfAlgebra& h) {
  IndexedSpace space{"dual(" + h.space.name + ")", {}};
  for (const auto& l : h.space.basis) space.basis.push_back("f:" + l);
  SparseVec unit;
  for (int j = 0; j < h.dim(); ++j)
    for (const auto& [i, x] : h.counit.col(j)) unit.emplace_back(j, x);
  SparseMatrix counit(1, h.dim(), h.field);
  for (const auto& [i, x] : h.unit) counit.set_col(i, {{0, x}});
  return HopfAlgebra::make(h.field, space, h.comult.transpose(), unit, h.mult.transpose(), counit,
                           h.antipode.transpose(), h.antipode_inv.transpose());
}

// ---- modules / comodules ----

SparseMatrix HModule::act_by(const SparseVec& h, int dim_h) const {
  SparseMatrix m(dim(), dim(), action.field());
  for (int x = 0; x < dim(); ++x) {
    std::vector<std::pair<int, Scalar>> acc;
    for (const auto& [i, c] : h)
      for (const auto& [k, y] : act(i, x)) acc.emplace_back(k, c * y);
    m.set_col(x, vec_normalize(std::move(acc)));
  }
  (void)dim_h;
  return m;
}

AxiomReport check_module(const HopfAlgebra& h, const HModule& m) {
  AxiomReport r;
  const int d = h.dim(), n = m.dim();
  bool shape = same_shape(m.action, n, d * n);
  r.add("module shape", shape);
  if (!shape) return r;
  SparseMatrix idm = SparseMatrix::identity(n, h.field);
  r.add("module associativity", m.action * tensor(h.mult, idm) ==
                                    m.action * tensor(SparseMatrix::identity(d, h.field), m.action));
  r.add("module unit", m.action * tensor(h.unit_matrix(), idm) == idm);
  return r;
}

AxiomReport check_comodule(const HopfAlgebra& h, const HComodule& v) {
  AxiomReport r;
  const int d = h.dim(), n = v.dim();
  bool shape = same_shape(v.coaction, d * n, n);
  r.add("comodule shape", shape);
  if (!shape) return r;
  SparseMatrix idv = SparseMatrix::identity(n, h.field);
  r.add("comodule coassociativity",
        tensor(h.comult, idv) * v.coaction ==
            tensor(SparseMatrix::identity(d, h.field), v.coaction) * v.coaction);
  r.add("comodule counit", tensor(h.counit, idv) * v.coaction == idv);
  return r;
}

HModule character_module(const HopfAlgebra& h, const SparseMatrix& chi, const std::string& name) {
  HModule m{IndexedSpace{name, {"m"}}, SparseMatrix(1, h.dim(), h.field)};
  for (int i = 0; i < h.dim(); ++i) {
    Scalar c = chi.at(0, i);
    if (!c.is_zero()) m.action.set_col(i, {{0, c}});
  }
  return m;
}

HModule trivial_module(const HopfAlgebra& h) { return character_module(h, h.counit, "k_eps"); }

HModule regular_module(const HopfAlgebra& h) {
  return HModule{IndexedSpace{"regular", h.space.basis}, h.mult};
}

HModule zero_module(const HopfAlgebra& h) { return HModule{IndexedSpace{"zero", {}}, SparseMatrix(0, 0, h.field)}; }

SparseMatrix sign_character_s3(const HopfAlgebra& h) {
  std::vector<Scalar> vals;
  for (const auto& l : h.space.basis) {
    if (l.size() != 3) throw PreconditionError("sign character needs the S_3 basis");
    int inversions = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (l[i] > l[j]) ++inversions;
    vals.push_back(Scalar::from_int(h.field, inversions % 2 ? -1 : 1));
  }
  return covector(h.field, vals);
}

HModule sign_module_s3(const HopfAlgebra& h) { return character_module(h, sign_character_s3(h), "sign"); }

HComodule grouplike_comodule(const HopfAlgebra& h, const SparseVec& sigma, const std::string& name) {
  return HComodule{IndexedSpace{name, {"v"}}, SparseMatrix::from_columns(h.dim(), h.field, {sigma})};
}

HComodule regular_comodule(const HopfAlgebra& h) {
  return HComodule{IndexedSpace{"regular", h.space.basis}, h.comult};
}

HComodule zero_comodule(const HopfAlgebra& h) { return HComodule{IndexedSpace{"zero", {}}, SparseMatrix(0, 0, h.field)}; }

// ---- comodule algebras ----

AxiomReport check_comodule_algebra(const HopfAlgebra& h, const ComoduleAlgebra& a) {
  AxiomReport r = check_algebra(a.field, a.dim(), a.mult, a.unit);
  if (a.graded) {
    const auto& g = *a.graded;
    bool sized = static_cast<int>(g.weight.size()) == a.dim();
    r.add("grading shape", sized);
    if (!sized) return r;
    bool homogeneous = true;
    for (int x = 0; x < a.dim(); ++x)
      for (int y = 0; y < a.dim(); ++y)
        for (const auto& e : a.mult.col(x * a.dim() + y))
          homogeneous = homogeneous && g.weight[e.first] == g.combine(g.weight[x], g.weight[y]);
    bool unit_ok = true;
    for (const auto& e : a.unit) unit_ok = unit_ok && g.weight[e.first] == g.identity;
    r.add("grading is multiplicative", homogeneous && unit_ok);
    return r;
  }
  HComodule as_comodule{a.space, a.coaction};
  r.merge(check_comodule(h, as_comodule));
  if (!r.ok()) return r;
  const int d = h.dim(), n = a.dim();
  SparseMatrix lhs = a.coaction * a.mult;
  SparseMatrix rhs = tensor(h.mult, a.mult) *
                     tensor(tensor(SparseMatrix::identity(d, a.field), flip(n, d, a.field)),
                            SparseMatrix::identity(n, a.field)) *
                     tensor(a.coaction, a.coaction);
  r.add("coaction is multiplicative", lhs == rhs);
  SparseMatrix u = column_of(a.unit, n, a.field);
  r.add("coaction is unital", a.coaction * u == tensor(h.unit_matrix(), u));
  if (a.fiber_dim > 0) {
    bool ok = n % a.fiber_dim == 0 && n / a.fiber_dim == d &&
              a.coaction == tensor(h.comult, SparseMatrix::identity(a.fiber_dim, a.field));
    r.add("free fiber coaction", ok);
  }
  return r;
}

ComoduleAlgebra self_comodule_algebra(const HopfAlgebra& h) {
  return ComoduleAlgebra{h.field, h.space, h.mult, h.unit, h.comult, std::nullopt, 1};
}

ComoduleAlgebra matrix_comodule_algebra(const HopfAlgebra& h, int k) {
  if (k < 1) throw PreconditionError("matrix size must be positive");
  const int d = h.dim(), kk = k * k, n = d * kk;
  const Field& f = h.field;
  IndexedSpace space{"M" + std::to_string(k) + "(" + h.space.name + ")", {}};
  for (int a = 0; a < d; ++a)
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        space.basis.push_back(h.space.basis[a] + ":E" + std::to_string(i) + std::to_string(j));
  SparseMatrix mult(n, n * n, f);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int ha = x / kk, i = (x % kk) / k, j = x % k;
      int hb = y / kk, l = (y % kk) / k, m = y % k;
      if (j != l) continue;
      SparseVec col;
      for (const auto& [c, v] : h.mul(ha, hb)) col.emplace_back(c * kk + i * k + m, v);
      mult.set_col(x * n + y, std::move(col));
    }
  SparseVec unit;
  for (const auto& [c, v] : h.unit)
    for (int i = 0; i < k; ++i) unit.emplace_back(c * kk + i * k + i, v);
  unit = vec_normalize(std::move(unit));
  SparseMatrix coaction = tensor(h.comult, SparseMatrix::identity(kk, f));
  return ComoduleAlgebra{f, space, mult, unit, coaction, std::nullopt, kk};
}

ComoduleAlgebra trivial_comodule_algebra(const HopfAlgebra& h, const Field& f, IndexedSpace space,
                                         SparseMatrix mult, SparseVec unit) {
  const int n = space.dim();
  SparseMatrix coaction = tensor(h.unit_matrix(), SparseMatrix::identity(n, f));
  return ComoduleAlgebra{f, std::move(space), std::move(mult), std::move(unit), coaction, std::nullopt, 0};
}

std::pair<SparseMatrix, SparseVec> truncated_polynomial(int m, const Field& f) {
  if (m < 1) throw PreconditionError("truncation must be positive");
  SparseMatrix mult(m, m * m, f);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i + j < m) mult.set_col(i * m + j, unit_vec(i + j, f));
  return {mult, unit_vec(0, f)};
}

ComoduleAlgebra truncated_polynomial_graded(int m, const Field& f) {
  auto [mult, unit] = truncated_polynomial(m, f);
  IndexedSpace space{"k[x]/(x^" + std::to_string(m) + ")", {}};
  GradedBackend g;
  for (int i = 0; i < m; ++i) {
    space.basis.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i)));
    g.weight.push_back(std::to_string(i));
  }
  g.identity = "0";
  g.combine = [](const std::string& a, const std::string& b) {
    return std::to_string(std::stoll(a) + std::stoll(b));
  };
  return ComoduleAlgebra{f, space, mult, unit, SparseMatrix(0, 0, f), g, 0};
}

// ---- module coalgebras ----

AxiomReport check_module_coalgebra(const HopfAlgebra& h, const ModuleCoalgebra& c) {
  AxiomReport r = check_coalgebra(c.field, c.dim(), c.comult, c.counit);
  r.merge(check_module(h, HModule{c.space, c.action}));
  if (!r.ok()) return r;
  const int d = h.dim(), n = c.dim();
  SparseMatrix lhs = c.comult * c.action;
  SparseMatrix rhs = tensor(c.action, c.action) *
                     tensor(tensor(SparseMatrix::identity(d, c.field), flip(d, n, c.field)),
                            SparseMatrix::identity(n, c.field)) *
                     tensor(h.comult, c.comult);
  r.add("action is comultiplicative", lhs == rhs);
  r.add("action is counital", c.counit * c.action == tensor(h.counit, c.counit));
  return r;
}

ModuleCoalgebra self_module_coalgebra(const HopfAlgebra& h) {
  return ModuleCoalgebra{h.field, h.space, h.comult, h.counit, h.mult};
}

ModuleCoalgebra trivial_module_coalgebra(const HopfAlgebra& h, IndexedSpace space,
                                         SparseMatrix comult, SparseMatrix counit) {
  const int n = space.dim();
  SparseMatrix action = tensor(h.counit, SparseMatrix::identity(n, h.field));
  return ModuleCoalgebra{h.field, std::move(space), std::move(comult), std::move(counit), action};
}

// ---- special elements ----

bool is_grouplike(const HopfAlgebra& h, const SparseVec& g) {
  if (!h.eps(g).is_one()) return false;
  SparseVec gg;
  for (const auto& [i, x] : g)
    for (const auto& [j, y] : g) gg.emplace_back(i * h.dim() + j, x * y);
  return h.comult.apply(g) == vec_normalize(std::move(gg));
}

bool is_character(const HopfAlgebra& h, const SparseMatrix& chi) {
  if (chi.rows() != 1 || chi.cols() != h.dim()) return false;
  return chi * h.mult == tensor(chi, chi) && evaluate(chi, h.unit).is_one();
}

namespace {

std::vector<std::vector<Scalar>> dense(const SparseMatrix& m) { return m.to_dense(); }

}  // namespace

std::vector<Scalar> characteristic_polynomial(const SparseMatrix& m) {
  const int n = m.rows();
  if (m.cols() != n) throw DimensionMismatch("characteristic polynomial of a non-square matrix");
  const Field& f = m.field();
  auto h = dense(m);
  // reduce to upper Hessenberg form by similarity
  for (int c = 1; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (!h[i][c - 1].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != c) {
      std::swap(h[piv], h[c]);
      for (int r = 0; r < n; ++r) std::swap(h[r][piv], h[r][c]);
    }
    Scalar inv = h[c][c - 1].inverse();
    for (int j = c + 1; j < n; ++j) {
      if (h[j][c - 1].is_zero()) continue;
      Scalar u = h[j][c - 1] * inv;
      for (int k = 0; k < n; ++k) h[j][k] -= u * h[c][k];
      for (int r = 0; r < n; ++r) h[r][c] += u * h[r][j];
    }
  }
  // p_m = (x - h_mm) p_{m-1} - sum_i h_{m-i,m} (prod_{j=m-i+1}^{m} h_{j,j-1}) p_{m-i-1}, 1-based
  auto H = [&](int i, int j) -> const Scalar& { return h[i - 1][j - 1]; };
  std::vector<std::vector<Scalar>> p(n + 1);
  p[0] = {Scalar::one(f)};
  for (int mm = 1; mm <= n; ++mm) {
    std::vector<Scalar> cur(mm + 1, Scalar::zero(f));
    for (int k = 0; k < mm; ++k) {
      cur[k + 1] += p[mm - 1][k];
      cur[k] -= H(mm, mm) * p[mm - 1][k];
    }
    Scalar t = Scalar::one(f);
    for (int i = 1; i < mm; ++i) {
      t = t * H(mm - i + 1, mm - i);
      Scalar c = H(mm - i, mm) * t;
      if (c.is_zero()) continue;
      for (size_t k = 0; k < p[mm - i - 1].size(); ++k) cur[k] -= c * p[mm - i - 1][k];
    }
    p[mm] = std::move(cur);
  }
  return p[n];
}

namespace {

Scalar horner(const std::vector<Scalar>& poly, const Scalar& x) {
  Scalar acc = Scalar::zero(x.field());
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<mpz_class> divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> out;
  if (n == 0) return out;
  if (n > mpz_class("1000000000000")) {
    // too large to factor by trial division; fall back to small divisors
    for (long d = 1; d <= 1000; ++d)
      if (n % d == 0) out.push_back(d);
    return out;
  }
  for (mpz_class d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  return out;
}

}  // namespace

std::vector<Scalar> field_roots(const std::vector<Scalar>& poly, const Field& f) {
  std::vector<Scalar> roots;
  if (poly.empty()) return roots;
  switch (f.kind) {
    case FieldKind::Prime: {
      if (f.p > 100003) throw PreconditionError("root search limited to small primes");
      for (std::uint64_t v = 0; v < f.p; ++v) {
        Scalar x = Scalar::from_int(f, static_cast<long long>(v));
        if (horner(poly, x).is_zero()) roots.push_back(x);
      }
      return roots;
    }
    case FieldKind::Rational: {
      std::vector<mpq_class> c;
      for (const auto& s : poly) c.push_back(*s.as_rational());
      mpz_class l = 1;
      for (const auto& x : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
      std::vector<mpz_class> z;
      for (const auto& x : c) z.push_back(mpz_class(x * l));
      while (!z.empty() && z.back() == 0) z.pop_back();
      size_t low = 0;
      while (low < z.size() && z[low] == 0) ++low;
      if (low > 0) roots.push_back(Scalar::zero(f));
      if (low + 1 >= z.size()) return roots;
      std::set<mpq_class> cand;
      for (const auto& a : divisors(z[low]))
        for (const auto& b : divisors(z.back())) {
          cand.insert(mpq_class(a, b));
          cand.insert(-mpq_class(a, b));
        }
      for (const auto& x : cand) {
        mpq_class y = x;
        y.canonicalize();
        if (horner(poly, Scalar(y)).is_zero()) roots.push_back(Scalar(y));
      }
      std::sort(roots.begin(), roots.end(),
                [](const Scalar& a, const Scalar& b) { return *a.as_rational() < *b.as_rational(); });
      roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
      return roots;
    }
    case FieldKind::RationalFunction: {
      // only units and monomials +-q^k, |k| <= 4, are tried
      std::vector<Scalar> cand{Scalar::zero(f)};
      Scalar q = Scalar::parameter();
      for (int k = -4; k <= 4; ++k) {
        cand.push_back(q.pow(k));
        cand.push_back(-q.pow(k));
      }
      for (const auto& x : cand)
        if (horner(poly, x).is_zero()) roots.push_back(x);
      return roots;
    }
  }
  return roots;
}

std::vector<SparseMatrix> algebra_characters(const Field& f, int d, const SparseMatrix& mult,
                                             const SparseVec& unit) {
  // chi is a common left eigenvector of every right multiplication R_c with eigenvalue chi(c)
  struct Branch {
    std::vector<SparseVec> basis;  // columns spanning candidate chi^T
  };
  std::vector<Branch> branches;
  {
    Branch all;
    for (int i = 0; i < d; ++i) all.basis.push_back(unit_vec(i, f));
    branches.push_back(all);
  }
  for (int c = 0; c < d && !branches.empty(); ++c) {
    SparseMatrix rc(d, d, f);
    for (int b = 0; b < d; ++b) rc.set_col(b, mult.col(b * d + c));
    SparseMatrix rct = rc.transpose();
    std::vector<Scalar> roots = field_roots(characteristic_polynomial(rc), f);
    std::vector<Branch> next;
    for (const auto& br : branches) {
      SparseMatrix w = SparseMatrix::from_columns(d, f, br.basis);
      for (const auto& lam : roots) {
        SparseMatrix shifted = rct - SparseMatrix::identity(d, f).scaled(lam);
        auto ker = kernel_basis(shifted * w);
        if (ker.empty()) continue;
        Branch nb;
        for (const auto& y : ker) nb.basis.push_back(w.apply(y));
        next.push_back(std::move(nb));
      }
    }
    branches = std::move(next);
  }
  std::vector<SparseMatrix> out;
  for (const auto& br : branches) {
    for (const auto& v : br.basis) {
      SparseMatrix chi(1, d, f);
      for (const auto& [i, x] : v) chi.set_col(i, {{0, x}});
      Scalar at_one = evaluate(chi, unit);
      if (at_one.is_zero()) continue;
      chi = chi.scaled(at_one.inverse());
      if (chi * mult == tensor(chi, chi)) {
        out.push_back(chi);
        break;
      }
    }
  }
  return out;
}

std::vector<SparseMatrix> find_characters(const HopfAlgebra& h) {
  return algebra_characters(h.field, h.dim(), h.mult, h.unit);
}

std::vector<SparseVec> find_grouplikes(const HopfAlgebra& h) {
  SparseVec dual_unit;
  for (int j = 0; j < h.dim(); ++j)
    for (const auto& e : h.counit.col(j)) dual_unit.emplace_back(j, e.second);
  std::vector<SparseVec> out;
  for (const auto& chi : algebra_characters(h.field, h.dim(), h.comult.transpose(), dual_unit)) {
    SparseVec g;
    for (int j = 0; j < h.dim(); ++j)
      for (const auto& e : chi.col(j)) g.emplace_back(j, e.second);
    if (is_grouplike(h, g)) out.push_back(std::move(g));
  }
  return out;
}

namespace {

std::vector<SparseVec> twisted_kernel(const HopfAlgebra& h, const SparseMatrix& chi) {
  std::vector<SparseMatrix> blocks;
  for (int g = 0; g < h.dim(); ++g)
    blocks.push_back(h.right_mult(unit_vec(g, h.field)) -
                     SparseMatrix::identity(h.dim(), h.field).scaled(chi.at(0, g)));
  return kernel_basis(vstack(blocks));
}

}  // namespace

std::vector<SparseVec> left_integrals(const HopfAlgebra& h) { return twisted_kernel(h, h.counit); }

std::optional<SparseVec> normalized_integral(const HopfAlgebra& h) {
  for (const auto& t : left_integrals(h)) {
    Scalar e = h.eps(t);
    if (!e.is_zero()) return vec_scale(t, e.inverse());
  }
  return std::nullopt;
}

std::vector<SparseVec> delta_integrals(const HopfAlgebra& h, const SparseMatrix& delta) {
  return twisted_kernel(h, delta);
}

std::optional<SparseVec> delta_integral(const HopfAlgebra& h, const SparseMatrix& delta) {
  auto ts = delta_integrals(h, delta);
  if (ts.empty()) return std::nullopt;
  return vec_scale(ts.front(), ts.front().front().second.inverse());
}

bool is_delta_integral(const HopfAlgebra& h, const SparseMatrix& delta, const SparseVec& t) {
  for (int g = 0; g < h.dim(); ++g)
    if (h.mul(t, unit_vec(g, h.field)) != vec_scale(t, delta.at(0, g))) return false;
  return true;
}

bool is_cotrace(const HopfAlgebra& h, const SparseVec& t) {
  SparseVec dt = h.comult.apply(t);
  return flip(h.dim(), h.dim(), h.field).apply(dt) == dt;
}

std::vector<SparseMatrix> sigma_invariant_traces(const HopfAlgebra& h, const SparseVec& sigma) {
  const int d = h.dim();
  const Field& f = h.field;
  std::vector<std::tuple<int, int, Scalar>> rows;
  int r = 0;
  for (int x = 0; x < d; ++x) {
    // Tr(x(1)) x(2) - Tr(x) sigma = 0, one equation per coordinate k
    std::vector<std::vector<std::pair<int, Scalar>>> eq(d);
    for (const auto& [idx, c] : h.comult.col(x)) eq[idx % d].emplace_back(idx / d, c);
    for (const auto& [k, s] : sigma) eq[k].emplace_back(x, -s);
    for (int k = 0; k < d; ++k) {
      SparseVec v = vec_normalize(std::move(eq[k]));
      if (v.empty()) continue;
      for (auto& [j, c] : v) rows.emplace_back(r, j, c);
      ++r;
    }
  }
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b) {
      SparseVec v = vec_axpy(h.mul(a, b), -Scalar::one(f), h.mul(b, a));
      if (v.empty()) continue;
      for (auto& [j, c] : v) rows.emplace_back(r, j, c);
      ++r;
    }
  SparseMatrix sys = SparseMatrix::from_entries(r, d, f, rows);
  std::vector<SparseMatrix> out;
  for (const auto& v : kernel_basis(sys)) {
    SparseMatrix tr(1, d, f);
    for (const auto& [j, c] : v) tr.set_col(j, {{0, c}});
    out.push_back(tr);
  }
  return out;
}

bool is_sigma_invariant_trace(const HopfAlgebra& h, const SparseVec& sigma, const SparseMatrix& tr) {
  const int d = h.dim();
  for (int x = 0; x < d; ++x) {
    std::vector<std::pair<int, Scalar>> acc;
    for (const auto& [idx, c] : h.comult.col(x)) acc.emplace_back(idx % d, c * tr.at(0, idx / d));
    if (vec_normalize(std::move(acc)) != vec_scale(sigma, tr.at(0, x))) return false;
  }
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      if (evaluate(tr, h.mul(a, b)) != evaluate(tr, h.mul(b, a))) return false;
  return true;
}

SparseMatrix twisted_antipode(const HopfAlgebra& h, const SparseMatrix& delta) {
  return tensor(delta, h.antipode) * h.comult;
}

SparseMatrix twisted_antipode_inverse(const HopfAlgebra& h, const SparseMatrix& delta) {
  return tensor(h.antipode_inv, delta) * h.comult;
}

bool is_modular_pair(const HopfAlgebra& h, const SparseMatrix& delta, const SparseVec& sigma) {
  if (!evaluate(delta, sigma).is_one()) return false;
  SparseMatrix st = h.left_mult(sigma) * twisted_antipode(h, delta);
  return st * st == SparseMatrix::identity(h.dim(), h.field);
}

}  // namespace hopfcyc
