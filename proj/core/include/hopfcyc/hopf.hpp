#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfcyc/linalg.hpp"

namespace hopfcyc {

/// Named pass/fail results, in the order they were checked.
struct AxiomReport {
  std::vector<std::pair<std::string, bool>> checks;

  void add(const std::string& name, bool ok) { checks.emplace_back(name, ok); }
  void merge(const AxiomReport& o, const std::string& prefix = "");
  bool ok() const;
  /// Result of a named check; false if it was never run.
  bool passed(const std::string& name) const;
  std::vector<std::string> failures() const;
};

/// Finite-dimensional Hopf algebra given by structure constants on a basis.
/// mult: d x d^2 (column a*d+b holds ab), comult: d^2 x d, counit: 1 x d.
struct HopfAlgebra {
  Field field;
  IndexedSpace space;
  SparseMatrix mult;
  SparseVec unit;
  SparseMatrix comult;
  SparseMatrix counit;
  SparseMatrix antipode;
  SparseMatrix antipode_inv;
  /// Filled at construction by `make`; broken structures stay constructible.
  AxiomReport certificate;

  static HopfAlgebra make(const Field& f, IndexedSpace space, SparseMatrix mult, SparseVec unit,
                          SparseMatrix comult, SparseMatrix counit, SparseMatrix antipode,
                          SparseMatrix antipode_inv);
  void recertify();

  int dim() const { return space.dim(); }
  SparseVec mul(int a, int b) const { return mult.col(a * dim() + b); }
  SparseVec mul(const SparseVec& a, const SparseVec& b) const;
  Scalar eps(int a) const { return counit.at(0, a); }
  Scalar eps(const SparseVec& a) const;
  SparseMatrix unit_matrix() const;
  /// x |-> h x  and  x |-> x h.
  SparseMatrix left_mult(const SparseVec& h) const;
  SparseMatrix right_mult(const SparseVec& h) const;
  bool is_commutative() const;
  bool is_cocommutative() const;
  /// Basis vector with the given label (throws if absent).
  SparseVec element(const std::string& label) const;
};

AxiomReport check_hopf(const HopfAlgebra& h);

HopfAlgebra ground_field_hopf(const Field& f);
/// table[i][j] = index of g_i g_j.  Throws PreconditionError for non-group tables.
HopfAlgebra group_algebra(const std::vector<std::vector<int>>& table, const Field& f,
                          std::vector<std::string> labels = {});
HopfAlgebra cyclic_group_algebra(int n, const Field& f);
/// kS_3 with basis labelled by permutations in one-line notation ("123", "213", ...).
HopfAlgebra symmetric_group_s3(const Field& f);
/// Four-dimensional Sweedler algebra, basis 1, g, x, gx.
HopfAlgebra sweedler_algebra(const Field& f);
/// Linear dual with transposed structure maps; basis labels "f:<label>".
HopfAlgebra dual_hopf(const HopfAlgebra& h);

// ---- modules and comodules ----

/// Left H-module, action d_M x (d_H * d_M), column h*d_M + m holds h.m.
struct HModule {
  IndexedSpace space;
  SparseMatrix action;
  int dim() const { return space.dim(); }
  SparseVec act(int h, int m) const { return action.col(h * dim() + m); }
  /// Matrix of m |-> h.m for a general element h.
  SparseMatrix act_by(const SparseVec& h, int dim_h) const;
};

/// Left H-comodule, coaction (d_H * d_V) x d_V.
struct HComodule {
  IndexedSpace space;
  SparseMatrix coaction;
  int dim() const { return space.dim(); }
};

AxiomReport check_module(const HopfAlgebra& h, const HModule& m);
AxiomReport check_comodule(const HopfAlgebra& h, const HComodule& v);

/// One-dimensional module with h.1 = chi(h); chi is a 1 x d covector.
HModule character_module(const HopfAlgebra& h, const SparseMatrix& chi, const std::string& name);
HModule trivial_module(const HopfAlgebra& h);
HModule regular_module(const HopfAlgebra& h);
HModule zero_module(const HopfAlgebra& h);
/// Sign character of S_3 (requires the basis of `symmetric_group_s3`).
SparseMatrix sign_character_s3(const HopfAlgebra& h);
HModule sign_module_s3(const HopfAlgebra& h);
/// One-dimensional comodule 1 |-> sigma (x) 1.
HComodule grouplike_comodule(const HopfAlgebra& h, const SparseVec& sigma, const std::string& name);
HComodule regular_comodule(const HopfAlgebra& h);
HComodule zero_comodule(const HopfAlgebra& h);

/// Weights of a graded algebra as opaque group labels.  The coaction is
/// a |-> w(a) (x) a on homogeneous basis elements.
struct GradedBackend {
  std::vector<std::string> weight;
  std::string identity;
  std::function<std::string(const std::string&, const std::string&)> combine;
};

/// Left H-comodule algebra.  `fiber_dim` > 0 records that A = H (x) W as a
/// comodule (basis index h*fiber_dim + w, coaction Delta (x) id).
struct ComoduleAlgebra {
  Field field;
  IndexedSpace space;
  SparseMatrix mult;
  SparseVec unit;
  SparseMatrix coaction;  // empty (0x0) for the graded backend
  std::optional<GradedBackend> graded;
  int fiber_dim = 0;
  int dim() const { return space.dim(); }
};

AxiomReport check_algebra(const Field& f, int dim, const SparseMatrix& mult, const SparseVec& unit);
AxiomReport check_comodule_algebra(const HopfAlgebra& h, const ComoduleAlgebra& a);

/// H itself with coaction Delta.
ComoduleAlgebra self_comodule_algebra(const HopfAlgebra& h);
/// M_k(H) = H (x) M_k(k) with coaction Delta (x) id; dimension k^2 dim H.
ComoduleAlgebra matrix_comodule_algebra(const HopfAlgebra& h, int k);
/// A with the trivial coaction a |-> 1 (x) a.
ComoduleAlgebra trivial_comodule_algebra(const HopfAlgebra& h, const Field& f, IndexedSpace space,
                                         SparseMatrix mult, SparseVec unit);
/// k[x]/(x^m) with deg x = 1, integer weights.
ComoduleAlgebra truncated_polynomial_graded(int m, const Field& f);
/// k[x]/(x^m) as a plain algebra: (mult, unit).
std::pair<SparseMatrix, SparseVec> truncated_polynomial(int m, const Field& f);

/// Left H-module coalgebra, action d_C x (d_H * d_C).
struct ModuleCoalgebra {
  Field field;
  IndexedSpace space;
  SparseMatrix comult;
  SparseMatrix counit;
  SparseMatrix action;
  int dim() const { return space.dim(); }
};

AxiomReport check_coalgebra(const Field& f, int dim, const SparseMatrix& comult,
                            const SparseMatrix& counit);
AxiomReport check_module_coalgebra(const HopfAlgebra& h, const ModuleCoalgebra& c);
/// H acting on itself by multiplication.
ModuleCoalgebra self_module_coalgebra(const HopfAlgebra& h);
/// A coalgebra with H acting through the counit.
ModuleCoalgebra trivial_module_coalgebra(const HopfAlgebra& h, IndexedSpace space,
                                         SparseMatrix comult, SparseMatrix counit);

// ---- special elements ----

bool is_grouplike(const HopfAlgebra& h, const SparseVec& g);
bool is_character(const HopfAlgebra& h, const SparseMatrix& chi);
/// Covector from values on the basis.
SparseMatrix covector(const Field& f, const std::vector<Scalar>& values);
/// All grouplikes (exact eigen-solve over Q and F_p; basis elements only over Q(q)).
std::vector<SparseVec> find_grouplikes(const HopfAlgebra& h);
/// All characters H -> k, as 1 x d covectors (same search on the algebra H).
std::vector<SparseMatrix> find_characters(const HopfAlgebra& h);
/// Characters of an algebra given by structure constants.
std::vector<SparseMatrix> algebra_characters(const Field& f, int dim, const SparseMatrix& mult,
                                             const SparseVec& unit);

/// Basis of {t : t h = eps(h) t for all h}.
std::vector<SparseVec> left_integrals(const HopfAlgebra& h);
/// Integral t with eps(t) = 1, if one exists.
std::optional<SparseVec> normalized_integral(const HopfAlgebra& h);
/// Basis of {t : t g = delta(g) t for all g}.
std::vector<SparseVec> delta_integrals(const HopfAlgebra& h, const SparseMatrix& delta);
/// A nonzero delta-integral with first nonzero coordinate 1, if any.
std::optional<SparseVec> delta_integral(const HopfAlgebra& h, const SparseMatrix& delta);
bool is_delta_integral(const HopfAlgebra& h, const SparseMatrix& delta, const SparseVec& t);
/// t(1) (x) t(2) = t(2) (x) t(1).
bool is_cotrace(const HopfAlgebra& h, const SparseVec& t);
/// Traces Tr (Tr(ab) = Tr(ba)) with Tr(h(1)) h(2) = Tr(h) sigma, as a basis of covectors.
std::vector<SparseMatrix> sigma_invariant_traces(const HopfAlgebra& h, const SparseVec& sigma);
bool is_sigma_invariant_trace(const HopfAlgebra& h, const SparseVec& sigma, const SparseMatrix& tr);

/// S~(h) = delta(h(1)) S(h(2)) and its inverse delta(h(2)) S^-1(h(1)).
SparseMatrix twisted_antipode(const HopfAlgebra& h, const SparseMatrix& delta);
SparseMatrix twisted_antipode_inverse(const HopfAlgebra& h, const SparseMatrix& delta);
/// (delta, sigma) with delta(sigma) = 1 and (sigma S~)^2 = id.
bool is_modular_pair(const HopfAlgebra& h, const SparseMatrix& delta, const SparseVec& sigma);

/// Evaluates a covector (1 x d) on a vector.
Scalar evaluate(const SparseMatrix& covec, const SparseVec& v);

/// Right-hand characteristic polynomial coefficients (low degree first, monic).
std::vector<Scalar> characteristic_polynomial(const SparseMatrix& m);
/// Roots in the base field: all of F_p (p <= 100003), rational roots over Q.
std::vector<Scalar> field_roots(const std::vector<Scalar>& poly, const Field& f);

}  // namespace hopfcyc
