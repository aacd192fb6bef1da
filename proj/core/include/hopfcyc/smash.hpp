#pragma once

#include <string>
#include <vector>

#include "hopfcyc/oracles.hpp"
#include "hopfcyc/triples.hpp"

namespace hopfcyc {

/// Right H-module algebra, action d_B x (d_B * d_H) with column b * d_H + h holding (b)h.
struct RightModuleAlgebra {
  IndexedSpace space;
  SparseMatrix mult;
  SparseVec unit;
  SparseMatrix action;
  int dim() const { return space.dim(); }
};

AxiomReport check_right_module_algebra(const HopfAlgebra& h, const RightModuleAlgebra& b);
RightModuleAlgebra trivial_right_module_algebra(const HopfAlgebra& h, IndexedSpace space, SparseMatrix mult,
                                                SparseVec unit);
/// k[x]/(x^2) with (x)g = -x for the grouplike labelled "g" (cyclic_group_algebra(2, f)).
RightModuleAlgebra dual_numbers_sign(const HopfAlgebra& z2);
/// k[y]/(y^2) over the Sweedler algebra: (y)g = -y, (y)x = 1, (1)x = 0.
RightModuleAlgebra dual_numbers_sweedler(const HopfAlgebra& s);

/// A = H # B on H (x) B (index h * d_B + b), (h (x) a)(g (x) b) = h g(1) (x) (a)g(2) b,
/// coaction h (x) a -> h(1) (x) (h(2) (x) a).  A.fiber_dim = d_B.
struct SmashProduct {
  HopfAlgebra H;
  RightModuleAlgebra B;
  ComoduleAlgebra A;
  AxiomReport certificate;
};
/// Throws PreconditionError when B fails the right module algebra axioms.
SmashProduct build_smash(const HopfAlgebra& h, const RightModuleAlgebra& b);

/// X_{p,q} = M (x) H^p (x) B^{q+1}.  columns[p] holds the vertical operators
/// (delta_i, tau, unit insertions in B) on q = 0 .. ; rows[q] the horizontal
/// ones (d_i, t, unit insertions in H) on p = 0 .. .  A cell is present when
/// p <= pmax, q <= qmax and, if total >= 0, p + q <= total.
struct CylindricalModule {
  Field field;
  int pmax = 0;
  int qmax = 0;
  int total = -1;
  std::vector<CyclicModuleData> columns;
  std::vector<CyclicModuleData> rows;
  AxiomReport certificate;
  std::vector<std::string> witnesses;

  bool has(int p, int q) const;
  int dim(int p, int q) const { return columns[p].dim(q); }
};

/// Requires (M, sigma) to be a matched pair.  Certifies row and column
/// paracyclic identities, horizontal/vertical commutation and
/// t^{p+1} tau^{q+1} = id on every present cell.
CylindricalModule build_cylindrical(const SmashProduct& s, const HModule& m, const SparseVec& sigma, int pmax,
                                    int qmax, int total = -1, long long budget = kDefaultBudget);

/// d(X)_n = X_{n,n}: faces d_i delta_i, degeneracies and t tau.  Needs cells up to (nmax, nmax).
CyclicModuleData diagonal(const CylindricalModule& x, int nmax);

/// (Tot X, b_h + (-1)^p b_v, B_h + (-1)^p T_h B_v) on normalized cells with p + q <= top, T_h = t^{p+1}.
MixedComplexData tot_mixed_complex(const CylindricalModule& x, int top);

/// phi_n : M (x) B (x) (H (x) B)^n -> X_{n,n} and its inverse psi_n.
SparseMatrix smash_phi(const SmashProduct& s, int dim_m, int n);
SparseMatrix smash_psi(const SmashProduct& s, int dim_m, int n);

struct DiagonalComparison {
  CyclicModuleData diagonal;
  InvariantChains chains;  // free-comodule coordinates
  std::vector<SparseMatrix> phi, psi;
  bool inverse = false;
  bool cyclic_map = false;
  std::vector<std::string> failures;
};
DiagonalComparison diagonal_vs_invariant(const SmashProduct& s, const HModule& m, const SparseVec& sigma, int nmax);

struct EzReport {
  std::vector<int> hc_tot;
  std::vector<int> hc_diagonal;
  bool mixed_ok = false;
  bool equal = false;  // degrees 0 .. nmax-2
};
EzReport ez_compare(const SmashProduct& s, const HModule& m, const SparseVec& sigma, int nmax);

/// M (x) B^{q+1} with h(m (x) b_0 ... b_q) = h(1) m (x) (b_0)S^-1(h(q+2)) (x) ... (x) (b_q)S^-1(h(2)).
HModule twisted_tensor_module(const SmashProduct& s, const HModule& m, int q);

struct SpectralSequenceReport {
  std::vector<std::vector<int>> e1;        // [p][q] via the bar complex
  std::vector<std::vector<int>> e1_rows;   // [p][q] via horizontal homology of X
  std::vector<std::vector<int>> e2;        // [p][q] cyclic homology of the induced columns
  bool e1_agree = false;
  bool columns_cyclic = false;
  bool collapsed = false;                  // E^1_{p,q} = 0 for p >= 1
  std::vector<int> hc;                     // HC^H_n(A, M), n = 0 .. qmax
  /// sum_{p+q=n} dim E^2_{p,q} for n <= min(pmax, qmax).  Since E^inf <= E^2
  /// termwise, equality with hc forces E^2 = E^inf in that degree.
  std::vector<int> e2_total;
  bool converges = false;
};
/// E^1 for p <= pmax, q <= qmax; E^2 for q <= qmax.
SpectralSequenceReport spectral_sequence(const SmashProduct& s, const HModule& m, const SparseVec& sigma, int pmax,
                                         int qmax);

}  // namespace hopfcyc
