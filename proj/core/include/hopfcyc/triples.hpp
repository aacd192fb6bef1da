#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hopfcyc/cyclic.hpp"

namespace hopfcyc {

/// (A, H, M) with a grouplike sigma.  A carries a matrix coaction.
struct HopfTriple {
  ComoduleAlgebra A;
  HopfAlgebra H;
  HModule M;
  SparseVec sigma;
};

/// Throws PreconditionError when a component certificate fails or sigma is
/// not grouplike.
HopfTriple make_triple(ComoduleAlgebra A, HopfAlgebra H, HModule M, SparseVec sigma);
/// (H, H, M): H coacting on itself by Delta.
HopfTriple self_triple(const HopfAlgebra& h, HModule m, SparseVec sigma);
/// (A, k, M) with the ground field as Hopf algebra.
HopfTriple trivial_triple(const Field& f, IndexedSpace space, SparseMatrix mult, SparseVec unit, int dim_m = 1);

/// A triple over a group algebra given through a grading: basis elements of A
/// are homogeneous, `act(w)` is the matrix of the group element w on M.
struct GradedTriple {
  ComoduleAlgebra A;  // graded backend set
  IndexedSpace m_space;
  std::function<SparseMatrix(const std::string&)> act;
  std::string sigma;
};

struct MatchedPairCertificate {
  bool sigma_fixes_M = false;
  bool involution = false;
  std::vector<std::string> details;
  /// -1 when checked on a full basis; otherwise the monomial degree bound used.
  int degree_bound = -1;
  bool compatible() const { return sigma_fixes_M && involution; }
};

/// S^(m (x) h) = h(2) m (x) sigma S(h(1)) and the candidate inverse
/// h(1) m (x) S^-1(h(2)) sigma, on M (x) H (index m * dim H + h).
struct HatAntipode {
  SparseMatrix forward;
  SparseMatrix inverse;
  bool inverse_verified = false;  // holds exactly when sigma fixes M
};
HatAntipode hat_antipode(const HopfAlgebra& h, const HModule& m, const SparseVec& sigma);
MatchedPairCertificate check_matched_pair(const HopfAlgebra& h, const HModule& m, const SparseVec& sigma);

/// a(-1) sigma S(a(-3)) (x) a(-2) m (x) a(0) = sigma (x) a(-1) m (x) a(0) on all basis a, m,
/// with (id (x) rho) rho(a) = a(-2) (x) a(-1) (x) a(0).
bool check_coaction_identity(const HopfTriple& t);

/// C_n = M (x) A^{n+1} with the twisted face, degeneracy and cyclic operators.
CyclicModuleData build_chain_paracyclic(const HopfTriple& t, int nmax, long long budget = kDefaultBudget);
CyclicModuleData build_chain_paracyclic(const GradedTriple& t, int nmax, long long budget = kDefaultBudget);

/// rho(m (x) a_0 ... a_n) = a_0(-1)...a_n(-1) (x) m (x) a_0(0) ... a_n(0); rows h * dim C_n + c.
SparseMatrix chain_coaction(const HopfTriple& t, int n);

enum class CoinvariantMethod {
  automatic,      // free_comodule when A has a free fiber, kernel otherwise
  kernel,         // exact kernel of rho - sigma (x) id
  free_comodule,  // explicit basis eta(M (x) W (x) A^n) for A = H (x) W
};

struct InvariantChains {
  CyclicModuleData module;
  /// inclusion[n] : coinvariant coordinates -> C_n.
  std::vector<SparseMatrix> inclusion;
  CoinvariantMethod method = CoinvariantMethod::kernel;
  MatchedPairCertificate pair;
  CyclicReport report;
};

/// Coinvariant chains with every operator verified to restrict.  Throws
/// RestrictionError when an operator leaves the coinvariants (this cannot
/// happen for compatible pairs) and BudgetExceeded on oversized chains.
InvariantChains coinvariant_chain_module(const HopfTriple& t, int nmax,
                                         CoinvariantMethod method = CoinvariantMethod::automatic,
                                         long long budget = kDefaultBudget);
/// Chains whose total weight equals sigma, enumerated on the tensor basis.
InvariantChains coinvariant_chain_module(const GradedTriple& t, int nmax, long long budget = kDefaultBudget);

/// Operators on M (x) H^n for the triple (H, H, M); eta and theta relate it to
/// the coinvariant chains.
CyclicModuleData reduced_model(const HopfAlgebra& h, const HModule& m, const SparseVec& sigma, int nmax);
/// eta_n : M (x) H^n -> C_n(H, M) and theta_n : C_n(H, M) -> M (x) H^n.
SparseMatrix reduced_eta(const HopfAlgebra& h, const HModule& m, const SparseVec& sigma, int n);
SparseMatrix reduced_theta(const HopfAlgebra& h, const HModule& m, int n);

struct ReducedComparison {
  CyclicModuleData reduced;
  InvariantChains chains;  // kernel method
  bool isomorphic = false;  // eta, theta mutually inverse on coinvariants in every degree
  bool equivariant = false;  // eta commutes with every operator
  std::vector<std::string> failures;
};
ReducedComparison compare_reduced_model(const HopfAlgebra& h, const HModule& m, const SparseVec& sigma, int nmax);

/// M / span{h m - chi(h) m}.
int module_coinvariants_dim(const HopfAlgebra& h, const HModule& m, const SparseMatrix& chi);

/// h(m (x) h_1 ... h_n) = m (x) t (x) h_1 ... h_n on the reduced model.
std::vector<SparseMatrix> integral_homotopy(const HopfAlgebra& h, const HModule& m, const SparseVec& t, int nmax);

struct SemisimpleReport {
  bool has_integral = false;
  bool contraction = false;
  std::vector<int> hc;        // bicomplex on the reduced model
  std::vector<int> expected;  // M_H, 0, M_H, 0, ...
  bool agrees() const { return has_integral && contraction && hc == expected; }
};
SemisimpleReport semisimple_check(const HopfAlgebra& h, const HModule& m, const SparseVec& sigma, int nmax);

struct AveragingSplitting {
  std::vector<SparseMatrix> gamma;      // endomorphisms of C_n(A) with image in the coinvariants
  std::vector<SparseMatrix> inclusion;  // coinvariants -> C_n(A)
  Scalar trace_of_sigma;
  bool lands_in_coinvariants = false;
  bool cyclic_map = false;
  bool gamma_i_scalar = false;  // gamma i = Tr(sigma) id
  bool summand = false;         // certificate: Tr(sigma) invertible and the identities hold
};
/// Requires M = k with H acting through the counit and a sigma-invariant trace.
AveragingSplitting averaging_splitting(const HopfTriple& t, const SparseMatrix& trace, int nmax);

struct MoritaReport {
  std::vector<int> hc_h;
  std::vector<int> hc_matrix;
  bool equal = false;
};
MoritaReport morita_compare(const HopfAlgebra& h, const HModule& m, const SparseVec& sigma, int k, int nmax,
                            long long budget = kDefaultBudget);

}  // namespace hopfcyc
