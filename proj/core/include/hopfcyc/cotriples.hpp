#pragma once

#include <string>
#include <vector>

#include "hopfcyc/cyclic.hpp"

namespace hopfcyc {

/// (C, H, V) with a character delta.  C is an H-module coalgebra, V an H-comodule.
struct HopfCotriple {
  ModuleCoalgebra C;
  HopfAlgebra H;
  HComodule V;
  SparseMatrix delta;  // 1 x dim H
};

/// Throws PreconditionError when a component certificate fails or delta is not a character.
HopfCotriple make_cotriple(ModuleCoalgebra C, HopfAlgebra H, HComodule V, SparseMatrix delta);
/// (H, H, V) with H acting on itself by multiplication.
HopfCotriple self_cotriple(const HopfAlgebra& h, HComodule v, SparseMatrix delta);
/// (C, k, k).
HopfCotriple trivial_cotriple(const Field& f, IndexedSpace space, SparseMatrix comult, SparseMatrix counit);

/// S~_V(v (x) h) = v(0) (x) S^-1(v(-1)) S~(h) and
/// S~_V^-1(v (x) h) = v(0) (x) S~^-1(h) S^-1(v(-1)), on V (x) H (index v * dim H + h).
struct VTwistedAntipode {
  SparseMatrix forward;
  SparseMatrix inverse;
  bool inverse_verified = false;
};
VTwistedAntipode v_twisted_antipode(const HopfAlgebra& h, const HComodule& v, const SparseMatrix& delta);

struct ComatchedPairCertificate {
  bool delta_fixes_V = false;  // v(0) delta(v(-1)) = v
  bool antipode_forms = false;  // v(0) delta(S(v(-1))) = v(0) delta(S^-1(v(-1))) = v
  bool involution = false;     // S~_V^2 = id
  std::vector<std::string> witnesses;
  bool compatible() const { return delta_fixes_V && involution; }
};
ComatchedPairCertificate check_comatched_pair(const HopfAlgebra& h, const HComodule& v, const SparseMatrix& delta);

/// In (M (x) N)_H with the diagonal action: [hm (x) n] = [m (x) S~(h) n] for all basis h, m, n.
bool check_coinvariant_exchange(const HopfAlgebra& h, const HModule& m, const HModule& n, const SparseMatrix& delta);

/// C^n = V (x) C^{n+1} with the twisted coface, codegeneracy and cyclic operators.
CyclicModuleData build_cochain_paracocyclic(const HopfCotriple& t, int nmax, long long budget = kDefaultBudget);

/// h (v (x) c_0 ... c_n) = v (x) h(1) c_0 ... h(n+1) c_n on C^n.
SparseMatrix diagonal_action(const HopfCotriple& t, int n, int h);

struct CoinvariantCochains {
  CyclicModuleData module;
  std::vector<Quotient> quotients;  // per degree, of the ambient cochains
  ComatchedPairCertificate pair;
  CyclicReport report;
};
/// Quotients by span{h x - delta(h) x}.  Throws RestrictionError when an
/// operator does not descend and BudgetExceeded on oversized cochains.
CoinvariantCochains coinvariant_cochain_module(const HopfCotriple& t, int nmax, long long budget = kDefaultBudget);

/// Operators on V (x) H^n for (H, H, V): the Connes-Moscovici module when V = k_sigma.
CyclicModuleData reduced_cocyclic_model(const HopfAlgebra& h, const HComodule& v, const SparseMatrix& delta, int nmax);

struct ReducedCocyclicComparison {
  CyclicModuleData reduced;
  CoinvariantCochains quotient;
  /// phi_n : V (x) H^n -> C^n_H, v (x) h_1 ... h_n -> [v (x) 1 (x) h_1 ... h_n], in quotient coordinates.
  std::vector<SparseMatrix> phi;
  bool isomorphic = false;
  bool equivariant = false;
  std::vector<std::string> failures;
};
ReducedCocyclicComparison compare_reduced_cocyclic(const HopfAlgebra& h, const HComodule& v, const SparseMatrix& delta,
                                                   int nmax);

struct CotraceSplitting {
  std::vector<SparseMatrix> gamma;  // C^n_H -> C^n, quotient coordinates in
  std::vector<SparseMatrix> pi;     // C^n -> C^n_H
  Scalar delta_t;
  bool gamma_descends = false;
  bool cyclic_map = false;
  bool pi_gamma_scalar = false;  // pi gamma = delta(t) id
  bool summand = false;
};
/// Requires V = k with the trivial coaction and t a cotracial delta-integral.
CotraceSplitting cotrace_splitting(const HopfCotriple& t, const SparseVec& t_elem, int nmax);

}  // namespace hopfcyc
