#pragma once

#include <string>
#include <vector>

#include "hopfcyc/cotriples.hpp"
#include "hopfcyc/triples.hpp"

namespace hopfcyc {

/// Bar differential H^n (x) M -> H^{n-1} (x) M: chi on the left end, the
/// action on the right end, products in between.
SparseMatrix bar_differential(const HopfAlgebra& h, const HModule& m, int n, const SparseMatrix& chi);
/// H_n(H, M) for n = 0 .. nmax-1, coinvariants taken with respect to chi (default eps).
std::vector<int> hopf_homology(const HopfAlgebra& h, const HModule& m, int nmax);
std::vector<int> hopf_homology(const HopfAlgebra& h, const HModule& m, int nmax, const SparseMatrix& chi);

/// d_n : V (x) H^n -> V (x) H^{n+1}.
SparseMatrix cobar_differential(const HopfAlgebra& h, const HComodule& v, int n);
/// H^n(H, V) for n = 0 .. nmax-1.
std::vector<int> hopf_cohomology(const HopfAlgebra& h, const HComodule& v, int nmax);

struct DecompositionReport {
  std::vector<int> cyclic;  // invariant HC from the reduced model
  std::vector<int> oracle;  // Hopf (co)homology
  std::vector<int> summed;  // sum_i oracle[n - 2i]
  bool equal = false;
  std::vector<std::string> failures;
};
/// HC_n of (H, H, M) with sigma = 1 against sum_i H_{n-2i}(H, M).  Requires H cocommutative.
DecompositionReport decomposition_check_cocommutative(const HopfAlgebra& h, const HModule& m, int nmax);
/// HC^n of (H, H, V) with delta = eps against sum_i H^{n-2i}(H, V).  Requires H commutative.
DecompositionReport decomposition_check_commutative(const HopfAlgebra& h, const HComodule& v, int nmax);

struct PathSpace {
  CyclicModuleData module;
  CyclicModuleData base;  // C_n(H, M) or C^n_H(H, V)
  /// theta_n : EC_n -> C_n for the cyclic case, iota_n : C^n -> EC^n for the cocyclic case.
  std::vector<SparseMatrix> comparison;
  bool comparison_is_map = false;
  /// k (x)_H EC_n = C_n, resp. (EC^n)^coH = C^n, degreewise.
  bool coinvariants_match = false;
  std::vector<std::string> failures;
};
/// EC_n = M (x) H^{n+1} with the shifted simplicial operators of the reduced
/// model and t_0 = id.  Throws PreconditionError unless H is cocommutative.
PathSpace path_space_cyclic(const HopfAlgebra& h, const HModule& m, int nmax);
/// EC^n = V (x) H^{n+1}, t(v (x) h_0 ... h_n) =
/// v(0) (x) h_0(1) (x) h_0(2) S(h_1(n)) h_2 (x) ... (x) h_0(n+1) S(h_1(1)) v(-1), t_0 = id.
/// Throws PreconditionError unless H is commutative.
PathSpace path_space_cocyclic(const HopfAlgebra& h, const HComodule& v, int nmax);

}  // namespace hopfcyc
