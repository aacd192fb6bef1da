#pragma once

#include <string>
#include <vector>

#include "hopfcyc/hopf.hpp"

namespace hopfcyc {

enum class Direction { homological, cohomological };
enum class CyclicStatus { paracyclic, cyclic };

/// Graded family with face, degeneracy and cyclic operators in degrees 0..nmax.
///
/// Homological:   faces[n][i] : C_n -> C_{n-1}       (n >= 1, i = 0..n)
///                degeneracies[n][i] : C_n -> C_{n+1} (n < nmax, i = 0..n)
/// Cohomological: faces[n][i] : C^{n-1} -> C^n        (n >= 1, i = 0..n)
///                degeneracies[n][i] : C^{n+1} -> C^n (n < nmax, i = 0..n)
///
/// With this indexing the transpose of a cocyclic module is a cyclic module
/// with the same index layout.
struct CyclicModuleData {
  Field field;
  Direction direction = Direction::homological;
  std::vector<IndexedSpace> spaces;
  std::vector<std::vector<SparseMatrix>> faces;
  std::vector<std::vector<SparseMatrix>> degeneracies;
  std::vector<SparseMatrix> cyclic;
  CyclicStatus status = CyclicStatus::paracyclic;

  int nmax() const { return static_cast<int>(spaces.size()) - 1; }
  int dim(int n) const { return spaces[n].dim(); }
  bool has_degeneracies() const;
  /// Empty module with spaces and empty operator slots for degrees 0..nmax.
  static CyclicModuleData shell(const Field& f, Direction dir, std::vector<IndexedSpace> spaces);
};

/// Transposed operators, opposite direction.
CyclicModuleData dual(const CyclicModuleData& c);

struct CyclicReport {
  AxiomReport axioms;  // simplicial and paracyclic exchange identities
  bool cyclic = false;  // tau^{n+1} = id in every degree
  std::vector<std::string> witnesses;
};

/// Checks every identity where both sides are stored.  Throws
/// DimensionMismatch when an operator does not fit the graded spaces.
CyclicReport check_cyclic(const CyclicModuleData& c);
/// check_cyclic, then records the status on c.
CyclicReport certify(CyclicModuleData& c);

/// A_g: tensor powers of an algebra with the last factor twisted by g.
CyclicModuleData build_twisted_algebra_module(const Field& f, const IndexedSpace& space,
                                              const SparseMatrix& mult, const SparseVec& unit,
                                              const SparseMatrix& g, int nmax);
/// C^theta: tensor powers of a coalgebra, cohomological.
CyclicModuleData build_twisted_coalgebra_module(const Field& f, const IndexedSpace& space,
                                                const SparseMatrix& comult,
                                                const SparseMatrix& counit,
                                                const SparseMatrix& theta, int nmax);

/// Sum of (-1)^i d_i : C_n -> C_{n-1} (homological modules).
SparseMatrix hochschild_boundary(const CyclicModuleData& c, int n);
/// lambda = (-1)^n tau_n.
SparseMatrix signed_cyclic(const CyclicModuleData& c, int n);

/// Mixed complex: b[n] : N_n -> N_{n-1} (b[0] is 0 x dim 0), B[n] : N_n -> N_{n+1}
/// for n < top.
struct MixedComplexData {
  Field field;
  std::vector<int> dims;
  std::vector<SparseMatrix> b;
  std::vector<SparseMatrix> B;
  int top() const { return static_cast<int>(dims.size()) - 1; }
};

AxiomReport check_mixed(const MixedComplexData& m);

/// Normalized mixed complex (degenerate chains quotiented).  Cohomological
/// modules are dualized first.  Requires degeneracies.
MixedComplexData normalized_mixed_complex(const CyclicModuleData& c);

/// Total differential Tot_n -> Tot_{n-1} of the (b,B) bicomplex, blocks
/// N_n, N_{n-2}, ... in that order.
SparseMatrix total_differential(const MixedComplexData& m, int n);
std::vector<int> total_dims(const MixedComplexData& m, int n);

/// Degrees 0..top-1.
std::vector<int> hochschild_dims(const MixedComplexData& m);
std::vector<int> cyclic_dims(const MixedComplexData& m);

struct PeriodicEstimate {
  int degree = 0;
  int dim = 0;
  bool stable = false;
  /// dim Im(S^j : HC_{n+2j} -> HC_n) for j = 0, 1, ...
  std::vector<int> tower;
};
/// Stable when the last window+1 tower values agree.
std::vector<PeriodicEstimate> periodic_dims(const MixedComplexData& m, int window);

struct SbiReport {
  bool exact = true;
  int positions_checked = 0;
  std::vector<std::string> failures;
};
/// Exactness of HH -> HC -> HC -> HH at every position computable from m.
SbiReport sbi_check(const MixedComplexData& m);

/// Table-level entry points on cyclic modules.  Hochschild homology of a
/// paracyclic module is allowed when b^2 = 0 (PreconditionError otherwise);
/// cyclic and periodic homology require status cyclic.
std::vector<int> hochschild_homology(const CyclicModuleData& c);
std::vector<int> cyclic_homology(const CyclicModuleData& c);
std::vector<PeriodicEstimate> periodic_homology(const CyclicModuleData& c, int window);

/// h[n] : C_n -> C_{n+1}.  True iff h b + b h = id on C_n for 1 <= n <= nmax-1.
bool contraction_check(const CyclicModuleData& c, const std::vector<SparseMatrix>& h);

/// Restriction of every operator to subspaces (one per degree).  Throws
/// RestrictionError when an operator leaves them.
CyclicModuleData restrict_module(const CyclicModuleData& c, const std::vector<Subspace>& sub);
/// Operators induced on quotients; throws RestrictionError when one does not descend.
CyclicModuleData descend_module(const CyclicModuleData& c, const std::vector<Quotient>& quo);

/// Degreewise check that maps f[n] : C_n -> D_n commute with every operator.
AxiomReport check_cyclic_map(const CyclicModuleData& c, const CyclicModuleData& d,
                             const std::vector<SparseMatrix>& f);

}  // namespace hopfcyc
