#include "doctest.h"
#include "hopfcyc/oracles.hpp"
#include "support.hpp"

using namespace hopfcyc;

namespace {

const Field Q = Field::rational();
const Field F2 = Field::prime(2);

HComodule trivial_comodule(const HopfAlgebra& h) { return grouplike_comodule(h, h.unit, "k"); }

// Periodic resolution of k over F_p[Z/p]: H_n(Z/p, k) = k in every degree.
std::vector<int> cyclic_group_homology_small(int nmax) { return std::vector<int>(nmax, 1); }

}  // namespace

TEST_CASE("bar complex squares to zero") {
  std::vector<std::pair<HopfAlgebra, HModule>> cases;
  HopfAlgebra s = sweedler_algebra(Q);
  cases.emplace_back(s, regular_module(s));
  cases.emplace_back(s, trivial_module(s));
  HopfAlgebra s3 = symmetric_group_s3(Q);
  cases.emplace_back(s3, sign_module_s3(s3));
  for (const auto& [h, m] : cases)
    for (int n = 2; n <= 3; ++n)
      CHECK((bar_differential(h, m, n - 1, h.counit) * bar_differential(h, m, n, h.counit)).is_zero());
  HopfAlgebra z2 = cyclic_group_algebra(2, F2);
  for (int n = 1; n <= 3; ++n)
    CHECK((cobar_differential(z2, regular_comodule(z2), n) * cobar_differential(z2, regular_comodule(z2), n - 1))
              .is_zero());
}

TEST_CASE("Hopf homology") {
  HopfAlgebra z2 = cyclic_group_algebra(2, F2);
  CHECK(hopf_homology(z2, trivial_module(z2), 6) == cyclic_group_homology_small(6));
  HopfAlgebra z3 = cyclic_group_algebra(3, Field::prime(3));
  CHECK(hopf_homology(z3, trivial_module(z3), 4) == cyclic_group_homology_small(4));
  // semisimple: only coinvariants survive
  HopfAlgebra s3 = symmetric_group_s3(Q);
  CHECK(hopf_homology(s3, trivial_module(s3), 3) == std::vector<int>{1, 0, 0});
  CHECK(hopf_homology(s3, sign_module_s3(s3), 3) == std::vector<int>{0, 0, 0});
  CHECK(hopf_homology(s3, regular_module(s3), 3) == std::vector<int>{1, 0, 0});
  // free modules are acyclic
  HopfAlgebra s = sweedler_algebra(Q);
  CHECK(hopf_homology(s, regular_module(s), 3) == std::vector<int>{1, 0, 0});
  CHECK(hopf_homology(z2, regular_module(z2), 4) == std::vector<int>{1, 0, 0, 0});
  CHECK(hopf_homology(s, zero_module(s), 3) == std::vector<int>{0, 0, 0});
}

TEST_CASE("Hopf homology is the Hochschild homology of the reduced model") {
  HopfAlgebra s = sweedler_algebra(Q);
  HopfAlgebra z2 = cyclic_group_algebra(2, F2);
  HopfAlgebra s3 = symmetric_group_s3(Q);
  CHECK(hochschild_homology(reduced_model(s, trivial_module(s), s.unit, 3)) == hopf_homology(s, trivial_module(s), 3));
  CHECK(hochschild_homology(reduced_model(z2, trivial_module(z2), z2.unit, 4)) ==
        hopf_homology(z2, trivial_module(z2), 4));
  CHECK(hochschild_homology(reduced_model(s3, sign_module_s3(s3), s3.unit, 2)) ==
        hopf_homology(s3, sign_module_s3(s3), 2));
}

TEST_CASE("Hopf cohomology") {
  HopfAlgebra z2 = cyclic_group_algebra(2, F2);
  HopfAlgebra dz2 = dual_hopf(z2);
  // transpose duality with the bar complex of kZ/2
  CHECK(hopf_cohomology(dz2, trivial_comodule(dz2), 5) == hopf_homology(z2, trivial_module(z2), 5));
  HopfAlgebra qz2 = dual_hopf(cyclic_group_algebra(2, Q));
  CHECK(hopf_cohomology(qz2, trivial_comodule(qz2), 4) == std::vector<int>{1, 0, 0, 0});
  HopfAlgebra qs3 = dual_hopf(symmetric_group_s3(Q));
  CHECK(hopf_cohomology(qs3, trivial_comodule(qs3), 3) == std::vector<int>{1, 0, 0});
  // trivial coaction: H^0 = V
  HopfAlgebra s = sweedler_algebra(Q);
  CHECK(hopf_cohomology(s, trivial_comodule(s), 1) == std::vector<int>{1});
  CHECK(hopf_cohomology(s, regular_comodule(s), 3) == std::vector<int>{1, 0, 0});
}

TEST_CASE("cocommutative decomposition") {
  HopfAlgebra z2 = cyclic_group_algebra(2, F2);
  DecompositionReport r = decomposition_check_cocommutative(z2, trivial_module(z2), 6);
  for (const auto& w : r.failures) INFO(w);
  CHECK(r.equal);
  CHECK(r.cyclic == std::vector<int>{1, 1, 2, 2, 3, 3});
  HopfAlgebra s3 = symmetric_group_s3(Q);
  DecompositionReport t = decomposition_check_cocommutative(s3, trivial_module(s3), 4);
  CHECK(t.equal);
  CHECK(t.cyclic == std::vector<int>{1, 0, 1, 0});
  DecompositionReport z = decomposition_check_cocommutative(z2, zero_module(z2), 3);
  CHECK(z.equal);
  CHECK(z.cyclic == std::vector<int>{0, 0, 0});
  DecompositionReport sign = decomposition_check_cocommutative(s3, sign_module_s3(s3), 3);
  CHECK(sign.equal);
  HopfAlgebra s = sweedler_algebra(Q);
  CHECK_THROWS_AS(decomposition_check_cocommutative(s, trivial_module(s), 2), PreconditionError);
}

TEST_CASE("commutative decomposition") {
  HopfAlgebra dz2 = dual_hopf(cyclic_group_algebra(2, F2));
  DecompositionReport r = decomposition_check_commutative(dz2, trivial_comodule(dz2), 5);
  for (const auto& w : r.failures) INFO(w);
  CHECK(r.equal);
  CHECK(r.cyclic == decomposition_check_cocommutative(cyclic_group_algebra(2, F2),
                                                       trivial_module(cyclic_group_algebra(2, F2)), 5)
                        .cyclic);
  HopfAlgebra qz2 = dual_hopf(cyclic_group_algebra(2, Q));
  DecompositionReport q = decomposition_check_commutative(qz2, trivial_comodule(qz2), 3);
  CHECK(q.equal);
  CHECK(q.cyclic == std::vector<int>{1, 0, 1});
  HopfAlgebra z2 = cyclic_group_algebra(2, Q);
  DecompositionReport k = decomposition_check_commutative(z2, trivial_comodule(z2), 3);
  CHECK(k.equal);
  DecompositionReport zero = decomposition_check_commutative(qz2, zero_comodule(qz2), 3);
  CHECK(zero.equal);
  CHECK(zero.cyclic == std::vector<int>{0, 0, 0});
  HopfAlgebra s3 = symmetric_group_s3(Q);
  CHECK_THROWS_AS(decomposition_check_commutative(s3, trivial_comodule(s3), 2), PreconditionError);
}

TEST_CASE("cyclic path space") {
  HopfAlgebra z2 = cyclic_group_algebra(2, Q);
  PathSpace p = path_space_cyclic(z2, trivial_module(z2), 4);
  for (const auto& w : p.failures) INFO(w);
  CHECK(p.module.status == CyclicStatus::cyclic);
  CHECK(check_cyclic(p.module).axioms.ok());
  CHECK(p.comparison_is_map);
  CHECK(p.coinvariants_match);
  HopfAlgebra s3 = symmetric_group_s3(Q);
  PathSpace q = path_space_cyclic(s3, sign_module_s3(s3), 2);
  CHECK(q.module.status == CyclicStatus::cyclic);
  CHECK(q.comparison_is_map);
  CHECK(q.coinvariants_match);
  PathSpace f2 = path_space_cyclic(cyclic_group_algebra(3, F2), regular_module(cyclic_group_algebra(3, F2)), 2);
  CHECK(f2.module.status == CyclicStatus::cyclic);
  HopfAlgebra s = sweedler_algebra(Q);
  CHECK_THROWS_AS(path_space_cyclic(s, trivial_module(s), 2), PreconditionError);
}

TEST_CASE("cocyclic path space") {
  HopfAlgebra qz2 = dual_hopf(cyclic_group_algebra(2, Q));
  PathSpace p = path_space_cocyclic(qz2, trivial_comodule(qz2), 3);
  for (const auto& w : p.failures) INFO(w);
  CHECK(p.module.status == CyclicStatus::cyclic);
  CHECK(p.comparison_is_map);
  CHECK(p.coinvariants_match);
  HopfAlgebra qs3 = dual_hopf(symmetric_group_s3(Q));
  PathSpace d = path_space_cocyclic(qs3, regular_comodule(qs3), 2);
  for (const auto& w : d.failures) INFO(w);
  CHECK(d.module.status == CyclicStatus::cyclic);
  CHECK(d.comparison_is_map);
  CHECK(d.coinvariants_match);
  HopfAlgebra k = ground_field_hopf(Q);
  PathSpace g = path_space_cocyclic(k, trivial_comodule(k), 3);
  CHECK(g.module.status == CyclicStatus::cyclic);
  for (int n = 0; n <= 3; ++n) CHECK(g.module.dim(n) == 1);
  HopfAlgebra s3 = symmetric_group_s3(Q);
  CHECK_THROWS_AS(path_space_cocyclic(s3, trivial_comodule(s3), 2), PreconditionError);
}
