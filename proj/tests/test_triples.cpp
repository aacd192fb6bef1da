#include "doctest.h"
#include "hopfcyc/triples.hpp"
#include "oracle_cyclic.hpp"

using namespace hopfcyc;

namespace {

const Field Q = Field::rational();

SparseVec group_element(const HopfAlgebra& h, const std::string& label) { return h.element(label); }

HModule sign_of_z2(const HopfAlgebra& z2) {
  return character_module(z2, covector(z2.field, {Scalar::one(z2.field), Scalar::from_int(z2.field, -1)}), "k_chi");
}

// delta(g) = -1, delta(x) = 0 on Sweedler's algebra
HModule sweedler_delta(const HopfAlgebra& s) {
  for (const auto& chi : find_characters(s))
    if (evaluate(chi, s.element("g")) == Scalar::from_int(s.field, -1)) return character_module(s, chi, "k_delta");
  throw std::runtime_error("no character with delta(g) = -1");
}

bool top_power_is_identity(const CyclicModuleData& c, int n) {
  return c.cyclic[n].power(n + 1) == SparseMatrix::identity(c.dim(n), c.field);
}

}  // namespace

TEST_CASE("self triple of kZ/2 with trivial coefficients") {
  HopfAlgebra z2 = cyclic_group_algebra(2, Q);
  HopfTriple t = self_triple(z2, trivial_module(z2), z2.unit);
  InvariantChains k = coinvariant_chain_module(t, 3, CoinvariantMethod::kernel);
  InvariantChains f = coinvariant_chain_module(t, 3, CoinvariantMethod::free_comodule);
  CHECK(k.pair.compatible());
  CHECK(k.report.axioms.ok());
  CHECK(k.report.cyclic);
  CHECK(f.report.cyclic);
  for (int n = 0; n <= 3; ++n) CHECK(k.module.dim(n) == f.module.dim(n));
  CHECK(cyclic_homology(k.module) == cyclic_homology(f.module));
  CHECK(cyclic_homology(k.module) == testing_support::oracle_hc(k.module));
  CHECK(check_coaction_identity(t));
}

TEST_CASE("trivial triple recovers the algebra's cyclic module") {
  for (Field f : {Q, Field::prime(2), Field::prime(3)}) {
    auto [mult, unit] = truncated_polynomial(2, f);
    HopfTriple t = trivial_triple(f, IndexedSpace::numbered("A", 2), mult, unit);
    InvariantChains c = coinvariant_chain_module(t, 4);
    CyclicModuleData a = build_twisted_algebra_module(f, IndexedSpace::numbered("A", 2), mult, unit,
                                                      SparseMatrix::identity(2, f), 4);
    CHECK(c.report.cyclic);
    CHECK(cyclic_homology(c.module) == cyclic_homology(a));
    CHECK(hochschild_homology(c.module) == hochschild_homology(a));
  }
}

TEST_CASE("incompatible pair: sigma acts by -1 and the cyclic identity fails") {
  HopfAlgebra z2 = cyclic_group_algebra(2, Q);
  SparseVec g = group_element(z2, "g");
  HopfTriple t = self_triple(z2, sign_of_z2(z2), g);
  MatchedPairCertificate mp = check_matched_pair(z2, t.M, g);
  CHECK_FALSE(mp.sigma_fixes_M);
  CHECK_FALSE(mp.compatible());
  CHECK_FALSE(mp.details.empty());
  CHECK_FALSE(hat_antipode(z2, t.M, g).inverse_verified);
  InvariantChains c = coinvariant_chain_module(t, 2);
  CHECK(c.report.axioms.ok());
  CHECK_FALSE(c.report.cyclic);
  CHECK_FALSE(c.report.witnesses.empty());
  bool minus_one = false;
  for (int n = 0; n <= 2; ++n)
    if (c.module.dim(n) > 0 &&
        c.module.cyclic[n].power(n + 1) == SparseMatrix::identity(c.module.dim(n), Q).scaled(Scalar::from_int(Q, -1)))
      minus_one = true;
  CHECK(minus_one);
  CHECK_THROWS_AS(cyclic_homology(c.module), PreconditionError);
}

TEST_CASE("compatible pairs: cyclic on coinvariants, not on the ambient chains") {
  HopfAlgebra z2 = cyclic_group_algebra(2, Q);
  HopfTriple t = self_triple(z2, sign_of_z2(z2), z2.unit);
  CHECK(check_matched_pair(z2, t.M, z2.unit).compatible());
  CHECK(hat_antipode(z2, t.M, z2.unit).inverse_verified);
  CyclicModuleData amb = build_chain_paracyclic(t, 2);
  CHECK(check_cyclic(amb).axioms.ok());
  CHECK_FALSE(top_power_is_identity(amb, 1));
  InvariantChains c = coinvariant_chain_module(t, 2);
  CHECK(c.report.cyclic);
  CHECK(check_coaction_identity(t));

  for (Field f : {Q, Field::prime(3)}) {
    HopfAlgebra s = sweedler_algebra(f);
    HopfTriple ts = self_triple(s, sweedler_delta(s), s.unit);
    MatchedPairCertificate mp = check_matched_pair(s, ts.M, s.unit);
    CHECK(mp.compatible());
    CyclicModuleData as = build_chain_paracyclic(ts, 2);
    CHECK(check_cyclic(as).axioms.ok());
    CHECK_FALSE(check_cyclic(as).cyclic);
    InvariantChains cs = coinvariant_chain_module(ts, 2);
    CHECK(cs.report.axioms.ok());
    CHECK(cs.report.cyclic);
    CHECK(check_coaction_identity(ts));
  }
}

TEST_CASE("kernel and free comodule methods agree") {
  for (Field f : {Q, Field::prime(2), Field::prime(3)}) {
    HopfAlgebra s = sweedler_algebra(f);
    if (f.p != 2) {  // in characteristic 2 the modular character is the counit
      CHECK_FALSE(check_matched_pair(s, trivial_module(s), s.unit).involution);
      CHECK_THROWS_AS(coinvariant_chain_module(self_triple(s, trivial_module(s), s.unit), 2, CoinvariantMethod::kernel),
                      RestrictionError);
    }
    HopfTriple t = self_triple(s, sweedler_delta(s), s.unit);
    InvariantChains k = coinvariant_chain_module(t, 2, CoinvariantMethod::kernel);
    InvariantChains fr = coinvariant_chain_module(t, 2, CoinvariantMethod::free_comodule);
    for (int n = 0; n <= 2; ++n) CHECK(k.module.dim(n) == fr.module.dim(n));
    CHECK(k.report.cyclic);
    CHECK(fr.report.cyclic);
    CHECK(cyclic_homology(k.module) == cyclic_homology(fr.module));
    CHECK(hochschild_homology(k.module) == hochschild_homology(fr.module));
  }
}

TEST_CASE("reduced model is isomorphic to the coinvariant chains") {
  std::vector<std::tuple<HopfAlgebra, HModule, SparseVec>> cases;
  for (Field f : {Q, Field::prime(3)}) {
    HopfAlgebra z2 = cyclic_group_algebra(2, f);
    cases.emplace_back(z2, trivial_module(z2), z2.unit);
    cases.emplace_back(z2, sign_of_z2(z2), z2.unit);
    HopfAlgebra s = sweedler_algebra(f);
    cases.emplace_back(s, sweedler_delta(s), s.unit);
  }
  HopfAlgebra s3 = symmetric_group_s3(Q);
  cases.emplace_back(s3, sign_module_s3(s3), s3.unit);
  for (const auto& [h, m, sigma] : cases) {
    INFO(h.space.name << " with " << m.space.name);
    int nmax = h.dim() > 4 ? 2 : 3;
    ReducedComparison rc = compare_reduced_model(h, m, sigma, nmax);
    CHECK(rc.isomorphic);
    CHECK(rc.equivariant);
    CHECK(rc.failures.empty());
    CHECK(check_cyclic(rc.reduced).axioms.ok());
    if (rc.chains.report.cyclic) CHECK(cyclic_homology(rc.reduced) == cyclic_homology(rc.chains.module));
  }
}

TEST_CASE("reduced model with an incompatible pair is not cyclic") {
  HopfAlgebra z2 = cyclic_group_algebra(2, Q);
  SparseVec g = z2.element("g");
  CyclicReport r = check_cyclic(reduced_model(z2, sign_of_z2(z2), g, 2));
  CHECK_FALSE((r.axioms.ok() && r.cyclic));
  CHECK_FALSE(r.witnesses.empty());
}

TEST_CASE("semisimple Hopf algebras: HC alternates M_H, 0") {
  HopfAlgebra s3 = symmetric_group_s3(Q);
  SemisimpleReport triv = semisimple_check(s3, trivial_module(s3), s3.unit, 5);
  CHECK(triv.has_integral);
  CHECK(triv.contraction);
  CHECK(triv.hc == std::vector<int>{1, 0, 1, 0, 1});
  CHECK(triv.agrees());
  SemisimpleReport sign = semisimple_check(s3, sign_module_s3(s3), s3.unit, 4);
  CHECK(sign.agrees());
  CHECK(sign.hc == std::vector<int>{0, 0, 0, 0});

  HopfAlgebra z2 = cyclic_group_algebra(2, Q);
  SemisimpleReport reg = semisimple_check(z2, regular_module(z2), z2.unit, 4);
  CHECK(reg.agrees());
  CHECK(reg.hc == std::vector<int>{1, 0, 1, 0});

  // kZ/2 is not semisimple in characteristic 2, and no contraction exists
  HopfAlgebra z2p = cyclic_group_algebra(2, Field::prime(2));
  SemisimpleReport nss = semisimple_check(z2p, trivial_module(z2p), z2p.unit, 3);
  CHECK_FALSE(nss.has_integral);
  CHECK_FALSE(nss.agrees());
  CHECK(module_coinvariants_dim(z2p, regular_module(z2p), z2p.counit) == 1);
}

TEST_CASE("graded triple: k[x]/(x^3) weight zero") {
  GradedTriple t{truncated_polynomial_graded(3, Q), IndexedSpace::numbered("k", 1),
                 [](const std::string&) { return SparseMatrix::identity(1, Q); }, "0"};
  InvariantChains c = coinvariant_chain_module(t, 4);
  CHECK(c.report.cyclic);
  CHECK(cyclic_homology(c.module) == std::vector<int>{1, 0, 1, 0});
  CyclicModuleData amb = build_chain_paracyclic(t, 2);
  CHECK(amb.dim(2) == 27);
  CHECK(check_cyclic(amb).axioms.ok());

  GradedTriple w2{truncated_polynomial_graded(3, Q), IndexedSpace::numbered("k", 1),
                  [](const std::string&) { return SparseMatrix::identity(1, Q); }, "2"};
  InvariantChains c2 = coinvariant_chain_module(w2, 3);
  CHECK(c2.report.cyclic);
  CHECK(c2.module.dim(0) == 1);
  CHECK(c2.module.dim(1) == 3);
  CHECK(cyclic_homology(c2.module) == testing_support::oracle_hc(c2.module));
}

TEST_CASE("averaging gives a split inclusion of the coinvariants") {
  for (Field f : {Q, Field::prime(3)}) {
    HopfAlgebra z2 = cyclic_group_algebra(2, f);
    HopfTriple t = self_triple(z2, trivial_module(z2), z2.unit);
    auto traces = sigma_invariant_traces(z2, z2.unit);
    REQUIRE_FALSE(traces.empty());
    SparseMatrix tr = traces.front();
    if (evaluate(tr, z2.unit).is_zero()) tr = traces.back();
    AveragingSplitting s = averaging_splitting(t, tr, 2);
    CHECK(s.lands_in_coinvariants);
    CHECK(s.cyclic_map);
    CHECK(s.gamma_i_scalar);
    CHECK(s.summand);
  }
  HopfAlgebra z2 = cyclic_group_algebra(2, Q);
  HopfTriple bad = self_triple(z2, sign_of_z2(z2), z2.unit);
  CHECK_THROWS_AS(averaging_splitting(bad, covector(Q, {Scalar::one(Q), Scalar::zero(Q)}), 1), PreconditionError);
}

TEST_CASE("Morita invariance for matrix comodule algebras") {
  HopfAlgebra z2 = cyclic_group_algebra(2, Q);
  MoritaReport r = morita_compare(z2, trivial_module(z2), z2.unit, 2, 3);
  CHECK(r.equal);
  CHECK(r.hc_h == std::vector<int>{1, 0, 1});
}

TEST_CASE("make_triple validates its inputs") {
  HopfAlgebra z2 = cyclic_group_algebra(2, Q);
  SparseVec not_grouplike = vec_add(z2.unit, z2.element("g"));
  CHECK_THROWS_AS(self_triple(z2, trivial_module(z2), not_grouplike), PreconditionError);
  HModule broken = trivial_module(z2);
  broken.action = SparseMatrix::zero(1, 2, Q);
  CHECK_THROWS_AS(self_triple(z2, broken, z2.unit), PreconditionError);
  HopfTriple t = self_triple(z2, trivial_module(z2), z2.unit);
  CHECK_THROWS_AS(build_chain_paracyclic(t, 20, 1000), BudgetExceeded);
}

TEST_CASE("Morita invariance on Sweedler's algebra and k = 1") {
  HopfAlgebra s = sweedler_algebra(Q);
  MoritaReport r = morita_compare(s, sweedler_delta(s), s.unit, 2, 2);
  CHECK(r.equal);
  HopfAlgebra z2 = cyclic_group_algebra(2, Q);
  MoritaReport one = morita_compare(z2, sign_of_z2(z2), z2.unit, 1, 3);
  CHECK(one.equal);
}

TEST_CASE("graded Q[x]/(x^2): weight-zero chains are spanned by 1 (x) ... (x) 1") {
  GradedTriple t{truncated_polynomial_graded(2, Q), IndexedSpace::numbered("k", 1),
                 [](const std::string&) { return SparseMatrix::identity(1, Q); }, "0"};
  InvariantChains c = coinvariant_chain_module(t, 2);
  CHECK(c.module.dim(1) == 1);
  CHECK(c.inclusion[1].col(0) == unit_vec(0, Q));
}

TEST_CASE("averaging on the trivial triple is the identity") {
  auto [mult, unit] = truncated_polynomial(2, Q);
  HopfTriple t = trivial_triple(Q, IndexedSpace::numbered("A", 2), mult, unit);
  AveragingSplitting s = averaging_splitting(t, covector(Q, {Scalar::one(Q)}), 2);
  for (int n = 0; n <= 2; ++n) CHECK(s.gamma[n] == SparseMatrix::identity(s.gamma[n].rows(), Q));
  CHECK(s.summand);
  HopfAlgebra z2 = cyclic_group_algebra(2, Q);
  AveragingSplitting zero =
      averaging_splitting(self_triple(z2, trivial_module(z2), z2.unit), covector(Q, {Scalar::zero(Q), Scalar::zero(Q)}), 1);
  CHECK(zero.gamma_i_scalar);
  CHECK_FALSE(zero.summand);
}
