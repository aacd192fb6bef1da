#include "doctest.h"
#include "hopfcyc/cotriples.hpp"
#include "hopfcyc/tensor.hpp"
#include "support.hpp"

using namespace hopfcyc;

namespace {

const Field Q = Field::rational();

SparseMatrix sweedler_minus(const HopfAlgebra& s) {
  for (const auto& chi : find_characters(s))
    if (evaluate(chi, s.element("g")) == Scalar::from_int(s.field, -1)) return chi;
  throw std::runtime_error("no character with delta(g) = -1");
}

HComodule k_sigma(const HopfAlgebra& h, const std::string& label) {
  return grouplike_comodule(h, h.element(label), "k_" + label);
}

bool top_power_is_identity(const CyclicModuleData& c, int n) {
  return c.cyclic[n].power(n + 1) == SparseMatrix::identity(c.dim(n), c.field);
}

}  // namespace

TEST_CASE("comatched pairs") {
  HopfAlgebra s = sweedler_algebra(Q);
  CHECK(check_comatched_pair(s, k_sigma(s, "g"), s.counit).compatible());
  CHECK(check_comatched_pair(s, k_sigma(s, "g"), s.counit).antipode_forms);
  // S^2 is conjugation by g, so sigma = 1 is not in involution
  ComatchedPairCertificate one = check_comatched_pair(s, k_sigma(s, "1"), s.counit);
  CHECK(one.delta_fixes_V);
  CHECK_FALSE(one.involution);
  ComatchedPairCertificate bad = check_comatched_pair(s, k_sigma(s, "g"), sweedler_minus(s));
  CHECK_FALSE(bad.delta_fixes_V);
  CHECK_FALSE(bad.witnesses.empty());

  HopfAlgebra z2 = cyclic_group_algebra(2, Q);
  SparseMatrix chi = covector(Q, {Scalar::one(Q), Scalar::from_int(Q, -1)});
  CHECK(check_comatched_pair(z2, k_sigma(z2, "1"), z2.counit).compatible());
  CHECK(check_comatched_pair(z2, k_sigma(z2, "g"), z2.counit).compatible());
  CHECK_FALSE(check_comatched_pair(z2, k_sigma(z2, "g"), chi).delta_fixes_V);
  CHECK(check_comatched_pair(z2, k_sigma(z2, "1"), chi).compatible());

  HopfAlgebra s3 = symmetric_group_s3(Q);
  CHECK(check_comatched_pair(s3, k_sigma(s3, "123"), s3.counit).compatible());
  // S~_V^2 is conjugation for the regular comodule of a nonabelian group
  ComatchedPairCertificate reg = check_comatched_pair(s3, regular_comodule(s3), s3.counit);
  CHECK(reg.delta_fixes_V);
  CHECK_FALSE(reg.involution);
}

// the displayed inverse of S~_V needs v(0) delta(v(-1)) = v
TEST_CASE("twisted antipodes are invertible") {
  for (Field f : {Q, Field::prime(3)}) {
    HopfAlgebra s = sweedler_algebra(f);
    for (const auto& delta : find_characters(s)) {
      SparseMatrix id = SparseMatrix::identity(s.dim(), f);
      CHECK(twisted_antipode(s, delta) * twisted_antipode_inverse(s, delta) == id);
      CHECK(twisted_antipode_inverse(s, delta) * twisted_antipode(s, delta) == id);
      std::vector<HComodule> vs{regular_comodule(s)};
      for (const auto& g : find_grouplikes(s)) vs.push_back(grouplike_comodule(s, g, "k"));
      for (const auto& v : vs)
        CHECK(v_twisted_antipode(s, v, delta).inverse_verified == check_comatched_pair(s, v, delta).delta_fixes_V);
    }
  }
}

TEST_CASE("the trivial cotriple is the cocyclic module of the coalgebra") {
  for (Field f : {Q, Field::prime(2)}) {
    HopfAlgebra s = sweedler_algebra(f);
    HopfCotriple t = trivial_cotriple(f, s.space, s.comult, s.counit);
    CyclicModuleData a = build_cochain_paracocyclic(t, 3);
    CyclicModuleData c = build_twisted_coalgebra_module(f, s.space, s.comult, s.counit,
                                                         SparseMatrix::identity(s.dim(), f), 3);
    CHECK(a.status == CyclicStatus::cyclic);
    for (int n = 0; n <= 3; ++n) {
      CHECK(a.cyclic[n] == c.cyclic[n]);
      for (size_t i = 0; i < a.faces[n].size(); ++i) CHECK(a.faces[n][i] == c.faces[n][i]);
      for (size_t i = 0; i < a.degeneracies[n].size(); ++i) CHECK(a.degeneracies[n][i] == c.degeneracies[n][i]);
    }
    CoinvariantCochains q = coinvariant_cochain_module(t, 3);
    for (int n = 0; n <= 3; ++n) CHECK(q.module.dim(n) == a.dim(n));
    CHECK(q.report.cyclic);
  }
}

TEST_CASE("degree zero cyclic operator is v(0) (x) v(-1) c") {
  HopfAlgebra s = sweedler_algebra(Q);
  HopfCotriple t = self_cotriple(s, k_sigma(s, "g"), s.counit);
  CyclicModuleData a = build_cochain_paracocyclic(t, 1);
  for (int c = 0; c < s.dim(); ++c) CHECK(a.cyclic[0].col(c) == s.mul(s.element("g"), unit_vec(c, Q)));
}

TEST_CASE("coinvariants of (H, H, k_sigma) have dimension (dim H)^n and are cocyclic") {
  struct Case {
    HopfAlgebra h;
    std::string sigma;
    int nmax;
  };
  std::vector<Case> cases;
  cases.push_back({sweedler_algebra(Q), "g", 3});
  cases.push_back({sweedler_algebra(Field::prime(5)), "g", 2});
  cases.push_back({cyclic_group_algebra(2, Q), "g", 3});
  cases.push_back({cyclic_group_algebra(3, Field::prime(2)), "1", 3});
  cases.push_back({symmetric_group_s3(Q), "123", 2});
  for (auto& c : cases) {
    HopfCotriple t = self_cotriple(c.h, k_sigma(c.h, c.sigma), c.h.counit);
    CyclicModuleData ambient = build_cochain_paracocyclic(t, c.nmax);
    CHECK(ambient.direction == Direction::cohomological);
    CoinvariantCochains q = coinvariant_cochain_module(t, c.nmax);
    long long expect = 1;
    for (int n = 0; n <= c.nmax; ++n) {
      CHECK(q.module.dim(n) == expect);
      CHECK(top_power_is_identity(q.module, n));
      expect *= c.h.dim();
    }
    CHECK(q.report.axioms.ok());
    CHECK(q.report.cyclic);
  }
}

TEST_CASE("Sweedler: tau^{n+1} is not the identity before coinvariants") {
  HopfAlgebra s = sweedler_algebra(Q);
  HopfCotriple t = self_cotriple(s, k_sigma(s, "g"), s.counit);
  CyclicModuleData a = build_cochain_paracocyclic(t, 2);
  CHECK(a.status == CyclicStatus::paracyclic);
  CHECK(check_cyclic(a).axioms.ok());
  CHECK_FALSE(top_power_is_identity(a, 1));
  // kZ/2 with trivial coefficients: tau already cycles the legs
  HopfAlgebra z2 = cyclic_group_algebra(2, Q);
  CyclicModuleData b = build_cochain_paracocyclic(self_cotriple(z2, k_sigma(z2, "1"), z2.counit), 2);
  CHECK(top_power_is_identity(b, 1));
}

TEST_CASE("reduced model is isomorphic to the coinvariant quotient") {
  HopfAlgebra s = sweedler_algebra(Q);
  ReducedCocyclicComparison r = compare_reduced_cocyclic(s, k_sigma(s, "g"), s.counit, 3);
  for (const auto& w : r.failures) INFO(w);
  CHECK(r.isomorphic);
  CHECK(r.equivariant);
  CHECK(r.reduced.status == CyclicStatus::cyclic);
  CHECK(r.reduced.cyclic[0] == SparseMatrix::identity(1, Q));

  HopfAlgebra z2 = cyclic_group_algebra(2, Field::prime(2));
  ReducedCocyclicComparison c = compare_reduced_cocyclic(z2, regular_comodule(z2), z2.counit, 2);
  CHECK(c.isomorphic);
  CHECK(c.equivariant);

  HopfAlgebra s3 = symmetric_group_s3(Q);
  ReducedCocyclicComparison d = compare_reduced_cocyclic(s3, k_sigma(s3, "123"), sign_character_s3(s3), 2);
  CHECK(d.isomorphic);
  CHECK(d.equivariant);
  CHECK(d.reduced.status == CyclicStatus::cyclic);
}

TEST_CASE("incompatible cotriples are rejected") {
  HopfAlgebra s = sweedler_algebra(Q);
  HopfCotriple t = self_cotriple(s, k_sigma(s, "1"), s.counit);
  CHECK_THROWS_AS(coinvariant_cochain_module(t, 1), PreconditionError);
  CHECK_FALSE(reduced_cocyclic_model(s, k_sigma(s, "1"), s.counit, 2).status == CyclicStatus::cyclic);
  CHECK_THROWS_AS(make_cotriple(self_module_coalgebra(s), s, k_sigma(s, "g"), covector(Q, {Scalar::one(Q),
                                                                                             Scalar::one(Q),
                                                                                             Scalar::one(Q),
                                                                                             Scalar::one(Q)})),
                  PreconditionError);
  CHECK_THROWS_AS(build_cochain_paracocyclic(t, 12, 1000), BudgetExceeded);
}

TEST_CASE("coinvariant exchange") {
  for (Field f : {Q, Field::prime(3)}) {
    HopfAlgebra s = sweedler_algebra(f);
    for (const auto& delta : find_characters(s)) {
      CHECK(check_coinvariant_exchange(s, regular_module(s), regular_module(s), delta));
      CHECK(check_coinvariant_exchange(s, trivial_module(s), regular_module(s), delta));
      CHECK(check_coinvariant_exchange(s, regular_module(s), character_module(s, delta, "k"), delta));
    }
  }
  HopfAlgebra s3 = symmetric_group_s3(Q);
  CHECK(check_coinvariant_exchange(s3, regular_module(s3), sign_module_s3(s3), s3.counit));
  CHECK(check_coinvariant_exchange(s3, sign_module_s3(s3), regular_module(s3), sign_character_s3(s3)));
}

TEST_CASE("cotrace splitting") {
  HopfAlgebra s3 = symmetric_group_s3(Q);
  SparseVec t;
  for (int i = 0; i < 6; ++i) t.emplace_back(i, Scalar::one(Q));
  HopfCotriple c = self_cotriple(s3, k_sigma(s3, "123"), s3.counit);
  CotraceSplitting sp = cotrace_splitting(c, t, 2);
  CHECK(sp.delta_t == Scalar::from_int(Q, 6));
  CHECK(sp.gamma_descends);
  CHECK(sp.cyclic_map);
  CHECK(sp.pi_gamma_scalar);
  CHECK(sp.summand);

  // sum of delta(g)^-1 g for the sign character
  SparseMatrix sign = sign_character_s3(s3);
  SparseVec ts;
  for (int i = 0; i < 6; ++i) ts.emplace_back(i, sign.at(0, i).inverse());
  CotraceSplitting ss = cotrace_splitting(self_cotriple(s3, k_sigma(s3, "123"), sign), ts, 2);
  CHECK(ss.delta_t == Scalar::from_int(Q, 6));
  CHECK(ss.summand);

  Field f2 = Field::prime(2);
  HopfAlgebra z2 = cyclic_group_algebra(2, f2);
  HopfCotriple cz = self_cotriple(z2, k_sigma(z2, "1"), z2.counit);
  SparseVec one_plus_g{{0, Scalar::one(f2)}, {1, Scalar::one(f2)}};
  CotraceSplitting sz = cotrace_splitting(cz, one_plus_g, 3);
  CHECK(sz.delta_t.is_zero());
  CHECK(sz.pi_gamma_scalar);
  CHECK_FALSE(sz.summand);
  for (const auto& m : sz.gamma) CHECK_FALSE(m.is_zero());

  CotraceSplitting zero = cotrace_splitting(c, {}, 1);
  for (int n = 0; n <= 1; ++n) CHECK((zero.pi[n] * zero.gamma[n]).is_zero());
  CHECK_FALSE(zero.summand);

  CHECK_THROWS_AS(cotrace_splitting(c, s3.element("213"), 1), PreconditionError);
  HopfAlgebra s = sweedler_algebra(Q);
  CHECK_THROWS_AS(cotrace_splitting(self_cotriple(s, k_sigma(s, "g"), s.counit), s.unit, 1), PreconditionError);
}

TEST_CASE("diagonal action is an action on random cochains") {
  testing_support::Gen gen;
  HopfAlgebra s = sweedler_algebra(Q);
  HopfCotriple t = self_cotriple(s, k_sigma(s, "g"), s.counit);
  for (int n = 0; n <= 2; ++n) {
    std::vector<SparseMatrix> act;
    for (int h = 0; h < s.dim(); ++h) act.push_back(diagonal_action(t, n, h));
    for (int trial = 0; trial < 5; ++trial) {
      int a = static_cast<int>(gen.integer(0, 3)), b = static_cast<int>(gen.integer(0, 3));
      SparseMatrix lhs(act[0].rows(), act[0].cols(), Q);
      for (const auto& [k, c] : s.mul(a, b)) lhs = lhs + act[k].scaled(c);
      CHECK(lhs == act[a] * act[b]);
    }
    CHECK(act[0] == SparseMatrix::identity(act[0].rows(), Q));
  }
}
