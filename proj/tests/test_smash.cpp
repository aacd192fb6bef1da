#include <random>

#include "doctest.h"
#include "hopfcyc/smash.hpp"
#include "support.hpp"

using namespace hopfcyc;

namespace {

const Field Q = Field::rational();
const Field F2 = Field::prime(2);

void show(const std::vector<std::string>& ws) {
  for (const auto& w : ws) MESSAGE(w);
}

SmashProduct z2_sign(const Field& f) {
  HopfAlgebra z2 = cyclic_group_algebra(2, f);
  return build_smash(z2, dual_numbers_sign(z2));
}

SmashProduct sweedler_dual(const Field& f) {
  HopfAlgebra s = sweedler_algebra(f);
  return build_smash(s, dual_numbers_sweedler(s));
}

// g -> -1, x -> 0
HModule sweedler_sign(const HopfAlgebra& s) {
  const Field& f = s.field;
  return character_module(
      s, covector(f, {Scalar::from_int(f, 1), Scalar::from_int(f, -1), Scalar::from_int(f, 0), Scalar::from_int(f, 0)}),
      "k_delta");
}

struct Case {
  SmashProduct s;
  HModule m;
  SparseVec sigma;
};

std::vector<Case> cases() {
  std::vector<Case> out;
  SmashProduct a = z2_sign(Q);
  out.push_back({a, trivial_module(a.H), a.H.unit});
  out.push_back({a, trivial_module(a.H), a.H.element("g")});
  SmashProduct b = sweedler_dual(Q);
  out.push_back({b, sweedler_sign(b.H), b.H.unit});
  out.push_back({b, trivial_module(b.H), b.H.element("g")});
  SmashProduct c = z2_sign(F2);
  out.push_back({c, trivial_module(c.H), c.H.unit});
  return out;
}

}  // namespace

TEST_CASE("right module algebras and smash products") {
  HopfAlgebra z2 = cyclic_group_algebra(2, Q);
  CHECK(check_right_module_algebra(z2, dual_numbers_sign(z2)).ok());
  HopfAlgebra s = sweedler_algebra(Q);
  CHECK(check_right_module_algebra(s, dual_numbers_sweedler(s)).ok());
  SmashProduct a = z2_sign(Q);
  CHECK(a.certificate.ok());
  CHECK(a.A.dim() == 4);
  CHECK(a.A.fiber_dim == 2);
  SmashProduct b = sweedler_dual(Q);
  show(b.certificate.failures());
  CHECK(b.certificate.ok());
  CHECK(b.A.dim() == 8);
  CHECK(sweedler_dual(Field::prime(5)).certificate.ok());
  // (x)g = 1 is not multiplicative
  RightModuleAlgebra bad = dual_numbers_sign(z2);
  bad.action.set_col(1 * 2 + 1, unit_vec(0, Q));
  CHECK_FALSE(check_right_module_algebra(z2, bad).ok());
  CHECK_THROWS_AS(build_smash(z2, bad), PreconditionError);
  // the trivial action on a commutative algebra
  auto [mult, unit] = truncated_polynomial(3, Q);
  RightModuleAlgebra t = trivial_right_module_algebra(s, IndexedSpace::numbered("B", 3), mult, unit);
  CHECK(check_right_module_algebra(s, t).ok());
}

TEST_CASE("cylindrical identities") {
  for (const auto& c : cases()) {
    CylindricalModule x = build_cylindrical(c.s, c.m, c.sigma, 2, 2);
    show(x.witnesses);
    CHECK(x.certificate.ok());
    CHECK(x.dim(2, 1) == c.m.dim() * c.s.H.dim() * c.s.H.dim() * c.s.B.dim() * c.s.B.dim());
  }
  // truncated grid keeps only p + q <= total
  SmashProduct a = z2_sign(Q);
  CylindricalModule x = build_cylindrical(a, trivial_module(a.H), a.H.unit, 3, 3, 3);
  CHECK(x.certificate.ok());
  CHECK(x.has(1, 2));
  CHECK_FALSE(x.has(2, 2));
  CHECK(x.rows[2].nmax() == 1);
}

TEST_CASE("cylindrical module rejects incompatible pairs") {
  SmashProduct b = sweedler_dual(Q);
  // g moves k_delta
  CHECK_THROWS_AS(build_cylindrical(b, sweedler_sign(b.H), b.H.element("g"), 1, 1), PreconditionError);
  CHECK_THROWS_AS(build_cylindrical(b, trivial_module(b.H), b.H.unit, 1, 1), PreconditionError);
  SmashProduct a = z2_sign(Q);
  CHECK_THROWS_AS(build_cylindrical(a, trivial_module(a.H), a.H.unit, 3, 3, -1, 20), BudgetExceeded);
}

TEST_CASE("diagonal is the invariant chain module") {
  for (const auto& c : cases()) {
    DiagonalComparison d = diagonal_vs_invariant(c.s, c.m, c.sigma, 2);
    show(d.failures);
    CHECK(d.inverse);
    CHECK(d.cyclic_map);
    CHECK(d.diagonal.status == CyclicStatus::cyclic);
    certify(d.chains.module);
    CHECK(cyclic_homology(d.diagonal) == cyclic_homology(d.chains.module));
  }
}

TEST_CASE("trivial Hopf algebra reduces to the algebra") {
  HopfAlgebra k = ground_field_hopf(Q);
  auto [mult, unit] = truncated_polynomial(3, Q);
  IndexedSpace sp = IndexedSpace::numbered("B", 3);
  SmashProduct s = build_smash(k, trivial_right_module_algebra(k, sp, mult, unit));
  CylindricalModule x = build_cylindrical(s, trivial_module(k), k.unit, 3, 3);
  CHECK(x.certificate.ok());
  CyclicModuleData d = diagonal(x, 3);
  CyclicModuleData plain = build_twisted_algebra_module(Q, sp, mult, unit, SparseMatrix::identity(3, Q), 3);
  CHECK(cyclic_homology(d) == cyclic_homology(plain));
  EzReport r = ez_compare(s, trivial_module(k), k.unit, 3);
  CHECK(r.mixed_ok);
  CHECK(r.hc_tot == cyclic_homology(plain));
}

TEST_CASE("Tot of the cylindrical module against the diagonal") {
  SmashProduct a = z2_sign(Q);
  EzReport r = ez_compare(a, trivial_module(a.H), a.H.unit, 4);
  CHECK(r.mixed_ok);
  CHECK(r.equal);
  CHECK(r.hc_tot == std::vector<int>{1, 0, 1, 0});
  EzReport g = ez_compare(a, trivial_module(a.H), a.H.element("g"), 3);
  CHECK(g.mixed_ok);
  CHECK(g.equal);
  CHECK(g.hc_tot == std::vector<int>{1, 1, 1});
  SmashProduct f = z2_sign(F2);
  EzReport e = ez_compare(f, trivial_module(f.H), f.H.unit, 4);
  CHECK(e.mixed_ok);
  CHECK(e.equal);
  CHECK(e.hc_tot == std::vector<int>{2, 3, 6, 8});
  SmashProduct b = sweedler_dual(Q);
  EzReport s = ez_compare(b, sweedler_sign(b.H), b.H.unit, 3);
  CHECK(s.mixed_ok);
  CHECK(s.equal);
  CHECK(s.hc_tot == std::vector<int>{1, 0, 2});
  EzReport t = ez_compare(b, trivial_module(b.H), b.H.element("g"), 3);
  CHECK(t.mixed_ok);
  CHECK(t.hc_tot == std::vector<int>{0, 1, 0});
}

TEST_CASE("twisted tensor modules") {
  std::mt19937_64 rng(20261015);
  for (const auto& c : cases()) {
    std::uniform_int_distribution<int> qd(0, 2);
    const int q = qd(rng);
    HModule n = twisted_tensor_module(c.s, c.m, q);
    CHECK(n.dim() == c.m.dim() * (q == 0 ? 1 : q == 1 ? c.s.B.dim() : c.s.B.dim() * c.s.B.dim()) * c.s.B.dim());
    CHECK(check_module(c.s.H, n).ok());
  }
}

TEST_CASE("spectral sequence") {
  // semisimple: collapse onto the coinvariant column
  SmashProduct a = z2_sign(Q);
  SpectralSequenceReport r = spectral_sequence(a, trivial_module(a.H), a.H.unit, 2, 3);
  CHECK(r.e1_agree);
  CHECK(r.collapsed);
  CHECK(r.columns_cyclic);
  CHECK(r.converges);
  CHECK(r.e1[0] == std::vector<int>{1, 2, 4, 8});
  for (int n = 0; n <= 3; ++n) CHECK(r.e2[0][n] == r.hc[n]);
  CHECK(r.hc == std::vector<int>{1, 0, 1, 0});
  // kZ/2 over F_2 acts trivially on the dual numbers: E^1_{1,q} = H_1(Z/2, B^{q+1}) != 0
  SmashProduct f = z2_sign(F2);
  SpectralSequenceReport s = spectral_sequence(f, trivial_module(f.H), f.H.unit, 2, 3);
  CHECK(s.e1_agree);
  CHECK_FALSE(s.collapsed);
  CHECK(s.e1[1][0] == 2);
  CHECK(s.e2[1] == std::vector<int>{2, 1, 3, 2});
  CHECK(s.e2_total == std::vector<int>{2, 3, 6});
  CHECK(s.converges);
  SmashProduct b = sweedler_dual(Q);
  SpectralSequenceReport w = spectral_sequence(b, sweedler_sign(b.H), b.H.unit, 1, 2);
  CHECK(w.e1_agree);
  CHECK(w.collapsed);
  CHECK(w.converges);
}
