#include "doctest.h"
#include "hopfcyc/hopf.hpp"
#include "support.hpp"

using namespace hopfcyc;

namespace {

const Field Q = Field::rational();

Scalar q(long a, long b = 1) { return Scalar(mpq_class(a, b)); }

std::vector<HopfAlgebra> builtins() {
  std::vector<HopfAlgebra> out;
  for (Field f : {Field::rational(), Field::prime(2), Field::prime(3)}) {
    out.push_back(cyclic_group_algebra(2, f));
    out.push_back(cyclic_group_algebra(3, f));
    out.push_back(symmetric_group_s3(f));
    out.push_back(sweedler_algebra(f));
  }
  out.push_back(dual_hopf(symmetric_group_s3(Q)));
  out.push_back(dual_hopf(sweedler_algebra(Q)));
  out.push_back(ground_field_hopf(Q));
  return out;
}

}  // namespace

TEST_CASE("built-in Hopf algebras pass every axiom") {
  for (const auto& h : builtins()) {
    INFO(h.space.name << " over " << h.field.name());
    CHECK(h.certificate.ok());
    CHECK(h.certificate.checks.size() >= 10);
  }
}

TEST_CASE("a corrupted antipode is reported as such") {
  HopfAlgebra h = symmetric_group_s3(Q);
  h.antipode.set_col(1, unit_vec(1, Q));  // send the transposition "132" to itself: still fine
  h.recertify();
  CHECK(h.certificate.ok());
  h.antipode.set_col(3, unit_vec(3, Q));  // a 3-cycle to itself: wrong
  h.recertify();
  auto failed = h.certificate.failures();
  CHECK(failed == std::vector<std::string>{"antipode", "antipode inverse"});
}

TEST_CASE("every single structure-constant corruption is detected") {
  testing_support::Gen g;
  for (const auto& base : builtins()) {
    for (int trial = 0; trial < 6; ++trial) {
      HopfAlgebra h = base;
      int which = static_cast<int>(g.integer(0, 3));
      SparseMatrix* m = which == 0 ? &h.mult : which == 1 ? &h.comult : which == 2 ? &h.antipode : &h.counit;
      int col = static_cast<int>(g.integer(0, m->cols() - 1));
      int row = static_cast<int>(g.integer(0, m->rows() - 1));
      SparseVec c = m->col(col);
      c = vec_axpy(c, Scalar::one(h.field), unit_vec(row, h.field));
      m->set_col(col, c);
      h.recertify();
      CHECK_FALSE(h.certificate.ok());
    }
  }
}

TEST_CASE("group tables are validated") {
  CHECK_THROWS_AS(group_algebra({{0, 1}, {1, 1}}, Q), PreconditionError);
  CHECK_THROWS_AS(group_algebra({{0, 1}, {0, 1}}, Q), PreconditionError);
  HopfAlgebra z2 = cyclic_group_algebra(2, Q);
  CHECK(z2.dim() == 2);
  CHECK(z2.is_commutative());
  CHECK(z2.is_cocommutative());
}

TEST_CASE("dual of kS_3 is commutative and not cocommutative") {
  HopfAlgebra d = dual_hopf(symmetric_group_s3(Q));
  CHECK(d.certificate.ok());
  CHECK(d.is_commutative());
  CHECK_FALSE(d.is_cocommutative());
  HopfAlgebra dd = dual_hopf(d);
  HopfAlgebra h = symmetric_group_s3(Q);
  CHECK(dd.mult == h.mult);
  CHECK(dd.comult == h.comult);
  CHECK(dd.antipode == h.antipode);
  CHECK(dd.unit == h.unit);
  CHECK(dd.counit == h.counit);
}

TEST_CASE("matrix comodule algebra") {
  HopfAlgebra h = cyclic_group_algebra(2, Q);
  ComoduleAlgebra m2 = matrix_comodule_algebra(h, 2);
  CHECK(m2.dim() == 8);
  CHECK(check_comodule_algebra(h, m2).ok());
  HopfAlgebra s = sweedler_algebra(Q);
  CHECK(check_comodule_algebra(s, matrix_comodule_algebra(s, 2)).ok());
  CHECK(check_comodule_algebra(s, self_comodule_algebra(s)).ok());
  ComoduleAlgebra broken = matrix_comodule_algebra(h, 2);
  broken.coaction = tensor(h.unit_matrix(), SparseMatrix::identity(8, Q));
  broken.coaction.set_col(1, unit_vec(3, Q));
  CHECK_FALSE(check_comodule_algebra(h, broken).ok());
}

TEST_CASE("modules, comodules and module coalgebras") {
  HopfAlgebra s3 = symmetric_group_s3(Q);
  CHECK(check_module(s3, trivial_module(s3)).ok());
  CHECK(check_module(s3, sign_module_s3(s3)).ok());
  CHECK(check_module(s3, regular_module(s3)).ok());
  CHECK(check_module(s3, zero_module(s3)).ok());
  HopfAlgebra sw = sweedler_algebra(Q);
  CHECK(check_comodule(sw, grouplike_comodule(sw, sw.element("g"), "k_g")).ok());
  CHECK_FALSE(check_comodule(sw, grouplike_comodule(sw, sw.element("x"), "bad")).ok());
  CHECK(check_comodule(sw, regular_comodule(sw)).ok());
  CHECK(check_module_coalgebra(sw, self_module_coalgebra(sw)).ok());
  CHECK(check_comodule_algebra(cyclic_group_algebra(2, Q), truncated_polynomial_graded(3, Q)).ok());
}

TEST_CASE("grouplikes and characters") {
  HopfAlgebra s3 = symmetric_group_s3(Q);
  CHECK(find_grouplikes(s3).size() == 6);
  for (const auto& g : find_grouplikes(s3)) CHECK(g.size() == 1);
  HopfAlgebra sw = sweedler_algebra(Q);
  auto gl = find_grouplikes(sw);
  REQUIRE(gl.size() == 2);
  CHECK(gl[0] != gl[1]);
  for (const auto& g : gl) CHECK((g == sw.element("1") || g == sw.element("g")));
  // dual of Z/2: grouplikes are the characters of Z/2, characters are the group elements
  HopfAlgebra z2 = cyclic_group_algebra(2, Q);
  HopfAlgebra d = dual_hopf(z2);
  auto dg = find_grouplikes(d);
  REQUIRE(dg.size() == 2);
  for (const auto& g : dg) CHECK(g.size() == 2);
  auto dc = find_characters(d);
  REQUIRE(dc.size() == 2);
  for (const auto& chi : dc) CHECK(chi.nnz() == 1);
  CHECK(find_characters(s3).size() == 2);
  CHECK(find_characters(sw).size() == 2);
  CHECK(find_grouplikes(cyclic_group_algebra(2, Field::prime(2))).size() == 2);
  CHECK(find_characters(cyclic_group_algebra(2, Field::prime(2))).size() == 1);
  CHECK(find_grouplikes(cyclic_group_algebra(3, Field::rational_function())).size() == 3);
}

TEST_CASE("integrals") {
  HopfAlgebra s3 = symmetric_group_s3(Q);
  auto t = normalized_integral(s3);
  REQUIRE(t.has_value());
  SparseVec expect;
  for (int i = 0; i < 6; ++i) expect.emplace_back(i, q(1, 6));
  CHECK(*t == expect);
  CHECK_FALSE(normalized_integral(cyclic_group_algebra(2, Field::prime(2))).has_value());
  CHECK_FALSE(normalized_integral(sweedler_algebra(Q)).has_value());
  SparseMatrix sign = sign_character_s3(s3);
  SparseVec td;
  for (int i = 0; i < 6; ++i) td.emplace_back(i, sign.at(0, i).inverse());
  CHECK(is_delta_integral(s3, sign, td));
  CHECK(is_cotrace(s3, td));
  CHECK(delta_integrals(s3, sign).size() == 1);
  for (const auto& h : builtins()) {
    for (const auto& chi : find_characters(h)) CHECK(delta_integrals(h, chi).size() <= 1);
  }
}

TEST_CASE("sigma-invariant traces") {
  HopfAlgebra s3 = symmetric_group_s3(Q);
  auto tr = sigma_invariant_traces(s3, s3.unit);
  REQUIRE(tr.size() == 1);
  CHECK(tr[0].nnz() == 1);
  CHECK(!tr[0].at(0, 0).is_zero());
  for (const auto& h : builtins())
    for (const auto& g : find_grouplikes(h))
      for (const auto& t : sigma_invariant_traces(h, g)) CHECK(is_sigma_invariant_trace(h, g, t));
}

TEST_CASE("twisted antipodes") {
  for (const auto& h : builtins()) {
    CHECK(twisted_antipode(h, h.counit) == h.antipode);
    for (const auto& chi : find_characters(h))
      CHECK(twisted_antipode(h, chi) * twisted_antipode_inverse(h, chi) ==
            SparseMatrix::identity(h.dim(), h.field));
    if (h.is_cocommutative()) CHECK(h.antipode * h.antipode == SparseMatrix::identity(h.dim(), h.field));
  }
  HopfAlgebra s3 = symmetric_group_s3(Q);
  SparseMatrix sign = sign_character_s3(s3);
  SparseMatrix st = twisted_antipode(s3, sign);
  for (int g = 0; g < 6; ++g) {
    SparseVec expect = vec_scale(s3.antipode.col(g), sign.at(0, g));
    CHECK(st.col(g) == expect);
  }
  HopfAlgebra sw = sweedler_algebra(Q);
  SparseMatrix delta = covector(Q, {q(1), q(-1), q(0), q(0)});
  REQUIRE(is_character(sw, delta));
  CHECK(is_modular_pair(sw, delta, sw.element("1")));
  CHECK(is_modular_pair(sw, sw.counit, sw.element("g")));
  CHECK_FALSE(is_modular_pair(sw, sw.counit, sw.element("1")));
  CHECK_FALSE(is_modular_pair(sw, delta, sw.element("g")));
  SparseMatrix st2 = twisted_antipode(sw, delta) * twisted_antipode(sw, delta);
  CHECK(st2 == SparseMatrix::identity(4, Q));  // (delta, 1) is the matched pair
}
