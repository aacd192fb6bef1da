#include "doctest.h"
#include "hopfcyc/presentation.hpp"
#include "support.hpp"

using namespace hopfcyc;

namespace {

Presentation slq2() { return load_presentation(testing_support::data_path("slq2.hopf")); }

WordCombination wc(const Presentation& p, const std::string& s) { return parse_combination(p, s); }

// m1, m2 with x m1 = q m2, x m2 = q m1, y m_i = q^-1 m_{3-i}, u = v = 0
PresentedModule example_module(const Presentation& p) {
  const Field& f = p.field;
  Scalar q = Scalar::parameter(), qi = q.inverse();
  auto swap = [&](const Scalar& c) { return SparseMatrix::from_entries(2, 2, f, {{1, 0, c}, {0, 1, c}}); };
  std::vector<SparseMatrix> acts(4);
  acts[p.generator("x")] = swap(q);
  acts[p.generator("y")] = swap(qi);
  acts[p.generator("u")] = SparseMatrix(2, 2, f);
  acts[p.generator("v")] = SparseMatrix(2, 2, f);
  return PresentedModule{IndexedSpace{"M", {"m1", "m2"}}, acts};
}

}  // namespace

TEST_CASE("parse the SL_q(2) presentation") {
  Presentation p = slq2();
  CHECK(p.num_generators() == 4);
  CHECK(p.rules.size() == 7);
  CHECK(p.field.kind == FieldKind::RationalFunction);
  CHECK(p.to_string(p.coproduct[p.generator("x")]) == "x|x + u|v");
}

TEST_CASE("normal forms under SL_q(2)") {
  Presentation p = slq2();
  CHECK(normal_form(p, wc(p, "u*x")) == wc(p, "q*x*u"));
  CHECK(normal_form(p, wc(p, "1")) == wc(p, "1"));
  CHECK(normal_form(p, wc(p, "y*x")) == wc(p, "1 + q*u*v"));
  CHECK(p.to_string(normal_form(p, wc(p, "y*x"))) == "q*u*v + 1");
  CHECK(normal_form(p, wc(p, "x*y - q^-1*u*v")) == wc(p, "1"));
  CHECK_THROWS_AS(normal_form(p, wc(p, "y*x*y*x*y*x"), 1), BudgetExceeded);
}

TEST_CASE("rewriting is idempotent and leaves irreducible words") {
  Presentation p = slq2();
  testing_support::Gen gen;
  for (int trial = 0; trial < 60; ++trial) {
    int len = static_cast<int>(gen.integer(0, 4));
    Word w;
    for (int i = 0; i < len; ++i) w.push_back(static_cast<int>(gen.integer(0, 3)));
    WordCombination nf = normal_form(p, single(w, Scalar::one(p.field)));
    CHECK(normal_form(p, nf) == nf);
    std::vector<Word> irreducible = normal_monomials(p, 2 * len);
    for (const auto& [x, c] : nf) CHECK(std::find(irreducible.begin(), irreducible.end(), x) != irreducible.end());
  }
  std::vector<std::string> failures;
  CHECK(critical_pairs_resolve(p, 4, &failures));
  CHECK(failures.empty());
}

TEST_CASE("coproducts expand multiplicatively") {
  Presentation p = slq2();
  CHECK(coproduct_expand(p, {p.generator("x")}, 1) == TensorCombination{
                                                          {{{p.generator("x")}, {p.generator("x")}}, Scalar::one(p.field)},
                                                          {{{p.generator("u")}, {p.generator("v")}}, Scalar::one(p.field)}});
  CHECK(coproduct_expand(p, {}, 0) == TensorCombination{{{{}, {}}, Scalar::one(p.field)}});
  CHECK_THROWS_AS(coproduct_expand(p, {0, 1}, 1), PreconditionError);
}

TEST_CASE("SL_q(2) Hopf axioms at bounded degree") {
  Presentation p = slq2();
  std::vector<std::string> witnesses;
  AxiomReport r = check_bounded(p, 3, &witnesses);
  for (const auto& w : witnesses) INFO(w);
  CHECK(r.ok());
  CHECK(witnesses.empty());
}

TEST_CASE("the two-dimensional SL_q(2) module is a matched pair with sigma = 1") {
  Presentation p = slq2();
  PresentedModule m = example_module(p);
  CHECK(check_presented_module(p, m).ok());
  MatchedPairCertificate c = check_matched_pair_bounded(p, m, wc(p, "1"), 3);
  CHECK(c.sigma_fixes_M);
  CHECK(c.involution);
  CHECK(c.degree_bound == 3);
  // sigma = x does not fix M
  MatchedPairCertificate bad = check_matched_pair_bounded(p, m, wc(p, "x"), 1);
  CHECK_FALSE(bad.sigma_fixes_M);
  // a module where u acts nontrivially breaks a relation
  PresentedModule broken = m;
  broken.generator_action[p.generator("u")] = SparseMatrix::identity(2, p.field);
  CHECK_FALSE(check_presented_module(p, broken).ok());
}

TEST_CASE("compile finite presentations") {
  HopfAlgebra z2 = compile(load_presentation(testing_support::data_path("z2.hopf")));
  CHECK(z2.dim() == 2);
  CHECK(z2.certificate.ok());
  HopfAlgebra s = compile(load_presentation(testing_support::data_path("sweedler.hopf")));
  CHECK(s.dim() == 4);
  CHECK(s.certificate.ok());
  CHECK(find_grouplikes(s).size() == 2);
  CHECK_FALSE(s.is_cocommutative());
  CHECK_THROWS_AS(compile(slq2(), 200), NotFiniteDimensional);
  Presentation ground = parse_presentation("[generators]\n[coproduct]\n[counit]\n[antipode]\n[antipode_inverse]\n");
  HopfAlgebra k = compile(ground);
  CHECK(k.dim() == 1);
  CHECK(k.certificate.ok());
}

TEST_CASE("compiled Sweedler algebra matches the built-in one") {
  HopfAlgebra c = compile(load_presentation(testing_support::data_path("sweedler.hopf")));
  HopfAlgebra b = sweedler_algebra(Field::rational());
  REQUIRE(c.dim() == b.dim());
  // map basis by label; built-in labels may write g*x as gx
  std::vector<int> perm(4);
  for (int i = 0; i < 4; ++i) {
    std::string label = c.space.basis[i];
    int j = b.space.index_of(label);
    if (j < 0) {
      label.erase(std::remove(label.begin(), label.end(), '*'), label.end());
      j = b.space.index_of(label);
    }
    REQUIRE(j >= 0);
    perm[i] = j;
  }
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      SparseVec mc = c.mul(i, k), mb = b.mul(perm[i], perm[k]);
      std::vector<std::pair<int, Scalar>> mapped;
      for (const auto& [r, v] : mc) mapped.emplace_back(perm[r], v);
      CHECK(vec_normalize(mapped) == mb);
    }
}

TEST_CASE("parse errors carry positions") {
  try {
    load_presentation(testing_support::data_path("malformed.hopf"));
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() == 3);
    CHECK(std::string(e.what()).find("unknown symbol 'h'") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_presentation("[generators]\ng\n[relations]\ng -> g*g\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("[generators]\ng\n[relations]\ng*g 1\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("[bogus]\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("[generators]\ng\n[coproduct]\n[counit]\ng -> 1\n[antipode]\ng -> g\n"),
                  ParseError);
}

TEST_CASE("to_text round-trips") {
  for (const char* name : {"slq2.hopf", "sweedler.hopf", "z2.hopf"}) {
    Presentation p = load_presentation(testing_support::data_path(name));
    std::string text = p.to_text();
    Presentation again = parse_presentation(text);
    CHECK(again.to_text() == text);
    CHECK(again.rules.size() == p.rules.size());
  }
}

TEST_CASE("bounded checks catch a corrupted inverse antipode") {
  Presentation p = slq2();
  p.antipode_inv[p.generator("u")] = wc(p, "-q*u");
  std::vector<std::string> witnesses;
  AxiomReport r = check_bounded(p, 2, &witnesses);
  CHECK_FALSE(r.passed("antipode inverse"));
  CHECK(r.passed("antipode"));
  CHECK_FALSE(witnesses.empty());
}
