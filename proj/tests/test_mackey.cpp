#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "equicohom/mackey.hpp"

using namespace equicohom;

namespace {
const BaseMackey kAll[] = {BaseMackey::A,  BaseMackey::A_e,    BaseMackey::BracketZ,
                           BaseMackey::BracketZ2, BaseMackey::L, BaseMackey::Lminus,
                           BaseMackey::R,  BaseMackey::Rminus};
}

TEST_CASE("catalog functors satisfy the Mackey axioms") {
  for (BaseMackey b : kAll) {
    AxiomReport rep = check_axioms(catalog(b));
    INFO(to_string(CatalogName::single(b), true));
    for (const auto& f : rep.failures) INFO(f);
    CHECK(rep.ok);
  }
  CHECK(check_axioms(catalog(CatalogName::zero())).ok);
}

TEST_CASE("axiom violations are caught") {
  MackeyFunctor bad = catalog(BaseMackey::L);
  bad.tr.at(0, 0) = 3;  // res.tr = 6 != 1 + weyl = 2
  CHECK_FALSE(check_axioms(bad).ok);

  MackeyFunctor torsion = catalog(BaseMackey::Lminus);
  torsion.res.at(0, 0) = 1;  // Z/2 -> Z cannot send the generator to 1
  CHECK_FALSE(check_axioms(torsion).ok);
}

TEST_CASE("classify identifies every catalog functor and small sums") {
  for (BaseMackey b : kAll) {
    auto got = classify(catalog(b));
    REQUIRE(got.has_value());
    CHECK(*got == CatalogName::single(b));
  }
  CHECK(classify(catalog(CatalogName::zero())) == CatalogName::zero());

  for (BaseMackey b1 : kAll)
    for (BaseMackey b2 : kAll) {
      CatalogName n;
      n.parts = {b1, b2};
      std::sort(n.parts.begin(), n.parts.end());
      auto got = classify(catalog(n));
      INFO(to_string(n, true));
      REQUIRE(got.has_value());
      CHECK(*got == n);
    }
}

TEST_CASE("classify is basis independent") {
  // Conjugate A by a change of basis on level GG: generators {1, 1+g}.
  MackeyFunctor a = catalog(BaseMackey::A);
  // new gens e1' = e1, e2' = e1 + e2; res' = res * P, tr' = P^-1 * tr
  MackeyFunctor conj = a;
  conj.res = Mat::from_rows({{Int(1), Int(3)}});            // res(1)=1, res(1+g)=3
  conj.tr = Mat::from_cols({{Int(-1), Int(1)}});            // g = -1*1' + 1*(1+g)'
  REQUIRE(check_axioms(conj).ok);
  CHECK(classify(conj) == CatalogName::single(BaseMackey::A));
}

TEST_CASE("classify returns Unknown for functors outside the catalog") {
  // Z/4 at level GG with zero maps is not a catalog sum.
  MackeyFunctor m;
  m.gg = {4};
  m.res = Mat(0, 1);
  m.tr = Mat(1, 0);
  m.weyl = Mat(0, 0);
  CHECK_FALSE(classify(m).has_value());
}

TEST_CASE("catalog name printing and parsing") {
  CatalogName n;
  n.parts = {BaseMackey::A, BaseMackey::BracketZ2};
  CHECK(to_string(n, true) == "A (+) <Z/2>");
  CHECK(to_string(CatalogName::zero()) == "0");
  CHECK(catalog_name_from_string("A (+) <Z/2>") == n);
  CHECK(catalog_name_from_string(to_string(n, false)) == n);
  CHECK(catalog_name_from_string("L-") == CatalogName::single(BaseMackey::Lminus));
}

TEST_CASE("cohomology of a two-step complex") {
  // 0 -> L -2-> L -> 0 concentrated in degrees 0, 1 at both levels:
  // H^0 = ker(2) = 0, H^1 = L/2L = Z/2 at GG and Z/2 at Ge...
  // use <Z> -2-> <Z> instead to stay inside the catalog: H^1 = <Z/2>.
  MackeyCochainComplex cx;
  cx.lo = 0;
  cx.terms = {catalog(BaseMackey::BracketZ), catalog(BaseMackey::BracketZ)};
  Mat two(1, 1);
  two.at(0, 0) = 2;
  cx.diffs = {MackeyMorphism{two, Mat(0, 0)}};
  MackeyFunctor h0 = cohomology_at(cx, 0);
  MackeyFunctor h1 = cohomology_at(cx, 1);
  CHECK(classify(h0) == CatalogName::zero());
  CHECK(classify(h1) == CatalogName::single(BaseMackey::BracketZ2));
  CHECK(classify(cohomology_at(cx, 5)) == CatalogName::zero());
  CHECK(check_axioms(h1).ok);
}

TEST_CASE("cohomology with induced structure maps") {
  // 0 -> A_e -(1-t)-> A_e -> 0 : H^0 should be the fixed points functor:
  // GG level: ker(0) = Z (the complex has d_gg = 0 since 1-t kills the orbit sum
  // coordinate: on GG = Z, the map induced by 1-t is multiplication by 0);
  // Ge level: ker(1-t) = Z(1+t).  The result is R: res = 1, tr = 2.
  MackeyCochainComplex cx;
  cx.lo = 0;
  cx.terms = {catalog(BaseMackey::A_e), catalog(BaseMackey::A_e)};
  Mat gg(1, 1);  // zero
  Mat ge = Mat::from_rows({{Int(1), Int(-1)}, {Int(-1), Int(1)}});
  cx.diffs = {MackeyMorphism{gg, ge}};
  MackeyFunctor h0 = cohomology_at(cx, 0);
  REQUIRE(check_axioms(h0).ok);
  CHECK(classify(h0) == CatalogName::single(BaseMackey::R));
}

TEST_CASE("mackey json") {
  nlohmann::json j = mackey_to_json(catalog(BaseMackey::A));
  CHECK(j["levelGG"].size() == 2);
  CHECK(j["levelGe"].size() == 1);
  CHECK(j["res"][0][1] == 2);
}
