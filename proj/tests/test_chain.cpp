// Chain-level oracle for the free theory: the complex itself is pinned down
// term by term (shape, differentials, well-definedness), and its cohomology
// is compared against the closed-form table plus the nonequivariant sphere.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "equicohom/chain.hpp"

using namespace equicohom;

namespace {

Int gg_entry(const MackeyMorphism& d) { return d.gg.at(0, 0); }

}  // namespace

TEST_CASE("complex shape and differential pattern") {
  const MackeyFunctor ae = catalog(BaseMackey::A_e);

  const MackeyCochainComplex u5 = sphere_antipodal_complex(5, Twist::Integer);
  CHECK(u5.lo == 0);
  REQUIRE(u5.terms.size() == 5);
  REQUIRE(u5.diffs.size() == 4);
  for (const auto& t : u5.terms) CHECK(t == ae);
  CHECK(gg_entry(u5.diffs[0]) == 0);
  CHECK(gg_entry(u5.diffs[1]) == 2);
  CHECK(gg_entry(u5.diffs[2]) == 0);
  CHECK(gg_entry(u5.diffs[3]) == 2);

  const MackeyCochainComplex t5 = sphere_antipodal_complex(5, Twist::Lambda);
  CHECK(t5.lo == -1);
  REQUIRE(t5.diffs.size() == 4);
  CHECK(gg_entry(t5.diffs[0]) == 2);
  CHECK(gg_entry(t5.diffs[1]) == 0);
  CHECK(gg_entry(t5.diffs[2]) == 2);
  CHECK(gg_entry(t5.diffs[3]) == 0);

  const MackeyCochainComplex one = sphere_antipodal_complex(1, Twist::Integer);
  CHECK(one.terms.size() == 1);
  CHECK(one.diffs.empty());

  // Level G/e differentials are 1 -+ t.
  CHECK(u5.diffs[0].ge == Mat::from_rows({{1, -1}, {-1, 1}}));
  CHECK(u5.diffs[1].ge == Mat::from_rows({{1, 1}, {1, 1}}));
  CHECK(t5.diffs[0].ge == Mat::from_rows({{1, 1}, {1, 1}}));

  CHECK_THROWS_AS(sphere_antipodal_complex(0, Twist::Integer), std::invalid_argument);
}

TEST_CASE("complexes are well defined (d . d = 0, Mackey morphisms)") {
  for (long long n = 1; n <= 12; ++n) {
    std::string why;
    CHECK_MESSAGE(complex_well_defined(sphere_antipodal_complex(n, Twist::Integer), &why), why);
    CHECK_MESSAGE(complex_well_defined(sphere_antipodal_complex(n, Twist::Lambda), &why), why);
  }
}

TEST_CASE("cohomology is independent of zero padding") {
  for (Twist tw : {Twist::Integer, Twist::Lambda}) {
    const MackeyCochainComplex cx = sphere_antipodal_complex(7, tw);
    MackeyCochainComplex padded = cx;
    const MackeyFunctor zero = catalog(CatalogName::zero());
    const MackeyFunctor ae = catalog(BaseMackey::A_e);

    padded.lo -= 1;
    padded.terms.insert(padded.terms.begin(), zero);
    padded.diffs.insert(padded.diffs.begin(),
                        MackeyMorphism{Mat(ae.gg.size(), 0), Mat(ae.ge.size(), 0)});
    padded.terms.push_back(zero);
    padded.diffs.push_back(MackeyMorphism{Mat(0, ae.gg.size()), Mat(0, ae.ge.size())});
    REQUIRE(complex_well_defined(padded));

    for (long long a = cx.lo - 2; a <= cx.lo + 8; ++a)
      CHECK(classify(cohomology_at(padded, a)) == classify(cohomology_at(cx, a)));
  }
}

TEST_CASE("free-theory table reproduced in the stable band") {
  CHECK(verify_ep_table(20, -4, 16, Twist::Integer).ok);
  CHECK(verify_ep_table(20, -4, 16, Twist::Lambda).ok);
}

TEST_CASE("specific cohomology values") {
  const auto R = CatalogName::single(BaseMackey::R);
  const auto Rm = CatalogName::single(BaseMackey::Rminus);
  const auto Z2 = CatalogName::single(BaseMackey::BracketZ2);

  CHECK(classify(cohomology_at(sphere_antipodal_complex(3, Twist::Integer), 0)) == R);

  const MackeyCochainComplex u = sphere_antipodal_complex(8, Twist::Integer);
  CHECK(classify(cohomology_at(u, 0)) == R);
  CHECK(classify(cohomology_at(u, 1)) == CatalogName::zero());
  CHECK(classify(cohomology_at(u, 2)) == Z2);
  CHECK(classify(cohomology_at(u, 3)) == CatalogName::zero());
  CHECK(classify(cohomology_at(u, 4)) == Z2);
  CHECK(classify(cohomology_at(u, -1)) == CatalogName::zero());

  const MackeyCochainComplex t = sphere_antipodal_complex(8, Twist::Lambda);
  CHECK(classify(cohomology_at(t, -1)) == Rm);
  CHECK(classify(cohomology_at(t, 0)) == Z2);
  CHECK(classify(cohomology_at(t, 1)) == CatalogName::zero());
  CHECK(classify(cohomology_at(t, 2)) == Z2);
  CHECK(classify(cohomology_at(t, -2)) == CatalogName::zero());
}

TEST_CASE("degrees outside the stable band are refused") {
  CHECK_THROWS_AS(verify_ep_table(10, 0, 9, Twist::Integer), UnstableRange);
  CHECK_THROWS_AS(verify_ep_table(10, 0, 8, Twist::Lambda), UnstableRange);
  CHECK(verify_ep_table(10, 0, 8, Twist::Integer).ok);   // boundary of the band
  CHECK(verify_ep_table(10, 0, 7, Twist::Lambda).ok);
  CHECK(stable_degree_bound(10, Twist::Integer) == 8);
  CHECK(stable_degree_bound(10, Twist::Lambda) == 7);
}

TEST_CASE("classification stabilizes once n >= a + 2") {
  for (long long a = 0; a <= 6; ++a) {
    const CatalogName expected = ep_group_at({a, 0});
    for (long long n = a + 2; n <= 12; ++n) {
      const auto got = classify(cohomology_at(sphere_antipodal_complex(n, Twist::Integer), a));
      REQUIRE(got.has_value());
      CHECK(*got == expected);
    }
  }
  for (long long a = -1; a <= 6; ++a) {
    const CatalogName expected = ep_group_at({a, 1});
    for (long long n = a + 3; n <= 12; ++n) {
      const auto got = classify(cohomology_at(sphere_antipodal_complex(n, Twist::Lambda), a));
      REQUIRE(got.has_value());
      CHECK(*got == expected);
    }
  }
}

TEST_CASE("level G/e sees the nonequivariant sphere") {
  for (long long n = 2; n <= 12; ++n) {
    const CheckReport r = level_e_crosscheck(n);
    CHECK_MESSAGE(r.ok, (r.failures.empty() ? "" : r.failures.front()));
  }
  CHECK_THROWS_AS(level_e_crosscheck(1), std::invalid_argument);
}
