#include <numeric>

#include "oracles.hpp"
#include "sgforge/families.hpp"
#include "sgforge/tangent_cone.hpp"
#include "support.hpp"

using namespace sgforge;

TEST_CASE("worked verdicts") {
  auto H = make_semigroup({6, 13, 40, 41});
  auto t = analyze_tangent_cone(H, construct_matrix(H));
  CHECK_FALSE(t.cm_formula);
  CHECK_FALSE(t.sally.cohen_macaulay);
  CHECK(t.sally.target == Int{46});
  CHECK(t.sally.order == Int{2});
  CHECK(t.criterion_lhs == 2);
  CHECK(t.criterion_rhs == 3);
  CHECK(t.agrees());

  auto K = make_semigroup({7, 39, 43, 47, 17});
  auto u = analyze_tangent_cone(K, construct_matrix(K));
  CHECK(u.cm_formula);
  CHECK(u.sally.cohen_macaulay);
  CHECK(u.shortcuts.h1_bound == true);
  CHECK(u.shortcuts_consistent());
}

TEST_CASE("maximal embedding dimension is Cohen-Macaulay") {
  auto H = make_semigroup({5, 6, 7, 8, 9});
  auto t = analyze_tangent_cone(H, construct_matrix(H));
  CHECK(t.cm_formula);
  CHECK(t.sally.cohen_macaulay);
  CHECK_FALSE(t.sally.target.has_value());
}

TEST_CASE("uncertified input") {
  auto H = make_semigroup({6, 13, 40, 41});
  auto c = construct_matrix(H);
  c.certified = false;
  CHECK_THROWS_CODE(cm_by_formula(c), ErrorCode::Uncertified);
  CHECK_THROWS_CODE(cm_by_sally(H, c), ErrorCode::Uncertified);
}

TEST_CASE("Sally order matches exhaustive factorization search") {
  int seen = 0;
  for (Int ell = 2; ell <= 4; ++ell) {
    for (Int n = 3; n <= 5; ++n) {
      for (Int alpha = 1; alpha <= 3; ++alpha) {
        for (Int h1 = 0; h1 <= 3; ++h1) {
          FamilyParams p{ell, n, alpha, h1};
          if (std::gcd(p.a(), alpha) != 1) continue;
          auto H = family_j1(p);
          auto t = analyze_tangent_cone(H, construct_matrix(H));
          REQUIRE(t.sally.target.has_value());
          CHECK(*t.sally.order == oracle::max_order(H.generators(), *t.sally.target));
          CHECK(t.agrees());
          CHECK(t.shortcuts_consistent());
          ++seen;
        }
      }
    }
  }
  CHECK(seen > 50);
}

TEST_CASE("ell = 2 closed form") {
  for (const auto& H : small_suite()) {
    auto r = verify_main_theorem(H);
    if (!r.condition2_holds() || r.certificate->ell != 2) continue;
    auto t = analyze_tangent_cone(H, *r.certificate);
    REQUIRE(t.shortcuts.ell_two_iff.has_value());
    CHECK(*t.shortcuts.ell_two_iff == t.sally.cohen_macaulay);
  }
}
