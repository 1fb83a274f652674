#include <random>

#include "oracles.hpp"
#include "sgforge/semigroup.hpp"
#include "support.hpp"

using namespace sgforge;

TEST_CASE("canonicalization keeps minimal generators in caller order") {
  auto H = make_semigroup({4, 6, 9, 13});
  CHECK(H.generators() == std::vector<Int>{4, 6, 9});
  CHECK(H.redundant() == std::vector<Int>{13});

  auto K = make_semigroup({13, 6, 6, 9, 4});
  CHECK(K.generators() == std::vector<Int>{6, 9, 4});
  CHECK(K.redundant() == std::vector<Int>{13, 6});
  CHECK(K.multiplicity() == 4);
  CHECK(K.multiplicity_index() == 2);
  CHECK(K.sorted_generators() == std::vector<Int>{4, 6, 9});

  auto L = make_semigroup({6, 9, 4, 13, 8});
  CHECK(L.generators() == std::vector<Int>{6, 9, 4});
  CHECK(L.redundant() == std::vector<Int>{13, 8});
}

TEST_CASE("input errors") {
  CHECK_THROWS_CODE(make_semigroup(std::span<const Int>{}), ErrorCode::EmptyInput);
  CHECK_THROWS_CODE(make_semigroup({4, 6, 10}), ErrorCode::GcdNotOne);
  CHECK_THROWS_CODE(make_semigroup({0, 3, 5}), ErrorCode::InvalidGenerator);
  CHECK_THROWS_CODE(make_semigroup({-2, 3}), ErrorCode::InvalidGenerator);
  CHECK_THROWS_CODE(checked_mul(Int{1} << 40, Int{1} << 40), ErrorCode::Overflow);
  CHECK_THROWS_CODE(checked_add(INT64_MAX, Int{1}), ErrorCode::Overflow);
}

TEST_CASE("the naturals") {
  auto N = make_semigroup({1, 5});
  CHECK(N.generators() == std::vector<Int>{1});
  CHECK(N.frobenius() == -1);
  CHECK(N.pseudo_frobenius().empty());
  CHECK(gaps(N).empty());
}

TEST_CASE("worked values") {
  auto H = make_semigroup({6, 13, 40, 41});
  CHECK(H.apery().sorted() == std::vector<Int>{0, 13, 26, 39, 40, 41});
  CHECK(H.frobenius() == 35);
  CHECK(frobenius(H) == 35);
  CHECK(pseudo_frobenius(H) == std::vector<Int>{33, 34, 35});
  CHECK(membership(H, 52));
  CHECK_FALSE(membership(H, 35));

  auto f = factorizations(H, 52);
  REQUIRE(f.size() == 2);
  CHECK(f[0].coefficients == std::vector<Int>{0, 4, 0, 0});
  CHECK(f[1].coefficients == std::vector<Int>{2, 0, 1, 0});
  CHECK(f[1].length == 3);
  CHECK(f[1].degree == 52);

  CHECK(make_semigroup({3, 5}).frobenius() == 7);
  CHECK(gaps(make_semigroup({3, 5})) == std::vector<Int>{1, 2, 4, 7});
}

TEST_CASE("apery set rejects bases outside H") {
  auto H = make_semigroup({3, 5});
  CHECK_THROWS_CODE(apery_set(H, 4), ErrorCode::BaseNotInSemigroup);
  CHECK_THROWS_CODE(apery_set(H, 0), ErrorCode::BaseNotInSemigroup);
  CHECK(apery_set(H, 10).sorted() == oracle::Semigroup({3, 5}).apery(10));
}

TEST_CASE("invariants agree with sieve oracle on the small suite") {
  for (const auto& H : small_suite()) {
    oracle::Semigroup O(H.generators());
    INFO("H = ", H.generators().size(), " gens, m = ", H.multiplicity());
    REQUIRE(H.frobenius() == O.frobenius());
    CHECK(gaps(H) == O.gaps());
    CHECK(H.apery().sorted() == O.apery(H.multiplicity()));
    CHECK(H.sorted_generators() == O.minimal_generators());
    CHECK(H.pseudo_frobenius() == O.pseudo_frobenius());
    for (Int z = -3; z <= H.frobenius() + 3; ++z) CHECK(membership(H, z) == O.contains(z));
  }
}

TEST_CASE("random generator lists") {
  std::mt19937_64 rng(20261016);
  std::uniform_int_distribution<Int> value(2, 40), count(1, 6);
  int tried = 0;
  while (tried < 300) {
    std::vector<Int> raw(static_cast<std::size_t>(count(rng)));
    for (auto& x : raw) x = value(rng);
    Int g = 0;
    for (Int x : raw) g = std::gcd(g, x);
    if (g != 1) {
      CHECK_THROWS_CODE(make_semigroup(std::span<const Int>(raw)), ErrorCode::GcdNotOne);
      continue;
    }
    ++tried;
    auto H = make_semigroup(std::span<const Int>(raw));
    oracle::Semigroup O(raw);
    CHECK(H.sorted_generators() == O.minimal_generators());
    CHECK(H.frobenius() == O.frobenius());
    CHECK(H.pseudo_frobenius() == O.pseudo_frobenius());
    for (Int h : H.generators()) CHECK(apery_set(H, h).sorted() == O.apery(h));
  }
}

TEST_CASE("factorizations and orders against exhaustive search") {
  for (std::vector<Int> g : {std::vector<Int>{6, 13, 40, 41}, {7, 39, 43, 47, 17}, {3, 5, 7}, {8, 9, 31, 37, 38}}) {
    auto H = make_semigroup(std::span<const Int>(g));
    FactorizationEnumerator E(H.generators(), 120);
    for (Int d = 0; d <= 120; ++d) {
      const auto expect = oracle::factorizations(g, d);
      const auto got = factorizations(H, d);
      REQUIRE(got.size() == expect.size());
      for (std::size_t i = 0; i < got.size(); ++i) {
        CHECK(got[i].coefficients == expect[i]);
        CHECK(got[i].length == oracle::length(expect[i]));
        CHECK(got[i].degree == d);
      }
      CHECK(E(d) == got);
      const Int mo = oracle::max_order(g, d);
      if (mo < 0) {
        CHECK_FALSE(max_order(H, d).has_value());
        CHECK_FALSE(max_order_factorization(H, d).has_value());
      } else {
        CHECK(max_order(H, d) == mo);
        auto w = max_order_factorization(H, d);
        REQUIRE(w.has_value());
        CHECK(w->length == mo);
        Int s = 0;
        for (std::size_t i = 0; i < g.size(); ++i) s += w->coefficients[i] * g[i];
        CHECK(s == d);
      }
    }
  }
}

TEST_CASE("pf witness") {
  auto H = make_semigroup({6, 13, 40, 41});
  oracle::Semigroup O(H.generators());
  for (Int z : O.gaps()) {
    Int expect = -1;
    for (Int a : O.pseudo_frobenius()) {
      if (O.contains(a - z)) {
        expect = a;
        break;
      }
    }
    CHECK(pf_witness(H, z) == expect);
  }
  CHECK_THROWS_CODE(pf_witness(H, 13), ErrorCode::InSemigroup);
}
