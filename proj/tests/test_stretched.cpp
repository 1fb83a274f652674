#include "oracles.hpp"
#include "sgforge/stretched.hpp"
#include "support.hpp"

using namespace sgforge;

TEST_CASE("shapes") {
  auto v = stretched_profile(make_semigroup({6, 13, 40, 41}));
  REQUIRE(is_stretched(v));
  CHECK(std::get<StretchedProfile>(v) == StretchedProfile{3, 1, std::nullopt});

  auto w = stretched_profile(make_semigroup({7, 39, 43, 47, 17}));
  REQUIRE(is_stretched(w));
  CHECK(std::get<StretchedProfile>(w) == StretchedProfile{3, 4, std::nullopt});

  auto med = stretched_profile(make_semigroup({4, 5, 6, 7}));
  REQUIRE(is_stretched(med));
  CHECK(std::get<StretchedProfile>(med).ell == 1);
  CHECK_FALSE(std::get<StretchedProfile>(med).lambda_index.has_value());

  // extra Apery element 14 = 6 + 8 = 7 + 7
  auto two = stretched_profile(make_semigroup({5, 6, 7, 8}));
  REQUIRE(is_stretched(two));
  const auto& p = std::get<StretchedProfile>(two);
  CHECK(p.ell == 2);
  REQUIRE(p.lambda_index.has_value());
  REQUIRE(p.mu_index.has_value());
  auto H = make_semigroup({5, 6, 7, 8});
  CHECK(H.generators()[*p.lambda_index] + H.generators()[*p.mu_index] == 14);

  auto bad = stretched_profile(make_semigroup({6, 7, 11, 15}));
  REQUIRE_FALSE(is_stretched(bad));
  CHECK(std::get<NotStretched>(bad).ell == 3);

  CHECK_FALSE(is_stretched(stretched_profile(make_semigroup({8, 9, 28, 29, 15}))));
  CHECK(is_stretched(stretched_profile(make_semigroup({6, 11, 13, 16, 20}))));
  CHECK(is_stretched(stretched_profile(make_semigroup({8, 9, 31, 37, 38}))));
}

TEST_CASE("profile, library oracle and brute force agree on the small suite") {
  for (const auto& H : small_suite()) {
    const bool brute = oracle::stretched(H.generators());
    const auto v = stretched_profile(H);
    CHECK(is_stretched(v) == brute);
    CHECK(stretched_oracle(H) == brute);
    const Int ell = H.multiplicity() - static_cast<Int>(H.embedding_dimension()) + 1;
    if (ell <= 2) CHECK(brute);
    if (is_stretched(v)) {
      const auto& p = std::get<StretchedProfile>(v);
      CHECK(p.ell == ell);
      if (ell >= 3) {
        // Ap = {0} U gens \ {a1} U {2a, ..., ell*a}
        REQUIRE(p.lambda_index.has_value());
        const Int a = H.generators()[*p.lambda_index];
        oracle::Semigroup O(H.generators());
        const auto ap = O.apery(H.multiplicity());
        for (Int k = 2; k <= ell; ++k) CHECK(std::binary_search(ap.begin(), ap.end(), k * a));
      }
    } else {
      const auto& ns = std::get<NotStretched>(v);
      oracle::Semigroup O(H.generators());
      const auto ap = O.apery(H.multiplicity());
      CHECK(std::binary_search(ap.begin(), ap.end(), ns.offending_element));
    }
  }
}

TEST_CASE("arithmetic pseudo-Frobenius profile") {
  CHECK(arithmetic_pf_profile(make_semigroup({6, 13, 40, 41})) == ArithmeticPFProfile{32, 1, 3});
  CHECK(arithmetic_pf_profile(make_semigroup({7, 39, 43, 47, 17})) == ArithmeticPFProfile{28, 4, 4});
  CHECK_FALSE(arithmetic_pf_profile(make_semigroup({8, 9, 31, 37, 38})).has_value());
  CHECK_FALSE(arithmetic_pf_profile(make_semigroup({6, 11, 13, 16, 20})).has_value());
  CHECK_FALSE(arithmetic_pf_profile(make_semigroup({3, 5})).has_value());
  CHECK(arithmetic_pf_profile(make_semigroup({8, 9, 28, 29, 15})) == ArithmeticPFProfile{18, 1, 4});

  for (const auto& H : small_suite()) {
    auto p = arithmetic_pf_profile(H);
    const auto& pf = H.pseudo_frobenius();
    if (!p) continue;
    REQUIRE(pf.size() == H.embedding_dimension() - 1);
    CHECK(p->length == pf.size());
    CHECK(p->h >= 0);
    for (std::size_t i = 0; i < pf.size(); ++i) CHECK(pf[i] == p->h + static_cast<Int>(i + 1) * p->alpha);
  }
}
