#include <map>

#include "oracles.hpp"
#include "sgforge/disjoint_set.hpp"
#include "sgforge/groebner.hpp"
#include "sgforge/toric.hpp"
#include "support.hpp"

using namespace sgforge;

namespace {

// components of the factorization graph by brute-force pairwise support test
std::size_t brute_components(const std::vector<Int>& g, Int d) {
  const auto f = oracle::factorizations(g, d);
  std::vector<std::size_t> label(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) label[i] = i;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = 0; j < f.size(); ++j) {
        bool share = false;
        for (std::size_t k = 0; k < g.size(); ++k) share = share || (f[i][k] > 0 && f[j][k] > 0);
        if (share && label[j] > label[i]) {
          label[j] = label[i];
          changed = true;
        }
      }
    }
  }
  std::sort(label.begin(), label.end());
  return static_cast<std::size_t>(std::unique(label.begin(), label.end()) - label.begin());
}

}  // namespace

TEST_CASE("disjoint set") {
  DisjointSet s(5);
  CHECK(s.unite(0, 1));
  CHECK(s.unite(3, 4));
  CHECK_FALSE(s.unite(1, 0));
  CHECK(s.find(0) == s.find(1));
  CHECK(s.find(2) != s.find(3));
  CHECK(s.unite(1, 4));
  CHECK(s.find(0) == s.find(3));
}

TEST_CASE("factorization graph") {
  auto H = make_semigroup({6, 13, 40, 41});
  auto G = factorization_graph(H, 52);
  CHECK(G.vertices.size() == 2);
  CHECK(G.components.size() == 2);
  CHECK(G.vertices[G.components[0].front()].coefficients == std::vector<Int>{0, 4, 0, 0});
  CHECK_THROWS_CODE(factorization_graph(H, 35), ErrorCode::NotInSemigroup);

  for (Int d = 0; d <= 130; ++d) {
    if (!H.contains(d)) continue;
    CHECK(factorization_graph(H, d).components.size() == brute_components(H.generators(), d));
  }
}

TEST_CASE("known generator counts") {
  CHECK(minimal_generators(make_semigroup({3, 4, 5})).binomials.size() == 3);
  CHECK(minimal_generators(make_semigroup({4, 6, 9})).binomials.size() == 2);
  CHECK(minimal_generators(make_semigroup({3, 5})).binomials.size() == 1);
  CHECK(minimal_generators(make_semigroup({6, 11, 13, 16, 20})).binomials.size() == 9);
  CHECK(minimal_generators(make_semigroup({8, 9, 31, 37, 38})).binomials.size() == 10);
  CHECK(minimal_generators(make_semigroup({6, 13, 40, 41})).binomials.size() == 6);
  CHECK(minimal_generators(make_semigroup({7, 39, 43, 47, 17})).binomials.size() == 10);
  CHECK_THROWS_CODE(minimal_generators(make_semigroup({1})), ErrorCode::PreconditionFailed);
}

TEST_CASE("sweep ceiling") {
  auto H = make_semigroup({6, 13, 40, 41});
  CHECK_THROWS_CODE(minimal_generators(H, SweepOptions{60, {}}), ErrorCode::SweepCapExceeded);
  CHECK(minimal_generators(H, SweepOptions{82, {}}).binomials.size() == 6);
}

TEST_CASE("sweep output: homogeneous, canonical, minimal, complete") {
  for (const auto& H : small_suite()) {
    if (H.embedding_dimension() < 2 || H.multiplicity() > 6) continue;
    const auto T = minimal_generators(H);
    WeightedRing R{H.generators()};
    std::map<Int, std::size_t> per_degree;
    for (std::size_t i = 0; i < T.binomials.size(); ++i) {
      CHECK(is_in_defining_ideal(R, T.binomials[i]));
      CHECK(canonical(T.binomials[i]) == T.binomials[i]);
      CHECK(weighted_degree(R, T.binomials[i].plus) == T.degrees[i]);
      ++per_degree[T.degrees[i]];
    }
    CHECK(std::is_sorted(T.degrees.begin(), T.degrees.end()));
    for (const auto& [d, count] : per_degree) CHECK(count + 1 == brute_components(H.generators(), d));
    CHECK(nak_certificate(H, T.binomials).holds);
    for (std::size_t drop = 0; drop < T.binomials.size(); ++drop) {
      auto J = T.binomials;
      J.erase(J.begin() + static_cast<std::ptrdiff_t>(drop));
      CHECK_FALSE(nak_certificate(H, J).holds);
    }
  }
}
