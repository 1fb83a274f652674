#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sgforge/binomial.hpp"
#include "sgforge/groebner.hpp"
#include "sgforge/semigroup.hpp"

namespace sgforge {

// Factorizations of d, joined when two share a generator with positive
// coefficient. Vertices are in ascending lexicographic order; each component
// lists vertex indices ascending, and components are ordered by their least
// vertex, so components[0] holds the lexicographically least factorization.
struct FactorizationGraph {
  Int degree = 0;
  std::vector<Factorization> vertices;
  std::vector<std::vector<std::size_t>> components;
};

// Throws NotInSemigroup when d is not in H.
FactorizationGraph factorization_graph(const NumericalSemigroup& H, Int d);
FactorizationGraph factorization_graph(const FactorizationEnumerator& enumerate, Int d);

struct ToricGenerators {
  std::vector<Binomial> binomials;  // canonical sign
  std::vector<Int> degrees;         // degree of each binomial, non-decreasing
};

struct SweepOptions {
  std::optional<Int> degree_ceiling;  // default 4*frobenius + 4*max generator
  GroebnerCaps caps;
};

// Minimal binomial generators of I_H by a degree sweep over factorization
// graphs, stopping at the first degree where the accumulated set passes
// nak_certificate. Requires n >= 2. Throws SweepCapExceeded if the ceiling is
// reached first.
ToricGenerators minimal_generators(const NumericalSemigroup& H, const SweepOptions& options = {});

}  // namespace sgforge
