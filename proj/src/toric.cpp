#include "sgforge/toric.hpp"

#include <algorithm>
#include <string>

#include "sgforge/disjoint_set.hpp"

namespace sgforge {

namespace {

Monomial to_monomial(const Factorization& f) { return Monomial(f.coefficients); }

}  // namespace

FactorizationGraph factorization_graph(const FactorizationEnumerator& enumerate, Int d) {
  FactorizationGraph graph;
  graph.degree = d;
  graph.vertices = enumerate(d);
  if (graph.vertices.empty()) {
    throw Error(ErrorCode::NotInSemigroup, std::to_string(d) + " has no factorization");
  }
  const std::size_t count = graph.vertices.size();
  const std::size_t n = graph.vertices.front().coefficients.size();

  // Joining every vertex to the first one using the same generator yields the
  // same partition as the pairwise support-overlap relation.
  DisjointSet sets(count);
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<std::size_t> first;
    for (std::size_t v = 0; v < count; ++v) {
      if (graph.vertices[v].coefficients[i] == 0) continue;
      if (first) {
        sets.unite(*first, v);
      } else {
        first = v;
      }
    }
  }
  std::vector<std::size_t> slot(count, count);
  for (std::size_t v = 0; v < count; ++v) {
    const std::size_t root = sets.find(v);
    if (slot[root] == count) {
      slot[root] = graph.components.size();
      graph.components.emplace_back();
    }
    graph.components[slot[root]].push_back(v);
  }
  return graph;
}

FactorizationGraph factorization_graph(const NumericalSemigroup& H, Int d) {
  if (d < 0 || !H.contains(d)) throw Error(ErrorCode::NotInSemigroup, std::to_string(d) + " is not in H");
  return factorization_graph(FactorizationEnumerator(H.generators(), d), d);
}

ToricGenerators minimal_generators(const NumericalSemigroup& H, const SweepOptions& options) {
  const auto& gens = H.generators();
  if (gens.size() < 2) throw Error(ErrorCode::PreconditionFailed, "minimal generators need n >= 2");
  const Int ceiling = options.degree_ceiling.value_or(
      checked_add(checked_mul(4, H.frobenius()), checked_mul(4, H.max_generator())));
  const FactorizationEnumerator enumerate(gens, ceiling);

  ToricGenerators out;
  for (Int d = 1; d <= ceiling; ++d) {
    if (!H.contains(d)) continue;
    // Two factorizations with disjoint supports need d - a_i in H for two
    // distinct indices i.
    int predecessors = 0;
    for (Int g : gens) predecessors += (d >= g && H.contains(d - g)) ? 1 : 0;
    if (predecessors < 2) continue;

    const auto graph = factorization_graph(enumerate, d);
    if (graph.components.size() < 2) continue;
    const Monomial anchor = to_monomial(graph.vertices[graph.components[0].front()]);
    for (std::size_t c = 1; c < graph.components.size(); ++c) {
      out.binomials.push_back(canonical(Binomial(anchor, to_monomial(graph.vertices[graph.components[c].front()]))));
      out.degrees.push_back(d);
    }
    if (nak_certificate(H, out.binomials, options.caps)) return out;
  }
  throw Error(ErrorCode::SweepCapExceeded,
              "no certified generating set up to degree " + std::to_string(ceiling));
}

}  // namespace sgforge
