#include "sgforge/enumerate.hpp"

#include <algorithm>

namespace sgforge {

namespace {

// Membership of 0..limit-1; everything from limit on is in the semigroup.
struct Node {
  std::vector<char> in;
  Int frobenius;
  Int multiplicity;
};

std::vector<Int> minimal_generators_of(const Node& node) {
  std::vector<Int> gens;
  const Int limit = static_cast<Int>(node.in.size());
  auto member = [&](Int x) { return x >= limit || node.in[static_cast<std::size_t>(x)]; };
  // Minimal generators are bounded by frobenius + multiplicity.
  const Int upper = std::max(node.frobenius + node.multiplicity, node.multiplicity);
  for (Int x = node.multiplicity; x <= upper; ++x) {
    if (!member(x)) continue;
    bool decomposable = false;
    for (Int y = node.multiplicity; y <= x / 2 && !decomposable; ++y) {
      decomposable = member(y) && member(x - y);
    }
    if (!decomposable) gens.push_back(x);
  }
  return gens;
}

}  // namespace

std::vector<NumericalSemigroup> enumerate_semigroups(const EnumerationBounds& bounds) {
  std::vector<std::vector<Int>> found;
  const Int limit = bounds.max_frobenius + bounds.max_multiplicity + 2;
  Node root{std::vector<char>(static_cast<std::size_t>(limit), 1), -1, 1};

  std::vector<Node> stack{root};
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    const auto gens = minimal_generators_of(node);
    if (node.multiplicity > 1) found.push_back(gens);
    for (Int g : gens) {
      if (g <= node.frobenius || g > bounds.max_frobenius) continue;
      Node child{node.in, g, node.multiplicity};
      child.in[static_cast<std::size_t>(g)] = 0;
      if (g == node.multiplicity) {
        Int m = g + 1;
        while (!child.in[static_cast<std::size_t>(m)]) ++m;
        child.multiplicity = m;
      }
      if (child.multiplicity > bounds.max_multiplicity) continue;
      stack.push_back(std::move(child));
    }
  }
  std::sort(found.begin(), found.end());
  std::vector<NumericalSemigroup> out;
  out.reserve(found.size());
  for (const auto& gens : found) out.push_back(make_semigroup(gens));
  return out;
}

}  // namespace sgforge
