#pragma once

#include <vector>

#include "sgforge/semigroup.hpp"

namespace sgforge {

struct EnumerationBounds {
  Int max_multiplicity = 2;
  Int max_frobenius = 1;
};

// Every numerical semigroup other than N with multiplicity <= max_multiplicity
// and Frobenius number <= max_frobenius, found by walking the tree of
// numerical semigroups (children remove a minimal generator above the
// Frobenius number). Sorted lexicographically by ascending generator tuple;
// generators of each semigroup are ascending.
std::vector<NumericalSemigroup> enumerate_semigroups(const EnumerationBounds& bounds);

}  // namespace sgforge
