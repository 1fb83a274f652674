#pragma once

#include "sgforge/semigroup.hpp"

namespace sgforge {

struct FamilyParams {
  Int ell = 2;
  Int n = 3;
  Int alpha = 1;
  Int h1 = 0;

  Int a() const { return ell + n - 1; }
};

// H = <a, b, ell*b + alpha, ..., ell*b + (n-2) alpha> with b = (h1 + 1) a + alpha.
// Requires gcd(a, alpha) = 1 (PreconditionFailed). The result is checked for
// embedding dimension n, multiplicity a, stretchedness and
// PF(H) = {h + i alpha} with h = h1 a + (ell - 1) b (ValidationFailed).
NumericalSemigroup family_j1(const FamilyParams& params);

// H = <a, ell*b - (n-2) alpha, ..., ell*b - alpha, b> with
// b = ((h1 + 1 + alpha) / ell) a - alpha. Requires ell | h1 + 1 + alpha,
// b > a and gcd(a, alpha) = 1. Validated as family_j1 with h = h1 a.
NumericalSemigroup family_jn1(const FamilyParams& params);

}  // namespace sgforge
