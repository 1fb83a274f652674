#pragma once

#include <cstddef>
#include <optional>
#include <variant>

#include "sgforge/semigroup.hpp"

namespace sgforge {

// Shape of Ap(H, a1) when k[H]/(t^a1) is stretched. Indices point into
// H.generators() (0-based).
struct StretchedProfile {
  Int ell = 1;  // a1 - n + 1
  // Generator whose multiples 2a, ..., ell*a fill Ap(H, a1) (ell >= 3), or the
  // first summand of the single extra element (ell == 2). Absent when ell == 1.
  std::optional<std::size_t> lambda_index;
  // Second summand of the extra element for ell == 2.
  std::optional<std::size_t> mu_index;

  bool operator==(const StretchedProfile&) const = default;
};

struct NotStretched {
  Int ell = 1;
  Int offending_element = 0;  // element of Ap(H, a1) that breaks the shape

  bool operator==(const NotStretched&) const = default;
};

using StretchedVerdict = std::variant<StretchedProfile, NotStretched>;

// Matches Ap(H, a1) against the three admissible shapes (ell = 1, 2, >= 3).
StretchedVerdict stretched_profile(const NumericalSemigroup& H);

inline bool is_stretched(const StretchedVerdict& v) { return std::holds_alternative<StretchedProfile>(v); }

// Independent route: dim m^2/m^3 of k[H]/(t^a1) counted as the Apery elements
// of maximal factorization length exactly 2; stretched iff that count <= 1.
bool stretched_oracle(const NumericalSemigroup& H);

// PF(H) = {h + alpha, ..., h + (n-1) alpha}.
struct ArithmeticPFProfile {
  Int h = 0;
  Int alpha = 1;
  std::size_t length = 0;

  bool operator==(const ArithmeticPFProfile&) const = default;
};

// Returns nullopt unless PF(H) is an arithmetic progression of length n - 1
// with positive difference and h >= 0. Always nullopt for n <= 2.
std::optional<ArithmeticPFProfile> arithmetic_pf_profile(const NumericalSemigroup& H);

}  // namespace sgforge
