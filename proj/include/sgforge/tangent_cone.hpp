#pragma once

#include <optional>

#include "sgforge/semigroup.hpp"
#include "sgforge/structure.hpp"

namespace sgforge {

// Closed-form Cohen-Macaulay criteria for gr(k[H]):
//   j = 1:    h1 + 1 >= ell
//   j = n-1:  (h1 + 1 + alpha) / ell >= ell
//   MED:      always.
// Throws Uncertified for an uncertified certificate.
bool cm_by_formula(const DeterminantalCertificate& cert);

struct SallyVerdict {
  bool cohen_macaulay = true;
  std::optional<Int> target;                 // (ell + 1) b - a1
  std::optional<Int> order;                  // max factorization length of target
  std::optional<Factorization> witness;      // a factorization attaining it
};

// gr(k[H]) is CM iff t^((ell+1) b) lies in t^a1 m^ell, i.e. the order of
// (ell + 1) b - a1 is at least ell. Vacuously true for MED.
SallyVerdict cm_by_sally(const NumericalSemigroup& H, const DeterminantalCertificate& cert);

// Predicted CM verdicts from the sufficient conditions; nullopt where a
// condition does not apply.
struct CmShortcuts {
  std::optional<bool> h1_bound;       // j = n-1 and h1 >= ell^2 - ell - alpha  => CM
  std::optional<bool> ell_two_last;   // j = n-1 and ell = 2                      => CM
  std::optional<bool> ell_two_iff;    // ell = 2: NOT CM iff j = 1 and h = b = a + alpha
};

CmShortcuts cm_shortcuts(const DeterminantalCertificate& cert);

struct TangentConeReport {
  Branch branch = Branch::Med;
  bool cm_formula = true;
  SallyVerdict sally;
  CmShortcuts shortcuts;
  Int criterion_lhs = 0;  // h1 + 1, or (h1 + 1 + alpha) / ell
  Int criterion_rhs = 1;  // ell

  bool agrees() const { return cm_formula == sally.cohen_macaulay; }
  // Every applicable shortcut predicts the formula's verdict.
  bool shortcuts_consistent() const {
    if (shortcuts.h1_bound && *shortcuts.h1_bound && !cm_formula) return false;
    if (shortcuts.ell_two_last && *shortcuts.ell_two_last && !cm_formula) return false;
    return !shortcuts.ell_two_iff || *shortcuts.ell_two_iff == cm_formula;
  }
};

TangentConeReport analyze_tangent_cone(const NumericalSemigroup& H, const DeterminantalCertificate& cert);

}  // namespace sgforge
