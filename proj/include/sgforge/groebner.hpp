#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sgforge/binomial.hpp"
#include "sgforge/semigroup.hpp"

namespace sgforge {

// Weighted degree first, ties broken lexicographically reading the exponent
// vector from the last variable down to the first.
struct TermOrder {
  std::vector<Int> weights;

  // <0, 0, >0 like a three-way comparison.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
};

struct GroebnerCaps {
  Int max_degree = 1'000'000;
  std::size_t max_basis = 10'000;
};

// Reads SEMIGROUP_FORGE_CAPS ("max_degree=N,max_basis=M", either key optional).
// Throws ParseError on malformed values.
GroebnerCaps caps_from_environment();

// Elements are kept with `plus` as the leading term; monomial generators have
// no `minus` part.
struct GroebnerBasis {
  std::vector<Binomial> elements;
  TermOrder order;
};

// Orients b so that plus is the leading term; nullopt if b is zero.
std::optional<Binomial> orient(Binomial b, const TermOrder& order);

// Reduced Groebner basis. Pairs are processed smallest-lcm first, ties by
// insertion index; pairs with coprime leading terms are skipped.
// Throws CapExceeded when the basis or an lcm degree exceeds the caps.
GroebnerBasis buchberger(std::span<const Binomial> generators, const TermOrder& order,
                         const GroebnerCaps& caps = {});

// Fully reduced remainder, oriented; nullopt means zero (p lies in the ideal).
std::optional<Binomial> normal_form(const Binomial& p, const GroebnerBasis& G);

// True when every S-pair of G reduces to zero modulo G.
bool is_s_pair_closed(const GroebnerBasis& G);

// Number of standard monomials of S / (leading terms of G); nullopt when some
// variable has no pure power among the leading terms (infinite quotient).
// With count_limit set, counting stops once the count exceeds it and
// count_limit + 1 is returned.
std::optional<Int> quotient_dimension(const GroebnerBasis& G, std::optional<Int> count_limit = std::nullopt);

struct NakCertificate {
  bool contained = false;           // every generator is homogeneous
  std::optional<Int> dimension;     // dim_k S/(J + (X1)), capped just above a1
  bool holds = false;               // contained && dimension == a1

  explicit operator bool() const noexcept { return holds; }
};

// Proves J = I_H when J is inside I_H and dim_k S/(J + (X1)) = a1. X1 is the
// variable of the multiplicity; variables follow H.generators() order.
NakCertificate nak_certificate(const NumericalSemigroup& H, std::span<const Binomial> J,
                               const GroebnerCaps& caps = {});

}  // namespace sgforge
