#include "sgforge/stretched.hpp"

#include <algorithm>

namespace sgforge {

namespace {

// Apery elements other than 0 and the non-multiplicity generators, ascending.
std::vector<Int> apery_extras(const NumericalSemigroup& H) {
  std::vector<Int> extras;
  const auto& gens = H.generators();
  for (Int w : H.apery().sorted()) {
    if (w == 0) continue;
    if (std::find(gens.begin(), gens.end(), w) != gens.end()) continue;
    extras.push_back(w);
  }
  return extras;
}

std::optional<std::size_t> generator_index(const NumericalSemigroup& H, Int value) {
  const auto& gens = H.generators();
  auto it = std::find(gens.begin(), gens.end(), value);
  if (it == gens.end()) return std::nullopt;
  return static_cast<std::size_t>(it - gens.begin());
}

}  // namespace

StretchedVerdict stretched_profile(const NumericalSemigroup& H) {
  const Int n = static_cast<Int>(H.embedding_dimension());
  const Int ell = H.multiplicity() - n + 1;
  const auto extras = apery_extras(H);
  // Every non-multiplicity minimal generator lies in Ap(H, a1), so exactly
  // ell - 1 extras remain.

  if (ell == 1) return StretchedProfile{1, std::nullopt, std::nullopt};

  const auto& gens = H.generators();
  const std::size_t m = H.multiplicity_index();

  if (ell == 2) {
    const Int e = extras.front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (i == m) continue;
      for (std::size_t j = i; j < gens.size(); ++j) {
        if (j == m) continue;
        if (gens[i] + gens[j] == e) return StretchedProfile{2, i, j};
      }
    }
    return NotStretched{2, e};
  }

  const Int first = extras.front();
  std::optional<std::size_t> lambda;
  if (first % 2 == 0) lambda = generator_index(H, first / 2);
  if (!lambda || *lambda == m) return NotStretched{ell, first};
  const Int base = gens[*lambda];
  for (Int k = 2; k <= ell; ++k) {
    const Int expected = k * base;
    if (extras[static_cast<std::size_t>(k - 2)] != expected) {
      // Report the first Apery element that is not on the progression.
      for (Int w : extras) {
        if (w % base != 0 || w / base < 2 || w / base > ell) return NotStretched{ell, w};
      }
      return NotStretched{ell, extras[static_cast<std::size_t>(k - 2)]};
    }
  }
  return StretchedProfile{ell, lambda, std::nullopt};
}

bool stretched_oracle(const NumericalSemigroup& H) {
  int order_two = 0;
  for (Int w : H.apery().representatives) {
    if (w == 0) continue;
    if (max_order(H, w) == 2) ++order_two;
  }
  return order_two <= 1;
}

std::optional<ArithmeticPFProfile> arithmetic_pf_profile(const NumericalSemigroup& H) {
  const std::size_t n = H.embedding_dimension();
  if (n <= 2) return std::nullopt;
  const auto& pf = H.pseudo_frobenius();
  if (pf.size() != n - 1) return std::nullopt;
  const Int alpha = pf[1] - pf[0];
  if (alpha <= 0) return std::nullopt;
  for (std::size_t i = 1; i < pf.size(); ++i) {
    if (pf[i] - pf[i - 1] != alpha) return std::nullopt;
  }
  const Int h = pf[0] - alpha;
  if (h < 0) return std::nullopt;
  return ArithmeticPFProfile{h, alpha, pf.size()};
}

}  // namespace sgforge
