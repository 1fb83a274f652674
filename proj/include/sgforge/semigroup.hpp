#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sgforge/checked.hpp"

namespace sgforge {

// Least representatives of each residue class modulo `base`;
// representatives[i] is the smallest element of H congruent to i.
struct AperySet {
  Int base = 0;
  std::vector<Int> representatives;

  std::vector<Int> sorted() const;
  bool operator==(const AperySet&) const = default;
};

struct Factorization {
  std::vector<Int> coefficients;
  Int degree = 0;
  Int length = 0;

  bool operator==(const Factorization&) const = default;
};

class NumericalSemigroup {
public:
  // Generators are minimal and kept in the caller's order. Use make_semigroup
  // to build one from an arbitrary generating list.
  const std::vector<Int>& generators() const noexcept { return generators_; }
  std::vector<Int> sorted_generators() const;
  // Raw inputs dropped during canonicalization (duplicates and sums of others).
  const std::vector<Int>& redundant() const noexcept { return redundant_; }

  Int multiplicity() const noexcept { return generators_[multiplicity_index_]; }
  std::size_t multiplicity_index() const noexcept { return multiplicity_index_; }
  std::size_t embedding_dimension() const noexcept { return generators_.size(); }
  Int max_generator() const;

  // Apery set with respect to the multiplicity.
  const AperySet& apery() const noexcept { return apery_; }
  Int frobenius() const noexcept { return frobenius_; }
  const std::vector<Int>& pseudo_frobenius() const noexcept { return pseudo_frobenius_; }

  bool contains(Int z) const noexcept {
    return z >= 0 && z >= apery_.representatives[static_cast<std::size_t>(z % multiplicity())];
  }

  bool operator==(const NumericalSemigroup& o) const { return generators_ == o.generators_; }

private:
  friend NumericalSemigroup make_semigroup(std::span<const Int> raw_generators);
  NumericalSemigroup() = default;

  std::vector<Int> generators_;
  std::vector<Int> redundant_;
  std::size_t multiplicity_index_ = 0;
  AperySet apery_;
  Int frobenius_ = -1;
  std::vector<Int> pseudo_frobenius_;
};

NumericalSemigroup make_semigroup(std::span<const Int> raw_generators);
inline NumericalSemigroup make_semigroup(std::initializer_list<Int> raw_generators) {
  return make_semigroup(std::span<const Int>(raw_generators.begin(), raw_generators.size()));
}

// Shortest-path relaxation over residues modulo h. Throws BaseNotInSemigroup.
AperySet apery_set(const NumericalSemigroup& H, Int h);

bool membership(const NumericalSemigroup& H, Int z);
Int frobenius(const NumericalSemigroup& H);
std::vector<Int> gaps(const NumericalSemigroup& H);

// Maximal elements of Ap(H, a1) under x <=_H y, shifted by -a1. Empty for H = N.
std::vector<Int> pseudo_frobenius(const NumericalSemigroup& H);

// Least alpha in PF(H) with alpha - z in H. Throws InSemigroup when z in H.
Int pf_witness(const NumericalSemigroup& H, Int z);

// All solutions of sum(c_i * a_i) = d in ascending lexicographic order of the
// coefficient vectors (last generator varies fastest).
std::vector<Factorization> factorizations(const NumericalSemigroup& H, Int d);

// Maximum factorization length of d, or nullopt when d is not in H.
std::optional<Int> max_order(const NumericalSemigroup& H, Int d);
// A factorization attaining max_order; ties prefer low-index generators.
std::optional<Factorization> max_order_factorization(const NumericalSemigroup& H, Int d);

// Reusable enumerator backed by a suffix-reachability table over [0, max_degree].
class FactorizationEnumerator {
public:
  FactorizationEnumerator(std::span<const Int> generators, Int max_degree);

  std::vector<Factorization> operator()(Int d) const;
  Int max_degree() const noexcept { return max_degree_; }

private:
  bool reachable(std::size_t from, Int x) const {
    return reach_[from * static_cast<std::size_t>(max_degree_ + 1) + static_cast<std::size_t>(x)] != 0;
  }

  std::vector<Int> generators_;
  Int max_degree_;
  std::vector<unsigned char> reach_;
};

}  // namespace sgforge
