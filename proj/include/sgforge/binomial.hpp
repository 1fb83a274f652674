#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sgforge/checked.hpp"

namespace sgforge {

// Polynomial ring k[X1..Xn] graded by deg Xi = weights[i-1].
struct WeightedRing {
  std::vector<Int> weights;

  std::size_t num_vars() const noexcept { return weights.size(); }
};

class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t num_vars) : exponents_(num_vars, 0) {}
  explicit Monomial(std::vector<Int> exponents);

  static Monomial variable_power(std::size_t num_vars, std::size_t var, Int exponent);

  std::size_t num_vars() const noexcept { return exponents_.size(); }
  const std::vector<Int>& exponents() const noexcept { return exponents_; }
  Int operator[](std::size_t i) const { return exponents_[i]; }

  bool is_one() const noexcept;
  Int total_degree() const noexcept;
  // Index of the only variable with a positive exponent, if exactly one.
  std::optional<std::size_t> pure_power_variable() const noexcept;

  bool divides(const Monomial& other) const noexcept;
  bool coprime(const Monomial& other) const noexcept;
  Monomial operator*(const Monomial& other) const;
  // Requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;

  // Plain lexicographic order on exponent vectors, X1 most significant.
  auto operator<=>(const Monomial&) const = default;

private:
  std::vector<Int> exponents_;
};

// plus - minus with unit coefficients; a missing minus term makes the element
// the single monomial `plus`.
struct Binomial {
  Monomial plus;
  std::optional<Monomial> minus;

  Binomial() = default;
  Binomial(Monomial p, Monomial m) : plus(std::move(p)), minus(std::move(m)) {}
  static Binomial monomial(Monomial m) {
    Binomial b;
    b.plus = std::move(m);
    return b;
  }

  bool is_monomial() const noexcept { return !minus.has_value(); }
  std::size_t num_vars() const noexcept { return plus.num_vars(); }

  auto operator<=>(const Binomial&) const = default;
};

// Entries are pure powers of single variables.
struct MonomialMatrix {
  std::vector<Monomial> top;
  std::vector<Monomial> bottom;

  MonomialMatrix() = default;
  MonomialMatrix(std::vector<Monomial> top_row, std::vector<Monomial> bottom_row);

  std::size_t columns() const noexcept { return top.size(); }
  bool operator==(const MonomialMatrix&) const = default;
};

Int weighted_degree(const WeightedRing& ring, const Monomial& m);

// A unit-coefficient binomial lies in I_H iff both terms have equal weighted
// degree. Pure monomials never do.
bool is_in_defining_ideal(const WeightedRing& ring, const Binomial& b);

// Sign normalization: the lexicographically larger term becomes `plus`.
Binomial canonical(Binomial b);

// All C(n, 2) minors top_i*bot_j - top_j*bot_i for i < j, canonicalized.
std::vector<Binomial> minors2(const MonomialMatrix& M);

// For a matrix of the cyclic shape (top_i a power of X_i, bottom_i a power of
// X_{i+1}, bottom_n a power of X_1), returns the common value of
// deg bottom_i - deg top_i, or nullopt if the differences disagree.
// Throws ShapeMismatch for any other shape.
std::optional<Int> check_common_difference(const WeightedRing& ring, const MonomialMatrix& M);

// Renames variable k to variable mapping[k] (a permutation of 0..n-1).
Monomial relabel(const Monomial& m, std::span<const std::size_t> mapping);
Binomial relabel(const Binomial& b, std::span<const std::size_t> mapping);
MonomialMatrix relabel(const MonomialMatrix& M, std::span<const std::size_t> mapping);

// "X1^2*X3", "1"; binomials as "X1^2*X3 - X2^4"; matrices as
// "[X1^2, X2^3, X3, X4; X2, X3, X4, X1^7]".
std::string to_string(const Monomial& m);
std::string to_string(const Binomial& b);
std::string to_string(const MonomialMatrix& M);

Monomial parse_monomial(std::string_view text, std::size_t num_vars);
Binomial parse_binomial(std::string_view text, std::size_t num_vars);
MonomialMatrix parse_matrix(std::string_view text, std::size_t num_vars);

}  // namespace sgforge
