#pragma once
// Brute-force reference computations. Nothing here calls into the library;
// they work from the raw generator list by sieving and exhaustive search.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

using Int = std::int64_t;
using Gens = std::vector<Int>;

// Schur bound: every integer >= (a - 1)(b - 1) is in H for coprime a, b in H;
// with arbitrary coprime generators, min * max is a safe ceiling.
inline Int ceiling(const Gens& g) {
  const Int lo = *std::min_element(g.begin(), g.end());
  const Int hi = *std::max_element(g.begin(), g.end());
  return lo * hi + hi;
}

inline std::vector<char> sieve(const Gens& g, Int limit) {
  std::vector<char> in(static_cast<std::size_t>(limit + 1), 0);
  in[0] = 1;
  for (Int x = 1; x <= limit; ++x) {
    for (Int a : g) {
      if (a <= x && in[static_cast<std::size_t>(x - a)]) {
        in[static_cast<std::size_t>(x)] = 1;
        break;
      }
    }
  }
  return in;
}

struct Semigroup {
  Gens gens;
  Int limit;
  std::vector<char> in;

  explicit Semigroup(Gens g) : gens(std::move(g)), limit(ceiling(gens)), in(sieve(gens, limit)) {}

  bool contains(Int x) const { return x >= 0 && (x > limit || in[static_cast<std::size_t>(x)]); }

  Int frobenius() const {
    for (Int x = limit; x >= 0; --x) {
      if (!contains(x)) return x;
    }
    return -1;
  }

  std::vector<Int> gaps() const {
    std::vector<Int> out;
    for (Int x = 0; x <= limit; ++x) {
      if (!contains(x)) out.push_back(x);
    }
    return out;
  }

  Int multiplicity() const { return *std::min_element(gens.begin(), gens.end()); }

  // least element in each residue class mod h, ascending
  std::vector<Int> apery(Int h) const {
    std::vector<Int> out;
    for (Int r = 0; r < h; ++r) {
      Int x = r;
      while (!contains(x)) x += h;
      out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // x not in H, x + s in H for every positive s in H
  std::vector<Int> pseudo_frobenius() const {
    std::vector<Int> out;
    const Int F = frobenius();
    for (Int x : gaps()) {
      bool ok = true;
      for (Int s = 1; s <= F && ok; ++s) {
        if (contains(s) && !contains(x + s)) ok = false;
      }
      if (ok) out.push_back(x);
    }
    return out;
  }

  // minimal generators: positive elements that are not a sum of two positive elements
  std::vector<Int> minimal_generators() const {
    std::vector<Int> out;
    const Int F = frobenius();
    for (Int x = 1; x <= F + multiplicity(); ++x) {
      if (!contains(x)) continue;
      bool decomposable = false;
      for (Int y = 1; y <= x / 2 && !decomposable; ++y) {
        if (contains(y) && contains(x - y)) decomposable = true;
      }
      if (!decomposable) out.push_back(x);
    }
    return out;
  }
};

// all coefficient vectors c with sum c_i g_i = d, ascending lexicographic
inline std::vector<std::vector<Int>> factorizations(const Gens& g, Int d) {
  std::vector<std::vector<Int>> out;
  std::vector<Int> c(g.size(), 0);
  std::function<void(std::size_t, Int)> rec = [&](std::size_t i, Int rest) {
    if (i == g.size()) {
      if (rest == 0) out.push_back(c);
      return;
    }
    for (Int k = 0; k * g[i] <= rest; ++k) {
      c[i] = k;
      rec(i + 1, rest - k * g[i]);
    }
    c[i] = 0;
  };
  rec(0, d);
  return out;
}

inline Int length(const std::vector<Int>& c) { return std::accumulate(c.begin(), c.end(), Int{0}); }

// -1 when d has no factorization
inline Int max_order(const Gens& g, Int d) {
  Int best = -1;
  for (const auto& c : factorizations(g, d)) best = std::max(best, length(c));
  return best;
}

// dim m^2/m^3 of k[H]/(t^a1) is the number of Apery elements of order exactly 2
inline bool stretched(const Gens& g) {
  Semigroup H(g);
  int order_two = 0;
  for (Int w : H.apery(H.multiplicity())) {
    if (w != 0 && max_order(g, w) == 2) ++order_two;
  }
  return order_two <= 1;
}

// Standard monomials of a monomial ideal given by exponent vectors, counted
// by walking the box below the pure powers. -1 when some variable has no
// pure power (infinite quotient).
inline Int staircase(const std::vector<std::vector<Int>>& leading, std::size_t n) {
  std::vector<Int> bound(n, -1);
  for (const auto& m : leading) {
    std::size_t support = 0, var = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] > 0) {
        ++support;
        var = i;
      }
    }
    if (support == 0) return 0;
    if (support == 1 && (bound[var] < 0 || m[var] < bound[var])) bound[var] = m[var];
  }
  for (Int b : bound) {
    if (b < 0) return -1;
  }
  Int count = 0;
  std::vector<Int> e(n, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      for (const auto& m : leading) {
        bool divides = true;
        for (std::size_t k = 0; k < n && divides; ++k) divides = m[k] <= e[k];
        if (divides) return;
      }
      ++count;
      return;
    }
    for (Int k = 0; k < bound[i]; ++k) {
      e[i] = k;
      rec(i + 1);
    }
    e[i] = 0;
  };
  rec(0);
  return count;
}

// Numerical semigroups with multiplicity <= m and Frobenius <= f, counted
// per multiplicity. Frozen from an independent Kunz-coordinate enumeration.
inline const std::map<Int, Int>& frozen_counts_8_40() {
  static const std::map<Int, Int> c{{2, 20}, {3, 110}, {4, 524}, {5, 1380}, {6, 4578}, {7, 9034}, {8, 18941}};
  return c;
}
inline const std::map<Int, Int>& frozen_counts_7_30() {
  static const std::map<Int, Int> c{{2, 15}, {3, 64}, {4, 253}, {5, 531}, {6, 1325}, {7, 2264}};
  return c;
}

}  // namespace oracle
