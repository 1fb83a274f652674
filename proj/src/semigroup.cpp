#include "sgforge/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <string>

namespace sgforge {

namespace {

constexpr Int kUnreachable = std::numeric_limits<Int>::max();

// Dijkstra over Z/base with one arc per generator. Residues not reachable from
// 0 (possible when gcd of the generators is not 1) keep kUnreachable.
std::vector<Int> residue_distances(std::span<const Int> generators, Int base) {
  std::vector<Int> dist(static_cast<std::size_t>(base), kUnreachable);
  using Item = std::pair<Int, Int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[0] = 0;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [d, r] = queue.top();
    queue.pop();
    if (d != dist[static_cast<std::size_t>(r)]) continue;
    for (Int g : generators) {
      const Int next = (r + g % base) % base;
      const Int nd = checked_add(d, g);
      auto& slot = dist[static_cast<std::size_t>(next)];
      if (nd < slot) {
        slot = nd;
        queue.emplace(nd, next);
      }
    }
  }
  return dist;
}

std::string join(std::span<const Int> xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(xs[i]);
  }
  return out;
}

}  // namespace

std::vector<Int> AperySet::sorted() const {
  std::vector<Int> out = representatives;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Int> NumericalSemigroup::sorted_generators() const {
  std::vector<Int> out = generators_;
  std::sort(out.begin(), out.end());
  return out;
}

Int NumericalSemigroup::max_generator() const {
  return *std::max_element(generators_.begin(), generators_.end());
}

NumericalSemigroup make_semigroup(std::span<const Int> raw) {
  if (raw.empty()) throw Error(ErrorCode::EmptyInput, "no generators given");
  Int g = 0;
  for (Int x : raw) {
    if (x <= 0) throw Error(ErrorCode::InvalidGenerator, "generator " + std::to_string(x) + " is not positive");
    g = std::gcd(g, x);
  }
  if (g != 1) {
    throw Error(ErrorCode::GcdNotOne, "gcd(" + join(raw) + ") = " + std::to_string(g));
  }

  // x is redundant iff it lies in the monoid generated by the distinct
  // values strictly below it (or repeats an earlier entry).
  std::vector<Int> distinct(raw.begin(), raw.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<Int> keep;
  for (Int x : distinct) {
    if (keep.empty()) {
      keep.push_back(x);
      continue;
    }
    const auto dist = residue_distances(keep, keep.front());
    const Int w = dist[static_cast<std::size_t>(x % keep.front())];
    if (w == kUnreachable || x < w) keep.push_back(x);
  }

  NumericalSemigroup H;
  for (Int x : raw) {
    const bool minimal = std::binary_search(keep.begin(), keep.end(), x);
    const bool seen = std::find(H.generators_.begin(), H.generators_.end(), x) != H.generators_.end();
    if (minimal && !seen) {
      H.generators_.push_back(x);
    } else {
      H.redundant_.push_back(x);
    }
  }
  H.multiplicity_index_ = static_cast<std::size_t>(
      std::min_element(H.generators_.begin(), H.generators_.end()) - H.generators_.begin());
  H.apery_ = apery_set(H, H.multiplicity());
  H.frobenius_ = *std::max_element(H.apery_.representatives.begin(), H.apery_.representatives.end()) -
                 H.multiplicity();
  H.pseudo_frobenius_ = pseudo_frobenius(H);
  return H;
}

AperySet apery_set(const NumericalSemigroup& H, Int h) {
  if (h <= 0 || (!H.apery().representatives.empty() && !H.contains(h))) {
    throw Error(ErrorCode::BaseNotInSemigroup, std::to_string(h) + " is not a positive element of H");
  }
  AperySet ap;
  ap.base = h;
  ap.representatives = residue_distances(H.generators(), h);
  return ap;
}

bool membership(const NumericalSemigroup& H, Int z) { return H.contains(z); }

Int frobenius(const NumericalSemigroup& H) { return H.frobenius(); }

std::vector<Int> gaps(const NumericalSemigroup& H) {
  std::vector<Int> out;
  for (Int z = 1; z <= H.frobenius(); ++z) {
    if (!H.contains(z)) out.push_back(z);
  }
  return out;
}

std::vector<Int> pseudo_frobenius(const NumericalSemigroup& H) {
  const Int a1 = H.multiplicity();
  if (a1 == 1) return {};
  const auto& ap = H.apery().representatives;
  std::vector<Int> out;
  for (Int a : ap) {
    bool maximal = true;
    for (Int b : ap) {
      if (b != a && H.contains(b - a)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(a - a1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Int pf_witness(const NumericalSemigroup& H, Int z) {
  if (H.contains(z)) throw Error(ErrorCode::InSemigroup, std::to_string(z) + " belongs to H");
  for (Int alpha : H.pseudo_frobenius()) {
    if (H.contains(alpha - z)) return alpha;
  }
  throw Error(ErrorCode::InternalContradiction, "no pseudo-Frobenius witness for gap " + std::to_string(z));
}

FactorizationEnumerator::FactorizationEnumerator(std::span<const Int> generators, Int max_degree)
    : generators_(generators.begin(), generators.end()), max_degree_(std::max<Int>(max_degree, 0)) {
  const std::size_t n = generators_.size();
  const std::size_t width = static_cast<std::size_t>(max_degree_ + 1);
  reach_.assign((n + 1) * width, 0);
  reach_[n * width] = 1;
  for (std::size_t k = n; k-- > 0;) {
    const Int g = generators_[k];
    for (Int x = 0; x <= max_degree_; ++x) {
      const std::size_t ux = static_cast<std::size_t>(x);
      unsigned char r = reach_[(k + 1) * width + ux];
      if (!r && x >= g) r = reach_[k * width + ux - static_cast<std::size_t>(g)];
      reach_[k * width + ux] = r;
    }
  }
}

std::vector<Factorization> FactorizationEnumerator::operator()(Int d) const {
  std::vector<Factorization> out;
  if (d < 0) return out;
  if (d > max_degree_) throw Error(ErrorCode::PreconditionFailed, "degree exceeds enumerator range");
  if (!reachable(0, d)) return out;
  const std::size_t n = generators_.size();
  std::vector<Int> coeffs(n, 0);
  std::function<void(std::size_t, Int)> rec = [&](std::size_t k, Int rest) {
    if (k == n) {
      Factorization f;
      f.coefficients = coeffs;
      f.degree = d;
      for (Int c : coeffs) f.length += c;
      out.push_back(std::move(f));
      return;
    }
    const Int g = generators_[k];
    for (Int c = 0; c * g <= rest; ++c) {
      if (!reachable(k + 1, rest - c * g)) continue;
      coeffs[k] = c;
      rec(k + 1, rest - c * g);
    }
    coeffs[k] = 0;
  };
  rec(0, d);
  return out;
}

std::vector<Factorization> factorizations(const NumericalSemigroup& H, Int d) {
  if (d < 0 || !H.contains(d)) return {};
  return FactorizationEnumerator(H.generators(), d)(d);
}

std::optional<Factorization> max_order_factorization(const NumericalSemigroup& H, Int d) {
  if (d < 0 || !H.contains(d)) return std::nullopt;
  const auto& gens = H.generators();
  std::vector<Int> best(static_cast<std::size_t>(d + 1), -1);
  best[0] = 0;
  for (Int x = 1; x <= d; ++x) {
    Int b = -1;
    for (Int g : gens) {
      if (g <= x && best[static_cast<std::size_t>(x - g)] >= 0) {
        b = std::max(b, best[static_cast<std::size_t>(x - g)] + 1);
      }
    }
    best[static_cast<std::size_t>(x)] = b;
  }
  Factorization f;
  f.coefficients.assign(gens.size(), 0);
  f.degree = d;
  f.length = best[static_cast<std::size_t>(d)];
  Int x = d;
  while (x > 0) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Int g = gens[i];
      if (g <= x && best[static_cast<std::size_t>(x - g)] == best[static_cast<std::size_t>(x)] - 1) {
        ++f.coefficients[i];
        x -= g;
        break;
      }
    }
  }
  return f;
}

std::optional<Int> max_order(const NumericalSemigroup& H, Int d) {
  auto f = max_order_factorization(H, d);
  if (!f) return std::nullopt;
  return f->length;
}

}  // namespace sgforge
