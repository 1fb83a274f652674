#include "sgforge/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <queue>
#include <string>

namespace sgforge {

namespace {

const Binomial* find_reducer(const Monomial& t, const std::vector<Binomial>& G) {
  for (const auto& g : G) {
    if (g.plus.divides(t)) return &g;
  }
  return nullptr;
}

// Full reduction of an oriented element. Every step replaces one term by a
// strictly smaller one, so this terminates under a well-order.
std::optional<Binomial> reduce(Binomial p, const std::vector<Binomial>& G, const TermOrder& order) {
  while (const Binomial* g = find_reducer(p.plus, G)) {
    if (g->is_monomial()) {
      if (!p.minus) return std::nullopt;
      p = Binomial::monomial(*p.minus);
      continue;
    }
    Monomial replaced = (p.plus / g->plus) * *g->minus;
    if (!p.minus) {
      p = Binomial::monomial(std::move(replaced));
      continue;
    }
    auto o = orient(Binomial(std::move(replaced), *p.minus), order);
    if (!o) return std::nullopt;
    p = std::move(*o);
  }
  if (p.minus) {
    Monomial tail = *p.minus;
    while (const Binomial* g = find_reducer(tail, G)) {
      if (g->is_monomial()) return Binomial::monomial(p.plus);
      tail = (tail / g->plus) * *g->minus;
    }
    p.minus = std::move(tail);
  }
  return p;
}

std::optional<Binomial> s_polynomial(const Binomial& f, const Binomial& g, const TermOrder& order) {
  const Monomial L = f.plus.lcm(g.plus);
  std::optional<Monomial> a, b;
  if (f.minus) a = (L / f.plus) * *f.minus;
  if (g.minus) b = (L / g.plus) * *g.minus;
  if (!a && !b) return std::nullopt;
  if (!a) return Binomial::monomial(std::move(*b));
  if (!b) return Binomial::monomial(std::move(*a));
  return orient(Binomial(std::move(*a), std::move(*b)), order);
}

Int parse_cap(const std::string& value, const std::string& key) {
  char* end = nullptr;
  const long long v = std::strtoll(value.c_str(), &end, 10);
  if (value.empty() || *end != '\0' || v <= 0) {
    throw Error(ErrorCode::ParseError, "SEMIGROUP_FORGE_CAPS: bad value for " + key + ": '" + value + "'");
  }
  return static_cast<Int>(v);
}

}  // namespace

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  Int da = 0, db = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    da += a[i] * weights[i];
    db += b[i] * weights[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = weights.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

GroebnerCaps caps_from_environment() {
  GroebnerCaps caps;
  const char* raw = std::getenv("SEMIGROUP_FORGE_CAPS");
  if (!raw) return caps;
  std::string text(raw);
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    const std::string item = text.substr(start, comma - start);
    start = comma + 1;
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::ParseError, "SEMIGROUP_FORGE_CAPS: expected key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    if (key == "max_degree") {
      caps.max_degree = parse_cap(value, key);
    } else if (key == "max_basis") {
      caps.max_basis = static_cast<std::size_t>(parse_cap(value, key));
    } else {
      throw Error(ErrorCode::ParseError, "SEMIGROUP_FORGE_CAPS: unknown key '" + key + "'");
    }
  }
  return caps;
}

std::optional<Binomial> orient(Binomial b, const TermOrder& order) {
  if (!b.minus) return b;
  const int c = order.compare(b.plus, *b.minus);
  if (c == 0) return std::nullopt;
  if (c < 0) std::swap(b.plus, *b.minus);
  return b;
}

GroebnerBasis buchberger(std::span<const Binomial> generators, const TermOrder& order, const GroebnerCaps& caps) {
  GroebnerBasis result;
  result.order = order;
  auto& G = result.elements;

  struct Pair {
    Monomial lcm;
    std::size_t i, j;
  };
  auto later = [&order](const Pair& x, const Pair& y) {
    const int c = order.compare(x.lcm, y.lcm);
    if (c != 0) return c > 0;
    return std::tie(x.i, x.j) > std::tie(y.i, y.j);
  };
  std::priority_queue<Pair, std::vector<Pair>, decltype(later)> pairs(later);

  auto insert = [&](Binomial b) {
    if (G.size() >= caps.max_basis) {
      throw Error(ErrorCode::CapExceeded, "Groebner basis exceeds " + std::to_string(caps.max_basis) + " elements");
    }
    const std::size_t j = G.size();
    for (std::size_t i = 0; i < j; ++i) {
      if (G[i].plus.coprime(b.plus)) continue;
      pairs.push(Pair{G[i].plus.lcm(b.plus), i, j});
    }
    G.push_back(std::move(b));
  };

  for (const auto& gen : generators) {
    auto o = orient(gen, order);
    if (!o) continue;
    auto r = reduce(std::move(*o), G, order);
    if (r) insert(std::move(*r));
  }

  while (!pairs.empty()) {
    Pair p = pairs.top();
    pairs.pop();
    Int degree = 0;
    for (std::size_t k = 0; k < order.weights.size(); ++k) degree = checked_add(degree, checked_mul(p.lcm[k], order.weights[k]));
    if (degree > caps.max_degree) {
      throw Error(ErrorCode::CapExceeded, "S-pair degree " + std::to_string(degree) + " exceeds cap " +
                                              std::to_string(caps.max_degree));
    }
    auto s = s_polynomial(G[p.i], G[p.j], order);
    if (!s) continue;
    auto r = reduce(std::move(*s), G, order);
    if (r) insert(std::move(*r));
  }

  // Minimize: drop elements whose leading term is a multiple of another's.
  std::vector<Binomial> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j || !G[j].plus.divides(G[i].plus)) continue;
      redundant = G[j].plus != G[i].plus || j < i;
    }
    if (!redundant) minimal.push_back(G[i]);
  }
  // Interreduce tails against the other elements.
  std::vector<Binomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Binomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    reduced.push_back(*reduce(minimal[i], others, order));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&order](const Binomial& x, const Binomial& y) { return order.less(x.plus, y.plus); });
  G = std::move(reduced);
  return result;
}

std::optional<Binomial> normal_form(const Binomial& p, const GroebnerBasis& G) {
  auto o = orient(p, G.order);
  if (!o) return std::nullopt;
  return reduce(std::move(*o), G.elements, G.order);
}

bool is_s_pair_closed(const GroebnerBasis& G) {
  const auto& E = G.elements;
  for (std::size_t i = 0; i < E.size(); ++i) {
    for (std::size_t j = i + 1; j < E.size(); ++j) {
      auto s = s_polynomial(E[i], E[j], G.order);
      if (s && reduce(std::move(*s), E, G.order)) return false;
    }
  }
  return true;
}

std::optional<Int> quotient_dimension(const GroebnerBasis& G, std::optional<Int> count_limit) {
  const std::size_t n = G.order.weights.size();
  std::vector<Monomial> leads;
  for (const auto& g : G.elements) leads.push_back(g.plus);
  if (n == 0) return leads.empty() ? std::nullopt : std::optional<Int>(0);

  std::vector<Int> bound(n, 0);
  for (const auto& t : leads) {
    if (auto v = t.pure_power_variable()) {
      const Int e = t[*v];
      if (bound[*v] == 0 || e < bound[*v]) bound[*v] = e;
    } else if (t.is_one()) {
      return 0;
    }
  }
  if (std::any_of(bound.begin(), bound.end(), [](Int b) { return b == 0; })) return std::nullopt;

  Int count = 0;
  std::vector<Int> e(n, 0);
  auto divisible = [&] {
    for (const auto& t : leads) {
      bool div = true;
      for (std::size_t k = 0; k < n && div; ++k) div = t[k] <= e[k];
      if (div) return true;
    }
    return false;
  };
  // Walk the staircase one variable at a time; a divisible partial monomial
  // rules out every extension of it.
  std::function<bool(std::size_t)> walk = [&](std::size_t k) -> bool {
    if (k == n) {
      ++count;
      return !(count_limit && count > *count_limit);
    }
    for (e[k] = 0; e[k] < bound[k]; ++e[k]) {
      if (divisible()) break;
      if (!walk(k + 1)) return false;
    }
    e[k] = 0;
    return true;
  };
  walk(0);
  return count;
}

NakCertificate nak_certificate(const NumericalSemigroup& H, std::span<const Binomial> J, const GroebnerCaps& caps) {
  NakCertificate cert;
  const WeightedRing ring{H.generators()};
  cert.contained = std::all_of(J.begin(), J.end(), [&](const Binomial& b) {
    if (b.num_vars() != ring.num_vars()) throw Error(ErrorCode::DimensionMismatch, "generator has wrong number of variables");
    return is_in_defining_ideal(ring, b);
  });
  if (!cert.contained) return cert;

  std::vector<Binomial> gens;
  gens.reserve(J.size() + 1);
  gens.push_back(Binomial::monomial(Monomial::variable_power(ring.num_vars(), H.multiplicity_index(), 1)));
  gens.insert(gens.end(), J.begin(), J.end());
  const auto G = buchberger(gens, TermOrder{ring.weights}, caps);
  cert.dimension = quotient_dimension(G, H.multiplicity());
  cert.holds = cert.dimension == H.multiplicity();
  return cert;
}

}  // namespace sgforge
