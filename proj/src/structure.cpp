#include "sgforge/structure.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "sgforge/disjoint_set.hpp"

namespace sgforge {

namespace {

[[noreturn]] void violated(const std::string& what) { throw Error(ErrorCode::HypothesisViolated, what); }
[[noreturn]] void contradiction(const std::string& what) { throw Error(ErrorCode::InternalContradiction, what); }

std::size_t index_of(const NumericalSemigroup& H, Int value, const std::string& role) {
  const auto& gens = H.generators();
  auto it = std::find(gens.begin(), gens.end(), value);
  if (it == gens.end()) contradiction(role + " " + std::to_string(value) + " is not a minimal generator");
  return static_cast<std::size_t>(it - gens.begin());
}

void check_common_hypotheses(const NumericalSemigroup& H, const ArithmeticPFProfile& profile) {
  const std::size_t n = H.embedding_dimension();
  if (n < 3) violated("embedding dimension " + std::to_string(n) + " < 3");
  if (H.multiplicity() < 3) violated("multiplicity " + std::to_string(H.multiplicity()) + " < 3");
  if (!is_stretched(stretched_profile(H))) violated("k[H]/(t^a1) is not stretched");
  if (profile.length != n - 1 || arithmetic_pf_profile(H) != profile) {
    violated("PF(H) is not the arithmetic sequence h + i*alpha of length n-1");
  }
}

ArithmeticPFProfile require_profile(const NumericalSemigroup& H) {
  auto profile = arithmetic_pf_profile(H);
  if (!profile) {
    violated("PF(H) has " + std::to_string(H.pseudo_frobenius().size()) +
             " elements and is not an arithmetic sequence of length n-1 = " +
             std::to_string(H.embedding_dimension() - 1));
  }
  return *profile;
}

Int exact_div(Int num, Int den, const std::string& what) {
  if (den == 0 || num % den != 0) {
    throw Error(ErrorCode::NonIntegralParameter,
                what + " = " + std::to_string(num) + "/" + std::to_string(den) + " is not an integer");
  }
  return num / den;
}

}  // namespace

std::string to_string(Branch b) {
  switch (b) {
    case Branch::J1: return "j=1";
    case Branch::JnMinus1: return "j=n-1";
    case Branch::Med: return "MED";
  }
  return "?";
}

std::optional<std::size_t> classify_apery(const NumericalSemigroup& H, const ArithmeticPFProfile& profile) {
  check_common_hypotheses(H, profile);
  const auto verdict = std::get<StretchedProfile>(stretched_profile(H));
  if (verdict.ell == 1) return std::nullopt;
  if (verdict.ell >= 3) return verdict.lambda_index;
  // ell == 2: the single extra Apery element must be twice a generator.
  const auto& gens = H.generators();
  const Int extra = gens[*verdict.lambda_index] + gens[*verdict.mu_index];
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i != H.multiplicity_index() && 2 * gens[i] == extra) return i;
  }
  contradiction("ell = 2 but the extra Apery element " + std::to_string(extra) + " is not 2*a_lambda");
}

std::optional<std::size_t> classify_apery(const NumericalSemigroup& H) {
  return classify_apery(H, require_profile(H));
}

JDetection detect_j(const NumericalSemigroup& H, const ArithmeticPFProfile& profile) {
  const auto lambda = classify_apery(H, profile);
  JDetection out;
  if (!lambda) return out;

  const Int n = static_cast<Int>(H.embedding_dimension());
  const Int a = H.multiplicity();
  const Int ell = a - n + 1;
  const Int b = H.generators()[*lambda];
  const Int lhs = checked_mul(ell, b);
  std::optional<Int> j;
  for (Int k = 1; k <= n - 1; ++k) {
    if (lhs == profile.h + k * profile.alpha + a) j = k;
  }
  if (!j) contradiction("no j with ell*b = h + j*alpha + a for b = " + std::to_string(b));
  if (*j != 1 && *j != n - 1) {
    contradiction("j = " + std::to_string(*j) + " lies strictly between 1 and n-1 = " + std::to_string(n - 1));
  }
  if (std::gcd(a, b) != 1) {
    contradiction("gcd(a, b) = gcd(" + std::to_string(a) + ", " + std::to_string(b) + ") != 1");
  }
  for (Int i = 1; i <= n - 1; ++i) {
    if (i == *j) continue;
    index_of(H, profile.h + i * profile.alpha + a, "h + " + std::to_string(i) + "*alpha + a =");
  }
  out.branch = (*j == 1) ? Branch::J1 : Branch::JnMinus1;
  out.j = *j;
  out.b = b;
  out.b_index = *lambda;
  return out;
}

MonomialMatrix DeterminantalCertificate::matrix_in_original_variables() const {
  return relabel(matrix, permutation);
}

std::vector<Binomial> DeterminantalCertificate::minors_in_original_variables() const {
  std::vector<Binomial> out;
  for (const auto& m : minors2(matrix)) out.push_back(canonical(relabel(m, permutation)));
  return out;
}

DeterminantalCertificate construct_matrix(const NumericalSemigroup& H, const ArithmeticPFProfile& profile,
                                          const GroebnerCaps& caps) {
  const JDetection detection = detect_j(H, profile);
  const std::size_t n = H.embedding_dimension();
  const Int a = H.multiplicity();
  const Int h = profile.h;
  const Int alpha = profile.alpha;

  DeterminantalCertificate cert;
  cert.branch = detection.branch;
  cert.j = detection.j;
  cert.a = a;
  cert.b = detection.b;
  cert.h = h;
  cert.alpha = alpha;
  cert.ell = a - static_cast<Int>(n) + 1;
  cert.permutation.push_back(H.multiplicity_index());

  auto pf_generator = [&](Int i) {
    return index_of(H, h + i * alpha + a, "h + " + std::to_string(i) + "*alpha + a =");
  };

  std::vector<Int> top(n, 1), bottom(n, 1);  // exponents; entry k is X_{k+1} / X_{k+2}
  switch (cert.branch) {
    case Branch::J1: {
      cert.permutation.push_back(*detection.b_index);
      for (Int i = 3; i <= static_cast<Int>(n); ++i) cert.permutation.push_back(pf_generator(i - 1));
      cert.h1 = exact_div(h - (cert.ell - 1) * *cert.b, a, "h1 = (h - (ell-1) b) / a");
      if (cert.h1 < 0) throw Error(ErrorCode::NonIntegralParameter, "h1 = " + std::to_string(cert.h1) + " is negative");
      cert.p = (cert.h1 + 1) * cert.ell + alpha;
      top[0] = cert.h1 + 1;
      top[1] = cert.ell;
      break;
    }
    case Branch::JnMinus1: {
      for (Int i = 2; i <= static_cast<Int>(n) - 1; ++i) cert.permutation.push_back(pf_generator(i - 1));
      cert.permutation.push_back(*detection.b_index);
      cert.h1 = exact_div(h, a, "h1 = h / a");
      cert.p = exact_div(cert.h1 + 1 + alpha, cert.ell, "p = (h1 + 1 + alpha) / ell");
      top[0] = cert.h1 + 1;
      bottom[n - 2] = cert.ell;
      break;
    }
    case Branch::Med: {
      for (Int i = 2; i <= static_cast<Int>(n); ++i) cert.permutation.push_back(pf_generator(i - 1));
      cert.h1 = exact_div(h, a, "h1 = h / a");
      cert.p = cert.h1 + 1 + alpha;
      top[0] = cert.h1 + 1;
      break;
    }
  }
  bottom[n - 1] = cert.p;

  std::vector<Monomial> top_row, bottom_row;
  for (std::size_t k = 0; k < n; ++k) {
    top_row.push_back(Monomial::variable_power(n, k, top[k]));
    bottom_row.push_back(Monomial::variable_power(n, (k + 1) % n, bottom[k]));
  }
  cert.matrix = MonomialMatrix(std::move(top_row), std::move(bottom_row));
  for (std::size_t idx : cert.permutation) cert.permuted_generators.push_back(H.generators()[idx]);

  const auto permuted = make_semigroup(cert.permuted_generators);
  cert.common_difference = check_common_difference(WeightedRing{cert.permuted_generators}, cert.matrix);
  const auto minors = minors2(cert.matrix);
  const auto nak = nak_certificate(permuted, minors, caps);
  cert.dimension = nak.dimension;
  if (!nak) {
    throw Error(ErrorCode::CertificationFailed,
                "minors of " + to_string(cert.matrix) + " do not certify (contained=" +
                    (nak.contained ? "yes" : "no") + ", dimension=" +
                    (nak.dimension ? std::to_string(*nak.dimension) : "inf") + ")");
  }
  cert.certified = true;
  return cert;
}

DeterminantalCertificate construct_matrix(const NumericalSemigroup& H, const GroebnerCaps& caps) {
  return construct_matrix(H, require_profile(H), caps);
}

bool complete_residue_check(Int ell, Int n, Int r) {
  const Int a = ell + n - 1;
  std::vector<bool> seen(static_cast<std::size_t>(a), false);
  auto mark = [&](Int v) {
    const auto r = static_cast<std::size_t>(mod(v, a));
    if (seen[r]) return false;
    seen[r] = true;
    return true;
  };
  for (Int i = 0; i <= ell; ++i) {
    if (!mark(i)) return false;
  }
  for (Int k = 1; k <= n - 2; ++k) {
    if (!mark(ell + k * r)) return false;
  }
  return true;
}

bool same_minimal_generator_structure(const NumericalSemigroup& H, const std::vector<Binomial>& first,
                                      const std::vector<Binomial>& second) {
  if (first.size() != second.size()) return false;
  const WeightedRing ring{H.generators()};
  auto by_degree = [&](const std::vector<Binomial>& set) {
    std::map<Int, std::vector<const Binomial*>> out;
    for (const auto& b : set) {
      if (!is_in_defining_ideal(ring, b)) return std::map<Int, std::vector<const Binomial*>>{};
      out[weighted_degree(ring, b.plus)].push_back(&b);
    }
    return out;
  };
  const auto lhs = by_degree(first);
  const auto rhs = by_degree(second);
  if (lhs.empty() || lhs.size() != rhs.size()) return first.empty() && second.empty();
  for (const auto& [degree, items] : lhs) {
    auto it = rhs.find(degree);
    if (it == rhs.end() || it->second.size() != items.size()) return false;
    const auto graph = factorization_graph(H, degree);
    std::map<std::vector<Int>, std::size_t> component_of;
    for (std::size_t c = 0; c < graph.components.size(); ++c) {
      for (std::size_t v : graph.components[c]) component_of[graph.vertices[v].coefficients] = c;
    }
    for (const auto* set : {&items, &it->second}) {
      // c - 1 edges joining all c components form a spanning tree.
      if (set->size() + 1 != graph.components.size()) return false;
      DisjointSet joined(graph.components.size());
      for (const Binomial* b : *set) {
        const std::size_t u = component_of.at(b->plus.exponents());
        const std::size_t v = component_of.at(b->minus->exponents());
        if (!joined.unite(u, v)) return false;
      }
    }
  }
  return true;
}

std::optional<ShapeMatch> find_cyclic_presentation(const NumericalSemigroup& H, const ToricGenerators& generators,
                                                   Int difference, const GroebnerCaps& caps) {
  const std::size_t n = H.embedding_dimension();
  const std::size_t pairs = n * (n - 1) / 2;
  if (n < 2 || generators.binomials.size() != pairs) return std::nullopt;
  const auto& gens = H.generators();
  const Int max_betti = generators.degrees.back();
  std::vector<Int> betti = generators.degrees;
  std::sort(betti.begin(), betti.end());

  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != H.multiplicity_index()) order.push_back(i);
  }
  std::sort(order.begin(), order.end());

  std::optional<ShapeMatch> found;
  do {
    std::vector<std::size_t> perm{H.multiplicity_index()};
    perm.insert(perm.end(), order.begin(), order.end());
    // Column k pairs top exponent t (on perm[k]) with bottom exponent m (on
    // perm[k+1]) subject to m * a_next - t * a_cur = difference.
    std::vector<std::vector<std::pair<Int, Int>>> choices(n);
    bool feasible = true;
    for (std::size_t k = 0; k < n && feasible; ++k) {
      const Int cur = gens[perm[k]];
      const Int next = gens[perm[(k + 1) % n]];
      for (Int t = 1; t * cur < max_betti; ++t) {
        const Int num = difference + t * cur;
        if (num % next != 0) continue;
        const Int m = num / next;
        if (m >= 1 && m * next < max_betti) choices[k].emplace_back(t, m);
      }
      feasible = !choices[k].empty();
    }
    if (!feasible) continue;

    std::vector<std::size_t> pick(n, 0);
    std::function<bool(std::size_t)> search = [&](std::size_t k) -> bool {
      if (k == n) {
        std::vector<Monomial> top, bottom;
        for (std::size_t c = 0; c < n; ++c) {
          top.push_back(Monomial::variable_power(n, perm[c], choices[c][pick[c]].first));
          bottom.push_back(Monomial::variable_power(n, perm[(c + 1) % n], choices[c][pick[c]].second));
        }
        MonomialMatrix M(std::move(top), std::move(bottom));
        const auto minors = minors2(M);
        const WeightedRing ring{gens};
        std::vector<Int> degrees;
        for (const auto& m : minors) degrees.push_back(weighted_degree(ring, m.plus));
        std::sort(degrees.begin(), degrees.end());
        if (degrees != betti) return false;
        if (!nak_certificate(H, minors, caps)) return false;
        found = ShapeMatch{perm, std::move(M)};
        return true;
      }
      for (pick[k] = 0; pick[k] < choices[k].size(); ++pick[k]) {
        if (search(k + 1)) return true;
      }
      return false;
    };
    if (search(0)) return found;
  } while (std::next_permutation(order.begin(), order.end()));
  return std::nullopt;
}

bool MainTheoremReport::falsifying() const {
  if (condition2_error && is_falsifying(*condition2_error)) return true;
  return condition2_holds() && minors_same_structure == false;
}

MainTheoremReport verify_main_theorem(const NumericalSemigroup& H, const MainTheoremOptions& options) {
  MainTheoremReport report;
  report.embedding_dimension = H.embedding_dimension();
  report.multiplicity = H.multiplicity();
  report.in_hypothesis = report.embedding_dimension >= 3 && report.multiplicity >= 3;
  report.stretched = stretched_profile(H);
  report.condition3 = arithmetic_pf_profile(H);
  if (!report.in_hypothesis) report.notes.push_back("out of hypothesis: requires n >= 3 and a1 >= 3");

  if (report.embedding_dimension >= 2) {
    try {
      report.generators = minimal_generators(H, SweepOptions{std::nullopt, options.caps});
    } catch (const Error& e) {
      report.generators_error = e.code();
      report.generators_message = e.what();
    }
  }

  if (report.in_hypothesis && report.stretched_holds() && report.condition3) {
    report.condition2_attempted = true;
    try {
      report.certificate = construct_matrix(H, *report.condition3, options.caps);
    } catch (const Error& e) {
      report.condition2_error = e.code();
      report.condition2_message = e.what();
    }
  }

  if (report.certificate && report.generators) {
    auto minors = report.certificate->minors_in_original_variables();
    auto gens = report.generators->binomials;
    std::sort(minors.begin(), minors.end());
    std::sort(gens.begin(), gens.end());
    report.minors_match_generators = minors == gens;
    report.minors_same_structure = same_minimal_generator_structure(H, minors, gens);
  }

  const bool stretched = report.stretched_holds();
  if (stretched && !report.condition3 && report.embedding_dimension >= 3 &&
      H.pseudo_frobenius().size() == report.embedding_dimension - 1) {
    report.notes.push_back("PF(H) has n-1 elements but is not arithmetic; no 2 x n determinantal presentation");
  }
  if (!report.condition2_attempted && report.condition3 && report.generators &&
      report.embedding_dimension >= 3 && report.embedding_dimension <= options.shape_match_max_n) {
    try {
      report.shape_match = find_cyclic_presentation(H, *report.generators, report.condition3->alpha, options.caps);
    } catch (const Error& e) {
      report.notes.push_back(std::string("shape match aborted: ") + e.what());
    }
    if (report.shape_match) {
      report.notes.push_back("beyond hypothesis: I_H = I_2(" + to_string(report.shape_match->matrix) + ")");
    }
  }
  return report;
}

}  // namespace sgforge
