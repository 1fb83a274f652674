#include "sgforge/search.hpp"

#include <omp.h>

namespace sgforge {

std::vector<RunRecord> analyze_serial(const std::vector<NumericalSemigroup>& semigroups,
                                      const MainTheoremOptions& options, bool timing) {
  std::vector<RunRecord> out;
  out.reserve(semigroups.size());
  for (const auto& H : semigroups) out.push_back(analyze(H, options, timing));
  return out;
}

std::vector<RunRecord> analyze_parallel(const std::vector<NumericalSemigroup>& semigroups, int jobs,
                                        const MainTheoremOptions& options, bool timing) {
  std::vector<RunRecord> out(semigroups.size());
  const auto count = static_cast<std::ptrdiff_t>(semigroups.size());
#pragma omp parallel for schedule(dynamic, 8) num_threads(jobs > 0 ? jobs : 1)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = analyze(semigroups[static_cast<std::size_t>(i)], options, timing);
  }
  return out;
}

std::string verdict(const RunRecord& r) {
  const auto& t = r.theorem;
  if (r.embedding_dimension < 3 || r.multiplicity < 3) return "out-of-hypothesis";
  if (!r.stretched.stretched) return "not-stretched";
  if (!t.pf_h) return "no-arithmetic-pf";
  if (!r.tangent_cone) return "not-certified";
  return r.tangent_cone->cm_formula ? "certified-cm" : "certified-not-cm";
}

void SearchSummary::add(const RunRecord& r) {
  ++total;
  ++verdicts[verdict(r)];
  if (r.theorem.condition2_attempted) ++in_hypothesis;
  if (r.theorem.certificate && r.theorem.certificate->certified) ++certified;
  if (r.theorem.minors_match_generators == true) ++minors_equal_generators;
  if (r.theorem.minors_same_structure == true) ++minors_generate_minimally;
  if (r.theorem.shape_match) ++shape_matches;
  if (r.theorem.generators_error) ++sweep_errors;
  if (r.falsifying()) falsifying.push_back(r.generators);
}

SearchSummary summarize(const std::vector<RunRecord>& records) {
  SearchSummary s;
  for (const auto& r : records) s.add(r);
  return s;
}

}  // namespace sgforge
