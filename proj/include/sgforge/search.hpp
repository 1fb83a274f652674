#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "sgforge/enumerate.hpp"
#include "sgforge/record.hpp"

namespace sgforge {

struct SearchOptions {
  EnumerationBounds bounds;
  int jobs = 1;
  MainTheoremOptions theorem;
  bool timing = false;
};

// Reference implementation: one record per semigroup, in input order.
std::vector<RunRecord> analyze_serial(const std::vector<NumericalSemigroup>& semigroups,
                                      const MainTheoremOptions& options = {}, bool timing = false);

// OpenMP over independent semigroups. Each worker writes only its own slot, so
// the result is in input order regardless of `jobs`.
std::vector<RunRecord> analyze_parallel(const std::vector<NumericalSemigroup>& semigroups, int jobs,
                                        const MainTheoremOptions& options = {}, bool timing = false);

struct SearchSummary {
  std::size_t total = 0;
  std::map<std::string, std::size_t> verdicts;   // one verdict per record
  std::size_t in_hypothesis = 0;                  // stretched, condition (3), n >= 3, a1 >= 3
  std::size_t certified = 0;
  std::size_t minors_equal_generators = 0;
  std::size_t minors_generate_minimally = 0;
  std::size_t shape_matches = 0;
  std::size_t sweep_errors = 0;
  std::vector<std::vector<Int>> falsifying;       // generator tuples

  void add(const RunRecord& r);
};

// Classification used in the summary: "out-of-hypothesis", "not-stretched",
// "no-arithmetic-pf", "certified-cm", "certified-not-cm", "not-certified".
std::string verdict(const RunRecord& r);

SearchSummary summarize(const std::vector<RunRecord>& records);

}  // namespace sgforge
