// serial vs OpenMP search over a bounded enumeration
//   search_bench [max_multiplicity] [max_frobenius] [jobs]
#include <chrono>
#include <cstdlib>
#include <iostream>

#include <omp.h>

#include "sgforge/search.hpp"

using namespace sgforge;

template <class F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int main(int argc, char** argv) {
  EnumerationBounds bounds{argc > 1 ? std::atoll(argv[1]) : 7, argc > 2 ? std::atoll(argv[2]) : 30};
  const int jobs = argc > 3 ? std::atoi(argv[3]) : omp_get_max_threads();

  std::vector<NumericalSemigroup> semigroups;
  const double t_enum = seconds([&] { semigroups = enumerate_semigroups(bounds); });

  std::vector<RunRecord> serial, parallel;
  const double t_serial = seconds([&] { serial = analyze_serial(semigroups); });
  const double t_parallel = seconds([&] { parallel = analyze_parallel(semigroups, jobs); });

  std::cout << "semigroups " << semigroups.size() << " (m <= " << bounds.max_multiplicity
            << ", F <= " << bounds.max_frobenius << "), enumeration " << t_enum << " s\n";
  std::cout << "serial   " << t_serial << " s\n";
  std::cout << "parallel " << t_parallel << " s with " << jobs << " threads, speedup " << t_serial / t_parallel
            << "\n";
  std::cout << "identical: " << (serial == parallel ? "yes" : "NO") << "\n";
  return serial == parallel ? 0 : 1;
}
