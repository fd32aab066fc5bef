// Serial versus OpenMP kernels: window coverage and exhaustive search.

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>

#include <omp.h>

#include "upword/constructions.hpp"
#include "upword/diamond_template.hpp"
#include "upword/feasibility.hpp"
#include "upword/search.hpp"
#include "upword/words.hpp"

using namespace upw;

namespace {

template <class F>
double best_of(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void row(const std::string& name, double serial, double parallel, bool same) {
  std::cout << std::left << std::setw(34) << name << std::right << std::fixed << std::setprecision(4)
            << std::setw(10) << serial << std::setw(10) << parallel << std::setw(8) << std::setprecision(2)
            << (parallel > 0 ? serial / parallel : 0.0) << (same ? "   ok" : "   MISMATCH") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  const int threads = argc > 1 ? std::atoi(argv[1]) : omp_get_max_threads();
  const int reps = argc > 2 ? std::atoi(argv[2]) : 3;
  omp_set_num_threads(threads);
  std::cout << "threads " << threads << ", best of " << reps << "\n";
  std::cout << std::left << std::setw(34) << "kernel" << std::right << std::setw(10) << "serial s" << std::setw(10)
            << "omp s" << std::setw(8) << "speedup" << "\n";

  bool all_same = true;
  for (int n : {14, 18, 20}) {
    const PartialWord u = construct_posk(n, 3);
    CoverageMap a, b;
    const double s = best_of(reps, [&] { a = coverage(u, n, false); });
    const double p = best_of(reps, [&] { b = coverage_parallel(u, n, false); });
    all_same &= a == b;
    row("coverage posk n=" + std::to_string(n) + " k=3", s, p, a == b);
  }

  for (auto [n, k] : {std::pair{5, std::size_t{7}}, std::pair{5, std::size_t{12}}, std::pair{6, std::size_t{12}}}) {
    const std::size_t pos[] = {k};
    SearchSpec spec{DiamondTemplate::with_diamonds(2, n, false, single_diamond_length(n, k), pos)};
    spec.mode = n == 6 ? SearchMode::First : SearchMode::All;
    SearchResult a, b;
    const double s = best_of(reps, [&] {
      spec.threads = 1;
      a = exhaustive_search(spec);
    });
    const double p = best_of(reps, [&] {
      spec.threads = threads;
      b = exhaustive_search(spec);
    });
    const bool same = a.witnesses == b.witnesses && a.exhausted == b.exhausted;
    all_same &= same;
    row("search n=" + std::to_string(n) + " k=" + std::to_string(k) + (n == 6 ? " first" : " all"), s, p, same);
  }
  return all_same ? 0 : 1;
}
