// Coverage kernels. coverage() is the serial reference; coverage_parallel()
// splits the windows across OpenMP threads and must agree with it exactly.

#include <omp.h>

#include <algorithm>
#include <map>

#include "upword/words.hpp"

namespace upw {

namespace {

struct WindowShape {
  WordIndex base = 0;
  std::vector<WordIndex> weights;  // place values of diamonds in the window
};

void check_arguments(const PartialWord& u, int n, bool cyclic, const VerifierLimits& limits) {
  if (n < 1) throw Error(Errc::BadParams, "factor length must be positive");
  if (!cyclic && u.size() < static_cast<std::size_t>(n))
    throw Error(Errc::BadWindow, "word of length " + std::to_string(u.size()) +
                                     " has no linear window of length " + std::to_string(n));
  if (power(u.alpha(), n) > limits.max_factor_space)
    throw Error(Errc::TooLarge, "factor space alpha^n exceeds the verifier limit");
}

void shape_window(const PartialWord& u, std::size_t start0, int n, WindowShape& shape) {
  const auto alpha = static_cast<WordIndex>(u.alpha());
  const std::size_t N = u.size();
  shape.base = 0;
  shape.weights.clear();
  for (int j = 0; j < n; ++j) {
    const Symbol s = u[(start0 + static_cast<std::size_t>(j)) % N];
    for (auto& w : shape.weights) w *= alpha;
    shape.base *= alpha;
    if (s == kDiamond) shape.weights.push_back(1);
    else shape.base += s;
  }
}

/// Calls visit(word) for every completion of the window.
template <typename Visit>
void for_each_completion(const WindowShape& shape, int alpha, int n, WordIndex space,
                         const VerifierLimits& limits, Visit&& visit) {
  const std::size_t d = shape.weights.size();
  if (d == static_cast<std::size_t>(n)) {
    for (WordIndex v = 0; v < space; ++v) visit(v);
    return;
  }
  const WordIndex combos = power(alpha, static_cast<int>(d));
  if (combos > limits.max_window_expansion)
    throw Error(Errc::TooLarge, "window expansion of " + std::to_string(combos) + " words");
  if (d == 0) {
    visit(shape.base);
    return;
  }
  std::vector<int> digit(d, 0);
  WordIndex v = shape.base;
  for (WordIndex c = 0; c < combos; ++c) {
    visit(v);
    for (std::size_t j = d; j-- > 0;) {
      if (++digit[j] < alpha) {
        v += shape.weights[j];
        break;
      }
      v -= shape.weights[j] * static_cast<WordIndex>(alpha - 1);
      digit[j] = 0;
    }
  }
}

}  // namespace

std::uint64_t CoverageMap::total() const {
  std::uint64_t t = 0;
  for (auto c : counts) t += c;
  return t;
}

CoverageMap coverage(const PartialWord& u, int n, bool cyclic, const VerifierLimits& limits) {
  check_arguments(u, n, cyclic, limits);
  const WordIndex space = power(u.alpha(), n);
  CoverageMap map{u.alpha(), n, std::vector<std::uint32_t>(space, 0)};
  WindowShape shape;
  const std::size_t windows = window_count(u.size(), n, cyclic);
  for (std::size_t i = 0; i < windows; ++i) {
    shape_window(u, i, n, shape);
    for_each_completion(shape, u.alpha(), n, space, limits, [&](WordIndex v) { ++map.counts[v]; });
  }
  return map;
}

CoverageMap coverage_parallel(const PartialWord& u, int n, bool cyclic,
                              const VerifierLimits& limits) {
  check_arguments(u, n, cyclic, limits);
  const WordIndex space = power(u.alpha(), n);
  CoverageMap map{u.alpha(), n, std::vector<std::uint32_t>(space, 0)};
  const auto windows = static_cast<std::int64_t>(window_count(u.size(), n, cyclic));
  std::uint32_t* counts = map.counts.data();

  // Exceptions must not escape an OpenMP region; remember the first one.
  bool failed = false;
  Error first_error(Errc::Internal, "unset");

#pragma omp parallel
  {
    WindowShape shape;
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < windows; ++i) {
      bool skip;
#pragma omp atomic read
      skip = failed;
      if (skip) continue;
      try {
        shape_window(u, static_cast<std::size_t>(i), n, shape);
        for_each_completion(shape, u.alpha(), n, space, limits, [&](WordIndex v) {
#pragma omp atomic update
          ++counts[v];
        });
      } catch (const Error& e) {
#pragma omp critical(upw_coverage_error)
        {
          if (!failed) first_error = e;
#pragma omp atomic write
          failed = true;
        }
      }
    }
  }
  if (failed) throw first_error;
  return map;
}

UniversalityReport is_universal(const PartialWord& u, int n, bool cyclic,
                                const VerifierLimits& limits, std::size_t max_listed) {
  // Small words are faster serially; both kernels agree exactly.
  const CoverageMap map = u.size() >= (std::size_t{1} << 15) ? coverage_parallel(u, n, cyclic, limits)
                                                              : coverage(u, n, cyclic, limits);
  UniversalityReport report;
  report.alpha = u.alpha();
  report.n = n;

  std::map<WordIndex, std::size_t> listed;  // duplicated word -> slot in report
  for (WordIndex v = 0; v < map.counts.size(); ++v) {
    const auto c = map.counts[v];
    if (c == 0) {
      ++report.missing_total;
      if (report.missing.size() < max_listed) report.missing.push_back(v);
    } else if (c > 1) {
      ++report.duplicated_total;
      if (report.duplicated.size() < max_listed) {
        listed.emplace(v, report.duplicated.size());
        report.duplicated.push_back({v, c, {}});
      }
    }
  }
  report.universal = report.missing_total == 0 && report.duplicated_total == 0;

  if (!listed.empty()) {
    WindowShape shape;
    const WordIndex space = map.counts.size();
    const std::size_t windows = window_count(u.size(), n, cyclic);
    for (std::size_t i = 0; i < windows; ++i) {
      shape_window(u, i, n, shape);
      for_each_completion(shape, u.alpha(), n, space, limits, [&](WordIndex v) {
        if (auto it = listed.find(v); it != listed.end())
          report.duplicated[it->second].windows.push_back(i + 1);
      });
    }
  }
  return report;
}

}  // namespace upw
