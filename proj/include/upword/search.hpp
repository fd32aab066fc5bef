// search.hpp -- exhaustive search for universal partial words over a template
//
// exhaustive_search() is the fast path: letters are assigned left to right,
// coverage is maintained incrementally and a branch dies as soon as a factor
// is produced twice. With threads > 1 the search tree is cut at a shallow
// depth and the subtrees run under OpenMP; results are merged in subtree
// order, so the witness sequence is identical to the serial run.
//
// brute_force_oracle() is the trusted baseline. It enumerates every letter
// assignment and asks the verifier, with no propagation and no pruning.

#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <vector>

#include "upword/diamond_template.hpp"
#include "upword/words.hpp"

namespace upw {

enum class SearchMode { First, All };

struct SearchLimits {
  std::uint64_t max_nodes = 1'000'000'000;
  std::chrono::milliseconds time_limit{0};  ///< zero disables the clock
};

struct SearchSpec {
  DiamondTemplate tmpl;  ///< carries alpha, n and the cyclic flag
  SearchMode mode = SearchMode::All;
  bool symmetry_reduction = false;
  /// Off: no constraint seeding and no early cuts, only leaf checks.
  bool pruning = true;
  SearchLimits limits;
  int threads = 1;  ///< 0 picks the OpenMP default
};

struct SearchResult {
  std::vector<PartialWord> witnesses;
  bool exhausted = true;
  std::uint64_t nodes = 0;
};

struct PatternCount {
  std::uint64_t produced = 0;  ///< sum over windows of alpha^(diamonds in window)
  std::uint64_t required = 0;  ///< alpha^n
};

/// Throws CountMismatch unless the windows produce exactly alpha^n factors
/// (cyclic: also N = alpha^(n-d) with n | d*N for some 1 <= d <= n-1).
PatternCount pattern_length_check(const DiamondTemplate& t);
/// Non-throwing form of pattern_length_check.
bool pattern_consistent(const DiamondTemplate& t);

SearchResult exhaustive_search(const SearchSpec& spec);

/// Refuses templates with more than max_assignments letter assignments.
SearchResult brute_force_oracle(const SearchSpec& spec,
                                std::uint64_t max_assignments = std::uint64_t{1} << 22);

/// Whether a witness survives symmetry reduction for its template: the first
/// letter is 0 (templates without fixed letters) and, for mirror-symmetric
/// diamond layouts, the word is not larger than its normalized reversal.
bool is_canonical_representative(const DiamondTemplate& t, const PartialWord& w);

struct SweepOptions {
  SearchLimits limits;
  int threads = 1;
  SearchMode mode = SearchMode::First;
  bool allow_large = false;  ///< permit sweeps beyond alpha = 2, n = 7
};

/// Length of a word with a single diamond at nearer-end position k.
std::size_t single_diamond_word_length(int alpha, int n, std::size_t k);

/// Searches every nearer-end diamond position k for a single-diamond word.
std::map<int, SearchResult> sweep_single_diamond(int alpha, int n, const SweepOptions& options = {});

}  // namespace upw
