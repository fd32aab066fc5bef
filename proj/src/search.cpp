#include "upword/search.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <optional>

#include "upword/feasibility.hpp"

namespace upw {

// ---------------------------------------------------------------------------
// Pattern counting

namespace {

std::size_t diamonds_in_window(const DiamondTemplate& t, std::size_t start) {
  std::size_t d = 0;
  for (int j = 0; j < t.n; ++j) d += t.cells[(start + static_cast<std::size_t>(j)) % t.size()].is_diamond();
  return d;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

std::optional<std::string> count_problem(const DiamondTemplate& t, PatternCount& pc) {
  t.validate();
  pc.required = power(t.alpha, t.n);
  const std::size_t windows = window_count(t.size(), t.n, t.cyclic);
  if (!t.cyclic && windows == 0) return "template shorter than n";
  pc.produced = 0;
  for (std::size_t i = 0; i < windows; ++i) {
    const std::size_t d = diamonds_in_window(t, i);
    pc.produced = saturating_add(pc.produced, d >= 64 ? std::numeric_limits<std::uint64_t>::max()
                                                      : power(t.alpha, static_cast<int>(d)));
  }
  if (pc.produced != pc.required)
    return "windows produce " + std::to_string(pc.produced) + " factors, alpha^n = " +
           std::to_string(pc.required);
  if (t.cyclic && !t.diamond_positions().empty()) {
    const std::uint64_t N = t.size();
    bool feasible = false;
    for (int d = 1; d <= t.n - 1 && !feasible; ++d)
      feasible = power(t.alpha, t.n - d) == N && (static_cast<std::uint64_t>(d) * N) % static_cast<std::uint64_t>(t.n) == 0;
    if (!feasible)
      return "cyclic length " + std::to_string(N) + " is not alpha^(n-d) with n | d*N";
  }
  return std::nullopt;
}

}  // namespace

PatternCount pattern_length_check(const DiamondTemplate& t) {
  PatternCount pc;
  if (auto problem = count_problem(t, pc)) throw Error(Errc::CountMismatch, *problem);
  return pc;
}

bool pattern_consistent(const DiamondTemplate& t) {
  PatternCount pc;
  return !count_problem(t, pc).has_value();
}

bool is_canonical_representative(const DiamondTemplate& t, const PartialWord& w) {
  if (t.has_fixed_letters()) return true;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w.is_diamond(i)) continue;
    if (w[i] != 0) return false;
    break;
  }
  const auto positions = t.diamond_positions();
  const bool mirror = std::all_of(positions.begin(), positions.end(), [&](std::size_t p) {
    return t.cells[t.size() - p].is_diamond();
  });
  if (!mirror) return true;
  const PartialWord back = normalize_letters(reversed(w));
  return compare_symbols(w.symbols(), back.symbols()) <= 0;
}

// ---------------------------------------------------------------------------
// Search engine

namespace {

struct WindowPlan {
  std::vector<std::pair<std::size_t, WordIndex>> letters;  // cell, place value
  std::vector<WordIndex> deltas;                            // diamond completions
};

struct Plan {
  int alpha = 2;
  std::size_t N = 0;
  bool prune = true;
  WordIndex space = 0;
  std::vector<Cell> cells;
  std::vector<CellLink> links;
  std::vector<WindowPlan> windows;
  std::vector<std::vector<std::size_t>> completes_at;  // windows finishing at each position
  std::optional<std::size_t> zero_cell;                 // letter fixed to 0 by symmetry
  const DiamondTemplate* original = nullptr;
  bool symmetry = false;
};

Plan make_plan(const SearchSpec& spec, const DiamondTemplate& cells_from,
               const std::vector<CellLink>& links) {
  const DiamondTemplate& t = spec.tmpl;
  Plan p;
  p.alpha = t.alpha;
  p.N = t.size();
  p.prune = spec.pruning;
  p.space = power(t.alpha, t.n);
  if (p.space > (std::uint64_t{1} << 28)) throw Error(Errc::TooLarge, "factor space too large to search");
  p.cells = cells_from.cells;
  p.links = links;
  p.original = &spec.tmpl;
  p.symmetry = spec.symmetry_reduction;
  p.completes_at.resize(p.N);

  const std::size_t windows = window_count(p.N, t.n, t.cyclic);
  for (std::size_t s = 0; s < windows; ++s) {
    WindowPlan w;
    WordIndex place = power(t.alpha, t.n - 1);
    std::vector<WordIndex> diamond_places;
    for (int j = 0; j < t.n; ++j, place /= static_cast<WordIndex>(t.alpha)) {
      const std::size_t cell = (s + static_cast<std::size_t>(j)) % p.N;
      if (p.cells[cell].is_diamond()) diamond_places.push_back(place);
      else w.letters.emplace_back(cell, place);
    }
    const WordIndex combos = power(t.alpha, static_cast<int>(diamond_places.size()));
    if (combos > (std::uint64_t{1} << 20)) throw Error(Errc::TooLarge, "window expansion too large");
    w.deltas.assign(1, 0);
    for (WordIndex dp : diamond_places) {
      std::vector<WordIndex> next;
      next.reserve(w.deltas.size() * static_cast<std::size_t>(t.alpha));
      for (WordIndex base : w.deltas)
        for (int x = 0; x < t.alpha; ++x) next.push_back(base + dp * static_cast<WordIndex>(x));
      w.deltas = std::move(next);
    }
    const std::size_t last = std::min(s + static_cast<std::size_t>(t.n) - 1, p.N - 1);
    p.completes_at[t.cyclic && s + static_cast<std::size_t>(t.n) > p.N ? p.N - 1 : last].push_back(p.windows.size());
    p.windows.push_back(std::move(w));
  }

  if (spec.symmetry_reduction && !t.has_fixed_letters()) {
    for (std::size_t i = 0; i < p.N; ++i)
      if (!p.cells[i].is_diamond()) {
        p.zero_cell = i;
        break;
      }
  }
  return p;
}

/// State shared by all workers of one search.
struct Shared {
  std::uint64_t max_nodes = 0;
  std::chrono::steady_clock::time_point deadline = std::chrono::steady_clock::time_point::max();
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> out_of_budget{false};
  /// Smallest task index that has produced a witness (First mode).
  std::atomic<std::size_t> first_found{std::numeric_limits<std::size_t>::max()};
};

class Walker {
public:
  Walker(const Plan& plan, Shared& shared, SearchMode mode)
      : plan_(plan), shared_(shared), mode_(mode), vals_(plan.N, 0), counts_(plan.space, 0) {}

  /// Explores the subtree below `prefix`. Stops at split depth when given.
  void run(std::span<const Symbol> prefix, std::optional<std::size_t> split,
           std::vector<std::vector<Symbol>>* frontier, std::vector<PartialWord>& out,
           std::size_t task = 0) {
    out_ = &out;
    frontier_ = frontier;
    split_ = split;
    task_ = task;
    stop_ = false;
    for (std::size_t p = 0; p < prefix.size(); ++p) {
      vals_[p] = prefix[p];
      if (!add_windows(p)) return;  // cannot happen for frontier prefixes
    }
    dfs(prefix.size());
    flush_nodes();
  }

  bool aborted() const { return aborted_; }

private:
  void dfs(std::size_t p) {
    if (stop_) return;
    if (p == plan_.N) {
      emit();
      return;
    }
    if (split_ && p == *split_) {
      frontier_->emplace_back(vals_.begin(), vals_.begin() + static_cast<std::ptrdiff_t>(p));
      return;
    }
    const Cell& cell = plan_.cells[p];
    if (cell.is_diamond()) {
      vals_[p] = kDiamond;
      if (!count_node()) return;
      if (add_windows(p)) {
        dfs(p + 1);
        remove_windows(p);
      }
      return;
    }
    Symbol lo = 0, hi = static_cast<Symbol>(plan_.alpha - 1);
    if (cell.kind == Cell::Kind::Fixed) {
      lo = hi = cell.letter;
    } else if (plan_.links[p].representative != p) {
      const auto& link = plan_.links[p];
      Symbol v = vals_[link.representative];
      if (link.complemented) v ^= 1;
      lo = hi = v;
    } else if (plan_.zero_cell && *plan_.zero_cell == p) {
      lo = hi = 0;
    }
    for (int x = lo; x <= hi && !stop_; ++x) {
      if (!count_node()) return;
      vals_[p] = static_cast<Symbol>(x);
      if (add_windows(p)) {
        dfs(p + 1);
        remove_windows(p);
      }
    }
  }

  void emit() {
    std::vector<Symbol> symbols(vals_.begin(), vals_.end());
    PartialWord w(Alphabet(plan_.alpha), std::move(symbols));
    if (!plan_.prune) {
      if (overfull_ != 0) return;
    }
    if (plan_.symmetry && !is_canonical_representative(*plan_.original, w)) return;
    out_->push_back(std::move(w));
    if (mode_ == SearchMode::First) {
      stop_ = true;
      std::size_t cur = shared_.first_found.load();
      while (task_ < cur && !shared_.first_found.compare_exchange_weak(cur, task_)) {
      }
    }
  }

  bool count_node() {
    ++local_nodes_;
    if ((local_nodes_ & 1023) == 0) {
      flush_nodes();
      if (std::chrono::steady_clock::now() > shared_.deadline) shared_.out_of_budget = true;
      if (mode_ == SearchMode::First && shared_.first_found.load() < task_) stop_ = true;
    }
    if (synced_nodes_ + local_nodes_ > shared_.max_nodes || shared_.out_of_budget.load(std::memory_order_relaxed)) {
      shared_.out_of_budget = true;
      aborted_ = true;
      stop_ = true;
      return false;
    }
    return true;
  }

  void flush_nodes() {
    synced_nodes_ = shared_.nodes.fetch_add(local_nodes_) + local_nodes_;
    local_nodes_ = 0;
  }

  WordIndex window_base(const WindowPlan& w) const {
    WordIndex base = 0;
    for (auto [cell, place] : w.letters) base += place * vals_[cell];
    return base;
  }

  bool add_windows(std::size_t p) {
    for (std::size_t wi : plan_.completes_at[p]) {
      const WindowPlan& w = plan_.windows[wi];
      const WordIndex base = window_base(w);
      for (WordIndex d : w.deltas)
        if (++counts_[base + d] == 2) ++overfull_;
    }
    if (plan_.prune && overfull_ != 0) {
      remove_windows(p);
      return false;
    }
    return true;
  }

  void remove_windows(std::size_t p) {
    for (std::size_t wi : plan_.completes_at[p]) {
      const WindowPlan& w = plan_.windows[wi];
      const WordIndex base = window_base(w);
      for (WordIndex d : w.deltas)
        if (counts_[base + d]-- == 2) --overfull_;
    }
  }

  const Plan& plan_;
  Shared& shared_;
  SearchMode mode_;
  std::vector<Symbol> vals_;
  std::vector<std::uint32_t> counts_;
  std::uint64_t overfull_ = 0;
  std::uint64_t local_nodes_ = 0;
  std::uint64_t synced_nodes_ = 0;
  std::vector<PartialWord>* out_ = nullptr;
  std::vector<std::vector<Symbol>>* frontier_ = nullptr;
  std::optional<std::size_t> split_;
  std::size_t task_ = 0;
  bool stop_ = false;
  bool aborted_ = false;
};

/// First position after enough branching cells to give every thread work.
std::optional<std::size_t> split_position(const Plan& plan, int threads) {
  if (threads <= 1) return std::nullopt;
  const std::uint64_t wanted = static_cast<std::uint64_t>(threads) * 16;
  std::uint64_t branches = 1;
  for (std::size_t p = 0; p < plan.N; ++p) {
    const Cell& c = plan.cells[p];
    const bool branching = c.kind == Cell::Kind::Free && plan.links[p].representative == p &&
                           !(plan.zero_cell && *plan.zero_cell == p);
    if (branching) branches *= static_cast<std::uint64_t>(plan.alpha);
    if (branches >= wanted) return p + 1 < plan.N ? std::optional<std::size_t>(p + 1) : std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

SearchResult exhaustive_search(const SearchSpec& spec) {
  const DiamondTemplate& t = spec.tmpl;
  pattern_length_check(t);

  SearchResult result;
  DiamondTemplate seeded = t;
  std::vector<CellLink> links(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) links[i] = {i, false};
  if (spec.pruning) {
    PropagationResult prop = propagate_constraints(t);
    if (!prop.ok()) return result;  // empty and exhausted
    if (prop.refined.diamond_positions() != t.diamond_positions()) return result;
    seeded = std::move(prop.refined);
    links = std::move(prop.links);
  }

  const Plan plan = make_plan(spec, seeded, links);
  Shared shared;
  shared.max_nodes = spec.limits.max_nodes;
  if (spec.limits.time_limit.count() > 0)
    shared.deadline = std::chrono::steady_clock::now() + spec.limits.time_limit;

  const int threads = spec.threads > 0 ? spec.threads : omp_get_max_threads();
  const auto split = split_position(plan, threads);

  if (!split) {
    Walker walker(plan, shared, spec.mode);
    walker.run({}, std::nullopt, nullptr, result.witnesses);
    result.exhausted = !walker.aborted();
    result.nodes = shared.nodes.load();
    return result;
  }

  // The split lies above every leaf, so the frontier pass yields only prefixes.
  std::vector<std::vector<Symbol>> frontier;
  {
    std::vector<PartialWord> none;
    Walker walker(plan, shared, spec.mode);
    walker.run({}, split, &frontier, none);
    if (walker.aborted()) {
      result.exhausted = false;
      result.nodes = shared.nodes.load();
      return result;
    }
  }

  const auto tasks = static_cast<std::int64_t>(frontier.size());
  std::vector<std::vector<PartialWord>> found(frontier.size());
  std::vector<char> aborted(frontier.size(), 0);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::int64_t i = 0; i < tasks; ++i) {
    const auto task = static_cast<std::size_t>(i);
    if (spec.mode == SearchMode::First && shared.first_found.load() < task) continue;
    Walker walker(plan, shared, spec.mode);
    walker.run(frontier[task], std::nullopt, nullptr, found[task], task);
    aborted[task] = walker.aborted();
  }

  result.exhausted = std::none_of(aborted.begin(), aborted.end(), [](char a) { return a != 0; });
  for (auto& part : found) {
    for (auto& w : part) result.witnesses.push_back(std::move(w));
    if (spec.mode == SearchMode::First && !result.witnesses.empty()) {
      result.witnesses.erase(result.witnesses.begin() + 1, result.witnesses.end());
      break;
    }
  }
  result.nodes = shared.nodes.load();
  return result;
}

// ---------------------------------------------------------------------------
// Sweeps

std::size_t single_diamond_word_length(int alpha, int n, std::size_t k) {
  const std::size_t hit = std::min<std::size_t>(k, static_cast<std::size_t>(n));
  return power(alpha, n) + static_cast<std::size_t>(n) - 1 - static_cast<std::size_t>(alpha - 1) * hit;
}

std::map<int, SearchResult> sweep_single_diamond(int alpha, int n, const SweepOptions& options) {
  (void)Alphabet(alpha);
  if (n < 1) throw Error(Errc::BadParams, "n must be positive");
  if (!options.allow_large && (alpha > 2 ? power(alpha, n) > 128 : n > 7))
    throw Error(Errc::TooLarge, "sweep beyond alpha=2, n=7 needs an explicit override");

  std::map<int, SearchResult> out;
  for (std::size_t k = 1;; ++k) {
    const std::size_t N = single_diamond_word_length(alpha, n, k);
    if (N < static_cast<std::size_t>(n) || 2 * k > N + 1) break;
    const std::size_t pos[] = {k};
    SearchSpec spec{DiamondTemplate::with_diamonds(alpha, n, false, N, pos), options.mode, false, true,
                    options.limits, options.threads};
    if (!pattern_consistent(spec.tmpl)) {
      out[static_cast<int>(k)] = SearchResult{};
      continue;
    }
    out[static_cast<int>(k)] = exhaustive_search(spec);
  }
  return out;
}

}  // namespace upw
