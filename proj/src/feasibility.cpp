#include "upword/feasibility.hpp"

#include <algorithm>
#include <numeric>

#include "upword/tables.hpp"

namespace upw {

std::string_view to_string(TheoremId id) {
  switch (id) {
    case TheoremId::T3_1: return "T3.1";
    case TheoremId::T3_2: return "T3.2";
    case TheoremId::T3_3: return "T3.3";
    case TheoremId::T4_1: return "T4.1";
    case TheoremId::C4_2: return "C4.2";
    case TheoremId::C5_2: return "C5.2";
    case TheoremId::C5_3: return "C5.3";
    case TheoremId::T6_2: return "T6.2";
    case TheoremId::L5_1_count: return "L5.1-count";
    case TheoremId::N2D1: return "N2D1";
  }
  return "?";
}

std::optional<TheoremId> parse_theorem_id(std::string_view text) {
  for (auto id : {TheoremId::T3_1, TheoremId::T3_2, TheoremId::T3_3, TheoremId::T4_1, TheoremId::C4_2,
                  TheoremId::C5_2, TheoremId::C5_3, TheoremId::T6_2, TheoremId::L5_1_count,
                  TheoremId::N2D1})
    if (to_string(id) == text) return id;
  return std::nullopt;
}

std::string_view to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Exists: return "Exists";
    case VerdictKind::NonexistentBy: return "NonexistentBy";
    case VerdictKind::Unknown: return "Unknown";
  }
  return "?";
}

std::string_view to_string(ContradictionKind kind) {
  switch (kind) {
    case ContradictionKind::ForcedLetterClash: return "forced-letter-clash";
    case ContradictionKind::OddComplementCycle: return "odd-complement-cycle";
    case ContradictionKind::LetterOnDiamond: return "letter-on-diamond";
    case ContradictionKind::NonBinaryComplement: return "non-binary-complement";
    case ContradictionKind::DiamondOnLetter: return "diamond-on-letter";
  }
  return "?";
}

Verdict Verdict::exists(std::optional<Family> family, std::optional<PartialWord> witness,
                        std::string note) {
  Verdict v;
  v.kind = VerdictKind::Exists;
  v.construction = family;
  v.witness = std::move(witness);
  v.note = std::move(note);
  return v;
}

Verdict Verdict::nonexistent(TheoremId id, std::string note) {
  Verdict v;
  v.kind = VerdictKind::NonexistentBy;
  v.theorem = id;
  v.note = std::move(note);
  return v;
}

Verdict Verdict::unknown(std::string note, std::optional<PartialWord> witness) {
  Verdict v;
  v.kind = VerdictKind::Unknown;
  v.note = std::move(note);
  v.witness = std::move(witness);
  return v;
}

NormalizedPosition normalize_position(std::size_t k, std::size_t length) {
  if (k < 1 || k > length) throw Error(Errc::BadParams, "position outside the word");
  const std::size_t mirror = length + 1 - k;
  return mirror < k ? NormalizedPosition{mirror, true} : NormalizedPosition{k, false};
}

std::size_t single_diamond_length(int n, std::size_t k) {
  // (N - n + 1) windows plus one extra factor per window holding the diamond.
  const std::size_t space = power(2, n);
  const std::size_t hit = std::min<std::size_t>(k, static_cast<std::size_t>(n));
  return space + static_cast<std::size_t>(n) - 1 - hit;
}

// ---------------------------------------------------------------------------
// Single diamond

Verdict single_diamond_verdict(int alpha, int n, int k) {
  (void)Alphabet(alpha);
  if (n < 1 || k < 1) throw Error(Errc::BadParams, "need n >= 1 and k >= 1");
  if (n == 1) {
    if (k != 1) throw Error(Errc::BadParams, "for n = 1 the only single-diamond word is *");
    return Verdict::exists(Family::Trivial, trivial(1, alpha));
  }
  if (alpha >= 3) return Verdict::nonexistent(TheoremId::T3_1);

  const int max_k = 1 << (n - 1);  // nearer-end positions of a length 2^n - 1 word
  if (n > 30 || k > max_k)
    throw Error(Errc::BadParams, "k=" + std::to_string(k) + " is not a nearer-end position for n=" +
                                     std::to_string(n));
  if (k == n) return Verdict::nonexistent(TheoremId::T3_2);
  if ((n == 3 && k == 4) || (n == 4 && (k == 5 || k == 7))) return Verdict::nonexistent(TheoremId::T3_3);

  const std::size_t pos[] = {static_cast<std::size_t>(k)};
  auto bundled = tables::find_witness(1, n, pos);
  if (k == 1) return Verdict::exists(Family::Pos1, std::move(bundled));
  if (k <= n - 1) return Verdict::exists(Family::PosK, std::move(bundled));
  return Verdict::unknown("conjectured to exist (single-diamond conjecture); no general construction",
                          std::move(bundled));
}

// ---------------------------------------------------------------------------
// Two diamonds

namespace {

std::optional<PartialWord> bundled_two_diamond(int n, std::size_t lx, std::size_t ly, std::size_t lz) {
  const std::size_t forward[] = {lx + 1, lx + ly + 2};
  if (auto w = tables::find_witness(2, n, forward)) return w;
  const std::size_t backward[] = {lz + 1, lz + ly + 2};
  if (auto w = tables::find_witness(2, n, backward)) return reversed(*w);
  return std::nullopt;
}

bool two_diamond_counts_consistent(int n, std::size_t lx, std::size_t ly, std::size_t lz) {
  const std::size_t N = lx + ly + lz + 2;
  if (N < static_cast<std::size_t>(n) || n > 30) return false;
  const std::size_t positions[] = {lx + 1, lx + ly + 2};
  const DiamondTemplate t = DiamondTemplate::with_diamonds(2, n, false, N, positions);
  std::uint64_t total = 0;
  for (std::size_t i = 0; i + static_cast<std::size_t>(n) <= N; ++i) {
    int d = 0;
    for (std::size_t j = i; j < i + static_cast<std::size_t>(n); ++j) d += t.cells[j].is_diamond();
    total += std::uint64_t{1} << d;
  }
  return total == (std::uint64_t{1} << n);
}

}  // namespace

Verdict two_diamond_shape_verdict(int n, std::size_t lx, std::size_t ly, std::size_t lz) {
  if (n < 2) throw Error(Errc::BadParams, "two-diamond verdicts need n >= 2");
  const auto un = static_cast<std::size_t>(n);

  if (ly == 0) {
    // Adjacent diamonds: only ** (n = 2) and **0111 (n = 3) up to symmetry.
    if (n == 2 && lx == 0 && lz == 0) return Verdict::exists(std::nullopt, parse_partial_word("**", 2));
    if (n == 3 && lx == 0 && lz == 4) return Verdict::exists(Family::Nm1Diamonds, parse_partial_word("**0111", 2));
    if (n == 3 && lx == 4 && lz == 0) return Verdict::exists(std::nullopt, parse_partial_word("1110**", 2));
    return Verdict::nonexistent(TheoremId::C4_2);
  }

  if (n >= 4 && n <= 30) {
    const std::size_t tail = (std::size_t{1} << n) - 2 * un - 1;
    const bool forward = lx == 0 && ly == 2 * un - 3 && lz == tail;
    const bool backward = lz == 0 && ly == 2 * un - 3 && lx == tail;
    if (forward || backward) {
      auto w = bundled_two_diamond(n, lx, ly, lz);
      return Verdict::exists(Family::TwoDiamonds, std::move(w),
                             backward ? "reverse of the construction" : "");
    }
  }

  if (n >= 5) {
    if (lx >= un && ly >= un && lz >= un)
      return Verdict::nonexistent(TheoremId::T4_1, "all three segments have length >= n");
    if (lx == un - 1) return Verdict::nonexistent(TheoremId::T4_1, "|x| = n-1");
    if (lz == un - 1) return Verdict::nonexistent(TheoremId::T4_1, "|z| = n-1");
    if (ly <= un - 2) return Verdict::nonexistent(TheoremId::T4_1, "|y| <= n-2");
  }

  std::string note = "no applicable result";
  if (!two_diamond_counts_consistent(n, lx, ly, lz)) note += "; shape fails the factor-count check";
  return Verdict::unknown(std::move(note), bundled_two_diamond(n, lx, ly, lz));
}

// ---------------------------------------------------------------------------
// Cyclic

namespace {

std::uint64_t pow_mod(std::uint64_t base, int exp, std::uint64_t mod) {
  std::uint64_t r = 1 % mod;
  base %= mod;
  for (int i = 0; i < exp; ++i) r = (r * base) % mod;
  return r;
}

}  // namespace

Verdict cyclic_parameter_verdict(int alpha, int n) {
  (void)Alphabet(alpha);
  if (n < 2) throw Error(Errc::BadParams, "cyclic verdicts need n >= 2");
  if (std::gcd(alpha, n) == 1) return Verdict::nonexistent(TheoremId::C5_3);

  std::vector<int> ds;
  const auto un = static_cast<std::uint64_t>(n);
  for (int d = 1; d <= n - 1; ++d) {
    const std::uint64_t rem = (static_cast<std::uint64_t>(d) % un) *
                              pow_mod(static_cast<std::uint64_t>(alpha), n - d, un) % un;
    if (rem == 0) ds.push_back(d);
  }
  if (alpha == 2 && n == 2) {
    Verdict v = Verdict::nonexistent(TheoremId::N2D1, "the only candidate *0 repeats 00");
    v.feasible_d = {};
    return v;
  }
  if (ds.empty()) return Verdict::nonexistent(TheoremId::C5_2);
  Verdict v = Verdict::unknown("lengths alpha^(n-d) for the listed d remain possible");
  v.feasible_d = std::move(ds);
  if (alpha == 2 && n == 4) {
    v.witness = parse_partial_word("*001*110", 2);
    v.note += "; known witness *001*110 (d=1)";
  }
  return v;
}

// ---------------------------------------------------------------------------
// Leading diamond runs

Verdict prefix_run_verdict(int alpha, int n, int d, const DiamondTemplate* t) {
  (void)Alphabet(alpha);
  if (n < 1 || d < 1) throw Error(Errc::BadParams, "need n >= 1 and d >= 1");
  if (t) {
    t->validate();
    const auto ud = static_cast<std::size_t>(d);
    if (t->size() < ud) throw Error(Errc::BadParams, "template shorter than the diamond run");
    for (std::size_t i = 0; i < ud; ++i)
      if (!t->cells[i].is_diamond()) throw Error(Errc::BadParams, "template does not start with d diamonds");
    if (t->size() > ud && t->cells[ud].is_diamond())
      throw Error(Errc::BadParams, "template starts with more than d diamonds");
  }
  if (alpha == 2 && d == n - 1)
    return Verdict::exists(Family::Nm1Diamonds, n >= 2 ? std::optional(construct_nm1_diamonds(n)) : std::nullopt);
  if (alpha == 2 && n >= 4 && d >= 2 && d <= n - 2 && t) {
    const auto last = static_cast<std::size_t>(n + 2);
    bool letters = t->size() >= last;
    for (std::size_t i = static_cast<std::size_t>(d); letters && i < last; ++i)
      letters = t->cells[i].is_letter();
    if (letters) return Verdict::nonexistent(TheoremId::T6_2);
  }
  return Verdict::unknown("no applicable result");
}

// ---------------------------------------------------------------------------
// Propagation

namespace {

/// Union-find over cells and letter nodes with a parity bit (binary complement).
class ParityClasses {
public:
  ParityClasses(std::size_t cells, int alpha) : cells_(cells), alpha_(alpha) {
    const std::size_t letters = alpha == 2 ? 1 : static_cast<std::size_t>(alpha);
    parent_.resize(cells + letters);
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    parity_.assign(parent_.size(), 0);
    letter_.assign(parent_.size(), -1);
    for (std::size_t l = 0; l < letters; ++l) letter_[cells + l] = static_cast<int>(l);
  }

  std::pair<std::size_t, int> find(std::size_t x) {
    int p = 0;
    std::size_t r = x;
    while (parent_[r] != r) {
      p ^= parity_[r];
      r = parent_[r];
    }
    // compress
    int acc = p;
    while (parent_[x] != x) {
      const std::size_t next = parent_[x];
      const int px = parity_[x];
      parent_[x] = r;
      parity_[x] = acc;
      acc ^= px;
      x = next;
    }
    return {r, p};
  }

  /// Requires value(a) == value(b) XOR complement.
  std::optional<ContradictionKind> unite(std::size_t a, std::size_t b, int complement) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) {
      if ((pa ^ pb) != complement)
        return alpha_ == 2 && letter_[ra] >= 0 ? ContradictionKind::ForcedLetterClash
                                               : ContradictionKind::OddComplementCycle;
      return std::nullopt;
    }
    if (letter_[ra] >= 0 && letter_[rb] >= 0) return ContradictionKind::ForcedLetterClash;
    if (letter_[ra] >= 0) std::swap(ra, rb), std::swap(pa, pb);
    parent_[ra] = rb;
    parity_[ra] = pa ^ pb ^ complement;
    return std::nullopt;
  }

  std::size_t letter_node(Symbol v) const {
    return cells_ + (alpha_ == 2 ? 0 : static_cast<std::size_t>(v));
  }
  int letter_parity(Symbol v) const { return alpha_ == 2 ? int(v) : 0; }

  /// Letter forced on cell i, if any.
  std::optional<Symbol> forced_letter(std::size_t i) {
    auto [r, p] = find(i);
    if (letter_[r] < 0) return std::nullopt;
    return static_cast<Symbol>(alpha_ == 2 ? p : letter_[r]);
  }

private:
  std::size_t cells_;
  int alpha_;
  std::vector<std::size_t> parent_;
  std::vector<int> parity_;
  std::vector<int> letter_;
};

PropagationResult failed(PropagationResult r, ContradictionKind kind, std::string message) {
  r.contradiction = kind;
  r.message = std::move(message);
  return r;
}

PropagationResult propagate_cyclic(const DiamondTemplate& t) {
  PropagationResult r{t, {}, std::nullopt, {}};
  const std::size_t N = t.size();
  const std::size_t step = static_cast<std::size_t>(t.n) % N;
  // Positions k, k+n, k+2n, ... (mod N) form the residue classes mod gcd(n, N).
  const std::size_t g = std::gcd(step == 0 ? N : step, N);
  for (std::size_t c = 0; c < g; ++c) {
    bool has_diamond = false;
    for (std::size_t i = c; i < N; i += g) has_diamond |= t.cells[i].is_diamond();
    if (!has_diamond) continue;
    for (std::size_t i = c; i < N; i += g) {
      if (t.cells[i].kind == Cell::Kind::Fixed)
        return failed(std::move(r), ContradictionKind::DiamondOnLetter,
                      "periodicity forces a diamond onto fixed cell " + std::to_string(i + 1));
      r.refined.cells[i] = Cell::diamond();
    }
  }
  r.links.resize(N);
  for (std::size_t i = 0; i < N; ++i) r.links[i] = {i, false};
  return r;
}

}  // namespace

PropagationResult propagate_constraints(const DiamondTemplate& t, PropagationOptions options) {
  t.validate();
  if (t.cyclic) return propagate_cyclic(t);

  PropagationResult r{t, {}, std::nullopt, {}};
  const std::size_t N = t.size();
  const auto n = static_cast<std::size_t>(t.n);
  ParityClasses classes(N, t.alpha);

  for (std::size_t i = 0; i < N; ++i) {
    const Cell& c = t.cells[i];
    if (c.kind == Cell::Kind::Fixed) {
      if (auto bad = classes.unite(i, classes.letter_node(c.letter), classes.letter_parity(c.letter)))
        return failed(std::move(r), *bad, "fixed letters clash");
    }
  }

  const int orientations = options.both_orientations ? 2 : 1;
  for (int o = 0; o < orientations; ++o) {
    auto at = [&](std::size_t i) { return o == 0 ? i : N - 1 - i; };
    auto cell = [&](std::size_t i) -> const Cell& { return t.cells[at(i)]; };
    for (std::size_t k = 0; k + n < N; ++k) {
      if (!cell(k).is_diamond() || cell(k + n).is_diamond()) continue;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        if (cell(i).is_diamond()) continue;
        if (cell(k + 1 + i).is_diamond())
          return failed(std::move(r), ContradictionKind::LetterOnDiamond,
                        "cell " + std::to_string(at(k + 1 + i) + 1) + " must repeat a letter");
        if (auto bad = classes.unite(at(i), at(k + 1 + i), 0))
          return failed(std::move(r), *bad, "equality constraints clash");
      }
      if (!cell(n - 1).is_diamond()) {
        if (t.alpha != 2)
          return failed(std::move(r), ContradictionKind::NonBinaryComplement,
                        "a diamond followed by a letter at distance n needs a binary alphabet (T3.1)");
        if (auto bad = classes.unite(at(n - 1), at(k + n), 1))
          return failed(std::move(r), *bad, "complement constraint clashes");
      }
    }
  }

  r.links.resize(N);
  std::vector<std::size_t> first_of_root(N + static_cast<std::size_t>(t.alpha), N);
  for (std::size_t i = 0; i < N; ++i) {
    if (t.cells[i].is_diamond()) {
      r.links[i] = {i, false};
      continue;
    }
    if (auto v = classes.forced_letter(i)) r.refined.cells[i] = Cell::fixed(*v);
    auto [root, parity] = classes.find(i);
    if (first_of_root[root] == N) first_of_root[root] = i;
    const std::size_t rep = first_of_root[root];
    const int rep_parity = classes.find(rep).second;
    r.links[i] = {rep, (parity ^ rep_parity) != 0};
  }
  return r;
}

}  // namespace upw
