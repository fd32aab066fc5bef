#include "upword/constructions.hpp"

#include <algorithm>
#include <unordered_set>

#include "upword/debruijn.hpp"

namespace upw {

std::string_view to_string(Family family) {
  switch (family) {
    case Family::Pos1: return "pos1";
    case Family::PosK: return "posk";
    case Family::TwoDiamonds: return "two_diamonds";
    case Family::Nm1Diamonds: return "nm1_diamonds";
    case Family::Trivial: return "trivial";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  if (name == "pos1") return Family::Pos1;
  if (name == "posk") return Family::PosK;
  if (name == "two_diamonds" || name == "two") return Family::TwoDiamonds;
  if (name == "nm1_diamonds" || name == "nm1") return Family::Nm1Diamonds;
  if (name == "trivial") return Family::Trivial;
  throw Error(Errc::BadParams, "unknown construction family '" + std::string(name) + "'");
}

namespace {

constexpr Symbol D = kDiamond;

Word repeat(Symbol s, int count) { return Word(static_cast<std::size_t>(std::max(count, 0)), s); }

Word concat(std::initializer_list<Word> parts) {
  Word out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

PartialWord binary(Word symbols) { return PartialWord(Alphabet(2), std::move(symbols)); }

/// Fail-closed: a constructor never returns a word the verifier rejects.
PartialWord verified(PartialWord u, int n, std::span<const Symbol> prefix, std::string_view family) {
  const bool prefix_ok = u.size() >= prefix.size() &&
                         std::equal(prefix.begin(), prefix.end(), u.symbols().begin());
  if (!prefix_ok)
    throw Error(Errc::Internal, std::string(family) + " output lost its prescribed prefix");
  if (!is_universal(u, n, false, {}, 4).universal)
    throw Error(Errc::Internal, std::string(family) + " output failed universality for n=" +
                                    std::to_string(n) + ": " + render(u));
  return u;
}

}  // namespace

PartialWord extend_by_eulerian_path(const PartialWord& prefix, int n, std::span<const Symbol> end) {
  if (n < 2) throw Error(Errc::BadParams, "Eulerian completion needs n >= 2");
  if (prefix.size() < static_cast<std::size_t>(n - 1))
    throw Error(Errc::BadParams, "prefix shorter than a graph vertex");
  const int alpha = prefix.alpha();
  DeBruijnGraph full(alpha, n - 1);

  std::vector<EdgeId> covered;
  std::unordered_set<EdgeId> seen;
  const std::size_t windows = window_count(prefix.size(), n, false);
  for (std::size_t i = 1; i <= windows; ++i) {
    for (WordIndex w : window_expansion(prefix, i, n, false).words) {
      if (!seen.insert(w).second)
        throw Error(Errc::Internal, "prefix " + render(prefix) + " repeats a factor");
      covered.push_back(w);
    }
  }
  const DeBruijnGraph rest = full.remove_edge_ids(covered).drop_isolated_vertices();

  const auto tail = prefix.symbols().last(static_cast<std::size_t>(n - 1));
  if (std::find(tail.begin(), tail.end(), kDiamond) != tail.end())
    throw Error(Errc::BadParams, "prefix must end with n-1 letters");
  const EdgeWalk walk = eulerian_path(rest, rest.vertex_of(tail), rest.vertex_of(end));

  std::vector<Symbol> symbols(prefix.symbols().begin(), prefix.symbols().end());
  for (EdgeId e : walk.edges) symbols.push_back(rest.last_letter(e));
  return PartialWord(prefix.alphabet(), std::move(symbols));
}

PartialWord construct_pos1(int n) {
  if (n < 2) throw Error(Errc::BadParams, "pos1 needs n >= 2");
  const Word prefix = concat({{D}, repeat(0, n - 1), {1}});
  const Word end = concat({{1}, repeat(0, n - 2)});
  return verified(extend_by_eulerian_path(binary(prefix), n, end), n, prefix, "pos1");
}

PartialWord construct_posk(int n, int k) {
  if (n < 3) throw Error(Errc::BadParams, "posk needs n >= 3");
  if (k < 2 || k > n - 1)
    throw Error(Errc::BadParams, "posk needs 2 <= k <= n-1, got k=" + std::to_string(k));

  const Word period = concat({{0}, repeat(1, k - 1)});
  const Word prefix =
      concat({{0}, repeat(1, k - 2), {D}, truncated_complement(binary(period), n)});

  // The general argument starts at n = 5; smaller cases are fixed words.
  if (n == 3) return verified(parse_partial_word("0*011100", 2), n, prefix, "posk");
  if (n == 4 && k == 2) return verified(parse_partial_word("0*010011011110000", 2), n, prefix, "posk");
  if (n == 4 && k == 3) return verified(parse_partial_word("01*0111100001010", 2), n, prefix, "posk");

  // End at the first n-1 letters with the diamond read as 0.
  Word end(prefix.begin(), prefix.begin() + (n - 1));
  std::replace(end.begin(), end.end(), D, Symbol{0});
  return verified(extend_by_eulerian_path(binary(prefix), n, end), n, prefix, "posk");
}

PartialWord construct_two_diamonds(int n) {
  if (n < 4) throw Error(Errc::BadParams, "two_diamonds needs n >= 4");
  const Word prefix =
      concat({{D}, repeat(0, n - 1), repeat(1, n - 2), {D}, {1}, repeat(0, n - 2), {1}});
  const Word end = concat({{0}, repeat(1, n - 2)});
  return verified(extend_by_eulerian_path(binary(prefix), n, end), n, prefix, "two_diamonds");
}

PartialWord construct_nm1_diamonds(int n) {
  if (n < 2) throw Error(Errc::BadParams, "nm1_diamonds needs n >= 2");
  const Word w = concat({repeat(D, n - 1), {0}, repeat(1, n)});
  return verified(binary(w), n, w, "nm1_diamonds");
}

PartialWord trivial(int n, int alpha) {
  if (n < 1) throw Error(Errc::BadParams, "trivial needs n >= 1");
  return PartialWord(Alphabet(alpha), repeat(D, n));
}

PartialWord construct(const ConstructionRequest& request) {
  switch (request.family) {
    case Family::Pos1: return construct_pos1(request.n);
    case Family::PosK: return construct_posk(request.n, request.k);
    case Family::TwoDiamonds: return construct_two_diamonds(request.n);
    case Family::Nm1Diamonds: return construct_nm1_diamonds(request.n);
    case Family::Trivial: return trivial(request.n);
  }
  throw Error(Errc::BadParams, "unknown family");
}

}  // namespace upw
