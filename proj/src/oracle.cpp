#include "upword/search.hpp"

namespace upw {

SearchResult brute_force_oracle(const SearchSpec& spec, std::uint64_t max_assignments) {
  const DiamondTemplate& t = spec.tmpl;
  t.validate();

  std::vector<std::size_t> free_cells;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t.cells[i].kind == Cell::Kind::Free) free_cells.push_back(i);

  std::uint64_t total = 1;
  for (std::size_t i = 0; i < free_cells.size(); ++i) {
    total *= static_cast<std::uint64_t>(t.alpha);
    if (total > max_assignments)
      throw Error(Errc::TooLarge, "oracle refuses " + std::to_string(free_cells.size()) + " free cells");
  }

  std::vector<Symbol> symbols(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Cell& c = t.cells[i];
    symbols[i] = c.is_diamond() ? kDiamond : c.letter;
  }

  SearchResult result;
  // Odometer with the first free cell most significant, so witnesses come out
  // in lexicographic order.
  std::vector<Symbol> digits(free_cells.size(), 0);
  for (std::uint64_t step = 0; step < total; ++step) {
    for (std::size_t j = 0; j < free_cells.size(); ++j) symbols[free_cells[j]] = digits[j];
    ++result.nodes;
    PartialWord u(Alphabet(t.alpha), symbols);
    if (is_universal(u, t.n, t.cyclic, {}, 0).universal &&
        (!spec.symmetry_reduction || is_canonical_representative(t, u))) {
      result.witnesses.push_back(std::move(u));
      if (spec.mode == SearchMode::First) break;
    }
    for (std::size_t j = free_cells.size(); j-- > 0;) {
      if (++digits[j] < t.alpha) break;
      digits[j] = 0;
    }
  }
  return result;
}

}  // namespace upw
