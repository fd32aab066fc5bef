#include "upword/diamond_template.hpp"

#include <algorithm>

namespace upw {

std::vector<std::size_t> DiamondTemplate::diamond_positions() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (cells[i].is_diamond()) out.push_back(i + 1);
  return out;
}

std::size_t DiamondTemplate::free_count() const {
  return static_cast<std::size_t>(
      std::count_if(cells.begin(), cells.end(), [](const Cell& c) { return c.kind == Cell::Kind::Free; }));
}

bool DiamondTemplate::has_fixed_letters() const {
  return std::any_of(cells.begin(), cells.end(), [](const Cell& c) { return c.kind == Cell::Kind::Fixed; });
}

void DiamondTemplate::validate() const {
  (void)Alphabet(alpha);
  if (cells.empty()) throw Error(Errc::BadParams, "template has no cells");
  if (n < 1) throw Error(Errc::BadParams, "factor length must be positive");
  for (const Cell& c : cells)
    if (c.kind == Cell::Kind::Fixed && c.letter >= alpha)
      throw Error(Errc::BadParams, "fixed letter outside the alphabet");
}

DiamondTemplate DiamondTemplate::with_diamonds(int alpha, int n, bool cyclic, std::size_t length,
                                               std::span<const std::size_t> positions) {
  DiamondTemplate t{alpha, n, cyclic, std::vector<Cell>(length)};
  for (std::size_t p : positions) {
    if (p < 1 || p > length)
      throw Error(Errc::BadParams, "diamond position " + std::to_string(p) + " outside 1.." +
                                       std::to_string(length));
    t.cells[p - 1] = Cell::diamond();
  }
  t.validate();
  return t;
}

DiamondTemplate DiamondTemplate::parse(std::string_view text, int alpha, int n, bool cyclic) {
  // Route '?' through the word parser by parsing segments between them.
  DiamondTemplate t{alpha, n, cyclic, {}};
  std::size_t start = 0;
  auto flush = [&](std::size_t stop) {
    if (stop == start) return;
    const PartialWord part = parse_partial_word(text.substr(start, stop - start), alpha);
    for (Symbol s : part.symbols()) t.cells.push_back(s == kDiamond ? Cell::diamond() : Cell::fixed(s));
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '?') {
      flush(i);
      t.cells.push_back(Cell::free());
      start = i + 1;
    }
  }
  flush(text.size());
  t.validate();
  return t;
}

DiamondTemplate DiamondTemplate::from_word(const PartialWord& u, int n, bool cyclic) {
  DiamondTemplate t{u.alpha(), n, cyclic, {}};
  for (Symbol s : u.symbols()) t.cells.push_back(s == kDiamond ? Cell::diamond() : Cell::fixed(s));
  t.validate();
  return t;
}

DiamondTemplate DiamondTemplate::reversed() const {
  DiamondTemplate t = *this;
  std::reverse(t.cells.begin(), t.cells.end());
  return t;
}

std::string render(const DiamondTemplate& t) {
  std::string out;
  for (const Cell& c : t.cells) {
    switch (c.kind) {
      case Cell::Kind::Free: out += '?'; break;
      case Cell::Kind::Diamond: out += '*'; break;
      case Cell::Kind::Fixed: out += render_symbol(c.letter); break;
    }
  }
  return out;
}

bool matches(const DiamondTemplate& t, const PartialWord& u) {
  if (u.size() != t.size() || u.alpha() != t.alpha) return false;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Cell& c = t.cells[i];
    if (c.is_diamond() != u.is_diamond(i)) return false;
    if (c.kind == Cell::Kind::Fixed && u[i] != c.letter) return false;
  }
  return true;
}

}  // namespace upw
