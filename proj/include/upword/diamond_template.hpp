// diamond_template.hpp -- positional layouts of diamonds, fixed and free letters

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "upword/words.hpp"

namespace upw {

struct Cell {
  enum class Kind : std::uint8_t { Free, Fixed, Diamond };
  Kind kind = Kind::Free;
  Symbol letter = 0;  ///< meaningful for Fixed only

  static Cell free() { return {}; }
  static Cell fixed(Symbol v) { return {Kind::Fixed, v}; }
  static Cell diamond() { return {Kind::Diamond, 0}; }

  bool is_diamond() const { return kind == Kind::Diamond; }
  bool is_letter() const { return kind != Kind::Diamond; }
  bool operator==(const Cell&) const = default;
};

/// A word shape to be filled: every non-diamond cell becomes a letter.
struct DiamondTemplate {
  int alpha = 2;
  int n = 1;
  bool cyclic = false;
  std::vector<Cell> cells;

  std::size_t size() const { return cells.size(); }
  /// 1-based diamond positions.
  std::vector<std::size_t> diamond_positions() const;
  std::size_t free_count() const;
  bool has_fixed_letters() const;
  /// Throws BadParams on an empty template, bad n or out-of-range letters.
  void validate() const;

  /// Template of the given length with diamonds at 1-based positions, all else free.
  static DiamondTemplate with_diamonds(int alpha, int n, bool cyclic, std::size_t length,
                                       std::span<const std::size_t> positions);
  /// Parses "0?*1?": '?' free, '*'/'.'/U+25CA diamond, letters fixed.
  static DiamondTemplate parse(std::string_view text, int alpha, int n, bool cyclic);
  /// Template matching a concrete partial word exactly (letters fixed).
  static DiamondTemplate from_word(const PartialWord& u, int n, bool cyclic);

  DiamondTemplate reversed() const;
  bool operator==(const DiamondTemplate&) const = default;
};

std::string render(const DiamondTemplate& t);

/// True when u has the template's length, diamonds exactly at its diamond
/// cells and every fixed letter in place.
bool matches(const DiamondTemplate& t, const PartialWord& u);

}  // namespace upw
