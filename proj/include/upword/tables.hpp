// tables.hpp -- bundled example data and its verification
//
// Data file format, one entry per line ('#' starts a comment):
//
//   <table> <n> <positions> <word-or-dash> <refs>
//
// positions is a comma-separated list of 1-based diamond positions, the word
// uses '*' for diamonds (or is '-' for an entry proved not to exist), and refs
// is a comma-separated list of result ids or '-'.

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "upword/words.hpp"

namespace upw::tables {

struct TableEntry {
  int table = 1;
  int n = 1;
  std::vector<std::size_t> positions;
  std::optional<PartialWord> word;  ///< empty for dash entries
  std::vector<std::string> refs;
  int line = 0;

  bool is_dash() const { return !word.has_value(); }
};

/// Text compiled into the library from data/upword_tables.txt.
std::string_view bundled_table_text();

std::vector<TableEntry> parse_tables(std::string_view text);
std::vector<TableEntry> load_tables(const std::filesystem::path& path);
const std::vector<TableEntry>& bundled();

/// Bundled witness with exactly these diamond positions, if any.
std::optional<PartialWord> find_witness(int table, int n, std::span<const std::size_t> positions);

struct EntryCheck {
  const TableEntry* entry = nullptr;
  bool ok = false;
  std::string detail;
};

struct TableReport {
  std::vector<EntryCheck> checks;
  bool ok() const;
  std::size_t failures() const;
};

/// Witness entries must be universal with their stated positions. Dash
/// entries with n <= max_dash_n are re-searched and must come back empty
/// and exhausted; larger dashes are reported as skipped (ok).
TableReport check_tables(const std::vector<TableEntry>& entries, std::optional<int> table = std::nullopt,
                         int max_dash_n = 5);

}  // namespace upw::tables
