#include "upword/tables.hpp"

#include <fstream>
#include <sstream>

#include "upword/search.hpp"

namespace upw::tables {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

[[noreturn]] void bad_line(int line, const std::string& why) {
  throw Error(Errc::BadParams, "table data line " + std::to_string(line) + ": " + why);
}

}  // namespace

std::vector<TableEntry> parse_tables(std::string_view text) {
  std::vector<TableEntry> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    std::string table, n, positions, word, refs, extra;
    if (!(fields >> table)) continue;
    if (!(fields >> n >> positions >> word >> refs) || (fields >> extra)) bad_line(line_no, "expected 5 fields");

    TableEntry e;
    e.line = line_no;
    try {
      e.table = std::stoi(table);
      e.n = std::stoi(n);
      for (const auto& p : split(positions, ',')) e.positions.push_back(std::stoul(p));
    } catch (const std::logic_error&) {
      bad_line(line_no, "malformed number");
    }
    if (e.table < 1 || e.table > 3) bad_line(line_no, "table id must be 1, 2 or 3");
    if (e.n < 1) bad_line(line_no, "n must be positive");
    if (e.positions.empty()) bad_line(line_no, "no diamond positions");
    if (word != "-") {
      e.word = parse_partial_word(word, 2);
      if (e.word->diamond_positions() != e.positions)
        bad_line(line_no, "diamond positions do not match the word");
    }
    if (refs != "-") e.refs = split(refs, ',');
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<TableEntry> load_tables(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::BadParams, "cannot open table data " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_tables(buf.str());
}

const std::vector<TableEntry>& bundled() {
  static const std::vector<TableEntry> entries = parse_tables(bundled_table_text());
  return entries;
}

std::optional<PartialWord> find_witness(int table, int n, std::span<const std::size_t> positions) {
  for (const TableEntry& e : bundled())
    if (e.table == table && e.n == n && !e.is_dash() &&
        std::equal(e.positions.begin(), e.positions.end(), positions.begin(), positions.end()))
      return e.word;
  return std::nullopt;
}

bool TableReport::ok() const { return failures() == 0; }

std::size_t TableReport::failures() const {
  std::size_t bad = 0;
  for (const auto& c : checks) bad += !c.ok;
  return bad;
}

namespace {

EntryCheck check_witness(const TableEntry& e) {
  const auto report = is_universal(*e.word, e.n, false, {}, 4);
  if (report.universal) return {&e, true, "universal"};
  std::string detail = "not universal: " + std::to_string(report.missing_total) + " missing, " +
                       std::to_string(report.duplicated_total) + " duplicated";
  return {&e, false, detail};
}

EntryCheck check_dash(const TableEntry& e, int max_dash_n) {
  if (e.n > max_dash_n) return {&e, true, "skipped (n above search limit)"};
  if (e.positions.size() != 1) return {&e, false, "dash re-search supports single-diamond entries only"};
  const std::size_t k = e.positions.front();
  const std::size_t N = single_diamond_word_length(2, e.n, k);
  const std::size_t pos[] = {k};
  SearchSpec spec{DiamondTemplate::with_diamonds(2, e.n, false, N, pos)};
  const SearchResult r = exhaustive_search(spec);
  if (!r.exhausted) return {&e, false, "search budget exhausted"};
  if (!r.witnesses.empty()) return {&e, false, "search found " + render(r.witnesses.front())};
  return {&e, true, "no word exists (search exhausted, " + std::to_string(r.nodes) + " nodes)"};
}

}  // namespace

TableReport check_tables(const std::vector<TableEntry>& entries, std::optional<int> table, int max_dash_n) {
  TableReport report;
  for (const TableEntry& e : entries) {
    if (table && e.table != *table) continue;
    report.checks.push_back(e.is_dash() ? check_dash(e, max_dash_n) : check_witness(e));
  }
  return report;
}

}  // namespace upw::tables
