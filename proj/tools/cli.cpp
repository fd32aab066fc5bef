#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <optional>
#include <sstream>

#include "upword/constructions.hpp"
#include "upword/feasibility.hpp"
#include "upword/search.hpp"
#include "upword/tables.hpp"
#include "upword/words.hpp"

namespace upw::cli {

namespace {

using nlohmann::json;

struct VerifyArgs {
  std::string word;
  int n = 0;
  int alpha = 2;
  bool cyclic = false;
  bool json = false;
  bool unicode = false;
};

struct ConstructArgs {
  std::string family;
  int n = 0;
  int k = 0;
  int alpha = 2;
  bool json = false;
  bool unicode = false;
};

struct FeasibleArgs {
  int alpha = 2;
  int n = 0;
  bool single = false;
  int k = 0;
  bool two = false;
  std::vector<std::size_t> shape;
  bool cyclic = false;
  bool prefix_run = false;
  int d = 0;
  std::string tmpl;
  bool json = false;
  bool unicode = false;
};

struct SearchArgs {
  int n = 0;
  int alpha = 2;
  std::size_t diamond_at = 0;
  std::vector<std::size_t> diamonds;
  std::size_t length = 0;
  std::string tmpl;
  bool cyclic = false;
  bool first = false;
  bool symmetry = false;
  bool no_prune = false;
  std::uint64_t max_nodes = SearchLimits{}.max_nodes;
  double time_limit = 0;
  int threads = 1;
  bool json = false;
  bool unicode = false;
};

struct TablesArgs {
  std::string which = "all";
  std::string data;
  int max_dash_n = 5;
  bool json = false;
};

Glyph glyph(bool unicode) { return unicode ? Glyph::Unicode : Glyph::Ascii; }

json word_json(const PartialWord& u, int n, bool cyclic, bool universal, bool unicode) {
  return {{"word", render(u, glyph(unicode))},
          {"alphabet", u.alpha()},
          {"n", n},
          {"cyclic", cyclic},
          {"universal", universal},
          {"violations", json::array()}};
}

std::string factor_text(WordIndex w, int alpha, int n) { return render_word(decode(w, alpha, n)); }

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const PartialWord u = parse_partial_word(a.word, a.alpha);
  const UniversalityReport r = is_universal(u, a.n, a.cyclic);

  if (a.json) {
    json j = word_json(u, a.n, a.cyclic, r.universal, a.unicode);
    for (WordIndex w : r.missing) j["violations"].push_back({{"kind", "missing"}, {"factor", factor_text(w, a.alpha, a.n)}});
    for (const Duplicate& d : r.duplicated)
      j["violations"].push_back({{"kind", "duplicate"},
                                 {"factor", factor_text(d.word, a.alpha, a.n)},
                                 {"count", d.count},
                                 {"windows", d.windows}});
    j["missing_total"] = r.missing_total;
    j["duplicated_total"] = r.duplicated_total;
    out << j.dump() << '\n';
  } else {
    out << "word: " << render(u, glyph(a.unicode)) << '\n'
        << "n: " << a.n << ", alphabet: " << a.alpha << ", " << (a.cyclic ? "cyclic" : "linear") << '\n'
        << "universal: " << (r.universal ? "yes" : "no") << '\n';
    for (WordIndex w : r.missing) out << "missing " << factor_text(w, a.alpha, a.n) << '\n';
    for (const Duplicate& d : r.duplicated) {
      out << "duplicate " << factor_text(d.word, a.alpha, a.n) << " x" << d.count << " at windows";
      for (std::size_t i : d.windows) out << ' ' << i;
      out << '\n';
    }
    if (r.missing.size() < r.missing_total || r.duplicated.size() < r.duplicated_total)
      out << "(" << r.missing_total << " missing, " << r.duplicated_total << " duplicated in total)\n";
  }
  return r.universal ? Success : Negative;
}

int cmd_construct(const ConstructArgs& a, std::ostream& out) {
  const Family family = parse_family(a.family);
  const PartialWord u = family == Family::Trivial ? trivial(a.n, a.alpha) : construct({family, a.n, a.k});
  const UniversalityReport r = is_universal(u, a.n, false);
  if (!r.universal) throw Error(Errc::Internal, "constructed word failed verification");
  if (a.json) {
    json j = word_json(u, a.n, false, true, a.unicode);
    j["family"] = to_string(family);
    out << j.dump() << '\n';
  } else {
    out << render(u, glyph(a.unicode)) << '\n'
        << "verified: universal for n=" << a.n << ", length " << u.size() << '\n';
  }
  return Success;
}

int cmd_feasible(const FeasibleArgs& a, std::ostream& out) {
  const int scenarios = int(a.single) + int(a.two) + int(a.prefix_run);
  if (scenarios > 1 || (scenarios == 1 && a.cyclic && !a.prefix_run))
    throw Error(Errc::BadParams, "choose one of --single-diamond, --two-diamonds, --prefix-run, --cyclic");
  if (scenarios == 0 && !a.cyclic)
    throw Error(Errc::BadParams, "no scenario given; use --single-diamond, --two-diamonds, --prefix-run or --cyclic");

  Verdict v;
  if (a.single) {
    if (a.k < 1) throw Error(Errc::BadParams, "--single-diamond needs --k >= 1");
    v = single_diamond_verdict(a.alpha, a.n, a.k);
  } else if (a.two) {
    if (a.alpha != 2) throw Error(Errc::BinaryOnly, "two-diamond verdicts are binary");
    if (a.shape.size() != 3) throw Error(Errc::BadParams, "--shape expects three lengths x,y,z");
    v = two_diamond_shape_verdict(a.n, a.shape[0], a.shape[1], a.shape[2]);
  } else if (a.prefix_run) {
    std::optional<DiamondTemplate> t;
    if (!a.tmpl.empty()) t = DiamondTemplate::parse(a.tmpl, a.alpha, a.n, a.cyclic);
    v = prefix_run_verdict(a.alpha, a.n, a.d, t ? &*t : nullptr);
  } else {
    v = cyclic_parameter_verdict(a.alpha, a.n);
  }

  if (a.json) {
    json j{{"alphabet", a.alpha}, {"n", a.n}, {"cyclic", a.cyclic && !a.prefix_run}, {"verdict", to_string(v.kind)}};
    if (v.theorem) j["theorem"] = to_string(*v.theorem);
    if (v.construction) j["construction"] = to_string(*v.construction);
    if (v.witness) j["word"] = render(*v.witness, glyph(a.unicode));
    if (a.cyclic && !a.prefix_run) j["feasible_d"] = v.feasible_d;
    if (!v.note.empty()) j["note"] = v.note;
    out << j.dump() << '\n';
    return Success;
  }
  out << "verdict: " << to_string(v.kind);
  if (v.theorem) out << ' ' << to_string(*v.theorem);
  out << '\n';
  if (v.construction) out << "construction: " << to_string(*v.construction) << '\n';
  if (a.cyclic && !a.prefix_run) {
    out << "feasible d:";
    if (v.feasible_d.empty()) out << " none";
    for (int d : v.feasible_d) out << ' ' << d;
    out << '\n';
  }
  if (v.witness) out << "witness: " << render(*v.witness, glyph(a.unicode)) << '\n';
  if (!v.note.empty()) out << "note: " << v.note << '\n';
  return Success;
}

int cmd_search(const SearchArgs& a, std::ostream& out) {
  const int given = int(a.diamond_at > 0) + int(!a.diamonds.empty()) + int(!a.tmpl.empty());
  if (given > 1) throw Error(Errc::BadParams, "use one of --diamond-at, --diamonds, --template");

  SearchSpec spec;
  if (!a.tmpl.empty()) {
    spec.tmpl = DiamondTemplate::parse(a.tmpl, a.alpha, a.n, a.cyclic);
    if (a.length != 0 && a.length != spec.tmpl.size())
      throw Error(Errc::BadParams, "--length disagrees with the template length");
  } else {
    if (a.length == 0) throw Error(Errc::BadParams, "--length is required without --template");
    std::vector<std::size_t> positions = a.diamonds;
    if (a.diamond_at > 0) positions = {a.diamond_at};
    spec.tmpl = DiamondTemplate::with_diamonds(a.alpha, a.n, a.cyclic, a.length, positions);
  }
  spec.mode = a.first ? SearchMode::First : SearchMode::All;
  spec.symmetry_reduction = a.symmetry;
  spec.pruning = !a.no_prune;
  spec.limits.max_nodes = a.max_nodes;
  spec.limits.time_limit = std::chrono::milliseconds(static_cast<std::int64_t>(a.time_limit * 1000));
  spec.threads = a.threads;

  const SearchResult r = exhaustive_search(spec);
  for (const PartialWord& w : r.witnesses) {
    if (a.json) out << word_json(w, a.n, a.cyclic, true, a.unicode).dump() << '\n';
    else out << render(w, glyph(a.unicode)) << '\n';
  }
  if (a.json) {
    json summary{{"witnesses", json::array()}, {"exhausted", r.exhausted}, {"nodes", r.nodes}};
    for (const PartialWord& w : r.witnesses) summary["witnesses"].push_back(render(w, glyph(a.unicode)));
    out << summary.dump() << '\n';
  } else {
    out << "summary: " << r.witnesses.size() << " witness" << (r.witnesses.size() == 1 ? "" : "es") << ", "
        << (r.exhausted ? "exhausted" : "truncated") << ", " << r.nodes << " nodes\n";
  }
  return r.exhausted ? Success : Negative;
}

int cmd_tables(const TablesArgs& a, std::ostream& out) {
  std::optional<int> table;
  if (a.which != "all") {
    if (a.which != "1" && a.which != "2" && a.which != "3")
      throw Error(Errc::BadParams, "table must be 1, 2, 3 or all");
    table = std::stoi(a.which);
  }
  std::vector<tables::TableEntry> loaded;
  if (!a.data.empty()) loaded = tables::load_tables(a.data);
  const auto& entries = a.data.empty() ? tables::bundled() : loaded;
  const tables::TableReport report = tables::check_tables(entries, table, a.max_dash_n);

  auto positions_text = [](const tables::TableEntry& e) {
    std::string s;
    for (std::size_t p : e.positions) s += (s.empty() ? "" : ",") + std::to_string(p);
    return s;
  };
  if (a.json) {
    json j{{"checks", json::array()}, {"failures", report.failures()}, {"ok", report.ok()}};
    for (const auto& c : report.checks) {
      json e{{"table", c.entry->table}, {"n", c.entry->n}, {"positions", c.entry->positions},
             {"ok", c.ok}, {"detail", c.detail}, {"refs", c.entry->refs}};
      if (c.entry->word) e["word"] = render(*c.entry->word);
      j["checks"].push_back(e);
    }
    out << j.dump() << '\n';
  } else {
    for (const auto& c : report.checks) {
      const auto& e = *c.entry;
      out << (c.ok ? "PASS" : "FAIL") << " table " << e.table << " n=" << e.n << " at " << positions_text(e) << ' '
          << (e.word ? render(*e.word) : std::string("-")) << ": " << c.detail << '\n';
    }
    out << report.checks.size() - report.failures() << '/' << report.checks.size() << " entries pass\n";
  }
  return report.ok() ? Success : Negative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"upword: universal partial words toolkit", "upword"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "check whether a partial word is universal");
  verify->add_option("word", va.word, "partial word, '*' for diamonds")->required();
  verify->add_option("--n", va.n, "factor length")->required()->check(CLI::PositiveNumber);
  verify->add_option("--alphabet", va.alpha, "alphabet size")->check(CLI::Range(2, 36));
  verify->add_flag("--cyclic", va.cyclic, "cyclic windows");
  verify->add_flag("--json", va.json, "JSON output");
  verify->add_flag("--unicode", va.unicode, "print diamonds as U+25CA");

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "build a word from a known family");
  construct->add_option("--family", ca.family, "pos1, posk, two_diamonds, nm1_diamonds or trivial")->required();
  construct->add_option("--n", ca.n, "factor length")->required();
  construct->add_option("--k", ca.k, "diamond position (posk)");
  construct->add_option("--alphabet", ca.alpha, "alphabet size (trivial)")->check(CLI::Range(2, 36));
  construct->add_flag("--json", ca.json, "JSON output");
  construct->add_flag("--unicode", ca.unicode, "print diamonds as U+25CA");

  FeasibleArgs fa;
  auto* feasible = app.add_subcommand("feasible", "existence verdict for a parameter set");
  feasible->add_option("--alphabet", fa.alpha, "alphabet size")->check(CLI::Range(2, 36));
  feasible->add_option("--n", fa.n, "factor length")->required()->check(CLI::PositiveNumber);
  feasible->add_flag("--single-diamond", fa.single, "one diamond at position --k");
  feasible->add_option("--k", fa.k, "diamond position");
  feasible->add_flag("--two-diamonds", fa.two, "two diamonds with --shape x,y,z");
  feasible->add_option("--shape", fa.shape, "lengths of the three letter blocks")->delimiter(',');
  feasible->add_flag("--cyclic", fa.cyclic, "cyclic words");
  feasible->add_flag("--prefix-run", fa.prefix_run, "words starting with --d diamonds");
  feasible->add_option("--d", fa.d, "number of leading diamonds");
  feasible->add_option("--template", fa.tmpl, "template: '?' free, '*' diamond, letters fixed");
  feasible->add_flag("--json", fa.json, "JSON output");
  feasible->add_flag("--unicode", fa.unicode, "print diamonds as U+25CA");

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "exhaustive search over a diamond template");
  search->add_option("--n", sa.n, "factor length")->required()->check(CLI::PositiveNumber);
  search->add_option("--alphabet", sa.alpha, "alphabet size")->check(CLI::Range(2, 36));
  search->add_option("--diamond-at", sa.diamond_at, "single diamond position (1-based)")->check(CLI::PositiveNumber);
  search->add_option("--diamonds", sa.diamonds, "diamond positions (1-based)")->delimiter(',');
  search->add_option("--length", sa.length, "word length");
  search->add_option("--template", sa.tmpl, "template: '?' free, '*' diamond, letters fixed");
  search->add_flag("--cyclic", sa.cyclic, "cyclic words");
  search->add_flag("--first", sa.first, "stop at the first witness");
  search->add_flag("--symmetry", sa.symmetry, "emit one word per symmetry class");
  search->add_flag("--no-prune", sa.no_prune, "disable propagation and early cuts");
  search->add_option("--max-nodes", sa.max_nodes, "node budget");
  search->add_option("--time-limit", sa.time_limit, "time budget in seconds (0: none)");
  search->add_option("--threads", sa.threads, "worker threads (0: OpenMP default)");
  search->add_flag("--json", sa.json, "JSON lines output");
  search->add_flag("--unicode", sa.unicode, "print diamonds as U+25CA");

  TablesArgs ta;
  auto* tables_cmd = app.add_subcommand("tables", "re-verify the bundled example tables");
  tables_cmd->add_option("table", ta.which, "1, 2, 3 or all");
  tables_cmd->add_option("--data", ta.data, "alternative table data file");
  tables_cmd->add_option("--max-dash-n", ta.max_dash_n, "largest n whose dashes are re-searched");
  tables_cmd->add_flag("--json", ta.json, "JSON output");

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("upword");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Success : Usage;
  }

  try {
    if (*verify) return cmd_verify(va, out);
    if (*construct) return cmd_construct(ca, out);
    if (*feasible) return cmd_feasible(fa, out);
    if (*search) return cmd_search(sa, out);
    if (*tables_cmd) return cmd_tables(ta, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == Errc::Internal ? InternalError : Usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return InternalError;
  }
  return Usage;
}

}  // namespace upw::cli
