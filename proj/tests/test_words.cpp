#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "helpers.hpp"
#include "upword/words.hpp"

using namespace upw;
using testing::pw;
using testing::str;

namespace {

WordIndex idx(const std::string& bits, int alpha = 2) {
  Word w;
  for (char c : bits) w.push_back(static_cast<Symbol>(c - '0'));
  return encode(w, alpha);
}

std::vector<WordIndex> ids(std::initializer_list<const char*> words) {
  std::vector<WordIndex> out;
  for (const char* w : words) out.push_back(idx(w));
  return out;
}

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an upw::Error");
  return Errc::Internal;
}

}  // namespace

TEST_CASE("parse decodes letters and diamond glyphs") {
  const PartialWord u = pw("0*011100");
  const std::vector<Symbol> want{0, kDiamond, 0, 1, 1, 1, 0, 0};
  CHECK(std::equal(u.symbols().begin(), u.symbols().end(), want.begin(), want.end()));

  const PartialWord v = pw("12*11*", 3);
  const std::vector<Symbol> want3{1, 2, kDiamond, 1, 1, kDiamond};
  CHECK(std::equal(v.symbols().begin(), v.symbols().end(), want3.begin(), want3.end()));

  CHECK(pw("0.1") == pw("0*1"));
  CHECK(pw("0◊1") == pw("0*1"));
  CHECK(pw("a9z", 36)[2] == 35);
}

TEST_CASE("parse rejects bad input") {
  CHECK(code_of([] { pw("021"); }) == Errc::OutOfAlphabet);
  CHECK(code_of([] { pw(""); }) == Errc::EmptyWord);
  CHECK(code_of([] { pw("0x1"); }) == Errc::OutOfAlphabet);
  CHECK(code_of([] { Alphabet(1); }) == Errc::BadParams);
  CHECK(code_of([] { Alphabet(37); }) == Errc::BadParams);
}

TEST_CASE("render round-trips through parse") {
  for (const char* text : {"0*011100", "***01111", "*", "1010"}) CHECK(str(pw(text)) == text);
  CHECK(render(pw("0*1"), Glyph::Unicode) == "0◊1");
  CHECK(pw(render(pw("12*11*", 3), Glyph::Unicode), 3) == pw("12*11*", 3));
}

TEST_CASE("encode and decode are inverse, most significant letter first") {
  CHECK(idx("110") == 6);
  CHECK(decode(6, 2, 3) == Word{1, 1, 0});
  for (WordIndex w = 0; w < 81; ++w) CHECK(encode(decode(w, 3, 4), 3) == w);
  CHECK(code_of([] { power(2, 70); }) == Errc::TooLarge);
}

TEST_CASE("window expansion") {
  CHECK(window_expansion(pw("0*011100"), 1, 3, false).words == ids({"000", "010"}));
  CHECK(window_expansion(pw("**0111"), 1, 3, false).words == ids({"000", "010", "100", "110"}));
  CHECK(window_expansion(pw("0001011100"), 1, 3, false).words == ids({"000"}));
  // cyclic windows wrap around
  CHECK(window_expansion(pw("*001*110"), 7, 4, true).words == ids({"1000", "1010"}));

  CHECK(code_of([] { window_expansion(pw("0*011100"), 7, 3, false); }) == Errc::BadWindow);
  CHECK(code_of([] { window_expansion(pw("0*011100"), 0, 3, false); }) == Errc::BadWindow);
  CHECK(code_of([] { window_expansion(pw("01"), 1, 3, false); }) == Errc::BadWindow);
  CHECK(code_of([] { window_expansion(pw("01"), 3, 3, true); }) == Errc::BadWindow);
}

TEST_CASE("coverage counts") {
  const CoverageMap a = coverage(pw("**01110"), 3, false);
  CHECK(a.counts[idx("110")] == 2);

  const CoverageMap b = coverage(pw("0*1"), 2, false);
  CHECK(b.counts[idx("10")] == 0);
  CHECK(b.counts[idx("01")] == 2);

  const CoverageMap c = coverage(pw("*001*110"), 4, true);
  CHECK(std::all_of(c.counts.begin(), c.counts.end(), [](auto x) { return x == 1; }));

  CHECK_THROWS_AS(coverage(pw("01"), 3, false), Error);
}

TEST_CASE("all-diamond windows are not expanded but still counted") {
  VerifierLimits tight;
  tight.max_window_expansion = 4;
  CHECK(is_universal(pw("*****"), 5, false, tight).universal);
  CHECK_THROWS_AS(coverage(pw("****0"), 5, false, tight), Error);
}

TEST_CASE("is_universal") {
  CHECK(is_universal(pw("0*011100"), 3, false).universal);
  CHECK(is_universal(pw("0001011100"), 3, false).universal);
  CHECK(is_universal(pw("**"), 2, false).universal);

  const UniversalityReport r = is_universal(pw("*0"), 2, true);
  CHECK_FALSE(r.universal);
  CHECK(r.missing == ids({"11"}));
  REQUIRE(r.duplicated.size() == 1);
  CHECK(r.duplicated[0].word == idx("00"));
  CHECK(r.duplicated[0].count == 2);
  CHECK(r.duplicated[0].windows == std::vector<std::size_t>{1, 2});
}

TEST_CASE("duplicate windows are reported with their start positions") {
  const UniversalityReport r = is_universal(pw("**01110"), 3, false);
  CHECK_FALSE(r.universal);
  auto it = std::find_if(r.duplicated.begin(), r.duplicated.end(), [](const Duplicate& d) { return d.word == 6; });
  REQUIRE(it != r.duplicated.end());
  CHECK(it->windows == std::vector<std::size_t>{1, 5});
  CHECK(r.missing_total == r.missing.size());
}

TEST_CASE("truncated complement") {
  CHECK(truncated_complement(pw("011"), 7) == Word{0, 1, 1, 0, 1, 1, 1});
  CHECK(truncated_complement(pw("011"), 8) == Word{0, 1, 1, 0, 1, 1, 0, 0});
  CHECK(truncated_complement(pw("0"), 4) == Word{0, 0, 0, 1});
  CHECK(code_of([] { truncated_complement(pw("012", 3), 4); }) == Errc::BinaryOnly);
  CHECK(code_of([] { truncated_complement(pw("01"), 0); }) == Errc::BadParams);
}

TEST_CASE("canonicalize") {
  CHECK(str(canonicalize(pw("1*100011"))) == "0*011100");
  CHECK(str(canonicalize(pw("0*011100"))) == "0*011100");
  // x = 0111 is longer than the empty z, so the word is reversed first
  CHECK(str(canonicalize(pw("0111**"))) == "**0001");
  CHECK(str(canonicalize(pw("1110**"))) == "**0111");
  CHECK(str(canonicalize(pw("*001*110"))) == "*001*110");
  CHECK(str(canonicalize(pw("2101", 3))) == "0121");
}

TEST_CASE("cyclic canonical form is shared by rotations, reversals and relabelings") {
  const PartialWord base = canonicalize_cyclic(pw("*001*110"));
  for (const char* w : {"*011*100", "*100*011", "*110*001", "01*110*0", "10*001*1"})
    CHECK(canonicalize_cyclic(pw(w)) == base);
  CHECK_FALSE(canonicalize_cyclic(pw("*000*111")) == base);
}

TEST_CASE("letter permutation and reversal") {
  const Symbol swap[] = {1, 0};
  CHECK(str(permute_letters(pw("0*011100"), swap)) == "1*100011");
  CHECK(str(reversed(pw("0*011100"))) == "001110*0");
  CHECK(str(normalize_letters(pw("1*1002", 3))) == "0*0112");
}

// ---------------------------------------------------------------------------
// Properties over random words (fixed seeds)

TEST_CASE("coverage total equals the window-count identity") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int alpha = 2 + trial % 2;
    const int n = 1 + trial % 4;
    const bool cyclic = trial % 3 == 0;
    const std::size_t len = static_cast<std::size_t>(n) + rng() % 12;
    const PartialWord u = pw(testing::random_word(rng, len, alpha, 0.2), alpha);
    std::uint64_t expected = 0;
    for (std::size_t i = 1; i <= window_count(len, n, cyclic); ++i) {
      const auto e = window_expansion(u, i, n, cyclic);
      std::size_t d = 0;
      for (int j = 0; j < n; ++j) d += u.is_diamond((i - 1 + static_cast<std::size_t>(j)) % len);
      CHECK(e.words.size() == power(alpha, static_cast<int>(d)));
      expected += e.words.size();
    }
    CHECK(coverage(u, n, cyclic).total() == expected);
  }
}

TEST_CASE("verifier agrees with the naive definition and its symmetries") {
  std::mt19937 rng(12);
  int universal_seen = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 2 + trial % 3;
    const bool cyclic = trial % 2 == 0;
    const std::size_t len = static_cast<std::size_t>(n) + rng() % 9;
    const std::string text = testing::random_word(rng, len, 2, 0.15);
    const PartialWord u = pw(text);
    const bool got = is_universal(u, n, cyclic).universal;
    CHECK(got == testing::naive_universal(text, n, 2, cyclic));
    const Symbol swap[] = {1, 0};
    CHECK(is_universal(reversed(u), n, cyclic).universal == got);
    CHECK(is_universal(permute_letters(u, swap), n, cyclic).universal == got);
    CHECK(is_universal(canonicalize(u), n, cyclic).universal == got);
    universal_seen += got;
  }
  CHECK(universal_seen > 0);
}

TEST_CASE("diamond-free universal words have de Bruijn lengths") {
  for (int n = 1; n <= 3; ++n) {
    for (std::size_t len = 1; len <= 11; ++len) {
      for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
        std::vector<Symbol> s(len);
        for (std::size_t i = 0; i < len; ++i) s[i] = (bits >> i) & 1u;
        const PartialWord u(Alphabet(2), s);
        if (len >= static_cast<std::size_t>(n) && is_universal(u, n, false).universal)
          CHECK(len == (1u << n) + static_cast<std::size_t>(n) - 1);
        if (is_universal(u, n, true).universal) CHECK(len == (1u << n));
      }
    }
  }
}

TEST_CASE("parallel coverage equals the serial kernel") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + trial % 6;
    const std::size_t len = (std::size_t{1} << n) + rng() % 50;
    const PartialWord u = pw(testing::random_word(rng, len, 2, 0.05));
    CHECK(coverage_parallel(u, n, trial % 2 == 0) == coverage(u, n, trial % 2 == 0));
  }
}

TEST_CASE("canonicalize is idempotent") {
  std::mt19937 rng(14);
  for (int trial = 0; trial < 500; ++trial) {
    const PartialWord u = pw(testing::random_word(rng, 1 + rng() % 12, 3, 0.2), 3);
    const PartialWord c = canonicalize(u);
    CHECK(canonicalize(c) == c);
    CHECK(canonicalize_cyclic(canonicalize_cyclic(u)) == canonicalize_cyclic(u));
  }
}

TEST_CASE("c(w,n) differs from the periodic extension only in the last letter") {
  std::mt19937 rng(15);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::string w = testing::random_word(rng, 1 + rng() % 6, 2, 0.0);
    const int n = 1 + static_cast<int>(rng() % 20);
    const Word c = truncated_complement(pw(w), n);
    REQUIRE(c.size() == static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      const Symbol periodic = static_cast<Symbol>(w[static_cast<std::size_t>(i) % w.size()] - '0');
      if (i < n - 1) CHECK(c[static_cast<std::size_t>(i)] == periodic);
      else CHECK(c[static_cast<std::size_t>(i)] == 1 - periodic);
    }
  }
}
