#include "upword/words.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>

namespace upw {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::OutOfAlphabet: return "OutOfAlphabet";
    case Errc::EmptyWord: return "EmptyWord";
    case Errc::BadWindow: return "BadWindow";
    case Errc::BinaryOnly: return "BinaryOnly";
    case Errc::BadParams: return "BadParams";
    case Errc::TooLarge: return "TooLarge";
    case Errc::BadVertex: return "BadVertex";
    case Errc::BadEdgeWord: return "BadEdgeWord";
    case Errc::NoEulerianPath: return "NoEulerianPath";
    case Errc::EmptyWalk: return "EmptyWalk";
    case Errc::CountMismatch: return "CountMismatch";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

Alphabet::Alphabet(int size) : size_(size) {
  if (size < 2 || size > kMaxAlphabet) {
    throw Error(Errc::BadParams, "alphabet size must be in 2.." + std::to_string(kMaxAlphabet) +
                                     ", got " + std::to_string(size));
  }
}

PartialWord::PartialWord(Alphabet alphabet, std::vector<Symbol> symbols)
    : alphabet_(alphabet), symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw Error(Errc::EmptyWord, "a partial word needs at least one symbol");
  for (Symbol s : symbols_) {
    if (s != kDiamond && s >= alphabet_.size()) {
      throw Error(Errc::OutOfAlphabet, "letter " + std::to_string(int(s)) +
                                           " outside alphabet of size " +
                                           std::to_string(alphabet_.size()));
    }
  }
}

std::size_t PartialWord::diamond_count() const {
  return static_cast<std::size_t>(std::count(symbols_.begin(), symbols_.end(), kDiamond));
}

std::vector<std::size_t> PartialWord::diamond_positions() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i] == kDiamond) out.push_back(i + 1);
  return out;
}

// ---------------------------------------------------------------------------
// Text encoding

namespace {

constexpr std::string_view kUnicodeDiamond = "\xE2\x97\x8A";  // U+25CA

int letter_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return 10 + (c - 'a');
  return -1;
}

}  // namespace

PartialWord parse_partial_word(std::string_view text, int alpha) {
  Alphabet alphabet(alpha);
  if (text.empty()) throw Error(Errc::EmptyWord, "empty word text");
  std::vector<Symbol> symbols;
  symbols.reserve(text.size());
  for (std::size_t i = 0; i < text.size();) {
    if (text.substr(i, kUnicodeDiamond.size()) == kUnicodeDiamond) {
      symbols.push_back(kDiamond);
      i += kUnicodeDiamond.size();
      continue;
    }
    const char c = text[i++];
    if (c == '*' || c == '.') {
      symbols.push_back(kDiamond);
      continue;
    }
    const int v = letter_value(c);
    if (v < 0) throw Error(Errc::OutOfAlphabet, std::string("unrecognized symbol '") + c + "'");
    if (v >= alpha) {
      throw Error(Errc::OutOfAlphabet, std::string("symbol '") + c + "' is not below alphabet size " +
                                           std::to_string(alpha));
    }
    symbols.push_back(static_cast<Symbol>(v));
  }
  return PartialWord(alphabet, std::move(symbols));
}

std::string render_symbol(Symbol s, Glyph glyph) {
  if (s == kDiamond) return glyph == Glyph::Unicode ? std::string(kUnicodeDiamond) : "*";
  return std::string(1, s < 10 ? char('0' + s) : char('a' + (s - 10)));
}

std::string render(const PartialWord& u, Glyph glyph) {
  std::string out;
  for (Symbol s : u.symbols()) out += render_symbol(s, glyph);
  return out;
}

std::string render_word(std::span<const Symbol> letters) {
  std::string out;
  for (Symbol s : letters) out += render_symbol(s);
  return out;
}

// ---------------------------------------------------------------------------
// Word indexing

WordIndex power(int alpha, int n) {
  if (n < 0) throw Error(Errc::BadParams, "negative exponent");
  WordIndex r = 1;
  for (int i = 0; i < n; ++i) {
    if (r > std::numeric_limits<WordIndex>::max() / static_cast<WordIndex>(alpha))
      throw Error(Errc::TooLarge, std::to_string(alpha) + "^" + std::to_string(n) + " overflows");
    r *= static_cast<WordIndex>(alpha);
  }
  return r;
}

WordIndex encode(std::span<const Symbol> letters, int alpha) {
  WordIndex v = 0;
  for (Symbol s : letters) {
    if (s == kDiamond || s >= alpha) throw Error(Errc::OutOfAlphabet, "cannot encode symbol");
    v = v * static_cast<WordIndex>(alpha) + s;
  }
  return v;
}

Word decode(WordIndex index, int alpha, int n) {
  Word w(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    w[static_cast<std::size_t>(i)] = static_cast<Symbol>(index % static_cast<WordIndex>(alpha));
    index /= static_cast<WordIndex>(alpha);
  }
  return w;
}

std::size_t window_count(std::size_t length, int n, bool cyclic) {
  if (cyclic) return length;
  return length >= static_cast<std::size_t>(n) ? length - static_cast<std::size_t>(n) + 1 : 0;
}

WindowExpansion window_expansion(const PartialWord& u, std::size_t i, int n, bool cyclic,
                                 const VerifierLimits& limits) {
  const std::size_t N = u.size();
  if (n < 1) throw Error(Errc::BadParams, "factor length must be positive");
  if (!cyclic && static_cast<std::size_t>(n) > N)
    throw Error(Errc::BadWindow, "factor length exceeds word length");
  if (i < 1 || i > window_count(N, n, cyclic))
    throw Error(Errc::BadWindow, "window " + std::to_string(i) + " out of range");

  const int alpha = u.alpha();
  WordIndex base = 0;
  std::vector<WordIndex> weights;  // place values of the diamonds
  WordIndex place = power(alpha, n - 1);
  for (int j = 0; j < n; ++j, place /= static_cast<WordIndex>(alpha)) {
    const Symbol s = u[(i - 1 + static_cast<std::size_t>(j)) % N];
    if (s == kDiamond) weights.push_back(place);
    else base += place * s;
  }
  WordIndex combos = power(alpha, static_cast<int>(weights.size()));
  if (combos > limits.max_window_expansion)
    throw Error(Errc::TooLarge, "window expansion of " + std::to_string(combos) + " words");

  WindowExpansion out{i, {}};
  out.words.reserve(combos);
  std::vector<int> digit(weights.size(), 0);
  for (WordIndex c = 0; c < combos; ++c) {
    WordIndex v = base;
    for (std::size_t j = 0; j < weights.size(); ++j) v += weights[j] * static_cast<WordIndex>(digit[j]);
    out.words.push_back(v);
    for (std::size_t j = weights.size(); j-- > 0;) {
      if (++digit[j] < alpha) break;
      digit[j] = 0;
    }
  }
  std::sort(out.words.begin(), out.words.end());
  return out;
}

// ---------------------------------------------------------------------------
// c(w, n)

Word truncated_complement(const PartialWord& w, int n) {
  if (w.alpha() != 2) throw Error(Errc::BinaryOnly, "c(w,n) is defined for the binary alphabet");
  if (n < 1) throw Error(Errc::BadParams, "n must be positive");
  if (w.diamond_count() != 0) throw Error(Errc::BadParams, "c(w,n) needs a diamond-free word");
  Word c(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = w[i % w.size()];
  c.back() ^= 1;
  return c;
}

// ---------------------------------------------------------------------------
// Symmetries

PartialWord reversed(const PartialWord& u) {
  std::vector<Symbol> s(u.symbols().rbegin(), u.symbols().rend());
  return PartialWord(u.alphabet(), std::move(s));
}

PartialWord permute_letters(const PartialWord& u, std::span<const Symbol> perm) {
  if (perm.size() != static_cast<std::size_t>(u.alpha()))
    throw Error(Errc::BadParams, "permutation size must equal the alphabet size");
  std::vector<Symbol> s(u.symbols().begin(), u.symbols().end());
  for (Symbol& x : s)
    if (x != kDiamond) x = perm[x];
  return PartialWord(u.alphabet(), std::move(s));
}

PartialWord normalize_letters(const PartialWord& u) {
  std::vector<Symbol> image(static_cast<std::size_t>(u.alpha()), kDiamond);
  Symbol next = 0;
  for (Symbol s : u.symbols())
    if (s != kDiamond && image[s] == kDiamond) image[s] = next++;
  // letters that never occur take the remaining labels in order
  for (auto& x : image)
    if (x == kDiamond) x = next++;
  return permute_letters(u, image);
}

PartialWord canonicalize(const PartialWord& u) {
  const auto diamonds = u.diamond_positions();
  if (!diamonds.empty()) {
    const std::size_t prefix = diamonds.front() - 1;
    const std::size_t suffix = u.size() - diamonds.back();
    if (prefix > suffix) return normalize_letters(reversed(u));
  }
  return normalize_letters(u);
}

std::strong_ordering compare_symbols(std::span<const Symbol> a, std::span<const Symbol> b) {
  auto rank = [](Symbol s) { return s == kDiamond ? -1 : int(s); };
  const std::size_t m = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < m; ++i) {
    if (auto c = rank(a[i]) <=> rank(b[i]); c != 0) return c;
  }
  return a.size() <=> b.size();
}

PartialWord canonicalize_cyclic(const PartialWord& u) {
  std::optional<PartialWord> best;
  const std::size_t N = u.size();
  for (const PartialWord& base : {u, reversed(u)}) {
    for (std::size_t r = 0; r < N; ++r) {
      std::vector<Symbol> s(N);
      for (std::size_t i = 0; i < N; ++i) s[i] = base[(i + r) % N];
      PartialWord cand = normalize_letters(PartialWord(u.alphabet(), std::move(s)));
      if (!best || compare_symbols(cand.symbols(), best->symbols()) < 0) best = std::move(cand);
    }
  }
  return *best;
}

}  // namespace upw
