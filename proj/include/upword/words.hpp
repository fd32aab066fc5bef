// words.hpp -- partial words, window expansion and the universality verifier

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "upword/error.hpp"

namespace upw {

/// A letter 0..alpha-1, or kDiamond for the wildcard.
using Symbol = std::uint8_t;
inline constexpr Symbol kDiamond = 0xFF;

/// A full word of A^n stored as a base-alpha integer, most significant letter first.
using WordIndex = std::uint64_t;

/// A diamond-free word as a plain letter sequence.
using Word = std::vector<Symbol>;

inline constexpr int kMaxAlphabet = 36;

class Alphabet {
public:
  explicit Alphabet(int size);

  int size() const noexcept { return size_; }
  bool operator==(const Alphabet&) const = default;

private:
  int size_;
};

/// A sequence over A plus the diamond. Immutable after construction.
class PartialWord {
public:
  PartialWord(Alphabet alphabet, std::vector<Symbol> symbols);

  Alphabet alphabet() const noexcept { return alphabet_; }
  int alpha() const noexcept { return alphabet_.size(); }
  std::size_t size() const noexcept { return symbols_.size(); }

  /// 0-based access.
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  bool is_diamond(std::size_t i) const { return symbols_[i] == kDiamond; }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }

  std::size_t diamond_count() const;
  /// 1-based positions of every diamond, ascending.
  std::vector<std::size_t> diamond_positions() const;

  bool operator==(const PartialWord&) const = default;

private:
  Alphabet alphabet_;
  std::vector<Symbol> symbols_;
};

enum class Glyph { Ascii, Unicode };

/// Decodes digits 0-9 then a-z; '*', '.' and U+25CA are diamonds.
PartialWord parse_partial_word(std::string_view text, int alpha);
std::string render(const PartialWord& u, Glyph glyph = Glyph::Ascii);
std::string render_symbol(Symbol s, Glyph glyph = Glyph::Ascii);
std::string render_word(std::span<const Symbol> letters);

/// alpha^n, throwing TooLarge when it would not fit the configured space.
WordIndex power(int alpha, int n);
WordIndex encode(std::span<const Symbol> letters, int alpha);
Word decode(WordIndex index, int alpha, int n);

/// Guards against exponential blowup in the verifier.
struct VerifierLimits {
  /// Refuse windows whose expansion exceeds this many completions
  /// (an all-diamond window is handled without expansion).
  std::uint64_t max_window_expansion = std::uint64_t{1} << 20;
  /// Refuse factor spaces alpha^n above this size.
  std::uint64_t max_factor_space = std::uint64_t{1} << 28;
};

struct WindowExpansion {
  std::size_t start = 0;            ///< 1-based window start
  std::vector<WordIndex> words;     ///< ascending, exactly alpha^d entries
};

/// All completions of the length-n window starting at 1-based position i.
WindowExpansion window_expansion(const PartialWord& u, std::size_t i, int n, bool cyclic,
                                 const VerifierLimits& limits = {});

struct CoverageMap {
  int alpha = 2;
  int n = 1;
  std::vector<std::uint32_t> counts;  ///< indexed by WordIndex

  std::uint64_t total() const;
  bool operator==(const CoverageMap&) const = default;
};

/// Number of length-n windows: N-n+1 linear, N cyclic.
std::size_t window_count(std::size_t length, int n, bool cyclic);

/// Serial reference kernel.
CoverageMap coverage(const PartialWord& u, int n, bool cyclic, const VerifierLimits& limits = {});
/// OpenMP kernel; produces exactly the serial result.
CoverageMap coverage_parallel(const PartialWord& u, int n, bool cyclic,
                              const VerifierLimits& limits = {});

struct Duplicate {
  WordIndex word = 0;
  std::uint32_t count = 0;
  std::vector<std::size_t> windows;  ///< 1-based window starts producing the word
};

struct UniversalityReport {
  bool universal = false;
  int alpha = 2;
  int n = 1;
  std::size_t missing_total = 0;
  std::size_t duplicated_total = 0;
  std::vector<WordIndex> missing;       ///< truncated to max_listed
  std::vector<Duplicate> duplicated;    ///< truncated to max_listed
};

UniversalityReport is_universal(const PartialWord& u, int n, bool cyclic,
                                const VerifierLimits& limits = {}, std::size_t max_listed = 256);

/// c(w, n): periodic extension of w truncated to n letters, last letter complemented.
Word truncated_complement(const PartialWord& w, int n);

PartialWord reversed(const PartialWord& u);
/// perm[x] is the image of letter x.
PartialWord permute_letters(const PartialWord& u, std::span<const Symbol> perm);
/// Relabels letters so first occurrences appear in increasing order.
PartialWord normalize_letters(const PartialWord& u);

/// Reverse when the diamond-free prefix is longer than the diamond-free suffix,
/// then normalize letters.
PartialWord canonicalize(const PartialWord& u);

/// Smallest normalize_letters image over all rotations and reversals,
/// with the diamond ordered before every letter.
PartialWord canonicalize_cyclic(const PartialWord& u);

/// Lexicographic order with the diamond ranked below every letter.
std::strong_ordering compare_symbols(std::span<const Symbol> a, std::span<const Symbol> b);

}  // namespace upw
