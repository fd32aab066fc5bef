// feasibility.hpp -- existence verdicts and positional constraint propagation

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "upword/constructions.hpp"
#include "upword/diamond_template.hpp"
#include "upword/words.hpp"

namespace upw {

/// Stable identifiers of the non-existence results, emitted verbatim in CLI/JSON output.
enum class TheoremId { T3_1, T3_2, T3_3, T4_1, C4_2, C5_2, C5_3, T6_2, L5_1_count, N2D1 };

std::string_view to_string(TheoremId id);
std::optional<TheoremId> parse_theorem_id(std::string_view text);

enum class VerdictKind { Exists, NonexistentBy, Unknown };
std::string_view to_string(VerdictKind kind);

struct Verdict {
  VerdictKind kind = VerdictKind::Unknown;
  std::optional<TheoremId> theorem;       ///< set for NonexistentBy
  std::optional<Family> construction;     ///< Exists through a constructor
  std::optional<PartialWord> witness;     ///< explicit or bundled example
  std::vector<int> feasible_d;            ///< cyclic: diamonds per window still possible
  std::string note;

  static Verdict exists(std::optional<Family> family, std::optional<PartialWord> witness,
                        std::string note = {});
  static Verdict nonexistent(TheoremId id, std::string note = {});
  static Verdict unknown(std::string note, std::optional<PartialWord> witness = std::nullopt);
};

struct NormalizedPosition {
  std::size_t k = 1;       ///< distance from the nearer end, 1-based
  bool mirrored = false;   ///< true when measured from the end
};
NormalizedPosition normalize_position(std::size_t k, std::size_t length);

/// Binary single-diamond length with the diamond at nearer-end position k.
std::size_t single_diamond_length(int n, std::size_t k);

/// Verdict for a single diamond at nearer-end position k.
Verdict single_diamond_verdict(int alpha, int n, int k);

/// Verdict for binary words x * y * z with |x|, |y|, |z| = lx, ly, lz.
Verdict two_diamond_shape_verdict(int n, std::size_t lx, std::size_t ly, std::size_t lz);

/// Cyclic existence screen; feasible_d lists d in 1..n-1 with n | d * alpha^(n-d).
Verdict cyclic_parameter_verdict(int alpha, int n);

/// Verdict for words starting with exactly d diamonds; the template, when
/// given, says what follows them.
Verdict prefix_run_verdict(int alpha, int n, int d, const DiamondTemplate* t = nullptr);

// ---------------------------------------------------------------------------
// Constraint propagation

enum class ContradictionKind {
  ForcedLetterClash,     ///< a class is forced to two different letters
  OddComplementCycle,    ///< a cell is forced to equal its own complement
  LetterOnDiamond,       ///< a letter is forced onto a diamond cell
  NonBinaryComplement,   ///< complement forced with alpha >= 3 (the T3.1 argument)
  DiamondOnLetter,       ///< cyclic periodicity forces a diamond onto a fixed letter
};
std::string_view to_string(ContradictionKind kind);

/// Letter relation of a cell to the smallest cell index in its class.
struct CellLink {
  std::size_t representative = 0;  ///< 0-based
  bool complemented = false;
};

struct PropagationResult {
  DiamondTemplate refined;
  std::vector<CellLink> links;  ///< one per cell; diamonds link to themselves
  std::optional<ContradictionKind> contradiction;
  std::string message;

  bool ok() const { return !contradiction; }
};

struct PropagationOptions {
  /// Also apply the linear rules to the reversed template.
  bool both_orientations = true;
};

/// Linear: for every diamond at k followed by a letter at k+n, cells k+i
/// equal cells i (i < n) and cell k+n complements cell n (binary only).
/// Cyclic: a diamond at k forces a diamond at k+n (mod N).
PropagationResult propagate_constraints(const DiamondTemplate& t, PropagationOptions options = {});

}  // namespace upw
