// constructions.hpp -- explicit binary universal partial words
//
// Each constructor prescribes a prefix, deletes the edges of G_2^{n-1} that
// the prefix already covers, and completes the word along an Eulerian path of
// what is left. Outputs are pinned by the deterministic walk tie-break; the
// contract is the prefix plus universality, which every constructor checks
// before returning.

#pragma once

#include <string_view>

#include "upword/words.hpp"

namespace upw {

enum class Family { Pos1, PosK, TwoDiamonds, Nm1Diamonds, Trivial };

std::string_view to_string(Family family);
/// Accepts the canonical names plus the short forms "two" and "nm1".
Family parse_family(std::string_view name);

struct ConstructionRequest {
  Family family = Family::Trivial;
  int n = 1;
  int k = 0;  ///< diamond position, PosK only
};

/// Single diamond at position 1; begins with *0^{n-1}1. Length 2^n + n - 2.
PartialWord construct_pos1(int n);

/// Single diamond at position k in 2..n-1; begins with 01^{k-2}*c(01^{k-1}, n).
/// Length 2^n + n - k - 1.
PartialWord construct_posk(int n, int k);

/// Diamonds at positions 1 and 2n-1; begins with *0^{n-1}1^{n-2}*10^{n-2}1.
/// Length 2^n - 2.
PartialWord construct_two_diamonds(int n);

/// The closed form *^{n-1}01^n.
PartialWord construct_nm1_diamonds(int n);

/// *^n: linear universal for every n, cyclic universal only for n = 1.
PartialWord trivial(int n, int alpha = 2);

PartialWord construct(const ConstructionRequest& request);

/// Completes a diamond-free-suffixed prefix along an Eulerian path of
/// G_alpha^{n-1} minus the prefix's factor edges, from the prefix's last n-1
/// letters to `end`. Throws if the prefix repeats a factor or no path exists.
PartialWord extend_by_eulerian_path(const PartialWord& prefix, int n, std::span<const Symbol> end);

}  // namespace upw
