// helpers.hpp -- shared fixtures and independent oracles for the test suites

#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "upword/words.hpp"

namespace testing {

inline upw::PartialWord pw(const std::string& text, int alpha = 2) {
  return upw::parse_partial_word(text, alpha);
}

inline std::string str(const upw::PartialWord& u) { return upw::render(u); }

/// Universality straight from the definition: every full word of length n
/// is compared against every window, character by character.
inline bool naive_universal(const std::string& u, int n, int alpha, bool cyclic) {
  const std::size_t N = u.size();
  if (!cyclic && N < static_cast<std::size_t>(n)) return false;
  const std::size_t windows = cyclic ? N : N - static_cast<std::size_t>(n) + 1;
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(alpha);
  std::string v(static_cast<std::size_t>(n), '0');
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (int j = n - 1; j >= 0; --j) {
      v[static_cast<std::size_t>(j)] = static_cast<char>('0' + c % static_cast<std::uint64_t>(alpha));
      c /= static_cast<std::uint64_t>(alpha);
    }
    int hits = 0;
    for (std::size_t s = 0; s < windows; ++s) {
      bool match = true;
      for (int j = 0; j < n && match; ++j) {
        const char ch = u[(s + static_cast<std::size_t>(j)) % N];
        match = ch == '*' || ch == v[static_cast<std::size_t>(j)];
      }
      hits += match;
    }
    if (hits != 1) return false;
  }
  return true;
}

/// Random partial word text with the given diamond probability.
inline std::string random_word(std::mt19937& rng, std::size_t length, int alpha, double diamond_p) {
  std::bernoulli_distribution diamond(diamond_p);
  std::uniform_int_distribution<int> letter(0, alpha - 1);
  std::string s;
  for (std::size_t i = 0; i < length; ++i)
    s += diamond(rng) ? '*' : static_cast<char>('0' + letter(rng));
  return s;
}

inline std::set<std::string> as_set(const std::vector<upw::PartialWord>& words) {
  std::set<std::string> out;
  for (const auto& w : words) out.insert(str(w));
  return out;
}

}  // namespace testing
