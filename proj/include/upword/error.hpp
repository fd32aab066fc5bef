// error.hpp -- error type shared by every upword module

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace upw {

/// Failure categories reported by the library. The CLI maps these to exit
/// codes, so the set is part of the public contract.
enum class Errc {
  OutOfAlphabet,
  EmptyWord,
  BadWindow,
  BinaryOnly,
  BadParams,
  TooLarge,
  BadVertex,
  BadEdgeWord,
  NoEulerianPath,
  EmptyWalk,
  CountMismatch,
  Internal,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

}  // namespace upw
