#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bcl {

using Symbol = char;
using Word = std::string;
using Index = std::int64_t;
using StateId = int;

inline constexpr Symbol kLeftMarker = '<';
inline constexpr Symbol kRightMarker = '>';

constexpr bool is_marker(Symbol s) { return s == kLeftMarker || s == kRightMarker; }

// Raised when a machine definition or input violates a structural contract
// (alphabet mismatch, nondeterminism, dangling reference, ...).
class MachineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Read-only input bordered by end-markers. Position 0 holds '<', position
// n+1 holds '>', the input occupies 1..n.
class Tape {
 public:
  Tape() = default;
  explicit Tape(std::string_view content);

  Index length() const { return static_cast<Index>(content_.size()); }
  Index right_marker() const { return length() + 1; }
  bool in_bounds(Index pos) const { return pos >= 0 && pos <= right_marker(); }

  Symbol at(Index pos) const {
    if (pos == 0) return kLeftMarker;
    if (pos == right_marker()) return kRightMarker;
    return content_[static_cast<std::size_t>(pos - 1)];
  }

  const Word& content() const { return content_; }

 private:
  Word content_;
};

// Throws MachineError if `word` uses a symbol outside `alphabet` or an
// end-marker.
void check_word(std::string_view word, std::string_view alphabet);

}  // namespace bcl
