#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bcl/tape.hpp"

namespace bcl {

enum class Verdict { kAccept, kReject, kTimeout, kFault };

std::string_view to_string(Verdict v);

// Resource usage of one run. Only the fields meaningful for the model that
// produced it are populated.
struct Trace {
  std::vector<Index> max_counters;   // per counter / register
  std::vector<Index> max_positions;  // per head
  Index head_moves = 0;
  Index counter_ops = 0;
  std::vector<std::string> violations;
};

struct RunResult {
  Verdict verdict = Verdict::kReject;
  std::string reason;
  Index steps = 0;
  Trace trace;

  bool accepted() const { return verdict == Verdict::kAccept; }
  Index max_counter() const;
};

struct RunOptions {
  Index limit = 1'000'000;
  bool detect_loops = true;
  // Loop detection is only armed when the configuration-space size
  // r*(n+2)^heads*(n+1)^counters stays below this budget.
  double loop_budget = 1e15;
};

namespace reason {
inline constexpr std::string_view kAcceptingState = "accepting state";
inline constexpr std::string_view kNoTransition = "no transition";
inline constexpr std::string_view kLoop = "loop";
inline constexpr std::string_view kStepLimit = "step limit";
inline constexpr std::string_view kDecOnZero = "decrement on zero";
inline constexpr std::string_view kOverflow = "overflow";
inline constexpr std::string_view kOutOfBounds = "head out of bounds";
}  // namespace reason

}  // namespace bcl
