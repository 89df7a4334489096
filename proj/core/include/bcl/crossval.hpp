#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bcl/machine_io.hpp"
#include "bcl/run_result.hpp"

namespace bcl {

enum class CrossMode { kHeadsToCounters, kCountersToHeads, kRegisters, kEncoding, kSpeedup };

std::string_view to_string(CrossMode m);
CrossMode parse_cross_mode(std::string_view s);

struct Disagreement {
  Word input;
  RunResult original;
  RunResult transformed;
};

struct CrossReport {
  Index checked = 0;
  Index agreed = 0;
  std::optional<Disagreement> first;
  // Resource or invariant checks that failed on some input, with the input.
  std::vector<std::string> audit_failures;

  bool ok() const { return !first && audit_failures.empty(); }
};

// One path of a cross-validation: runs an input, may append audit failures.
using RunPath = std::function<RunResult(std::string_view input, std::vector<std::string>& audit)>;

// Runs both paths on every input; verdicts must agree, and step counts too
// when `compare_steps`. Stops at the first disagreement.
CrossReport crossvalidate_paths(const std::vector<Word>& inputs, const RunPath& original,
                                const RunPath& transformed, bool compare_steps);

struct CrossOptions {
  RunOptions run;
  double speedup_c = 0.5;
};

// Drives one mode over every input of the bound up to max_len:
//   heads_to_counters  multi-head machine, strict bound "a,b,..."
//   counters_to_heads  counter machine; all words over its alphabet when the
//                      bound is empty, else the bound's inputs; equal steps
//   registers          one-letter multi-head machine; inputs a^0 .. a^max_len
//   encoding           counter machine run over the encoded input; equal steps
//   speedup            counter machine with compressed counters; verdicts
//                      plus the n + c t(n) + K accounting bound
// Throws std::invalid_argument when machine kind and mode do not fit.
CrossReport crossvalidate(const AnyMachine& m, std::string_view bound, Index max_len,
                          CrossMode mode, const CrossOptions& options = {});

}  // namespace bcl
