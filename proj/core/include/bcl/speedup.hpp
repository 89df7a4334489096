#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bcl/bounded.hpp"
#include "bcl/counter_machine.hpp"
#include "bcl/run_result.hpp"

namespace bcl {

struct EncodedItem {
  enum class Kind { kLiteral, kRun };
  Kind kind = Kind::kLiteral;
  Word word;        // literal text, or the conjugate repeated by a run
  Index count = 1;  // copies of `word`; 1 for literals
  bool operator==(const EncodedItem&) const = default;
};

EncodedItem literal(Word w);
EncodedItem run(Word w, Index count);

// One stage of the encoder.
struct EncoderStage {
  int stage = 0;      // 0-based index into the bound
  Index start = 0;    // input offset where the stage began
  Index end = 0;      // input offset covered when it ended
  Word probe;         // the symbols read as the probe
  bool matched = false;
  Word conjugate;     // the matching conjugate, if any
};

struct EncodedInput {
  std::vector<EncodedItem> items;
  BoundDescriptor bound;
  std::vector<EncoderStage> stages;
  Index steps = 0;  // steps charged to the encoding pass

  Index length() const;
  int run_count() const;
};

// Staged encoding: per stage, a probe of 2*mu symbols is compared against
// the conjugates of the stage's bound word (in rotation order). A match
// becomes a run counted as far as the input keeps repeating the conjugate,
// followed by the next |conjugate| symbols as a literal; no match stores the
// probe as a literal. A probe cut short by the end of the input is stored as
// a literal. The pass costs n + 1 steps.
EncodedInput encode_bounded_input(std::string_view input, const BoundDescriptor& bound);

Word decode_encoded_input(const EncodedInput& e);

// True if some decomposition w1^k1 ... wm^km of the decoded input has, for
// every stage i, the first i+1 blocks ending no later than stage i's end.
bool stage_coverage_holds(const EncodedInput& e);

// Counter values held as quotient * d + remainder, with the quotient on a
// real counter and the remainder in the finite control.
class CompressedCounter {
 public:
  explicit CompressedCounter(Index d);

  Index value() const { return quotient_ * d_ + remainder_; }
  Index quotient() const { return quotient_; }
  Index remainder() const { return remainder_; }
  // Exact as long as at most d-1 changes happened since the last
  // normalize(): a nonzero quotient then keeps the value positive.
  bool zero() const { return quotient_ == 0 && remainder_ == 0; }
  // Initial contents, produced while encoding.
  void load(Index v);

  // Finite-control change; the remainder may leave [0, d-1] until the next
  // normalize().
  void add(int delta) { remainder_ += delta; }
  // Brings the remainder back into [0, d-1] with at most one quotient
  // operation when the remainder moved by at most d. Returns the number of
  // quotient operations performed.
  int normalize();

 private:
  Index d_;
  Index quotient_ = 0;
  Index remainder_ = 0;
};

// Runs C with its two-way head simulated over the encoding: the head's
// place inside a run is a pair of pool counters (copies to the left and to
// the right) plus the offset modulo the run word in the finite control.
// The pool has one counter per run plus a free one; assignment of pool
// counters to runs is dynamic. Verdict and step count equal run_cm on the
// decoded input.
struct EncodedRunResult {
  RunResult run;
  int pool_counters = 0;
  Index pool_ops = 0;
  Index max_pool_value = 0;
  Index shadow_mismatches = 0;
};

EncodedRunResult run_on_encoding(const CounterMachine& c, const EncodedInput& e,
                                 const RunOptions& options = {});

struct SpeedupConfig {
  double c = 0.5;  // target factor
  double a = 1.0;  // scheme constant: d = ceil(a / c)
};

// Compression factor for a target factor; throws std::invalid_argument for
// c <= 0 or a factor too large to hold in a finite control table.
Index compression_factor(const SpeedupConfig& config);

// Additive constant in steps <= n + c * t(n) + K for the scheme below.
inline constexpr Index kSpeedupSlack = 2;

struct SpeedupResult {
  RunResult run;              // verdict of the simulated machine
  Index d = 1;                // compression factor
  Index encoding_steps = 0;   // n + 1
  Index simulated_steps = 0;  // t(n): raw steps of C
  Index units = 0;            // ceil(t(n) / d): d raw steps per unit
  Index accounting_steps = 0; // encoding_steps + units
  Index quotient_ops = 0;
  Index shadow_mismatches = 0;
  EncodedInput encoding;
};

// Encodes the input, then simulates C over the encoding with every counter
// (C's own and the pool) compressed by d. Each unit covers d raw steps;
// remainders live in the finite control and each quotient changes at most
// once per unit.
SpeedupResult speedup_run(const CounterMachine& c, const BoundDescriptor& bound,
                          std::string_view input, const SpeedupConfig& config,
                          const RunOptions& options = {});

}  // namespace bcl
