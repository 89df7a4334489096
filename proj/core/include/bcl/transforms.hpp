#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bcl/bounded.hpp"
#include "bcl/counter_machine.hpp"
#include "bcl/multi_head.hpp"
#include "bcl/run_result.hpp"

namespace bcl {

// ---------------------------------------------------------------------------
// Counters -> heads
// ---------------------------------------------------------------------------

// k-head automaton equivalent to a counter machine with k-1 counters, on
// every input. Head 0 is the input head; head i+1 stands at position v_i when
// counter i holds v_i, so a zero test is a read of the left end-marker.
// One counter step maps to one automaton step. Under the simple overflow
// policy an increment at the input length parks the counter head on the
// right end-marker and costs one extra correction step. Block and signal
// policies have no step-for-step analogue and are rejected.
MultiHeadAutomaton counters_to_heads(const CounterMachine& c);

// ---------------------------------------------------------------------------
// Event prediction for one head
// ---------------------------------------------------------------------------

enum class Side { kLeft, kRight };
std::string_view to_string(Side s);

// Up to 2r-1 tape symbols around a head, cut at the end-markers.
struct Segment {
  std::string symbols;
  int center = 0;  // index of the head's square in `symbols`
};

struct EventPrediction {
  bool causes = false;
  Side side = Side::kLeft;        // meaningful only when `causes`
  int configurations_examined = 0;  // distinct (state, offset) pairs
};

// Decides whether `head` would cause the next event if no other head does:
// the machine is run on the segment with every other head reading its
// symbol from `reads`. The head causes an event at a side if it leaves its
// block or the segment there; it cannot if a (state, offset) pair repeats,
// the machine halts or the head would leave the tape. Requires a non-sensing
// one-move machine.
EventPrediction can_cause_next_event(const MultiHeadAutomaton& m, StateId state, int head,
                                     const Segment& segment, std::string_view reads);

// ---------------------------------------------------------------------------
// Heads -> counters over strictly bounded input
// ---------------------------------------------------------------------------

struct SimulationAudit {
  std::vector<Index> max_counters;
  int counters_used = 0;
  Index pointer_moves = 0;
  Index counter_ops = 0;
  Index intervals = 0;
  Index simulated_steps = 0;
  int max_configurations_examined = 0;
  bool finite_control_ok = true;
  // Host-side checks against a shadow of the simulated heads.
  Index interval_soundness_failures = 0;
  Index shadow_mismatches = 0;
  std::vector<std::string> violations;
};

struct SimulationResult {
  RunResult run;
  SimulationAudit audit;
};

// Runs a deterministic non-sensing k-head automaton on a restricted machine
// with one pointer, k-1 counters bounded by the input length and a finite
// control, interval by interval: locate every counter head, read its
// segment, predict its next event, store the distance to the predicted
// boundary, return the pointer, then step the automaton until an event.
// The input must lie in the strict bound. The automaton is one-move
// normalized first if needed.
SimulationResult heads_to_counters_run(const MultiHeadAutomaton& m, const StrictBound& bound,
                                       std::string_view input, const RunOptions& options = {});

// ---------------------------------------------------------------------------
// Heads -> registers over a single-letter alphabet
// ---------------------------------------------------------------------------

// Register contents that represent sorted head positions on a unary input
// of length n. registers[0] is the distance from the last head to the right
// end-marker, registers[1..k-1] the gaps between neighbouring heads and
// registers[k] the distance from the first input square to the first head.
// Heads on the left end-marker count as standing on square 1 and are
// recorded in `on_left_marker` instead (they always form a prefix).
struct RegisterEncoding {
  std::vector<Index> registers;
  int on_left_marker = 0;
  bool operator==(const RegisterEncoding&) const = default;
};

RegisterEncoding encode_head_positions(const std::vector<Index>& sorted_positions, Index n);

struct RegisterSimulationResult {
  RunResult run;
  Index register_steps = 0;
  Index max_register = 0;
  Index order_violations = 0;
};

// Runs a k-head automaton over a one-letter alphabet on a machine with k+1
// registers and no tape. Non-sensing machines are treated as sensing ones
// that ignore coincidence; the machine is then head-order normalized.
RegisterSimulationResult heads_to_registers_run(const MultiHeadAutomaton& m, Index n,
                                                const RunOptions& options = {});

}  // namespace bcl
