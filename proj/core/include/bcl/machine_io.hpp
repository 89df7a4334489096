#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "bcl/counter_machine.hpp"
#include "bcl/multi_head.hpp"
#include "bcl/register_machine.hpp"
#include "bcl/run_result.hpp"
#include "bcl/speedup.hpp"

namespace bcl {

using AnyMachine = std::variant<MultiHeadAutomaton, CounterMachine, RegisterMachine>;

// Load failure. `where` is "line L, column C" for JSON syntax errors and a
// field path such as "transitions[2].next" for schema errors.
class MachineFileError : public std::runtime_error {
 public:
  MachineFileError(std::string where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

// Machine file format (JSON):
//   kind        "multi_head" | "counter" | "register"
//   alphabet    input symbols as one string (not for register machines)
//   states      list of state names, or a state count (names q0, q1, ...)
//   start       state name or index
//   accept      list of state names or indices
//   multi_head: heads, sensing (default false)
//   counter:    counters, overflow ("simple" | "block" | "signal")
//   register:   registers
//   transitions list of records:
//     multi_head: state, reads, [coincidence], next, and either moves
//                 (one of -1/0/1 per head) or move_head + dir. A sensing
//                 transition without coincidence stands for all patterns.
//     counter:    state, read, zeros (indices of zero counters), [overflow],
//                 next, dir, ops (one of "inc"/"dec"/"nop" per counter)
//     register:   state, zeros, next, ops
AnyMachine parse_machine(std::string_view text);
AnyMachine load_machine_file(const std::string& path);

std::string serialize_machine(const AnyMachine& m);
std::string_view kind_name(const AnyMachine& m);

// Stable JSON renderings; `trace` adds resource audit fields.
std::string run_result_json(const RunResult& r, bool trace);
std::string encoded_input_json(const EncodedInput& e);
std::string speedup_result_json(const SpeedupResult& r, bool trace);

}  // namespace bcl
