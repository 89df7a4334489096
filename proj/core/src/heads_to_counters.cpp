#include <algorithm>
#include <optional>

#include "bcl/counter_vm.hpp"
#include "bcl/detail/loop_detector.hpp"
#include "bcl/transforms.hpp"

namespace bcl {
namespace {

// State kept by the simulating machine outside its counters. Every field
// ranges over a set fixed by the simulated automaton.
struct FiniteControl {
  StateId state = 0;
  int pointer_head = 0;
  std::vector<int> counter_of;  // per head; -1 for the pointer's head
  std::vector<Side> distance;   // per counter: boundary the value is measured from
  std::string reads;            // per head
  Symbol start_block = kRightMarker;
  Side start_side = Side::kLeft;  // pointer rests on the first/last square of start_block
};

struct ShadowConfig {
  StateId state = 0;
  std::vector<Index> positions;
  bool operator==(const ShadowConfig&) const = default;
};

enum class Outcome { kAccept, kReject, kFault, kLoop };

class IntervalSimulator {
 public:
  IntervalSimulator(const MultiHeadAutomaton& m, const StrictBound& bound,
                    std::string_view input, const RunOptions& options)
      : m_(m),
        bound_(bound),
        r_(m.num_states()),
        k_(m.heads()),
        vm_(input, m.heads() - 1, options.limit),
        shadow_loops_(detail::loop_detection_armed(options, m.num_states(),
                                                   static_cast<Index>(input.size()),
                                                   m.heads(), 0)) {
    fc_.state = m.start();
    fc_.pointer_head = 0;
    fc_.counter_of.resize(static_cast<std::size_t>(k_));
    for (int h = 0; h < k_; ++h) fc_.counter_of[static_cast<std::size_t>(h)] = h - 1;
    fc_.distance.assign(static_cast<std::size_t>(std::max(k_ - 1, 0)), Side::kLeft);
    fc_.reads.assign(static_cast<std::size_t>(k_), vm_.read());
    fc_.start_block = vm_.read();
    fc_.start_side = Side::kLeft;
    shadow_.assign(static_cast<std::size_t>(k_), 1);
  }

  Outcome run() {
    while (true) {
      ++audit_.intervals;
      check_interval_start();
      if (m_.is_accepting(fc_.state)) return Outcome::kAccept;
      for (int h = 0; h < k_; ++h) {
        if (h != fc_.pointer_head) prepare_head(h);
      }
      return_to_start();
      check_shadow();
      if (auto done = simulate_until_event()) return *done;
    }
  }

  const CounterVm& vm() const { return vm_; }
  SimulationAudit& audit() { return audit_; }

 private:
  int counter(int head) const { return fc_.counter_of[static_cast<std::size_t>(head)]; }
  Symbol& read_of(int head) { return fc_.reads[static_cast<std::size_t>(head)]; }

  void move(int dir) {
    vm_.move(dir);
    ++audit_.pointer_moves;
  }

  // Moves the pointer onto some square of the block made of `s`. Blocks
  // appear in bound order, so the direction follows from the symbols.
  void walk_to_block(Symbol s) {
    while (vm_.read() != s) {
      move(bound_.order_of(s) > bound_.order_of(vm_.read()) ? 1 : -1);
    }
  }

  // Pointer onto the first (kLeft) or last (kRight) square of block `s`.
  void walk_to_edge(Symbol s, Side side) {
    walk_to_block(s);
    if (is_marker(s)) return;
    const int dir = side == Side::kLeft ? -1 : 1;
    while (vm_.read() == s) move(dir);
    move(-dir);
  }

  void prepare_head(int h) {
    const int c = counter(h);
    const Symbol s = read_of(h);
    const Side stored = fc_.distance[static_cast<std::size_t>(c)];

    // (1) Locate the head: go to the boundary its counter is measured from
    // and count the counter down while walking inward.
    walk_to_edge(s, stored);
    const int inward = stored == Side::kLeft ? 1 : -1;
    while (!vm_.zero(c)) {
      vm_.step(inward, {dec(c)});
      ++audit_.pointer_moves;
    }

    // (2) Read up to r-1 squares on each side, measuring the excursion on
    // the head's own counter, which is zero at this point.
    Segment segment;
    std::string left = excursion(c, -1);
    std::string right = excursion(c, 1);
    segment.symbols.assign(left.rbegin(), left.rend());
    segment.center = static_cast<int>(segment.symbols.size());
    segment.symbols += s;
    segment.symbols += right;
    if (segment.symbols.size() > static_cast<std::size_t>(2 * r_ - 1)) {
      audit_.finite_control_ok = false;
    }

    // (3) Predict.
    EventPrediction p = can_cause_next_event(m_, fc_.state, h, segment, fc_.reads);
    audit_.max_configurations_examined =
        std::max(audit_.max_configurations_examined, p.configurations_examined);
    if (p.configurations_examined > 2 * r_ * r_ - r_) audit_.finite_control_ok = false;

    // (4) Store the distance to the predicted boundary (left when no event
    // is possible).
    const Side side = p.causes ? p.side : Side::kLeft;
    fc_.distance[static_cast<std::size_t>(c)] = side;
    if (is_marker(s)) return;
    const int outward = side == Side::kLeft ? -1 : 1;
    while (true) {
      move(outward);
      if (vm_.read() != s) break;
      vm_.increment(c);
    }
  }

  // Walks up to r-1 squares in `dir` collecting symbols and returns to the
  // start. End-marker squares are not counted so the counter stays <= n.
  std::string excursion(int c, int dir) {
    const Symbol wall = dir < 0 ? kLeftMarker : kRightMarker;
    std::string seen;
    for (int i = 1; i < r_; ++i) {
      if (vm_.read() == wall) break;
      move(dir);
      seen += vm_.read();
      if (vm_.read() != wall) vm_.increment(c);
    }
    if (!seen.empty() && vm_.read() == wall) move(-dir);
    while (!vm_.zero(c)) {
      vm_.step(-dir, {dec(c)});
      ++audit_.pointer_moves;
    }
    return seen;
  }

  void return_to_start() { walk_to_edge(fc_.start_block, fc_.start_side); }

  // Steps the automaton, translating moves into pointer moves and counter
  // operations, until an event or the end of the run.
  std::optional<Outcome> simulate_until_event() {
    while (true) {
      if (m_.is_accepting(fc_.state)) return Outcome::kAccept;
      if (shadow_loops_.observe(ShadowConfig{fc_.state, shadow_})) return Outcome::kLoop;
      const HeadAction* a = m_.find(fc_.state, fc_.reads, "");
      if (a == nullptr) return Outcome::kReject;
      const int h = static_cast<int>(std::find_if(a->moves.begin(), a->moves.end(),
                                                  [](int d) { return d != 0; }) -
                                     a->moves.begin());
      const int dir = a->moves[static_cast<std::size_t>(h)];
      const Symbol s = read_of(h);
      if ((s == kLeftMarker && dir < 0) || (s == kRightMarker && dir > 0)) {
        return Outcome::kFault;
      }
      fc_.state = a->next;
      ++audit_.simulated_steps;
      shadow_[static_cast<std::size_t>(h)] += dir;

      if (h == fc_.pointer_head) {
        move(dir);
        if (vm_.read() != s) {
          read_of(h) = vm_.read();
          fc_.start_block = vm_.read();
          fc_.start_side = dir > 0 ? Side::kLeft : Side::kRight;
          return std::nullopt;
        }
        continue;
      }

      if (is_marker(s)) {
        swap_roles(h, dir);
        return std::nullopt;
      }
      const int c = counter(h);
      const bool toward_boundary =
          (fc_.distance[static_cast<std::size_t>(c)] == Side::kLeft) == (dir < 0);
      if (!toward_boundary) {
        vm_.increment(c);
      } else if (!vm_.zero(c)) {
        vm_.decrement(c);
      } else {
        swap_roles(h, dir);
        return std::nullopt;
      }
    }
  }

  // Head h is about to leave its block. Its counter (zero) takes over the
  // pointer's head, recording the pointer's distance to the left boundary
  // of its block; the pointer then moves to h's new square.
  void swap_roles(int h, int dir) {
    const int c = counter(h);
    const int old = fc_.pointer_head;
    const Symbol ps = read_of(old);
    if (!is_marker(ps)) {
      while (true) {
        move(-1);
        if (vm_.read() != ps) break;
        vm_.increment(c);
      }
    }
    fc_.counter_of[static_cast<std::size_t>(old)] = c;
    fc_.distance[static_cast<std::size_t>(c)] = Side::kLeft;

    const Symbol hs = read_of(h);
    walk_to_block(hs);
    while (vm_.read() == hs) move(dir);

    fc_.counter_of[static_cast<std::size_t>(h)] = -1;
    fc_.pointer_head = h;
    read_of(h) = vm_.read();
    fc_.start_block = vm_.read();
    fc_.start_side = dir > 0 ? Side::kLeft : Side::kRight;
  }

  // Host-side audits; the simulation never branches on them.
  void check_interval_start() {
    const Tape& tape = vm_.audit_tape();
    const Index p = vm_.audit_position();
    const bool adjacent = p == 0 || p == tape.right_marker() ||
                          tape.at(p - 1) != tape.at(p) || tape.at(p + 1) != tape.at(p);
    if (!adjacent || shadow_[static_cast<std::size_t>(fc_.pointer_head)] != p) {
      ++audit_.interval_soundness_failures;
    }
  }

  void check_shadow() {
    const Tape& tape = vm_.audit_tape();
    for (int h = 0; h < k_; ++h) {
      const Index p = shadow_[static_cast<std::size_t>(h)];
      bool ok = tape.at(p) == read_of(h);
      if (h == fc_.pointer_head) {
        ok = ok && vm_.audit_position() == p;
      } else {
        const int c = counter(h);
        Index lo = p;
        Index hi = p;
        if (!is_marker(tape.at(p))) {
          while (tape.at(lo - 1) == tape.at(p)) --lo;
          while (tape.at(hi + 1) == tape.at(p)) ++hi;
        }
        const Index expect =
            fc_.distance[static_cast<std::size_t>(c)] == Side::kLeft ? p - lo : hi - p;
        ok = ok && vm_.audit_value(c) == expect;
      }
      if (!ok) ++audit_.shadow_mismatches;
    }
    for (Symbol s : fc_.reads) {
      if (!is_marker(s) && bound_.symbols().find(s) == std::string::npos) {
        audit_.finite_control_ok = false;
      }
    }
    if (fc_.state < 0 || fc_.state >= r_) audit_.finite_control_ok = false;
  }

  const MultiHeadAutomaton& m_;
  const StrictBound& bound_;
  const int r_;
  const int k_;
  CounterVm vm_;
  FiniteControl fc_;
  SimulationAudit audit_;
  std::vector<Index> shadow_;
  detail::LoopDetector<ShadowConfig> shadow_loops_;
};

}  // namespace

SimulationResult heads_to_counters_run(const MultiHeadAutomaton& m, const StrictBound& bound,
                                       std::string_view input, const RunOptions& options) {
  if (m.sensing()) throw MachineError("heads_to_counters needs a non-sensing automaton");
  check_word(input, m.alphabet());
  if (!matches_bound(input, bound.as_bound())) {
    throw std::invalid_argument("input is not in the strict bound");
  }
  const MultiHeadAutomaton normalized = m.is_one_move() ? m : normalize_one_move(m);

  IntervalSimulator sim(normalized, bound, input, options);
  SimulationResult out;
  try {
    switch (sim.run()) {
      case Outcome::kAccept:
        out.run.verdict = Verdict::kAccept;
        out.run.reason = reason::kAcceptingState;
        break;
      case Outcome::kReject:
        out.run.verdict = Verdict::kReject;
        out.run.reason = reason::kNoTransition;
        break;
      case Outcome::kLoop:
        out.run.verdict = Verdict::kReject;
        out.run.reason = reason::kLoop;
        break;
      case Outcome::kFault:
        out.run.verdict = Verdict::kFault;
        out.run.reason = reason::kOutOfBounds;
        break;
    }
  } catch (const StepLimitReached&) {
    out.run.verdict = Verdict::kTimeout;
    out.run.reason = reason::kStepLimit;
  } catch (const MachineFault& f) {
    out.run.verdict = Verdict::kFault;
    out.run.reason = f.what();
    sim.audit().violations.emplace_back(f.what());
  }
  const CounterVm& vm = sim.vm();
  out.run.steps = vm.steps();
  out.run.trace = vm.trace();
  out.audit = sim.audit();
  out.audit.max_counters = vm.trace().max_counters;
  out.audit.counters_used = vm.counters();
  out.audit.counter_ops = vm.trace().counter_ops;
  for (const auto& v : vm.trace().violations) out.audit.violations.push_back(v);
  return out;
}

}  // namespace bcl
