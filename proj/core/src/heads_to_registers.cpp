#include <algorithm>

#include "bcl/detail/loop_detector.hpp"
#include "bcl/transforms.hpp"

namespace bcl {

RegisterEncoding encode_head_positions(const std::vector<Index>& sorted_positions, Index n) {
  if (!std::is_sorted(sorted_positions.begin(), sorted_positions.end())) {
    throw std::invalid_argument("head positions must be sorted");
  }
  const std::size_t k = sorted_positions.size();
  RegisterEncoding e;
  e.registers.assign(k + 1, 0);
  std::vector<Index> eff(k);
  for (std::size_t i = 0; i < k; ++i) {
    const Index q = sorted_positions[i];
    if (q < 0 || q > n + 1) throw std::invalid_argument("head position off the tape");
    if (q == 0) ++e.on_left_marker;
    eff[i] = std::max<Index>(q, 1);
  }
  if (k == 0) {
    e.registers[0] = n;
    return e;
  }
  e.registers[0] = n + 1 - eff[k - 1];
  for (std::size_t i = 1; i < k; ++i) e.registers[i] = eff[i] - eff[i - 1];
  e.registers[k] = eff[0] - 1;
  return e;
}

namespace {

struct RegisterConfig {
  StateId state = 0;
  int on_left_marker = 0;
  std::vector<Index> regs;
  bool operator==(const RegisterConfig&) const = default;
};

// Register machine state for the simulation. The automaton's reads and
// coincidence pattern are derived from zero tests only.
class RegisterSim {
 public:
  RegisterSim(int heads, Index n) : k_(heads), regs_(static_cast<std::size_t>(heads) + 1, 0) {
    regs_[0] = n;
  }

  bool zero(int r) const { return regs_[static_cast<std::size_t>(r)] == 0; }

  // Heads k_-1 .. i+1 and the right end all coincide with head i.
  bool at_right_marker(int i) const {
    if (!zero(0)) return false;
    for (int j = i + 1; j < k_; ++j) {
      if (!zero(j)) return false;
    }
    return true;
  }

  bool at_first_square(int i) const {
    if (!zero(k_)) return false;
    for (int j = 1; j <= i; ++j) {
      if (!zero(j)) return false;
    }
    return true;
  }

  std::string reads(Symbol letter) const {
    std::string out;
    for (int i = 0; i < k_; ++i) {
      if (i < f_) out += kLeftMarker;
      else if (at_right_marker(i)) out += kRightMarker;
      else out += letter;
    }
    return out;
  }

  std::string coincidence() const {
    std::string out;
    int group = -1;
    for (int i = 0; i < k_; ++i) {
      const bool joins = i > 0 && (i < f_ || (i - 1 >= f_ && zero(i)));
      if (!joins) ++group;
      out += static_cast<char>('0' + group);
    }
    return out;
  }

  // Applies one head move; returns false on a move off the tape.
  bool apply(int i, int dir) {
    const int left_gap = i == 0 ? k_ : i;
    const int right_gap = i == k_ - 1 ? 0 : i + 1;
    if (dir > 0) {
      if (i < f_) {
        --f_;
        return true;
      }
      if (zero(right_gap)) return false;
      --regs_[static_cast<std::size_t>(right_gap)];
      ++regs_[static_cast<std::size_t>(left_gap)];
    } else {
      if (i < f_) return false;
      if (at_first_square(i)) {
        ++f_;
        return true;
      }
      --regs_[static_cast<std::size_t>(left_gap)];
      ++regs_[static_cast<std::size_t>(right_gap)];
    }
    return true;
  }

  int on_left_marker() const { return f_; }
  const std::vector<Index>& registers() const { return regs_; }

 private:
  int k_;
  int f_ = 0;
  std::vector<Index> regs_;
};

}  // namespace

RegisterSimulationResult heads_to_registers_run(const MultiHeadAutomaton& m, Index n,
                                                const RunOptions& options) {
  if (m.alphabet().size() != 1) {
    throw MachineError("heads_to_registers needs a one-letter alphabet");
  }
  if (n < 0) throw std::invalid_argument("input length must be non-negative");
  const MultiHeadAutomaton ordered = normalize_head_order(m.sensing() ? m : as_sensing(m));
  const Symbol letter = ordered.alphabet()[0];
  const int k = ordered.heads();

  RegisterSim sim(k, n);
  std::vector<Index> shadow(static_cast<std::size_t>(k), 1);
  detail::LoopDetector<RegisterConfig> loops(
      detail::loop_detection_armed(options, ordered.num_states(), n, k, 0));

  RegisterSimulationResult out;
  RunResult& run = out.run;
  StateId state = ordered.start();
  auto finish = [&](Verdict v, std::string_view why) {
    run.verdict = v;
    run.reason = why;
    out.register_steps = run.steps;
    return out;
  };
  while (true) {
    if (ordered.is_accepting(state)) return finish(Verdict::kAccept, reason::kAcceptingState);
    if (run.steps >= options.limit) return finish(Verdict::kTimeout, reason::kStepLimit);
    if (loops.observe(RegisterConfig{state, sim.on_left_marker(), sim.registers()})) {
      return finish(Verdict::kReject, reason::kLoop);
    }
    const HeadAction* a = ordered.find(state, sim.reads(letter), sim.coincidence());
    if (a == nullptr) return finish(Verdict::kReject, reason::kNoTransition);
    const auto it = std::find_if(a->moves.begin(), a->moves.end(), [](int d) { return d != 0; });
    const int h = static_cast<int>(it - a->moves.begin());
    if (!sim.apply(h, *it)) return finish(Verdict::kFault, reason::kOutOfBounds);
    state = a->next;
    ++run.steps;

    shadow[static_cast<std::size_t>(h)] += *it;
    if (!std::is_sorted(shadow.begin(), shadow.end())) ++out.order_violations;
    for (Index v : sim.registers()) {
      out.max_register = std::max(out.max_register, v);
      if (v > n) {
        run.trace.violations.push_back("register above input length");
      }
    }
  }
}

}  // namespace bcl
