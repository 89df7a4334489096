#include "bcl/speedup.hpp"

#include <cmath>
#include <stdexcept>

#include "bcl/detail/loop_detector.hpp"

namespace bcl {

CompressedCounter::CompressedCounter(Index d) : d_(d) {
  if (d < 1) throw std::invalid_argument("compression factor must be >= 1");
}

void CompressedCounter::load(Index v) {
  quotient_ = v / d_;
  remainder_ = v % d_;
}

int CompressedCounter::normalize() {
  int ops = 0;
  while (remainder_ < 0) {
    remainder_ += d_;
    --quotient_;
    ++ops;
  }
  while (remainder_ >= d_) {
    remainder_ -= d_;
    ++quotient_;
    ++ops;
  }
  return ops;
}

Index compression_factor(const SpeedupConfig& config) {
  if (!(config.c > 0) || !std::isfinite(config.c)) {
    throw std::invalid_argument("speed-up factor c must be positive");
  }
  if (!(config.a > 0) || !std::isfinite(config.a)) {
    throw std::invalid_argument("scheme constant a must be positive");
  }
  const double d = std::ceil(config.a / config.c);
  if (d > static_cast<double>(Index{1} << 20)) {
    throw std::invalid_argument("compression factor too large for the finite control");
  }
  return static_cast<Index>(d);
}

namespace {

struct SimConfig {
  StateId state = 0;
  Index pos = 0;
  std::vector<Index> values;
  CounterMask overflow = 0;
  bool operator==(const SimConfig&) const = default;
};

// C's head over the encoded input. item -1 is the left end-marker and
// item == items.size() the right one.
class EncodedHead {
 public:
  EncodedHead(const EncodedInput& e, Index d) : items_(e.items) {
    const int runs = e.run_count();
    pool_.assign(static_cast<std::size_t>(runs) + 1, CompressedCounter(d));
    store_.assign(items_.size(), -1);
    int next = 0;
    for (std::size_t i = 0; i < items_.size(); ++i) {
      if (items_[i].kind != EncodedItem::Kind::kRun) continue;
      store_[i] = next;
      pool_[static_cast<std::size_t>(next)].load(items_[i].count - 1);
      ++next;
    }
    free_ = next;
    enter(0, +1);
  }

  Symbol read() const {
    if (item_ < 0) return kLeftMarker;
    if (item_ >= static_cast<int>(items_.size())) return kRightMarker;
    return items_[static_cast<std::size_t>(item_)].word[static_cast<std::size_t>(offset_)];
  }

  // Returns false when the move would leave the tape.
  bool move(int dir) {
    if (dir == 0) return true;
    if ((item_ < 0 && dir < 0) || (item_ >= static_cast<int>(items_.size()) && dir > 0)) {
      return false;
    }
    if (item_ < 0 || item_ >= static_cast<int>(items_.size())) {
      enter(item_ + dir, dir);
      return true;
    }
    const EncodedItem& it = items_[static_cast<std::size_t>(item_)];
    const auto len = static_cast<Index>(it.word.size());
    const Index next = offset_ + dir;
    if (next >= 0 && next < len) {
      offset_ = next;
      return true;
    }
    if (it.kind == EncodedItem::Kind::kRun) {
      CompressedCounter& ahead = pool(dir > 0 ? right_ : left_);
      CompressedCounter& behind = pool(dir > 0 ? left_ : right_);
      if (!ahead.zero()) {
        ahead.add(-1);
        behind.add(1);
        pool_ops_ += 2;
        offset_ = dir > 0 ? 0 : len - 1;
        return true;
      }
      // Leaving the run: the copies are all behind the head now.
      store_[static_cast<std::size_t>(item_)] = dir > 0 ? left_ : right_;
      free_ = dir > 0 ? right_ : left_;
    }
    enter(item_ + dir, dir);
    return true;
  }

  int normalize() {
    int ops = 0;
    for (auto& c : pool_) {
      ops += c.normalize();
      max_value_ = std::max(max_value_, c.value());
    }
    return ops;
  }

  int pool_size() const { return static_cast<int>(pool_.size()); }
  Index pool_ops() const { return pool_ops_; }
  Index max_value() const { return max_value_; }

 private:
  CompressedCounter& pool(int i) { return pool_[static_cast<std::size_t>(i)]; }

  void enter(int item, int dir) {
    item_ = item;
    if (item < 0 || item >= static_cast<int>(items_.size())) return;
    const EncodedItem& it = items_[static_cast<std::size_t>(item)];
    offset_ = dir > 0 ? 0 : static_cast<Index>(it.word.size()) - 1;
    if (it.kind != EncodedItem::Kind::kRun) return;
    const int stored = store_[static_cast<std::size_t>(item)];
    if (dir > 0) {
      left_ = free_;
      right_ = stored;
    } else {
      left_ = stored;
      right_ = free_;
    }
    free_ = -1;
  }

  const std::vector<EncodedItem>& items_;
  std::vector<CompressedCounter> pool_;
  std::vector<int> store_;
  int free_ = -1;
  int item_ = -1;
  Index offset_ = 0;
  int left_ = -1;
  int right_ = -1;
  Index pool_ops_ = 0;
  Index max_value_ = 0;
};

struct SimOutcome {
  RunResult run;
  Index units = 0;
  Index quotient_ops = 0;
  Index shadow_mismatches = 0;
  int pool_counters = 0;
  Index pool_ops = 0;
  Index max_pool_value = 0;
};

// Steps C over the encoding with every counter compressed by d; each group
// of d raw steps forms one unit, after which all remainders are normalized.
SimOutcome simulate(const CounterMachine& c, const EncodedInput& e, Index d,
                    const RunOptions& options) {
  if (options.limit <= 0) throw std::invalid_argument("step limit must be positive");
  const Word decoded = decode_encoded_input(e);
  check_word(decoded, c.alphabet());
  const Tape shadow_tape(decoded);
  const Index n = shadow_tape.length();
  const auto k = static_cast<std::size_t>(c.counters());

  EncodedHead head(e, d);
  std::vector<CompressedCounter> counters(k, CompressedCounter(d));
  SimOutcome out;
  RunResult& result = out.run;
  result.trace.max_counters.assign(k, 0);
  result.trace.max_positions.assign(1, 1);
  SimConfig cfg{c.start(), 1, std::vector<Index>(k, 0), 0};
  const double states = static_cast<double>(c.num_states()) *
                        (c.policy() == OverflowPolicy::kSignal ? std::pow(2.0, c.counters()) : 1.0);
  detail::LoopDetector<SimConfig> loops(
      detail::loop_detection_armed(options, states, n, 1, c.counters()));

  Index in_unit = 0;
  auto end_unit = [&] {
    if (in_unit == 0) return;
    for (auto& v : counters) out.quotient_ops += v.normalize();
    out.quotient_ops += head.normalize();
    ++out.units;
    in_unit = 0;
  };
  auto finish = [&](Verdict v, std::string_view why) {
    end_unit();
    result.verdict = v;
    result.reason = why;
    out.pool_counters = head.pool_size();
    out.pool_ops = head.pool_ops();
    out.max_pool_value = head.max_value();
    return out;
  };

  while (true) {
    if (c.is_accepting(cfg.state)) return finish(Verdict::kAccept, reason::kAcceptingState);
    if (result.steps >= options.limit) return finish(Verdict::kTimeout, reason::kStepLimit);
    for (std::size_t i = 0; i < k; ++i) cfg.values[i] = counters[i].value();
    if (loops.observe(cfg)) return finish(Verdict::kReject, reason::kLoop);

    CounterMask zeros = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (counters[i].zero()) zeros |= CounterMask{1} << i;
      if (counters[i].zero() != (counters[i].value() == 0)) ++out.shadow_mismatches;
    }
    const Symbol s = head.read();
    if (s != shadow_tape.at(cfg.pos)) ++out.shadow_mismatches;
    const CounterAction* action = c.find(cfg.state, s, zeros, cfg.overflow);
    if (action == nullptr) return finish(Verdict::kReject, reason::kNoTransition);

    if (!head.move(action->dir)) {
      result.trace.violations.emplace_back("input head left the tape");
      return finish(Verdict::kFault, reason::kOutOfBounds);
    }
    if (action->dir != 0) ++result.trace.head_moves;
    cfg.pos += action->dir;
    result.trace.max_positions[0] = std::max(result.trace.max_positions[0], cfg.pos);
    cfg.overflow = 0;
    for (std::size_t i = 0; i < k; ++i) {
      CompressedCounter& v = counters[i];
      switch (action->ops[i]) {
        case CounterOp::kNop:
          break;
        case CounterOp::kDec:
          if (v.zero()) {
            result.trace.violations.push_back("decrement of zero counter " + std::to_string(i));
            ++result.steps;
            ++in_unit;
            return finish(Verdict::kFault, reason::kDecOnZero);
          }
          v.add(-1);
          ++result.trace.counter_ops;
          break;
        case CounterOp::kInc:
          ++result.trace.counter_ops;
          // Comparing against n stands for a fixed counter holding n.
          if (v.value() < n) {
            v.add(1);
            break;
          }
          if (c.policy() == OverflowPolicy::kBlock) {
            result.trace.violations.push_back("overflow of counter " + std::to_string(i));
            ++result.steps;
            ++in_unit;
            return finish(Verdict::kFault, reason::kOverflow);
          }
          if (c.policy() == OverflowPolicy::kSignal) cfg.overflow |= CounterMask{1} << i;
          break;
      }
      result.trace.max_counters[i] = std::max(result.trace.max_counters[i], v.value());
    }
    cfg.state = action->next;
    ++result.steps;
    if (++in_unit == d) end_unit();
  }
}

}  // namespace

EncodedRunResult run_on_encoding(const CounterMachine& c, const EncodedInput& e,
                                 const RunOptions& options) {
  SimOutcome s = simulate(c, e, 1, options);
  return {std::move(s.run), s.pool_counters, s.pool_ops, s.max_pool_value, s.shadow_mismatches};
}

SpeedupResult speedup_run(const CounterMachine& c, const BoundDescriptor& bound,
                          std::string_view input, const SpeedupConfig& config,
                          const RunOptions& options) {
  const Index d = compression_factor(config);
  check_word(input, c.alphabet());
  EncodedInput e = encode_bounded_input(input, bound);
  SimOutcome s = simulate(c, e, d, options);
  SpeedupResult out{std::move(s.run), d, e.steps, 0, s.units, 0, s.quotient_ops,
                    s.shadow_mismatches, std::move(e)};
  out.simulated_steps = out.run.steps;
  out.accounting_steps = out.encoding_steps + out.units;
  return out;
}

}  // namespace bcl
