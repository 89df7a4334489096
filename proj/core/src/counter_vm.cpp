#include "bcl/counter_vm.hpp"

#include <algorithm>

namespace bcl {

CounterVm::CounterVm(std::string_view input, int counters, Index limit)
    : tape_(input), values_(static_cast<std::size_t>(counters), 0), limit_(limit) {
  if (counters < 0) throw std::invalid_argument("negative counter count");
  if (limit <= 0) throw std::invalid_argument("step limit must be positive");
  trace_.max_counters.assign(values_.size(), 0);
  trace_.max_positions.assign(1, 1);
}

void CounterVm::step(int dir, std::initializer_list<CounterUpdate> updates) {
  if (steps_ >= limit_) throw StepLimitReached();
  if (dir < -1 || dir > 1) throw std::invalid_argument("pointer direction must be -1, 0 or +1");
  const Index next = pos_ + dir;
  if (!tape_.in_bounds(next)) throw MachineFault(std::string(reason::kOutOfBounds));
  for (const auto& u : updates) {
    Index& v = values_.at(static_cast<std::size_t>(u.counter));
    if (u.delta < 0 && v == 0) {
      throw MachineFault(std::string(reason::kDecOnZero) + " (counter " +
                         std::to_string(u.counter) + ")");
    }
  }
  for (const auto& u : updates) {
    auto i = static_cast<std::size_t>(u.counter);
    values_[i] += u.delta;
    ++trace_.counter_ops;
    trace_.max_counters[i] = std::max(trace_.max_counters[i], values_[i]);
    if (values_[i] > tape_.length()) {
      trace_.violations.push_back("counter " + std::to_string(u.counter) +
                                  " exceeds the input length");
    }
  }
  if (dir != 0) ++trace_.head_moves;
  pos_ = next;
  trace_.max_positions[0] = std::max(trace_.max_positions[0], pos_);
  ++steps_;
}

}  // namespace bcl
