#pragma once

#include <cmath>
#include <cstdint>

#include "bcl/run_result.hpp"

namespace bcl::detail {

// Brent-style cycle detection over a deterministic configuration sequence:
// a snapshot is taken at every power-of-two step and each later
// configuration is compared against it. Any repeat is found within twice
// the (preperiod + period) steps, using O(1) extra configurations.
template <typename Config>
class LoopDetector {
 public:
  explicit LoopDetector(bool armed) : armed_(armed) {}

  // Returns true if `config` repeats an earlier configuration.
  bool observe(const Config& config) {
    if (!armed_) return false;
    if (has_snapshot_ && snapshot_ == config) return true;
    if (++since_snapshot_ >= window_) {
      snapshot_ = config;
      has_snapshot_ = true;
      since_snapshot_ = 0;
      window_ *= 2;
    }
    return false;
  }

 private:
  bool armed_;
  Config snapshot_{};
  bool has_snapshot_ = false;
  std::uint64_t since_snapshot_ = 0;
  std::uint64_t window_ = 1;
};

// Number of configurations of a machine with the given resources on an
// input of length n; a deterministic run longer than this must loop.
inline double configuration_space(double states, Index n, int heads, int counters) {
  return states * std::pow(static_cast<double>(n + 2), heads) *
         std::pow(static_cast<double>(n + 1), counters);
}

inline bool loop_detection_armed(const RunOptions& options, double states,
                                 Index n, int heads, int counters) {
  return options.detect_loops &&
         configuration_space(states, n, heads, counters) <= options.loop_budget;
}

}  // namespace bcl::detail
