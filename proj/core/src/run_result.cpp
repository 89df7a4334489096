#include "bcl/run_result.hpp"

#include <algorithm>

namespace bcl {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kAccept: return "accept";
    case Verdict::kReject: return "reject";
    case Verdict::kTimeout: return "timeout";
    case Verdict::kFault: return "fault";
  }
  return "fault";
}

Index RunResult::max_counter() const {
  if (trace.max_counters.empty()) return 0;
  return *std::max_element(trace.max_counters.begin(), trace.max_counters.end());
}

}  // namespace bcl
