#include "bcl/acceptors.hpp"

#include <stdexcept>

namespace bcl {

RunResult run_counter_program(const CounterProgram& p, std::string_view input,
                              const RunOptions& options) {
  return run_program(input, p.counters, options.limit, p.body);
}

namespace {

constexpr int kC = 0;

void count_to_left_marker(CounterVm& vm) {
  while (vm.read() != kLeftMarker) vm.step(-1, {inc(kC)});
}

void walk_to(CounterVm& vm, Symbol marker, int dir) {
  while (vm.read() != marker) vm.move(dir);
}

// From the left end-marker, walks right until the counter is empty.
void walk_off_counter(CounterVm& vm) {
  while (!vm.zero(kC)) vm.step(1, {dec(kC)});
}

// One sweep from the left to the right end-marker, changing the counter on
// every second move: by floor((n+1)/2) = n/2 for even n.
void sweep(CounterVm& vm, int delta) {
  bool second = false;
  while (vm.read() != kRightMarker) {
    if (second) {
      vm.step(1, {delta > 0 ? inc(kC) : dec(kC)});
    } else {
      vm.move(1);
    }
    second = !second;
  }
}

bool ww_body(CounterVm& vm) {
  // Even-length check.
  bool odd = false;
  while (vm.read() != kRightMarker) {
    if (vm.read() != '0' && vm.read() != '1') return false;
    vm.move(1);
    odd = !odd;
  }
  if (odd) return false;
  walk_to(vm, kLeftMarker, -1);
  vm.move(1);
  if (vm.read() == kRightMarker) return true;

  // Compare position i with i + n/2 for i = 1, 2, ... until the partner is
  // the last symbol.
  while (true) {
    const Symbol s = vm.read();
    count_to_left_marker(vm);  // counter = i
    sweep(vm, +1);             // counter = i + n/2
    walk_to(vm, kLeftMarker, -1);
    walk_off_counter(vm);      // at i + n/2
    if (vm.read() != s) return false;
    vm.move(1);
    if (vm.read() == kRightMarker) return true;
    vm.move(-1);

    // Reverse the computation to return to i, then advance.
    count_to_left_marker(vm);  // counter = i + n/2
    sweep(vm, -1);             // counter = i
    walk_to(vm, kLeftMarker, -1);
    walk_off_counter(vm);
    vm.move(1);
  }
}

}  // namespace

CounterProgram ww_program() { return {"ww", 1, ww_body}; }

RunResult ww_accept(std::string_view x, const RunOptions& options) {
  return run_counter_program(ww_program(), x, options);
}
RunResult palindrome_2c_accept(std::string_view x, const RunOptions& options) {
  return run_counter_program(palindrome_2c_program(), x, options);
}
RunResult lm_accept(int m, std::string_view x, const RunOptions& options) {
  return run_counter_program(lm_program(m), x, options);
}

StepSeries measure_steps(const CounterProgram& p, const std::vector<std::string>& inputs,
                         const RunOptions& options) {
  StepSeries out;
  for (const auto& x : inputs) {
    const auto n = static_cast<Index>(x.size());
    if (!out.empty() && n <= out.back().n) {
      throw std::invalid_argument("inputs must have strictly increasing length");
    }
    const RunResult r = run_counter_program(p, x, options);
    out.push_back({n, r.steps, r.verdict, r.max_counter()});
  }
  return out;
}

std::string thue_morse(std::size_t length) {
  std::string out(length, '0');
  for (std::size_t i = 0; i < length; ++i) {
    if (__builtin_popcountll(i) % 2 == 1) out[i] = '1';
  }
  return out;
}

namespace {

std::string reversed(std::string s) { return {s.rbegin(), s.rend()}; }

}  // namespace

std::string canonical_member(std::string_view acceptor, int m, Index n) {
  if (n < 0) throw std::invalid_argument("length must be non-negative");
  const auto un = static_cast<std::size_t>(n);
  if (acceptor == "ww") {
    const std::string w = thue_morse(un / 2);
    return w + w;
  }
  if (acceptor == "palindrome2c") {
    if (n == 0) return "";
    const std::string x = thue_morse((un - 1) / 2);
    return x + "$" + reversed(x);
  }
  if (acceptor == "lm") {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    std::string best;
    for (std::size_t t = 0; t < 62; ++t) {
      const std::size_t h = std::size_t{1} << t;
      if (2 * h + 1 > un) break;
      const std::size_t xlen = static_cast<std::size_t>(m) * t;
      if (xlen > h) continue;
      std::string left = thue_morse(xlen) + std::string(h - xlen, '0');
      best = left + "$" + reversed(left);
    }
    return best;
  }
  throw std::invalid_argument("unknown acceptor: " + std::string(acceptor));
}

CounterProgram program_by_name(std::string_view acceptor, int m) {
  if (acceptor == "ww") return ww_program();
  if (acceptor == "palindrome2c") return palindrome_2c_program();
  if (acceptor == "lm") return lm_program(m);
  throw std::invalid_argument("unknown acceptor: " + std::string(acceptor));
}

}  // namespace bcl
