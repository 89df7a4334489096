#include "bcl/acceptors.hpp"

namespace bcl {
namespace {

bool is_bit(Symbol s) { return s == '0' || s == '1'; }

// Two counters whose roles (encoding, auxiliary) are swapped in the finite
// control after every doubling or halving.
class Palindrome2c {
 public:
  explicit Palindrome2c(CounterVm& vm) : vm_(vm) {}

  bool run() {
    if (!first_scan()) return false;
    while (vm_.read() != '$') {
      encode_segment();
      go_to_mirror_of_previous();
      if (!decode_and_compare()) return false;
      return_to_segment_start();
      encode_segment();
      clear_encoding();
    }
    return true;
  }

 private:
  void swap_roles() { std::swap(enc_, aux_); }

  // Checks for exactly one $ with equally long bit strings on both sides,
  // then returns to the first input square.
  bool first_scan() {
    bool seen = false;
    while (vm_.read() != kRightMarker) {
      const Symbol s = vm_.read();
      if (s == '$') {
        if (seen) return false;
        seen = true;
        vm_.move(1);
      } else if (!is_bit(s)) {
        return false;
      } else if (!seen) {
        vm_.step(1, {inc(enc_)});
      } else {
        if (vm_.zero(enc_)) return false;
        vm_.step(1, {dec(enc_)});
      }
    }
    if (!seen || !vm_.zero(enc_)) return false;
    while (vm_.read() != kLeftMarker) vm_.move(-1);
    vm_.move(1);
    return true;
  }

  // Reads bits from the current square into enc with a leading 1, most
  // significant first, until $ or until the encoding exceeds half the input
  // (E > |x|). The pointer ends after the last bit read.
  void encode_segment() {
    vm_.increment(enc_);
    while (true) {
      const bool one = vm_.read() == '1';
      double_encoding();
      if (one) {
        vm_.step(1, {inc(enc_)});
      } else {
        vm_.move(1);
      }
      if (vm_.read() == '$' || exceeds_half()) return;
    }
  }

  void double_encoding() {
    while (!vm_.zero(enc_)) {
      vm_.step(0, {dec(enc_), inc(aux_)});
      vm_.increment(aux_);
    }
    swap_roles();
    if (vm_.audit_value(0) != 0 && vm_.audit_value(1) != 0) {
      vm_.record_violation("doubling left both counters nonzero");
    }
  }

  // Attempted subtraction of the position of $ from the encoding E, made of
  // a left trip and possibly a right trip from the current square P. Each
  // trip costs O(min(E, n)); E is restored.
  bool exceeds_half() {
    // Left trip: E <= P means E <= |x|.
    while (!vm_.zero(enc_) && vm_.read() != kLeftMarker) vm_.step(-1, {dec(enc_), inc(aux_)});
    if (vm_.zero(enc_)) {
      while (!vm_.zero(aux_)) vm_.step(1, {dec(aux_), inc(enc_)});
      return false;
    }
    // E > P: back to P, then the right trip toward $.
    while (!vm_.zero(aux_)) vm_.step(1, {dec(aux_)});
    while (!vm_.zero(enc_) && vm_.read() != '$') vm_.step(1, {dec(enc_), inc(aux_)});
    const bool exceeded = vm_.read() == '$';
    // Restore: the right trip, then the P squares consumed by the left trip.
    while (!vm_.zero(aux_)) vm_.step(-1, {dec(aux_), inc(enc_)});
    while (vm_.read() != kLeftMarker) vm_.step(-1, {inc(enc_), inc(aux_)});
    while (!vm_.zero(aux_)) vm_.step(1, {dec(aux_)});
    return exceeded;
  }

  // From square q (after the segment), goes to n+2-q, the mirror of q-1.
  void go_to_mirror_of_previous() {
    while (vm_.read() != kLeftMarker) vm_.step(-1, {inc(aux_)});
    vm_.decrement(aux_);
    while (vm_.read() != kRightMarker) vm_.move(1);
    while (!vm_.zero(aux_)) vm_.step(-1, {dec(aux_)});
  }

  // Halves the encoding; returns the remainder.
  int halve() {
    while (true) {
      if (vm_.zero(enc_)) {
        swap_roles();
        return 0;
      }
      vm_.decrement(enc_);
      if (vm_.zero(enc_)) {
        swap_roles();
        return 1;
      }
      vm_.step(0, {dec(enc_), inc(aux_)});
    }
  }

  bool encoding_is_one() {
    vm_.decrement(enc_);
    const bool one = vm_.zero(enc_);
    vm_.increment(enc_);
    return one;
  }

  // Compares bits least significant first while moving right, leaving the
  // encoding empty.
  bool decode_and_compare() {
    while (!encoding_is_one()) {
      const int bit = halve();
      if (vm_.read() != (bit == 1 ? '1' : '0')) return false;
      vm_.move(1);
    }
    vm_.decrement(enc_);
    return true;
  }

  // From n+2-p back to p: p-1 squares to the right end-marker, then the same
  // distance from the left one.
  void return_to_segment_start() {
    while (vm_.read() != kRightMarker) vm_.step(1, {inc(aux_)});
    while (vm_.read() != kLeftMarker) vm_.move(-1);
    vm_.move(1);
    while (!vm_.zero(aux_)) vm_.step(1, {dec(aux_)});
  }

  void clear_encoding() {
    while (!vm_.zero(enc_)) vm_.decrement(enc_);
  }

  CounterVm& vm_;
  int enc_ = 0;
  int aux_ = 1;
};

}  // namespace

CounterProgram palindrome_2c_program() {
  return {"palindrome2c", 2, [](CounterVm& vm) { return Palindrome2c(vm).run(); }};
}

}  // namespace bcl
