#include <stdexcept>
#include <utility>

#include "bcl/acceptors.hpp"

namespace bcl {
namespace {

bool is_bit(Symbol s) { return s == '0' || s == '1'; }

// Input shape: left $ right with |left| = |right| = h = 2^t, left = x 0^(h-mt),
// right = left reversed, |x| = mt. Counter roles live in the finite control.
class LmAcceptor {
 public:
  LmAcceptor(CounterVm& vm, int m) : vm_(vm), m_(m) {}

  bool run() {
    if (!first_scan()) return false;
    if (!compute_log()) return false;
    if (!check_padding()) return false;
    if (t_is_zero_) return true;
    split_block_size();
    for (int i = 0; i < 2 * m_; ++i) {
      const int dir = i % 2 == 0 ? 1 : -1;
      const bool short_block = t_odd_ && i % 2 == 1;
      encode_block(dir, short_block);
      go_to_mirror(dir);
      if (!decode_and_compare(dir)) return false;
      if (i + 1 < 2 * m_) skip_block(-dir, short_block);
    }
    return true;
  }

 private:
  // One left-to-right scan: a unique $, equal side lengths, h in a counter.
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
        vm_.step(1, {inc(a_), inc(b_)});
      } else {
        if (vm_.zero(a_)) return false;
        vm_.step(1, {dec(a_)});
      }
    }
    return seen && vm_.zero(a_);
  }

  // Halves h (in b_) down to 1 counting the halvings in t_; rejects unless h
  // is a positive power of two. Leaves every other counter zero.
  bool compute_log() {
    if (vm_.zero(b_)) return false;
    while (true) {
      const int rem = halve(b_, c_);
      if (rem == 1) {
        if (!vm_.zero(c_)) return false;
        break;
      }
      vm_.increment(t_);
      std::swap(b_, c_);
    }
    t_is_zero_ = vm_.zero(t_);
    return true;
  }

  // Moves `from` into `to` halved; returns the remainder.
  int halve(int from, int to) {
    while (true) {
      if (vm_.zero(from)) return 0;
      vm_.decrement(from);
      if (vm_.zero(from)) return 1;
      vm_.step(0, {dec(from), inc(to)});
    }
  }

  // From the right end-marker: skip mt squares (the mirrored x), count the
  // zeros up to $, check as many zeros left of $, then go to square 1.
  bool check_padding() {
    for (int round = 0; round < m_; ++round) {
      while (!vm_.zero(t_)) {
        if (vm_.read() == '$') return false;
        vm_.step(-1, {dec(t_), inc(c_)});
      }
      std::swap(t_, c_);
    }
    const int z = a_;
    vm_.move(-1);
    while (vm_.read() != '$') {
      if (vm_.read() != '0') return false;
      vm_.step(-1, {inc(z)});
    }
    while (!vm_.zero(z)) {
      vm_.step(-1, {dec(z)});
      if (vm_.read() != '0') return false;
    }
    while (vm_.read() != kLeftMarker) vm_.move(-1);
    vm_.move(1);
    return true;
  }

  // Block sizes: ceil(t/2) in len_, alternating with floor(t/2) when t is odd.
  void split_block_size() {
    const int half = b_;
    t_odd_ = halve(t_, half) == 1;
    len_ = half;
    spare_ = t_;
    if (t_odd_) vm_.increment(len_);
    enc_ = a_;
    aux_ = c_;
  }

  // Counts one block length off len_ into spare_, shorter by one for short
  // blocks; the caller swaps the two afterwards.
  void start_count(bool short_block) {
    if (short_block) vm_.step(0, {dec(len_), inc(spare_)});
  }

  void finish_count() { std::swap(len_, spare_); }

  void encode_block(int dir, bool short_block) {
    vm_.increment(enc_);
    start_count(short_block);
    while (!vm_.zero(len_)) {
      const bool one = vm_.read() == '1';
      while (!vm_.zero(enc_)) {
        vm_.step(0, {dec(enc_), inc(aux_)});
        vm_.increment(aux_);
      }
      std::swap(enc_, aux_);
      if (one) {
        vm_.step(dir, {dec(len_), inc(spare_), inc(enc_)});
      } else {
        vm_.step(dir, {dec(len_), inc(spare_)});
      }
    }
    finish_count();
  }

  // Reading rightwards from x ended at q: go to n+2-q. Reading leftwards
  // from the mirror ended at n+1-r: go to r-1. Both measure the distance to
  // the near end-marker and repeat it from the far one.
  void go_to_mirror(int dir) {
    const Symbol near = dir > 0 ? kLeftMarker : kRightMarker;
    const Symbol far = dir > 0 ? kRightMarker : kLeftMarker;
    while (vm_.read() != near) vm_.step(-dir, {inc(aux_)});
    vm_.decrement(aux_);
    while (vm_.read() != far) vm_.move(dir);
    while (!vm_.zero(aux_)) vm_.step(-dir, {dec(aux_)});
  }

  bool decode_and_compare(int dir) {
    while (true) {
      vm_.decrement(enc_);
      const bool done = vm_.zero(enc_);
      vm_.increment(enc_);
      if (done) break;
      const int bit = halve(enc_, aux_);
      std::swap(enc_, aux_);
      if (vm_.read() != (bit == 1 ? '1' : '0')) return false;
      vm_.move(dir);
    }
    vm_.decrement(enc_);
    return true;
  }

  // Walks back over the block just compared plus one square, to the start
  // of the next block on this side.
  void skip_block(int dir, bool short_block) {
    start_count(short_block);
    while (!vm_.zero(len_)) vm_.step(dir, {dec(len_), inc(spare_)});
    finish_count();
    vm_.move(dir);
  }

  CounterVm& vm_;
  int m_;
  int a_ = 0;
  int b_ = 1;
  int c_ = 2;
  int t_ = 3;
  int enc_ = 0;
  int aux_ = 2;
  int len_ = 1;
  int spare_ = 3;
  bool t_is_zero_ = false;
  bool t_odd_ = false;
};

}  // namespace

CounterProgram lm_program(int m) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  return {"lm", 4, [m](CounterVm& vm) { return LmAcceptor(vm, m).run(); }};
}

}  // namespace bcl
