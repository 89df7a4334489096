#include <set>
#include <stdexcept>

#include "bcl/transforms.hpp"

namespace bcl {

std::string_view to_string(Side s) { return s == Side::kLeft ? "left" : "right"; }

EventPrediction can_cause_next_event(const MultiHeadAutomaton& m, StateId state, int head,
                                     const Segment& segment, std::string_view reads) {
  const int r = m.num_states();
  if (m.sensing()) throw std::invalid_argument("event prediction needs a non-sensing machine");
  if (head < 0 || head >= m.heads()) throw std::invalid_argument("head index out of range");
  if (reads.size() != static_cast<std::size_t>(m.heads())) {
    throw std::invalid_argument("reads must hold one symbol per head");
  }
  if (segment.symbols.size() > static_cast<std::size_t>(2 * r - 1)) {
    throw std::invalid_argument("segment longer than 2r-1 symbols");
  }
  if (segment.center < 0 || segment.center >= static_cast<int>(segment.symbols.size())) {
    throw std::invalid_argument("head is not inside the segment");
  }

  const auto& seg = segment.symbols;
  const Symbol block = seg[static_cast<std::size_t>(segment.center)];
  std::string cur_reads(reads);
  std::set<std::pair<StateId, int>> seen;
  EventPrediction out;
  int pos = segment.center;
  StateId q = state;

  while (true) {
    if (!seen.emplace(q, pos).second) break;
    out.configurations_examined = static_cast<int>(seen.size());
    if (m.is_accepting(q)) break;
    cur_reads[static_cast<std::size_t>(head)] = seg[static_cast<std::size_t>(pos)];
    const HeadAction* a = m.find(q, cur_reads, "");
    if (a == nullptr) break;
    q = a->next;
    const int dir = a->moves[static_cast<std::size_t>(head)];
    if (dir == 0) continue;
    const Symbol here = seg[static_cast<std::size_t>(pos)];
    if ((here == kLeftMarker && dir < 0) || (here == kRightMarker && dir > 0)) break;
    pos += dir;
    const Side side = dir < 0 ? Side::kLeft : Side::kRight;
    if (pos < 0 || pos >= static_cast<int>(seg.size()) ||
        seg[static_cast<std::size_t>(pos)] != block) {
      out.causes = true;
      out.side = side;
      return out;
    }
  }
  return out;
}

}  // namespace bcl
