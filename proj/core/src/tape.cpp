#include "bcl/tape.hpp"

namespace bcl {

Tape::Tape(std::string_view content) : content_(content) {
  for (Symbol s : content_) {
    if (is_marker(s)) {
      throw MachineError("end-marker symbol inside tape content");
    }
  }
}

void check_word(std::string_view word, std::string_view alphabet) {
  for (Symbol s : word) {
    if (is_marker(s)) throw MachineError("input contains a reserved end-marker");
    if (alphabet.find(s) == std::string_view::npos) {
      throw MachineError(std::string("input symbol '") + s + "' not in alphabet");
    }
  }
}

}  // namespace bcl
