#pragma once

#include <stdexcept>
#include <string>

#include "pavelka/formula.hpp"

namespace pavelka {

struct ParseError : std::runtime_error {
  ParseError(int line, int col, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(col) + ": " + what),
        line(line),
        col(col) {}
  int line;
  int col;
};

/// Parses a single formula; the whole text must be consumed.
/// line_offset shifts reported line numbers when parsing file fragments.
Formula parse_formula(const std::string& text, int line_offset = 0);

}  // namespace pavelka
