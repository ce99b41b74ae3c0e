#pragma once

#include "autocore/network.hpp"

namespace autocore {

class ParseError : public Error {
public:
  ParseError(const std::string& what, int line, int col)
      : Error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + what),
        line(line),
        col(col) {}
  int line;
  int col;
};

// Reaction file format, one reaction per line:
//   [label:] coeff entity + coeff entity ... -> coeff entity + ...
// Coefficients are positive integers or p/q rationals and default to 1.
// '#' starts a full-line comment. Empty sides are rejected unless allow_open
// is set (such reactions are stored but can never join a well-formed sub-RN).
ReactionNetwork parse_reactions(std::string_view text, bool allow_open = false);

// Inverse of parse_reactions up to formatting; parse(serialize(parse(t)))
// equals parse(t).
std::string serialize_reactions(const ReactionNetwork& rn);

}  // namespace autocore
