#pragma once

#include <string>

#include "eqbase/word.hpp"

namespace eqbase {

// An equation u ~ v between words.  Balancedness is a property, not an
// invariant.
struct Identity {
  Word lhs;
  Word rhs;
  std::string tag;  // e.g. "w_3", "aperiodic-1"; may be empty

  friend bool operator==(const Identity& a, const Identity& b) {
    return a.lhs == b.lhs && a.rhs == b.rhs;
  }
  std::string str() const { return lhs.str() + " = " + rhs.str(); }
};

// Text syntax: "u = v", whitespace around '=' optional, "1" for an empty side.
Identity parse_identity(std::string_view text);

// Equal occurrence counts of every variable on both sides.
bool balanced(const Identity& id);

std::set<Variable> content(const Identity& id);

}  // namespace eqbase
