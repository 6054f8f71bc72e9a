#pragma once

#include <map>

#include "eqbase/word.hpp"

namespace eqbase {

// A finite map Variable -> Word.  Unmapped variables are fixed; an explicit
// image 1 deletes the variable.  Application is a monoid homomorphism.
struct Substitution {
  std::map<Variable, Word> map;

  Word image(const Variable& v) const {
    auto it = map.find(v);
    return it == map.end() ? Word(std::vector<Variable>{v}) : it->second;
  }
  void set(const Variable& v, Word w) { map[v] = std::move(w); }

  friend bool operator==(const Substitution&, const Substitution&) = default;
  std::string str() const;
};

Word apply(const Substitution& s, const Word& w);

// apply(compose(a, b), w) == apply(b, apply(a, w)).
Substitution compose(const Substitution& a, const Substitution& b);

}  // namespace eqbase
