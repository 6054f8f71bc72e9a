#pragma once

#include <optional>
#include <unordered_map>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "eqbase/identity.hpp"
#include "eqbase/subst.hpp"
#include "eqbase/word.hpp"

namespace eqbase {

// Raised when a decision procedure refuses an input outside its supported
// regime rather than risk an incomplete answer.
struct UndecidedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The monoid of factors of a finite word set, with an absorbing zero for
// everything else.  Immutable after construction; every query is pure.
class ReesMonoid {
 public:
  // nullopt is the zero element; any factor word is itself.
  using Element = std::optional<Word>;

  struct SatisfactionWitness {
    Substitution theta;
    Element lhs_value;
    Element rhs_value;  // invariant: lhs_value != rhs_value
  };

  struct SatisfiesResult {
    bool holds = false;
    std::optional<SatisfactionWitness> witness;  // set iff !holds
  };

  struct IsotermResult {
    bool isoterm = false;
    std::optional<Word> witness;  // a w' != w with M |= w = w', iff !isoterm
  };

  // Throws std::invalid_argument unless W contains a nonempty word (the
  // degenerate monoid with 0 = 1 is unsupported).
  static ReesMonoid build(std::vector<Word> generators);

  const std::vector<Word>& generators() const { return generators_; }
  // All factors in shortlex order; [0] is the empty word.
  const std::vector<Word>& factors() const { return factors_sorted_; }
  bool contains_factor(const Word& w) const { return factor_set_.count(w) != 0; }
  // All words w with prefix.w still a factor, shortlex sorted; empty for
  // non-factors.
  const std::vector<Word>& right_extensions(const Word& prefix) const;
  std::size_t element_count() const { return factors_sorted_.size() + 1; }
  int max_len() const { return max_len_; }

  Element value(const Word& w) const;
  Element product(const Element& a, const Element& b) const;
  Element evaluate(const Word& w, const Substitution& theta) const;

  // Exact decision of M |= lhs = rhs.  Substitutions are enumerated into the
  // factor set under the weight bound sum occ(x, side) * |x theta| <= max_len
  // for at least one side; anything beyond zeroes both sides.  Pruning is
  // exact: a branch is dropped only when both running prefixes already left
  // the factor set or both weights exceed the bound.  The witness, when one
  // exists, is the least in the documented order (variables by first
  // occurrence in lhs then rhs, images shortlex).
  SatisfiesResult satisfies(const Identity& id) const;

  std::vector<std::pair<Identity, SatisfiesResult>> satisfies_all(
      const std::vector<Identity>& ids) const;

  // Exact isoterm decision for 2-limited w over a monoid whose factor set
  // contains some squared letter; outside that regime throws UndecidedError.
  IsotermResult is_isoterm(const Word& w) const;

  struct StabilityResult {
    bool stable = false;
    std::optional<Word> witness;  // w' with different {x,y} projection
  };

  // Stability of {x, y} in w with respect to this monoid; same supported
  // regime as is_isoterm.
  StabilityResult pair_stable(const Word& w, const Variable& x, const Variable& y) const;

 private:
  ReesMonoid() = default;

  std::vector<Word> generators_;
  std::unordered_set<Word> factor_set_;
  std::vector<Word> factors_sorted_;
  std::unordered_map<Word, std::vector<Word>> right_ext_;
  int max_len_ = 0;
};

// All factors of members of W, including the empty word.
std::vector<Word> factorial_closure(const std::vector<Word>& generators);

}  // namespace eqbase
