#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "eqbase/identity.hpp"
#include "eqbase/subst.hpp"
#include "eqbase/word.hpp"

namespace eqbase {

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Search node budget.  Exceeding it raises BudgetError; a search never
// returns a silent partial answer.
struct Budget {
  std::uint64_t limit = 100'000'000;  // default 1e8 nodes
  std::uint64_t used = 0;

  void tick() {
    if (++used > limit) throw BudgetError("search budget exceeded");
  }
};

// One way of writing target = left . (pattern v theta) . right.  The equation
// holds literally for every result returned.
struct MatchResult {
  Substitution theta;
  Word left;
  Word right;
};

// All substitutions theta over con(pattern) with pattern theta = target and
// every variable in `nonempty` mapped to a nonempty word.  Complete and
// duplicate-free; results in lexicographic order of alignments (image lengths
// tried ascending at each first occurrence).
std::vector<MatchResult> match_exact(const Word& pattern, const Word& target,
                                     const std::set<Variable>& nonempty,
                                     Budget& budget);

// As match_exact but over every context split: target = left.(pattern theta).right.
std::vector<MatchResult> match_factor(const Word& pattern, const Word& target,
                                      const std::set<Variable>& nonempty,
                                      Budget& budget);

// One applicable rewrite of target by id: a match of one side whose
// replacement by the other side changes the word.
struct RewriteHit {
  MatchResult match;
  bool forward = true;  // true: lhs matched, rewrites to rhs
  Word rewritten;
};

// Every nontrivial rewrite of target by id, in either direction.
std::vector<RewriteHit> applies_nontrivially(const Identity& id, const Word& target,
                                             Budget& budget);

// Per-identity stuck verdict against the rest of a system: an identity with
// no nontrivial application of any other member to either of its sides
// cannot be derived from them (no derivation can take its first step).
struct StuckVerdict {
  std::string tag;
  bool stuck = false;
  std::vector<std::string> offenders;  // tags of members that do apply
};

std::vector<StuckVerdict> stuck_irredundancy_report(const std::vector<Identity>& ids,
                                                    Budget& budget);

}  // namespace eqbase
