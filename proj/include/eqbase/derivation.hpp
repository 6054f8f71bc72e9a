#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eqbase/identity.hpp"
#include "eqbase/match.hpp"
#include "eqbase/subst.hpp"
#include "eqbase/word.hpp"

namespace eqbase {

struct MalformedStepError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One rewrite: before = left.(source theta).right, after with the other side
// substituted in.  source/target depend on the direction.
struct DerivationStep {
  std::string rule;    // tag in the rule system, e.g. "w_2", "aperiodic-3"
  bool forward = true; // true: lhs -> rhs
  Substitution theta;
  Word left;
  Word right;
  Word before;
  Word after;
};

struct DerivationTrace {
  Word start;
  Word end;
  std::vector<DerivationStep> steps;
};

// Tag-indexed identity system for trace verification.
class RuleSet {
 public:
  RuleSet() = default;
  explicit RuleSet(const std::vector<Identity>& ids);
  const Identity* find(const std::string& tag) const;
  std::vector<std::string> tags() const;

 private:
  std::map<std::string, Identity> rules_;
};

// Checks w = left.(source theta).right and returns left.(target theta).right.
// Throws MalformedStepError when the precondition fails.
Word apply_step(const Word& w, const Identity& rule, const Substitution& theta,
                const Word& left, const Word& right, bool forward);

struct VerifyResult {
  bool ok = false;
  std::size_t failed_step = 0;  // meaningful iff !ok
  std::string reason;
};

// Every step well-formed with its rule in the system, the chain connected,
// endpoints matching, and all words of the chain pairwise distinct.
VerifyResult verify_trace(const DerivationTrace& trace, const RuleSet& rules);

struct PairStatus {
  Variable x, y;  // x < y
  bool stable = false;
  // Critical occurrence pairs, as (leading ref, trailing ref).
  std::vector<std::pair<OccurrenceRef, OccurrenceRef>> critical;
};

// Classification of every unordered pair of variables of u = v.
std::vector<PairStatus> unstable_pairs(const Word& u, const Word& v);

struct CriticalPair {
  Variable x, y;      // ordered: the i-th x immediately precedes the j-th y in u
  int i = 1, j = 1;
  std::size_t pos = 0;  // position of the x occurrence in u
};

// The leftmost critical occurrence pair of u = v, if any.
std::optional<CriticalPair> find_critical_pair(const Word& u, const Word& v);

// Breadth-bounded search for a derivation u ->* v over the rule system.
struct SearchResult {
  enum class Status { found, not_found_exhaustive, bounds_exceeded };
  Status status = Status::not_found_exhaustive;
  std::optional<DerivationTrace> trace;
};

SearchResult bounded_search(const Word& u, const Word& v, const std::vector<Identity>& rules,
                            int max_depth, std::size_t max_width, Budget& budget);

// Trace surgery.  reverse_trace flips every step; concat joins end-to-start;
// squash_trace removes cycles so the chain words are pairwise distinct.
DerivationTrace reverse_trace(const DerivationTrace& t);
DerivationTrace concat_traces(const DerivationTrace& a, const DerivationTrace& b);
DerivationTrace squash_trace(DerivationTrace t);

}  // namespace eqbase
