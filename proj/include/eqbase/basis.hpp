#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "eqbase/derivation.hpp"
#include "eqbase/rees.hpp"
#include "eqbase/sigma.hpp"

namespace eqbase {

// Raised when the constructive machinery meets a word that cannot come from
// an unstable pair of a satisfied identity; the message names the violated
// claim and, where applicable, the refuting catalogue isoterm.
struct NotUnstableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// u derives to z1^3 ... zk^3 . u' where the zi are the letters occurring more
// than twice (first-occurrence order, counts reduced to exactly three) and u'
// is 2-limited; the trace uses only the three aperiodic identities.
struct NormalizeResult {
  Word normalized;
  DerivationTrace trace;
  std::vector<Variable> cube_letters;
};

NormalizeResult normalize_cubes(const Word& w);
// As above with a forced cube order (must list exactly the over-occurring
// letters of w).
NormalizeResult normalize_cubes(const Word& w, const std::vector<Variable>& cube_order);

// u = u1.xy.u2.xy.u3 for the critical pair (x, y); requires both occurrence
// pairs adjacent and no u2 letter linear in u.
struct AdjacentDecomposition {
  Word u1, u2, u3;
  std::size_t first_xy = 0;   // position of the first x
  std::size_t second_xy = 0;  // position of the second x
};

AdjacentDecomposition decompose_adjacent(const Word& u, const Variable& x,
                                         const Variable& y);

// Reduction 1: the smallest block containing x, with the untouched flanks.
struct BlockReduction {
  Span block;
  Word flank_left, flank_right;
  Word word;  // the block itself
};

BlockReduction reduce1_block(const Word& u, const Variable& x);

// Reduction 2: trim the largest common suffix of u1/u2 and the largest
// common prefix of u3/u2; the trimmed words re-enter through z1 and z2.
struct TrimReduction {
  Word u11, u12;  // u1 = u11.u12; u12 also a suffix of u2
  Word u31, u32;  // u3 = u31.u32; u31 also a prefix of u2
  Word u2core;    // u2 = u31.u2core.u12
};

TrimReduction reduce2_trim(const Word& u1, const Word& u2, const Word& u3);

// Reduction 3: collapse every maximal repeated factor free of x and y to its
// first letter; the lift substitutes the letter back to the factor.
struct CollapseReduction {
  Word word;
  Substitution lift;  // first letter -> collapsed factor
};

CollapseReduction reduce3_collapse(const Word& u, const Variable& x, const Variable& y);

// Structural facts forced on a fully reduced word by the catalogue isoterms;
// throws NotUnstableError naming the violated claim.
void validate_claims(const Word& u, const Variable& x, const Variable& y);

// The inductive construction: n and phi with w_n phi = u, x phi = x,
// y phi = y, z1 phi = z2 phi = 1, every xi phi a letter or empty.  May
// return n = 1; callers lift that to n = 2.
struct PhiResult {
  int n = 0;
  Substitution phi;
};

PhiResult build_phi(const Word& u, const Variable& x, const Variable& y);

// One application of some w_n = w'_n (through the reduction lifts) that
// swaps both xy factors of a critical pair of u = v; the unstable pair count
// of (next, v) drops strictly.
struct Elimination {
  Word next;
  DerivationStep step;
};

Elimination eliminate_critical_pair(const Word& u, const Word& v);

// The monoid of the 37-word catalogue, built once.
const ReesMonoid& catalogue_monoid();

// Full pipeline: either a verified derivation of u = v from the identity
// system, or the checker's witness that the catalogue monoid refutes it.
using DeriveResult = std::variant<DerivationTrace, ReesMonoid::SatisfactionWitness>;

DeriveResult derive(const Word& u, const Word& v, const ReesMonoid& m);
DeriveResult derive(const Word& u, const Word& v);  // over catalogue_monoid()

}  // namespace eqbase
