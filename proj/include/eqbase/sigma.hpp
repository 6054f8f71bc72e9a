#pragma once

#include <string>
#include <vector>

#include "eqbase/identity.hpp"
#include "eqbase/word.hpp"

namespace eqbase {

// u_n = x1 x0 x2 x1 x3 x2 ... xn x_{n-1}, length 2n.  Requires n >= 1.
Word make_u(int n);

// w_n = x0 z1xyz2 u_n z1xyz2 xn, length 2n + 10.
Word make_w(int n);

// w_n with both xy factors switched to yx.
Word make_w_prime(int n);

// The three aperiodic identities:
//   xt1xt2x = x^3 t1 t2   (aperiodic-1)
//   x^3 t1 t2 = t1 t2 x^3 (aperiodic-2)
//   x^3 = x^4             (aperiodic-3)
std::vector<Identity> aperiodic_identities();

// The trio followed by w_n = w'_n for 2 <= n <= n_max.  The n = 1 member is
// derivable and deliberately absent.  Requires n_max >= 2.
std::vector<Identity> sigma_members(int n_max);

// {xyyx, xxyy, xtyxy, xytxy, xyxty, xyzyxz, zxyzyx}.
std::vector<Word> catalogue_U();

struct CatalogueEntry {
  Word word;
  int group = 0;   // 1..9; 0 for the three carried-over words
  int index = 0;   // position within the group, 1-based
  bool reversed = false;
  std::string label;  // e.g. "3.2", "3.2R", "xxyy"
};

// The 37-word catalogue: {xxyy, xyzyxz, zxyzyx} plus the twenty base words
// of groups 1-9 and their reversals, deduplicated by canonical form.
// Construction asserts the count.
std::vector<CatalogueEntry> catalogue_V();

// The catalogue entries as plain words, in catalogue order.
std::vector<Word> catalogue_V_words();

}  // namespace eqbase
