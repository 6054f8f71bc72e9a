#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "eqbase/identity.hpp"
#include "eqbase/match.hpp"
#include "eqbase/rees.hpp"

namespace eqbase {

// A finite monoid given by its multiplication table.  Element 0 is the
// identity.  Construction from a full table checks the monoid laws.
class FiniteMonoidTable {
 public:
  FiniteMonoidTable(int order, std::vector<std::uint8_t> table);

  int order() const { return order_; }
  std::uint8_t product(int a, int b) const { return table_[a * order_ + b]; }
  const std::vector<std::uint8_t>& table() const { return table_; }
  bool commutative() const;
  std::string str() const;  // rows, space separated

 private:
  int order_ = 0;
  std::vector<std::uint8_t> table_;
};

// Exhaustive evaluation of an identity over all element substitutions.
// Budget counts evaluations.
bool satisfies_naive(const FiniteMonoidTable& m, const Identity& id, Budget& budget);
bool satisfies_naive(const ReesMonoid& m, const Identity& id, Budget& budget);

// The multiplication table of a factor monoid: element i < |factors| is the
// i-th factor in shortlex order, element |factors| is the zero.
FiniteMonoidTable table_of(const ReesMonoid& m);

// All nontrivial identities u = v with |u|, |v| <= max_len over at most
// max_vars variables that m satisfies, as canonical representatives
// (joint renaming, lesser orientation first), each listed once.
std::vector<Identity> enumerate_identities(const ReesMonoid& m, int max_len, int max_vars,
                                           Budget& budget);

struct WitnessSearchOptions {
  int max_order = 5;
  std::uint64_t budget = 200'000'000;
};

// A monoid table satisfying every member of `rest` but failing `sigma`; such
// a table proves rest does not derive sigma.  Callers bound the w_n family
// themselves when passing rest; balanced members hold automatically on
// commutative tables and are skipped there.  Returns nullopt when no table of
// order <= max_order qualifies.  Throws std::invalid_argument when sigma is a
// member of rest.
std::optional<FiniteMonoidTable> semantic_irredundancy_witness(
    const Identity& sigma, const std::vector<Identity>& rest,
    const WitnessSearchOptions& options);

}  // namespace eqbase
