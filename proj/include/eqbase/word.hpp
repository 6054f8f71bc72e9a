#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace eqbase {

// A variable token: one lowercase letter followed by an optional decimal
// index, e.g. x, z1, x12.  Indices normalise at parse time (x01 == x1).
struct Variable {
  char base = 'a';
  std::int32_t sub = -1;  // -1: bare letter, no numeric suffix

  friend constexpr auto operator<=>(const Variable&, const Variable&) = default;
  std::string str() const;
};

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg), position(pos) {}
};

// A finite word over Variable.  The empty word is the monoid identity and
// renders as "1".
struct Word {
  std::vector<Variable> letters;

  Word() = default;
  explicit Word(std::vector<Variable> ls) : letters(std::move(ls)) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  const Variable& operator[](std::size_t i) const { return letters[i]; }

  auto begin() const { return letters.begin(); }
  auto end() const { return letters.end(); }

  void push_back(Variable v) { letters.push_back(v); }
  void append(const Word& w) {
    letters.insert(letters.end(), w.letters.begin(), w.letters.end());
  }
  // Subword [b, e).
  Word sub(std::size_t b, std::size_t e) const {
    return Word(std::vector<Variable>(letters.begin() + b, letters.begin() + e));
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

  std::string str() const;
};

Word concat(const Word& a, const Word& b);
Word concat(const Word& a, const Word& b, const Word& c);

// Length first, then letterwise order.  The deterministic enumeration order
// used throughout.
bool shortlex_less(const Word& a, const Word& b);

// Text format: "1" for the empty word, otherwise a concatenation of tokens
// (maximal munch: a letter grabs the longest following digit run).
Word parse_word(std::string_view text);

struct WordStats {
  std::set<Variable> content;
  std::map<Variable, int> occ;
  int max_occ = 0;                // 0 for the empty word
  std::set<Variable> linear;      // letters occurring exactly once
  bool n_limited(int n) const { return max_occ <= n; }
};

WordStats word_stats(const Word& w);
std::set<Variable> content(const Word& w);
int occ(const Variable& x, const Word& w);
bool is_n_limited(const Word& w, int n);
// Variables in order of first occurrence.
std::vector<Variable> first_occurrence_order(const Word& w);

// w[X]: delete every letter outside X.
Word project(const Word& w, const std::set<Variable>& keep);
Word project(const Word& w, std::initializer_list<Variable> keep);

// a occurs contiguously in b; the empty word is a factor of everything.
bool is_factor(const Word& a, const Word& b);

// Positions (0-based) of all occurrences of x in w, left to right.
std::vector<std::size_t> occurrence_positions(const Word& w, const Variable& x);

// The i-th occurrence of a variable, 1-based.
struct OccurrenceRef {
  Variable var;
  int index = 1;
};

// Position of the referenced occurrence, or nullopt when occ(var, w) < index.
std::optional<std::size_t> resolve(const Word& w, const OccurrenceRef& ref);

// 1-based occurrence index of position p among the occurrences of w[p].
int occ_index(const Word& w, std::size_t p);

// True iff the referenced occurrences sit at consecutive positions of w in
// the given order.  Throws std::out_of_range on an unresolvable reference.
bool occurrence_factor(const Word& w, std::span<const OccurrenceRef> refs);

// w[x,y] is xyxy or yxyx.
bool interlocks(const Word& w, const Variable& x, const Variable& y);

// True iff y is linked to x: a chain x = x_0, x_1, ..., x_n of pairwise
// interlocked letters ends in x_n with x_n interlocked to y, or
// w[x_n,y] = x_n y y x_n, or w[x_n,y] = x_n y x_n (n = 0 allowed).
// The relation is asymmetric; in xyyx, y is linked to x but not conversely.
bool linked(const Word& w, const Variable& x, const Variable& y);

// Half-open position range.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
  friend bool operator==(const Span&, const Span&) = default;
};

// Smallest closed factor containing the span: expand until the range holds
// every occurrence of each of its letters.
Span smallest_block(const Word& w, Span span);

Word reverse(const Word& w);

// Rename variables to a, b, c, ... in order of first occurrence; after z the
// scheme continues a1, b1, ..., z1, a2, ...
Word canonical_form(const Word& w);

}  // namespace eqbase

template <>
struct std::hash<eqbase::Variable> {
  std::size_t operator()(const eqbase::Variable& v) const noexcept {
    return std::hash<std::uint64_t>{}((std::uint64_t(std::uint8_t(v.base)) << 32) ^
                                      std::uint32_t(v.sub + 1));
  }
};

template <>
struct std::hash<eqbase::Word> {
  std::size_t operator()(const eqbase::Word& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (const auto& v : w.letters) {
      h ^= std::hash<eqbase::Variable>{}(v);
      h *= 0x100000001b3ull;
    }
    return h;
  }
};
