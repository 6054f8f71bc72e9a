#include "eqbase/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace eqbase {

namespace {

// Evaluate a word under an element assignment.
template <typename Product>
int eval_word(const Word& w, const std::map<Variable, int>& assign, int identity,
              Product&& prod) {
  int acc = identity;
  for (const auto& v : w) acc = prod(acc, assign.at(v));
  return acc;
}

template <typename Product>
bool naive_check(int order, const Identity& id, Budget& budget, int identity,
                 Product&& prod) {
  std::vector<Variable> vars;
  for (const auto& v : content(id)) vars.push_back(v);
  std::map<Variable, int> assign;
  for (const auto& v : vars) assign[v] = 0;
  // Odometer over order^k assignments.
  while (true) {
    budget.tick();
    if (eval_word(id.lhs, assign, identity, prod) !=
        eval_word(id.rhs, assign, identity, prod)) {
      return false;
    }
    std::size_t k = 0;
    for (; k < vars.size(); ++k) {
      if (++assign[vars[k]] < order) break;
      assign[vars[k]] = 0;
    }
    if (k == vars.size()) return true;
  }
}

}  // namespace

FiniteMonoidTable::FiniteMonoidTable(int order, std::vector<std::uint8_t> table)
    : order_(order), table_(std::move(table)) {
  if (order < 1 || table_.size() != std::size_t(order) * order) {
    throw std::invalid_argument("table size does not match order");
  }
  for (int a = 0; a < order; ++a) {
    if (product(0, a) != a || product(a, 0) != a) {
      throw std::invalid_argument("element 0 is not an identity");
    }
  }
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      if (product(a, b) >= order) throw std::invalid_argument("entry out of range");
      for (int c = 0; c < order; ++c) {
        if (product(product(a, b), c) != product(a, product(b, c))) {
          throw std::invalid_argument("table is not associative");
        }
      }
    }
  }
}

bool FiniteMonoidTable::commutative() const {
  for (int a = 0; a < order_; ++a) {
    for (int b = a + 1; b < order_; ++b) {
      if (product(a, b) != product(b, a)) return false;
    }
  }
  return true;
}

std::string FiniteMonoidTable::str() const {
  std::string s;
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) {
      s += std::to_string(int(product(a, b)));
      s += (b + 1 == order_) ? "" : " ";
    }
    if (a + 1 != order_) s += "\n";
  }
  return s;
}

bool satisfies_naive(const FiniteMonoidTable& m, const Identity& id, Budget& budget) {
  return naive_check(m.order(), id, budget, 0,
                     [&](int a, int b) { return int(m.product(a, b)); });
}

bool satisfies_naive(const ReesMonoid& m, const Identity& id, Budget& budget) {
  // Elements: factors in shortlex order plus the zero as index |factors|.
  const auto& fs = m.factors();
  const int zero = int(fs.size());
  auto prod = [&](int a, int b) {
    if (a == zero || b == zero) return zero;
    auto r = m.value(concat(fs[a], fs[b]));
    if (!r) return zero;
    auto it = std::lower_bound(fs.begin(), fs.end(), *r, shortlex_less);
    return int(it - fs.begin());
  };
  return naive_check(int(fs.size()) + 1, id, budget, 0, prod);
}

FiniteMonoidTable table_of(const ReesMonoid& m) {
  const auto& fs = m.factors();
  const int n = int(fs.size()) + 1;
  if (n > 255) throw std::invalid_argument("table_of: monoid too large for a table");
  const int zero = n - 1;
  auto index_of = [&](const ReesMonoid::Element& e) {
    if (!e) return zero;
    auto it = std::lower_bound(fs.begin(), fs.end(), *e, shortlex_less);
    return int(it - fs.begin());
  };
  std::vector<std::uint8_t> table(std::size_t(n) * n, std::uint8_t(zero));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == zero || b == zero) {
        table[a * n + b] = std::uint8_t(zero);
      } else {
        table[a * n + b] = std::uint8_t(index_of(m.value(concat(fs[a], fs[b]))));
      }
    }
  }
  return FiniteMonoidTable(n, std::move(table));
}

std::vector<Identity> enumerate_identities(const ReesMonoid& m, int max_len, int max_vars,
                                           Budget& budget) {
  // Words over a fixed alphabet of max_vars letters, lengths <= max_len.
  std::vector<Variable> alphabet;
  for (int i = 0; i < max_vars; ++i) alphabet.push_back(Variable{char('a' + i), -1});
  std::vector<Word> words;
  std::vector<Word> layer{Word{}};
  words.push_back(Word{});
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer) {
      for (const auto& v : alphabet) {
        Word e = w;
        e.push_back(v);
        next.push_back(e);
        words.push_back(e);
      }
    }
    layer = std::move(next);
  }

  auto canonical_pair = [](const Word& u, const Word& v) {
    auto rename_by = [](const Word& first, const Word& second) {
      Word joint = concat(first, second);
      Word c = canonical_form(joint);
      return std::make_pair(c.sub(0, first.size()), c.sub(first.size(), c.size()));
    };
    auto a = rename_by(u, v);
    auto b = rename_by(v, u);
    return std::min(a, b);
  };

  std::set<std::pair<Word, Word>> seen;
  std::vector<Identity> out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = 0; j < words.size(); ++j) {
      if (i == j) continue;
      budget.tick();
      auto key = canonical_pair(words[i], words[j]);
      if (key.first == key.second) continue;  // trivial after renaming
      if (seen.count(key)) continue;
      if (m.satisfies(Identity{words[i], words[j], ""}).holds) {
        seen.insert(key);
        out.push_back(Identity{key.first, key.second, ""});
      }
    }
  }
  return out;
}

namespace {

// Depth-first enumeration of monoid tables with identity element 0,
// associativity checked as entries fill in, and lexicographically canonical
// representatives only (minimal under relabelings fixing 0).
class TableEnumerator {
 public:
  TableEnumerator(int order, Budget& budget) : n_(order), budget_(budget) {
    table_.assign(std::size_t(n_) * n_, 0);
    for (int a = 0; a < n_; ++a) {
      set(0, a, a);
      set(a, 0, a);
    }
    cells_.clear();
    for (int a = 1; a < n_; ++a) {
      for (int b = 1; b < n_; ++b) cells_.push_back({a, b});
    }
  }

  // Calls fn on every canonical table; stops early when fn returns true.
  template <typename Fn>
  bool enumerate(Fn&& fn) {
    return fill(0, fn);
  }

 private:
  void set(int a, int b, int v) { table_[a * n_ + b] = std::uint8_t(v); }
  int get(int a, int b) const { return table_[a * n_ + b]; }

  bool assoc_ok(int a, int b) const {
    // Check all triples whose three products are already defined and involve
    // the fresh cell (a, b).  Cells fill row-major over (1..n-1)^2; a cell
    // (x, y) is defined iff x == 0 or y == 0 or (x, y) <= (a, b) in that
    // order.
    auto defined = [&](int x, int y) {
      if (x == 0 || y == 0) return true;
      return (x < a) || (x == a && y <= b);
    };
    for (int x = 0; x < n_; ++x) {
      for (int y = 0; y < n_; ++y) {
        for (int z = 0; z < n_; ++z) {
          if (!defined(x, y) || !defined(y, z)) continue;
          int xy = get(x, y), yz = get(y, z);
          if (!defined(xy, z) || !defined(x, yz)) continue;
          if (get(xy, z) != get(x, yz)) return false;
        }
      }
    }
    return true;
  }

  bool canonical() const {
    // Minimal under permutations of {1, ..., n-1}.
    std::vector<int> perm(n_);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::uint8_t> relabeled(table_.size());
    while (std::next_permutation(perm.begin() + 1, perm.end())) {
      for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b) {
          relabeled[perm[a] * n_ + perm[b]] = std::uint8_t(perm[get(a, b)]);
        }
      }
      if (relabeled < table_) return false;
    }
    return true;
  }

  template <typename Fn>
  bool fill(std::size_t k, Fn&& fn) {
    budget_.tick();
    if (k == cells_.size()) {
      if (!canonical()) return false;
      return fn(FiniteMonoidTable(n_, table_));
    }
    auto [a, b] = cells_[k];
    for (int v = 0; v < n_; ++v) {
      set(a, b, v);
      if (assoc_ok(a, b) && fill(k + 1, fn)) return true;
    }
    set(a, b, 0);
    return false;
  }

  int n_;
  Budget& budget_;
  std::vector<std::uint8_t> table_;
  std::vector<std::pair<int, int>> cells_;
};

}  // namespace

std::optional<FiniteMonoidTable> semantic_irredundancy_witness(
    const Identity& sigma, const std::vector<Identity>& rest,
    const WitnessSearchOptions& options) {
  for (const auto& r : rest) {
    if (r == sigma) {
      throw std::invalid_argument("sigma must not be a member of rest");
    }
  }
  Budget budget;
  budget.limit = options.budget;

  // Balanced identities hold in every commutative monoid: both sides carry
  // the same multiset of variables.  (Property-tested in the suite.)
  std::vector<Identity> balanced_rest, other_rest;
  for (const auto& r : rest) {
    (balanced(r) ? balanced_rest : other_rest).push_back(r);
  }

  std::optional<FiniteMonoidTable> found;
  for (int order = 1; order <= options.max_order && !found; ++order) {
    TableEnumerator enumerator(order, budget);
    enumerator.enumerate([&](const FiniteMonoidTable& t) {
      Budget eval_budget;
      eval_budget.limit = options.budget;
      if (satisfies_naive(t, sigma, eval_budget)) return false;
      bool commutative = t.commutative();
      for (const auto& r : other_rest) {
        if (!satisfies_naive(t, r, eval_budget)) return false;
      }
      if (!commutative) {
        for (const auto& r : balanced_rest) {
          if (!satisfies_naive(t, r, eval_budget)) return false;
        }
      }
      found = t;
      return true;
    });
  }
  return found;
}

}  // namespace eqbase
