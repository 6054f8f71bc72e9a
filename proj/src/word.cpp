#include "eqbase/word.hpp"

#include <algorithm>
#include <cctype>
#include <queue>

namespace eqbase {

std::string Variable::str() const {
  std::string s(1, base);
  if (sub >= 0) s += std::to_string(sub);
  return s;
}

std::string Word::str() const {
  if (letters.empty()) return "1";
  std::string s;
  for (const auto& v : letters) s += v.str();
  return s;
}

Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.append(b);
  return r;
}

Word concat(const Word& a, const Word& b, const Word& c) {
  Word r = a;
  r.append(b);
  r.append(c);
  return r;
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.letters < b.letters;
}

Word parse_word(std::string_view text) {
  if (text == "1") return Word{};
  if (text.empty()) throw ParseError("empty word text; the empty word is written \"1\"", 0);
  Word w;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (!(c >= 'a' && c <= 'z')) {
      throw ParseError("malformed token at position " + std::to_string(i) +
                           ": expected lowercase letter, got '" + std::string(1, c) + "'",
                       i);
    }
    std::size_t j = i + 1;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    Variable v;
    v.base = c;
    if (j > i + 1) {
      v.sub = 0;
      for (std::size_t k = i + 1; k < j; ++k) v.sub = v.sub * 10 + (text[k] - '0');
    }
    w.push_back(v);
    i = j;
  }
  return w;
}

WordStats word_stats(const Word& w) {
  WordStats s;
  for (const auto& v : w) {
    s.content.insert(v);
    ++s.occ[v];
  }
  for (const auto& [v, n] : s.occ) {
    s.max_occ = std::max(s.max_occ, n);
    if (n == 1) s.linear.insert(v);
  }
  return s;
}

std::set<Variable> content(const Word& w) {
  return {w.begin(), w.end()};
}

int occ(const Variable& x, const Word& w) {
  return static_cast<int>(std::count(w.begin(), w.end(), x));
}

bool is_n_limited(const Word& w, int n) {
  return word_stats(w).max_occ <= n;
}

std::vector<Variable> first_occurrence_order(const Word& w) {
  std::vector<Variable> order;
  std::set<Variable> seen;
  for (const auto& v : w) {
    if (seen.insert(v).second) order.push_back(v);
  }
  return order;
}

Word project(const Word& w, const std::set<Variable>& keep) {
  Word r;
  for (const auto& v : w) {
    if (keep.count(v)) r.push_back(v);
  }
  return r;
}

Word project(const Word& w, std::initializer_list<Variable> keep) {
  return project(w, std::set<Variable>(keep));
}

bool is_factor(const Word& a, const Word& b) {
  if (a.empty()) return true;
  if (a.size() > b.size()) return false;
  for (std::size_t s = 0; s + a.size() <= b.size(); ++s) {
    if (std::equal(a.begin(), a.end(), b.begin() + s)) return true;
  }
  return false;
}

std::vector<std::size_t> occurrence_positions(const Word& w, const Variable& x) {
  std::vector<std::size_t> ps;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == x) ps.push_back(i);
  }
  return ps;
}

std::optional<std::size_t> resolve(const Word& w, const OccurrenceRef& ref) {
  int seen = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == ref.var && ++seen == ref.index) return i;
  }
  return std::nullopt;
}

int occ_index(const Word& w, std::size_t p) {
  int idx = 0;
  for (std::size_t i = 0; i <= p; ++i) {
    if (w[i] == w[p]) ++idx;
  }
  return idx;
}

bool occurrence_factor(const Word& w, std::span<const OccurrenceRef> refs) {
  std::optional<std::size_t> prev;
  for (const auto& r : refs) {
    auto p = resolve(w, r);
    if (!p) {
      throw std::out_of_range("occurrence " + std::to_string(r.index) + " of " +
                              r.var.str() + " does not exist in " + w.str());
    }
    if (prev && *p != *prev + 1) return false;
    prev = p;
  }
  return true;
}

bool interlocks(const Word& w, const Variable& x, const Variable& y) {
  if (x == y) return false;
  Word p = project(w, {x, y});
  Word xyxy(std::vector<Variable>{x, y, x, y});
  Word yxyx(std::vector<Variable>{y, x, y, x});
  return p == xyxy || p == yxyx;
}

namespace {

// Terminal condition of the link chain: from letter a, does y attach?
bool link_terminal(const Word& w, const Variable& a, const Variable& y) {
  if (a == y) return false;
  if (interlocks(w, a, y)) return true;
  Word p = project(w, {a, y});
  Word ayya(std::vector<Variable>{a, y, y, a});
  Word aya(std::vector<Variable>{a, y, a});
  return p == ayya || p == aya;
}

}  // namespace

bool linked(const Word& w, const Variable& x, const Variable& y) {
  if (x == y) return false;
  auto cont = content(w);
  if (!cont.count(x) || !cont.count(y)) return false;
  // BFS over the interlock graph starting at x; any reached letter may close
  // the chain with y.
  std::set<Variable> visited{x};
  std::queue<Variable> queue;
  queue.push(x);
  while (!queue.empty()) {
    Variable a = queue.front();
    queue.pop();
    if (link_terminal(w, a, y)) return true;
    for (const auto& b : cont) {
      if (!visited.count(b) && interlocks(w, a, b)) {
        visited.insert(b);
        queue.push(b);
      }
    }
  }
  return false;
}

Span smallest_block(const Word& w, Span span) {
  Span cur = span;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = cur.begin; i < cur.end; ++i) {
      for (std::size_t p : occurrence_positions(w, w[i])) {
        if (p < cur.begin) {
          cur.begin = p;
          changed = true;
        }
        if (p + 1 > cur.end) {
          cur.end = p + 1;
          changed = true;
        }
      }
    }
  }
  return cur;
}

Word reverse(const Word& w) {
  Word r = w;
  std::reverse(r.letters.begin(), r.letters.end());
  return r;
}

Word canonical_form(const Word& w) {
  std::map<Variable, Variable> rename;
  int next = 0;
  Word r;
  for (const auto& v : w) {
    auto it = rename.find(v);
    if (it == rename.end()) {
      Variable fresh;
      fresh.base = static_cast<char>('a' + next % 26);
      fresh.sub = next < 26 ? -1 : next / 26;
      it = rename.emplace(v, fresh).first;
      ++next;
    }
    r.push_back(it->second);
  }
  return r;
}

}  // namespace eqbase
