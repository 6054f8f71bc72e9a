#include "eqbase/word.hpp"

#include <algorithm>
#include <random>

#include "doctest.h"

using namespace eqbase;

namespace {

Word W(const char* s) { return parse_word(s); }
Variable V(const char* s) {
  Word w = parse_word(s);
  REQUIRE(w.size() == 1);
  return w[0];
}

// Brute-force oracle for smallest_block: try all closed factors containing
// the span, smallest first.
Span block_oracle(const Word& w, Span span) {
  for (std::size_t len = span.end - span.begin; len <= w.size(); ++len) {
    for (std::size_t b = 0; b + len <= w.size(); ++b) {
      std::size_t e = b + len;
      if (b > span.begin || e < span.end) continue;
      bool closed = true;
      for (std::size_t i = b; i < e && closed; ++i) {
        for (std::size_t p : occurrence_positions(w, w[i])) {
          if (p < b || p >= e) {
            closed = false;
            break;
          }
        }
      }
      if (closed) return {b, e};
    }
  }
  return {0, w.size()};
}

}  // namespace

TEST_CASE("word parsing and rendering") {
  CHECK(W("z1xyz2x1").str() == "z1xyz2x1");
  CHECK(W("z1xyz2x1").size() == 5);
  CHECK(W("z1xyz2x1")[0] == V("z1"));
  CHECK(W("z1xyz2x1")[1] == V("x"));
  CHECK(W("1").empty());
  CHECK(W("1").str() == "1");
  CHECK(W("xyyx").letters ==
        std::vector<Variable>{V("x"), V("y"), V("y"), V("x")});
  CHECK(W("x12").size() == 1);
  CHECK(W("x12")[0].sub == 12);
  CHECK_THROWS_AS(parse_word("2x"), ParseError);
  CHECK_THROWS_AS(parse_word("xY"), ParseError);
  CHECK_THROWS_AS(parse_word(""), ParseError);
  // Round trip on a mixed word.
  for (const char* s : {"xyyx", "z1xyz2x1", "atxyaxy", "dxycdabcaebxye"}) {
    CHECK(parse_word(W(s).str()) == W(s));
  }
}

TEST_CASE("word stats") {
  auto s = word_stats(W("xyyx"));
  CHECK(s.content == std::set<Variable>{V("x"), V("y")});
  CHECK(s.occ.at(V("x")) == 2);
  CHECK(s.occ.at(V("y")) == 2);
  CHECK(s.n_limited(2));
  CHECK(!s.n_limited(1));
  CHECK(s.linear.empty());

  auto t = word_stats(W("atxyaxy"));
  CHECK(t.linear == std::set<Variable>{V("t")});

  auto e = word_stats(W("1"));
  CHECK(e.content.empty());
  CHECK(e.n_limited(0));
}

TEST_CASE("projection") {
  CHECK(project(W("xyxzzy"), {V("x"), V("z")}) == W("xxzz"));
  CHECK(project(W("xyxzzy"), {V("x")}) == W("xx"));
  CHECK(project(W("xyxzzy"), std::set<Variable>{}) == W("1"));
  // X need not be a subset of the content.
  CHECK(project(W("xy"), {V("x"), V("q")}) == W("x"));
  CHECK(project(W("abxyaxyb"), {V("a"), V("b")}) == W("abab"));
}

TEST_CASE("projection composes as intersection") {
  std::mt19937 rng(7);
  std::vector<Variable> pool{V("a"), V("b"), V("c"), V("d")};
  for (int trial = 0; trial < 200; ++trial) {
    Word w;
    int len = int(rng() % 9);
    for (int i = 0; i < len; ++i) w.push_back(pool[rng() % pool.size()]);
    std::set<Variable> X, Y;
    for (const auto& v : pool) {
      if (rng() % 2) X.insert(v);
      if (rng() % 2) Y.insert(v);
    }
    std::set<Variable> XY;
    std::set_intersection(X.begin(), X.end(), Y.begin(), Y.end(),
                          std::inserter(XY, XY.begin()));
    CHECK(project(project(w, X), Y) == project(w, XY));
  }
}

TEST_CASE("factor tests") {
  CHECK(is_factor(W("xz"), W("xyxzzy")));
  CHECK(is_factor(W("zy"), W("xyxzzy")));
  CHECK(!is_factor(W("xyy"), W("xyxzzy")));
  CHECK(is_factor(W("1"), W("xyz")));
  CHECK(is_factor(W("1"), W("1")));
  CHECK(!is_factor(W("x"), W("1")));
}

TEST_CASE("occurrence-indexed factors") {
  Word w = W("xyxzzy");
  OccurrenceRef refs1[] = {{V("x"), 2}, {V("z"), 1}};
  CHECK(occurrence_factor(w, refs1));
  OccurrenceRef refs2[] = {{V("z"), 1}, {V("y"), 2}};
  CHECK(!occurrence_factor(w, refs2));
  OccurrenceRef refs3[] = {{V("x"), 1}, {V("x"), 2}};
  CHECK(occurrence_factor(W("xx"), refs3));
  OccurrenceRef bad[] = {{V("x"), 3}};
  CHECK_THROWS_AS(occurrence_factor(w, bad), std::out_of_range);
  // Agreement with is_factor when every letter involved is linear.
  Word lin = W("abcde");
  OccurrenceRef refs4[] = {{V("b"), 1}, {V("c"), 1}, {V("d"), 1}};
  CHECK(occurrence_factor(lin, refs4) == is_factor(W("bcd"), lin));
}

TEST_CASE("interlock") {
  CHECK(interlocks(W("xyxy"), V("x"), V("y")));
  CHECK(interlocks(W("xyxy"), V("y"), V("x")));
  CHECK(!interlocks(W("xyyx"), V("x"), V("y")));
  CHECK(interlocks(W("abxyaxyb"), V("a"), V("b")));
  CHECK(interlocks(W("abxyaxyb"), V("a"), V("x")));
  CHECK(!interlocks(W("abbxyaxy"), V("a"), V("b")));
}

TEST_CASE("linked") {
  // In xyyx: y is linked to x, x is not linked to y.
  CHECK(linked(W("xyyx"), V("x"), V("y")));
  CHECK(!linked(W("xyyx"), V("y"), V("x")));
  CHECK(linked(W("xyxy"), V("x"), V("y")));
  CHECK(linked(W("xyxy"), V("y"), V("x")));
  // Chain through interlocks: in abacbc, c is linked to a via a-b.
  CHECK(linked(W("abacbc"), V("a"), V("c")));
  // xyx: y linked to x (the x_n y x_n case), not conversely.
  CHECK(linked(W("xyx"), V("x"), V("y")));
  CHECK(!linked(W("xyx"), V("y"), V("x")));
}

TEST_CASE("smallest block examples") {
  Word w1 = W("xxyy");
  CHECK(smallest_block(w1, {0, 1}) == Span{0, 2});
  Word w2 = W("xyyx");
  CHECK(smallest_block(w2, {1, 2}) == Span{1, 3});
  CHECK(smallest_block(w2, {0, 1}) == Span{0, 4});
  Word w3 = W("ccaxybaxyb");
  CHECK(smallest_block(w3, {3, 4}) == Span{2, 10});
  CHECK(w3.sub(2, 10) == W("axybaxyb"));
}

TEST_CASE("smallest block agrees with closure oracle and the link formula") {
  std::mt19937 rng(11);
  std::vector<Variable> pool{V("a"), V("b"), V("c"), V("d"), V("e")};
  for (int trial = 0; trial < 400; ++trial) {
    // Random 2-limited-ish word of length <= 10.
    Word w;
    std::map<Variable, int> used;
    int len = 1 + int(rng() % 10);
    for (int i = 0; i < len; ++i) {
      Variable v = pool[rng() % pool.size()];
      if (used[v] >= 2) continue;
      ++used[v];
      w.push_back(v);
    }
    if (w.empty()) continue;
    for (std::size_t b = 0; b < w.size(); ++b) {
      Span got = smallest_block(w, {b, b + 1});
      CHECK(got == block_oracle(w, {b, b + 1}));
      // Content of the block = letters of the span plus letters linked to them.
      std::set<Variable> expect{w[b]};
      for (const auto& ell : content(w)) {
        if (linked(w, w[b], ell)) expect.insert(ell);
      }
      CHECK(content(w.sub(got.begin, got.end)) == expect);
    }
  }
}

TEST_CASE("reverse and canonical form") {
  CHECK(reverse(W("1")) == W("1"));
  CHECK(reverse(W("abc")) == W("cba"));
  CHECK(canonical_form(W("zxyzyx")) == W("abcacb"));
  CHECK(canonical_form(W("axybcabxyc")) == W("abcdeadbce"));
  CHECK(canonical_form(reverse(W("axybcabxyc"))) == W("abcdeadbce"));
  // Idempotence.
  for (const char* s : {"zxyzyx", "atxyaxy", "dxycdabcaebxye", "1"}) {
    Word c = canonical_form(W(s));
    CHECK(canonical_form(c) == c);
  }
  // Equal canonical forms exactly for renamings.
  CHECK(canonical_form(W("xyyx")) == canonical_form(W("abba")));
  CHECK(canonical_form(W("xyxy")) != canonical_form(W("xyyx")));
}

TEST_CASE("canonical form beyond 26 letters") {
  Word w;
  for (int i = 0; i < 30; ++i) w.push_back(Variable{'q', i});
  Word c = canonical_form(w);
  CHECK(c[0] == V("a"));
  CHECK(c[25] == V("z"));
  CHECK(c[26] == V("a1"));
  CHECK(c[29] == V("d1"));
}

TEST_CASE("pairwise projections determine 2-limited words") {
  // For 2-limited words with equal occurrence counts, equal pairwise
  // projections force equality.
  std::mt19937 rng(23);
  std::vector<Variable> pool{V("a"), V("b"), V("c"), V("d")};
  std::vector<Word> words;
  for (int trial = 0; trial < 120; ++trial) {
    Word w;
    std::map<Variable, int> used;
    int len = 1 + int(rng() % 8);
    for (int i = 0; i < len; ++i) {
      Variable v = pool[rng() % pool.size()];
      if (used[v] >= 2) continue;
      ++used[v];
      w.push_back(v);
    }
    words.push_back(w);
  }
  for (const auto& u : words) {
    for (const auto& v : words) {
      if (word_stats(u).occ != word_stats(v).occ) continue;
      bool all_equal = true;
      auto vars = first_occurrence_order(u);
      for (std::size_t i = 0; i < vars.size() && all_equal; ++i) {
        for (std::size_t j = i + 1; j < vars.size() && all_equal; ++j) {
          if (project(u, {vars[i], vars[j]}) != project(v, {vars[i], vars[j]})) {
            all_equal = false;
          }
        }
      }
      if (all_equal) CHECK(u == v);
    }
  }
}
