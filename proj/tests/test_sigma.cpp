#include <map>
#include <set>

#include "doctest.h"
#include "eqbase/sigma.hpp"
#include "eqbase/subst.hpp"

using namespace eqbase;

namespace {
Word W(const char* s) { return parse_word(s); }
Variable V(const char* s) { return parse_word(s)[0]; }
}  // namespace

TEST_CASE("u_n construction") {
  CHECK(make_u(1) == W("x1x0"));
  CHECK(make_u(3) == W("x1x0x2x1x3x2"));
  for (int n = 1; n <= 12; ++n) CHECK(make_u(n).size() == std::size_t(2 * n));
  CHECK_THROWS_AS(make_u(0), std::invalid_argument);
}

TEST_CASE("w_n construction") {
  CHECK(make_w(2) == W("x0z1xyz2x1x0x2x1z1xyz2x2"));
  CHECK(make_w_prime(2) == W("x0z1yxz2x1x0x2x1z1yxz2x2"));
  for (int n = 1; n <= 12; ++n) {
    CHECK(make_w(n).size() == std::size_t(2 * n + 10));
    CHECK(project(make_w(n), {V("x"), V("y")}) == W("xyxy"));
    CHECK(project(make_w_prime(n), {V("x"), V("y")}) == W("yxyx"));
  }
}

TEST_CASE("sigma members") {
  auto ids = sigma_members(4);
  REQUIRE(ids.size() == 6);
  CHECK(ids[0].tag == "aperiodic-1");
  CHECK(ids[0].lhs == W("xt1xt2x"));
  CHECK(ids[0].rhs == W("xxxt1t2"));
  CHECK(ids[1].lhs == W("xxxt1t2"));
  CHECK(ids[1].rhs == W("t1t2xxx"));
  CHECK(ids[2].lhs == W("xxx"));
  CHECK(ids[2].rhs == W("xxxx"));
  CHECK(ids[3].tag == "w_2");
  CHECK(ids[5].tag == "w_4");
  // The w_1 member is deliberately absent.
  for (const auto& id : ids) CHECK(id.lhs != make_w(1));
  CHECK_THROWS_AS(sigma_members(1), std::invalid_argument);
  // Every w_n member is balanced.
  for (const auto& id : ids) {
    if (id.tag.starts_with("w_")) CHECK(balanced(id));
  }
}

TEST_CASE("repeated factors of w_n are single letters or factors of z1xyz2") {
  Word marker = W("z1xyz2");
  for (int n = 2; n <= 10; ++n) {
    Word w = make_w(n);
    std::map<Word, int> count;
    for (std::size_t b = 0; b < w.size(); ++b) {
      for (std::size_t e = b + 1; e <= w.size(); ++e) ++count[w.sub(b, e)];
    }
    for (const auto& [f, c] : count) {
      if (c < 2) continue;
      CHECK((f.size() == 1 || is_factor(f, marker)));
    }
  }
}

TEST_CASE("reversal symmetry of w_n") {
  for (int n = 2; n <= 8; ++n) {
    Substitution rho;
    rho.set(V("x"), W("y"));
    rho.set(V("y"), W("x"));
    rho.set(V("z1"), W("z2"));
    rho.set(V("z2"), W("z1"));
    for (int i = 0; i <= n; ++i) {
      rho.set(Variable{'x', i}, Word(std::vector<Variable>{Variable{'x', n - i}}));
    }
    CHECK(apply(rho, reverse(make_w(n))) == make_w(n));
    CHECK(apply(rho, reverse(make_w_prime(n))) == make_w_prime(n));
  }
}

TEST_CASE("catalogue U") {
  auto u = catalogue_U();
  CHECK(u.size() == 7);
  CHECK(u[0] == W("xyyx"));
  CHECK(u[6] == W("zxyzyx"));
}

TEST_CASE("catalogue V") {
  auto v = catalogue_V();
  REQUIRE(v.size() == 37);
  // All 2-limited.
  for (const auto& e : v) CHECK(is_n_limited(e.word, 2));
  // No duplicates up to renaming.
  std::set<Word> canon;
  for (const auto& e : v) canon.insert(canonical_form(e.word));
  CHECK(canon.size() == 37);
  // The self-reverse base words are exactly 3.3, 6.1, 7.3, 8.1, 9.1, 9.3.
  std::set<std::string> self_reverse;
  for (const auto& e : v) {
    if (e.reversed || e.group == 0) continue;
    if (canonical_form(e.word) == canonical_form(reverse(e.word))) {
      self_reverse.insert(e.label);
    }
  }
  CHECK(self_reverse ==
        std::set<std::string>{"3.3", "6.1", "7.3", "8.1", "9.1", "9.3"});
  // Those six have no reversed entry in the catalogue; the other fourteen do.
  std::map<std::string, int> by_base;
  for (const auto& e : v) {
    if (e.group > 0) {
      std::string base = std::to_string(e.group) + "." + std::to_string(e.index);
      ++by_base[base];
    }
  }
  CHECK(by_base.size() == 20);
  int singles = 0, doubles = 0;
  for (const auto& [base, n] : by_base) (n == 1 ? singles : doubles) += 1;
  CHECK(singles == 6);
  CHECK(doubles == 14);
}

TEST_CASE("U words occur in the group 1-9 words except the three carried over") {
  std::vector<Word> v;
  for (const auto& e : catalogue_V()) {
    if (e.group > 0) v.push_back(e.word);
  }
  std::set<Word> carried{W("xxyy"), W("xyzyxz"), W("zxyzyx")};
  for (const auto& u : catalogue_U()) {
    bool as_factor = false;
    for (const auto& w : v) {
      // Factor up to renaming: check every subword of w of |u| letters.
      for (std::size_t b = 0; b + u.size() <= w.size() && !as_factor; ++b) {
        if (canonical_form(w.sub(b, b + u.size())) == canonical_form(u)) {
          as_factor = true;
        }
      }
      if (as_factor) break;
    }
    if (carried.count(u)) {
      CHECK(!as_factor);
    } else {
      CHECK(as_factor);
    }
  }
}
