#include <random>

#include "doctest.h"
#include "eqbase/derivation.hpp"
#include "eqbase/io.hpp"
#include "eqbase/sigma.hpp"

using namespace eqbase;

namespace {
Word W(const char* s) { return parse_word(s); }
Variable V(const char* s) { return parse_word(s)[0]; }
}  // namespace

TEST_CASE("apply_step") {
  Identity cube{W("xxx"), W("xxxx"), "aperiodic-3"};
  Substitution id;
  CHECK(apply_step(W("xxx"), cube, id, W("1"), W("1"), true) == W("xxxx"));
  CHECK(apply_step(W("axxxb"), cube, id, W("a"), W("b"), true) == W("axxxxb"));
  CHECK(apply_step(W("axxxxb"), cube, id, W("a"), W("b"), false) == W("axxxb"));
  CHECK_THROWS_AS(apply_step(W("axxb"), cube, id, W("a"), W("b"), true),
                  MalformedStepError);
  // Inverse composition returns the original word.
  Word w = W("xxxt1t2");
  Substitution th;
  Word fwd = apply_step(w, cube, th, W("1"), W("t1t2"), true);
  CHECK(apply_step(fwd, cube, th, W("1"), W("t1t2"), false) == w);
}

TEST_CASE("w_2 swap via the degeneracy substitution") {
  Identity w2{make_w(2), make_w_prime(2), "w_2"};
  Substitution theta;
  for (int i = 0; i <= 2; ++i) theta.set(Variable{'x', i}, W("1"));
  theta.set(V("z1"), W("x0z1"));
  theta.set(V("z2"), W("z2x1"));
  CHECK(apply_step(make_w(1), w2, theta, W("1"), W("1"), true) == make_w_prime(1));

  // xyxy -> yxyx with everything else erased.
  Substitution all1;
  for (int i = 0; i <= 2; ++i) all1.set(Variable{'x', i}, W("1"));
  all1.set(V("z1"), W("1"));
  all1.set(V("z2"), W("1"));
  CHECK(apply_step(W("xyxy"), w2, all1, W("1"), W("1"), true) == W("yxyx"));
}

TEST_CASE("verify_trace") {
  RuleSet rules(sigma_members(3));
  Identity w2{make_w(2), make_w_prime(2), "w_2"};

  DerivationTrace t;
  t.start = W("xyxy");
  t.end = W("yxyx");
  Substitution all1;
  for (int i = 0; i <= 2; ++i) all1.set(Variable{'x', i}, W("1"));
  all1.set(V("z1"), W("1"));
  all1.set(V("z2"), W("1"));
  DerivationStep s;
  s.rule = "w_2";
  s.forward = true;
  s.theta = all1;
  s.left = W("1");
  s.right = W("1");
  s.before = W("xyxy");
  s.after = W("yxyx");
  t.steps.push_back(s);
  CHECK(verify_trace(t, rules).ok);

  // Empty trace proves a trivial identity.
  DerivationTrace e;
  e.start = e.end = W("ab");
  CHECK(verify_trace(e, rules).ok);
  e.end = W("ba");
  CHECK(!verify_trace(e, rules).ok);

  // A repeated chain word is rejected.
  DerivationTrace loop = t;
  DerivationStep back = s;
  back.forward = false;
  back.before = W("yxyx");
  back.after = W("xyxy");
  loop.steps.push_back(back);
  loop.end = W("xyxy");
  auto r = verify_trace(loop, rules);
  CHECK(!r.ok);
  CHECK(r.failed_step == 1);

  // Unknown rule.
  DerivationTrace bad = t;
  bad.steps[0].rule = "w_99";
  CHECK(!verify_trace(bad, rules).ok);
}

TEST_CASE("trace JSON round trip") {
  Identity w2{make_w(2), make_w_prime(2), "w_2"};
  Substitution theta;
  for (int i = 0; i <= 2; ++i) theta.set(Variable{'x', i}, W("1"));
  theta.set(V("z1"), W("x0z1"));
  theta.set(V("z2"), W("z2x1"));
  DerivationTrace t;
  t.start = make_w(1);
  t.end = make_w_prime(1);
  DerivationStep s;
  s.rule = "w_2";
  s.forward = true;
  s.theta = theta;
  s.left = W("1");
  s.right = W("1");
  s.before = make_w(1);
  s.after = make_w_prime(1);
  t.steps.push_back(s);

  DerivationTrace back = trace_from_json(trace_to_json(t));
  CHECK(back.start == t.start);
  CHECK(back.end == t.end);
  REQUIRE(back.steps.size() == 1);
  CHECK(back.steps[0].rule == "w_2");
  CHECK(back.steps[0].theta == theta);
  CHECK(verify_trace(back, RuleSet(sigma_members(2))).ok);
}

TEST_CASE("unstable pairs and critical pairs") {
  auto ps = unstable_pairs(W("xyxy"), W("yxyx"));
  REQUIRE(ps.size() == 1);
  CHECK(!ps[0].stable);
  REQUIRE(ps[0].critical.size() == 2);  // (1x,1y) and (2x,2y)
  CHECK(ps[0].critical[0].first.index == 1);
  CHECK(ps[0].critical[1].first.index == 2);

  auto cp = find_critical_pair(W("xyxy"), W("yxyx"));
  REQUIRE(cp);
  CHECK(cp->x == V("x"));
  CHECK(cp->y == V("y"));
  CHECK(cp->i == 1);
  CHECK(cp->j == 1);
  CHECK(cp->pos == 0);

  CHECK(!find_critical_pair(W("abab"), W("abab")));

  // w_n vs w_n': {x, y} is the only unstable pair.
  for (int n = 2; n <= 10; ++n) {
    int unstable = 0;
    for (const auto& p : unstable_pairs(make_w(n), make_w_prime(n))) {
      if (!p.stable) {
        ++unstable;
        std::set<Variable> pair{p.x, p.y};
        CHECK(pair == std::set<Variable>{V("x"), V("y")});
      }
    }
    CHECK(unstable == 1);
  }

  // Stable pairs have no critical occurrences.
  for (const auto& p : unstable_pairs(W("abba"), W("abba"))) {
    CHECK(p.stable);
    CHECK(p.critical.empty());
  }
}

TEST_CASE("balanced nontrivial identities always have a critical pair") {
  std::mt19937 rng(31);
  std::vector<Variable> pool{V("a"), V("b"), V("c"), V("d")};
  for (int trial = 0; trial < 300; ++trial) {
    Word u;
    int len = 2 + int(rng() % 9);
    for (int i = 0; i < len; ++i) u.push_back(pool[rng() % pool.size()]);
    Word v = u;
    std::shuffle(v.letters.begin(), v.letters.end(), rng);
    if (u == v) continue;
    CHECK(find_critical_pair(u, v).has_value());
  }
}

TEST_CASE("bounded_search finds the w_1 swap") {
  Budget budget;
  auto rules = sigma_members(3);
  auto r = bounded_search(make_w(1), make_w_prime(1), rules, 1, 10000, budget);
  REQUIRE(r.status == SearchResult::Status::found);
  REQUIRE(r.trace);
  CHECK(r.trace->steps.size() == 1);
  CHECK(verify_trace(*r.trace, RuleSet(rules)).ok);
}

TEST_CASE("bounded_search is exhaustive on stuck instances") {
  Budget budget;
  budget.limit = 500'000'000;
  // w_2 = w_2' cannot be reached from the other members.
  std::vector<Identity> rules;
  for (const auto& id : sigma_members(4)) {
    if (id.tag != "w_2") rules.push_back(id);
  }
  auto r = bounded_search(make_w(2), make_w_prime(2), rules, 3, 10000, budget);
  CHECK(r.status == SearchResult::Status::not_found_exhaustive);

  // Trivial search.
  auto triv = bounded_search(W("ab"), W("ab"), rules, 1, 10, budget);
  CHECK(triv.status == SearchResult::Status::found);
  CHECK(triv.trace->steps.empty());
}

TEST_CASE("trace surgery") {
  RuleSet rules(sigma_members(2));
  Identity w2{make_w(2), make_w_prime(2), "w_2"};
  Substitution all1;
  for (int i = 0; i <= 2; ++i) all1.set(Variable{'x', i}, W("1"));
  all1.set(V("z1"), W("1"));
  all1.set(V("z2"), W("1"));
  DerivationStep s;
  s.rule = "w_2";
  s.forward = true;
  s.theta = all1;
  s.left = W("1");
  s.right = W("1");
  s.before = W("xyxy");
  s.after = W("yxyx");
  DerivationTrace t{W("xyxy"), W("yxyx"), {s}};

  auto rev = reverse_trace(t);
  CHECK(rev.start == W("yxyx"));
  CHECK(rev.end == W("xyxy"));
  CHECK(verify_trace(rev, rules).ok);

  auto cycle = concat_traces(t, rev);
  CHECK(cycle.steps.size() == 2);
  auto squashed = squash_trace(cycle);
  CHECK(squashed.steps.empty());
  CHECK(squashed.start == squashed.end);
  CHECK(verify_trace(squashed, rules).ok);
}
