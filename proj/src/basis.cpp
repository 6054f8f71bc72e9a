#include "eqbase/basis.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <stdexcept>

namespace eqbase {

namespace {

Variable var(char base, int sub = -1) { return Variable{base, sub}; }

Word word_of(const Variable& v) { return Word(std::vector<Variable>{v}); }

Identity aperiodic(int which) { return aperiodic_identities()[which]; }

DerivationStep make_step(const Identity& rule, bool forward, Substitution theta,
                         Word left, Word right, const Word& before) {
  DerivationStep s;
  s.rule = rule.tag;
  s.forward = forward;
  s.theta = std::move(theta);
  s.left = std::move(left);
  s.right = std::move(right);
  s.before = before;
  s.after = apply_step(before, rule, s.theta, s.left, s.right, forward);
  return s;
}

int count_unstable(const Word& u, const Word& v) {
  int n = 0;
  for (const auto& ps : unstable_pairs(u, v)) {
    if (!ps.stable) ++n;
  }
  return n;
}

}  // namespace

NormalizeResult normalize_cubes(const Word& w) {
  std::vector<Variable> order;
  auto stats = word_stats(w);
  for (const auto& v : first_occurrence_order(w)) {
    if (stats.occ[v] > 2) order.push_back(v);
  }
  return normalize_cubes(w, order);
}

NormalizeResult normalize_cubes(const Word& w, const std::vector<Variable>& cube_order) {
  auto stats = word_stats(w);
  std::set<Variable> expect;
  for (const auto& [v, n] : stats.occ) {
    if (n > 2) expect.insert(v);
  }
  if (std::set<Variable>(cube_order.begin(), cube_order.end()) != expect ||
      cube_order.size() != expect.size()) {
    throw std::invalid_argument("normalize_cubes: cube order must list the letters "
                                "occurring more than twice, once each");
  }

  NormalizeResult result;
  result.cube_letters = cube_order;
  Word cur = w;
  auto push = [&](DerivationStep s) {
    cur = s.after;
    result.trace.steps.push_back(std::move(s));
  };

  Variable tv1 = var('t', 1), tv2 = var('t', 2);
  std::size_t prefix_len = 0;
  for (const auto& z : cube_order) {
    // Gather the first three occurrences into a cube.
    auto ps = occurrence_positions(cur, z);
    if (!(ps[1] == ps[0] + 1 && ps[2] == ps[1] + 1)) {
      Substitution th;
      th.set(var('x'), word_of(z));
      th.set(tv1, cur.sub(ps[0] + 1, ps[1]));
      th.set(tv2, cur.sub(ps[1] + 1, ps[2]));
      push(make_step(aperiodic(0), true, th, cur.sub(0, ps[0]),
                     cur.sub(ps[2] + 1, cur.size()), cur));
    }
    // Absorb any further occurrence into the cube, leftmost first.
    while (occ(z, cur) > 3) {
      ps = occurrence_positions(cur, z);
      std::size_t q1 = ps[0], q3 = ps[2], q4 = ps[3];
      Word between = cur.sub(q3 + 1, q4);
      if (between.empty()) {
        Substitution th;
        th.set(var('x'), word_of(z));
        push(make_step(aperiodic(2), false, th, cur.sub(0, q1),
                       cur.sub(q4 + 1, cur.size()), cur));
      } else {
        Substitution th;
        th.set(var('x'), word_of(z));
        th.set(tv1, word_of(z));
        th.set(tv2, between);
        push(make_step(aperiodic(0), true, th, cur.sub(0, q1),
                       cur.sub(q4 + 1, cur.size()), cur));
        Substitution th2;
        th2.set(var('x'), word_of(z));
        push(make_step(aperiodic(2), false, th2, cur.sub(0, q1),
                       concat(between, cur.sub(q1 + 4 + between.size(), cur.size())), cur));
      }
    }
    // Commute the cube to sit right after the cubes already in place.
    ps = occurrence_positions(cur, z);
    if (ps[0] > prefix_len) {
      Substitution th;
      th.set(var('x'), word_of(z));
      th.set(tv1, cur.sub(prefix_len, ps[0]));
      th.set(tv2, Word{});
      push(make_step(aperiodic(1), false, th, cur.sub(0, prefix_len),
                     cur.sub(ps[0] + 3, cur.size()), cur));
    }
    prefix_len += 3;
  }

  // The cubes sit in front; the tail is the input with the cube letters gone.
  Word expect_tail;
  for (const auto& v : w) {
    if (!expect.count(v)) expect_tail.push_back(v);
  }
  Word expect_word;
  for (const auto& z : cube_order) {
    expect_word.push_back(z);
    expect_word.push_back(z);
    expect_word.push_back(z);
  }
  expect_word.append(expect_tail);
  if (cur != expect_word) {
    throw std::logic_error("normalize_cubes: unexpected normal form " + cur.str());
  }

  result.normalized = cur;
  result.trace.start = w;
  result.trace.end = cur;
  return result;
}

AdjacentDecomposition decompose_adjacent(const Word& u, const Variable& x,
                                         const Variable& y) {
  auto xs = occurrence_positions(u, x);
  auto ys = occurrence_positions(u, y);
  if (xs.size() != 2 || ys.size() != 2) {
    throw NotUnstableError("critical pair letters must be 2-occurring (easy lemma): " +
                           u.str());
  }
  if (ys[0] != xs[0] + 1) {
    throw NotUnstableError("first occurrence pair not adjacent in " + u.str());
  }
  if (ys[1] != xs[1] + 1) {
    throw NotUnstableError(
        "second occurrence pair not adjacent (adjacency lemma forces u1 xy u2 xy u3): " +
        u.str());
  }
  AdjacentDecomposition d;
  d.first_xy = xs[0];
  d.second_xy = xs[1];
  d.u1 = u.sub(0, xs[0]);
  d.u2 = u.sub(xs[0] + 2, xs[1]);
  d.u3 = u.sub(xs[1] + 2, u.size());
  auto stats = word_stats(u);
  for (const auto& v : d.u2) {
    if (stats.occ[v] == 1) {
      throw NotUnstableError("letter " + v.str() +
                             " of u2 is linear in u (xytxy is an isoterm): " + u.str());
    }
  }
  return d;
}

BlockReduction reduce1_block(const Word& u, const Variable& x) {
  auto xs = occurrence_positions(u, x);
  if (xs.empty()) throw std::invalid_argument("reduce1_block: x not in u");
  Span block = smallest_block(u, {xs[0], xs[0] + 1});
  BlockReduction r;
  r.block = block;
  r.flank_left = u.sub(0, block.begin);
  r.flank_right = u.sub(block.end, u.size());
  r.word = u.sub(block.begin, block.end);
  return r;
}

TrimReduction reduce2_trim(const Word& u1, const Word& u2, const Word& u3) {
  std::size_t suf = 0;
  while (suf < u1.size() && suf < u2.size() &&
         u1[u1.size() - 1 - suf] == u2[u2.size() - 1 - suf]) {
    ++suf;
  }
  std::size_t pre = 0;
  while (pre < u3.size() && pre < u2.size() && u3[pre] == u2[pre]) ++pre;
  if (pre + suf > u2.size()) {
    throw NotUnstableError("trimmed prefix and suffix overlap inside u2; "
                           "impossible for 2-limited hosts");
  }
  TrimReduction r;
  r.u11 = u1.sub(0, u1.size() - suf);
  r.u12 = u1.sub(u1.size() - suf, u1.size());
  r.u31 = u3.sub(0, pre);
  r.u32 = u3.sub(pre, u3.size());
  r.u2core = u2.sub(pre, u2.size() - suf);
  return r;
}

CollapseReduction reduce3_collapse(const Word& u, const Variable& x, const Variable& y) {
  // Locally maximal repeated factors avoiding x and y.  In a 2-limited word
  // a repeated factor occurs at exactly the two occurrence positions of its
  // first letter, so each 2-occurring letter seeds one window.
  struct Window {
    std::size_t a, b, len;  // occurrences at [a, a+len) and [b, b+len)
  };
  std::vector<Window> windows;
  auto barrier = [&](const Variable& v) { return v == x || v == y; };
  std::set<Variable> seeded;
  for (std::size_t p = 0; p < u.size(); ++p) {
    const Variable& v = u[p];
    if (barrier(v) || seeded.count(v)) continue;
    auto ps = occurrence_positions(u, v);
    if (ps.size() != 2) continue;
    seeded.insert(v);
    std::size_t a = ps[0], b = ps[1];
    // Extend left.
    std::size_t l = 0;
    while (a >= l + 1 && b >= l + 1 && b - l - 1 > a && u[a - l - 1] == u[b - l - 1] &&
           !barrier(u[a - l - 1])) {
      ++l;
    }
    // Extend right, keeping the two copies disjoint.
    std::size_t r = 0;
    while (a + r + 1 < b - l && b + r + 1 < u.size() && u[a + r + 1] == u[b + r + 1] &&
           !barrier(u[a + r + 1])) {
      ++r;
    }
    windows.push_back(Window{a - l, b - l, l + r + 1});
  }
  // Distinct letters inside one repeat seed the same window.
  std::sort(windows.begin(), windows.end(), [](const Window& p, const Window& q) {
    return std::tie(p.a, p.b, p.len) < std::tie(q.a, q.b, q.len);
  });
  windows.erase(std::unique(windows.begin(), windows.end(),
                            [](const Window& p, const Window& q) {
                              return p.a == q.a && p.b == q.b && p.len == q.len;
                            }),
                windows.end());
  // Keep maximal windows of length >= 2; drop windows contained in another.
  std::vector<Window> keep;
  for (const auto& w : windows) {
    if (w.len < 2) continue;
    bool contained = false;
    for (const auto& o : windows) {
      if (o.len <= w.len) continue;
      if (w.a >= o.a && w.a + w.len <= o.a + o.len && w.b >= o.b &&
          w.b + w.len <= o.b + o.len) {
        contained = true;
        break;
      }
    }
    if (!contained) keep.push_back(w);
  }
  // Non-overlap across distinct maximal windows (2-limitedness).
  std::vector<std::pair<std::size_t, std::size_t>> spans;
  for (const auto& w : keep) {
    spans.push_back({w.a, w.a + w.len});
    spans.push_back({w.b, w.b + w.len});
  }
  std::sort(spans.begin(), spans.end());
  for (std::size_t i = 1; i < spans.size(); ++i) {
    if (spans[i].first < spans[i - 1].second) {
      throw NotUnstableError("overlapping repeated factors in a 2-limited word");
    }
  }

  CollapseReduction result;
  std::map<std::size_t, const Window*> at;  // span start -> window
  for (const auto& w : keep) {
    at[w.a] = &w;
    at[w.b] = &w;
    result.lift.set(u[w.a], u.sub(w.a, w.a + w.len));
  }
  for (std::size_t p = 0; p < u.size();) {
    auto it = at.find(p);
    if (it != at.end()) {
      result.word.push_back(u[p]);  // the factor's first letter represents it
      p += it->second->len;
    } else {
      result.word.push_back(u[p]);
      ++p;
    }
  }
  // The collapsed word has no repeated x,y-free factor of length > 1 left.
  for (std::size_t p = 0; p < result.word.size(); ++p) {
    for (std::size_t q = p + 1; q < result.word.size(); ++q) {
      if (result.word[p] != result.word[q]) continue;
      if (barrier(result.word[p])) continue;
      if (p + 1 < q && q + 1 < result.word.size() &&
          result.word[p + 1] == result.word[q + 1] && !barrier(result.word[p + 1])) {
        throw std::logic_error("reduce3_collapse left a repeated factor in " +
                               result.word.str());
      }
    }
  }
  return result;
}

void validate_claims(const Word& u, const Variable& x, const Variable& y) {
  auto d = decompose_adjacent(u, x, y);
  auto stats = word_stats(u);
  std::vector<Variable> others;
  for (const auto& v : stats.content) {
    if (v != x && v != y) others.push_back(v);
  }

  // Claim 2: every other letter is 2-occurring with an occurrence in u2.
  std::set<Variable> in_u2(d.u2.begin(), d.u2.end());
  for (const auto& a : others) {
    if (stats.occ[a] != 2) {
      throw NotUnstableError("claim 2: letter " + a.str() + " is not 2-occurring in " +
                             u.str());
    }
    if (!in_u2.count(a)) {
      throw NotUnstableError("claim 2: letter " + a.str() +
                             " has no occurrence in u2 (isoterms 1.1, 3.1): " + u.str());
    }
  }
  // Claim 3: at most one letter before the first xy and after the second.
  if (d.u1.size() > 1 || d.u3.size() > 1) {
    throw NotUnstableError("claim 3: |u1| <= 1 and |u3| <= 1 forced by isoterms "
                           "3.2, 4.1, 5.x, 6.1, 7.x: " +
                           u.str());
  }
  // Claim 1: interlocking with x propagates through one step.  The claim
  // concerns letters reaching outside u2; a letter with both occurrences
  // inside u2 sits between the xy factors legitimately (x2 -> 1 images of
  // w_2 produce exactly that shape).
  auto outside_u2 = [&](const Variable& b) {
    auto ps = occurrence_positions(u, b);
    for (std::size_t p : ps) {
      if (p < d.first_xy || p >= d.second_xy) return true;
    }
    return false;
  };
  for (const auto& a : others) {
    if (!interlocks(u, a, x)) continue;
    for (const auto& b : others) {
      if (b == a || !interlocks(u, b, a)) continue;
      if (outside_u2(b) && !interlocks(u, b, x)) {
        throw NotUnstableError("claim 1: " + b.str() + " interlocks " + a.str() +
                               " but not " + x.str() +
                               " (isoterms 2.1, 2.2): " + u.str());
      }
    }
  }
  // Claim 4: no nested pair pattern among the other letters.
  for (const auto& a : others) {
    for (const auto& b : others) {
      if (!(a < b)) continue;
      Word proj = project(u, {a, b});
      if (proj.size() == 4 && proj[0] == proj[3] && proj[1] == proj[2] &&
          proj[0] != proj[1]) {
        throw NotUnstableError("claim 4: projection onto {" + a.str() + "," + b.str() +
                               "} is nested (isoterms 3.3, 5.x): " + u.str());
      }
    }
  }
  // Claims 7 and 8 constrain runs of first and second occurrences.
  auto is_other = [&](const Variable& v) { return v != x && v != y; };
  for (std::size_t p = 0; p + 2 < u.size(); ++p) {
    bool f0 = is_other(u[p]) && occ_index(u, p) == 1;
    bool f1 = is_other(u[p + 1]) && occ_index(u, p + 1) == 1;
    bool f2 = is_other(u[p + 2]) && occ_index(u, p + 2) == 1;
    bool s0 = is_other(u[p]) && occ_index(u, p) == 2;
    bool s1 = is_other(u[p + 1]) && occ_index(u, p + 1) == 2;
    bool s2 = is_other(u[p + 2]) && occ_index(u, p + 2) == 2;
    bool distinct3 = u[p] != u[p + 1] && u[p + 1] != u[p + 2] && u[p] != u[p + 2];
    if (distinct3 && ((f0 && f1 && f2) || (s0 && s1 && s2))) {
      throw NotUnstableError("claim 7: three consecutive first or second occurrences "
                             "(isoterms 8.1, 9.x): " +
                             u.str());
    }
    if (f0 && f1 && u[p + 2] != u[p]) {
      throw NotUnstableError("claim 8: 1a 1b must be followed by a (isoterms 9.1-9.3): " +
                             u.str());
    }
  }
  for (std::size_t p = 0; p + 2 < u.size(); ++p) {
    bool s1 = is_other(u[p + 1]) && occ_index(u, p + 1) == 2;
    bool s2 = is_other(u[p + 2]) && occ_index(u, p + 2) == 2;
    if (s1 && s2 && u[p + 1] != u[p + 2] && u[p] != u[p + 2]) {
      throw NotUnstableError("claim 8 (dual): a 2b 2c forces a = c (isoterms 9.1-9.3): " +
                             u.str());
    }
  }
}

PhiResult build_phi(const Word& u, const Variable& x, const Variable& y) {
  auto d = decompose_adjacent(u, x, y);
  const Word& u2 = d.u2;

  PhiResult res;
  auto finish = [&](int n, const std::vector<Word>& a) {
    res.n = n;
    res.phi.set(var('x'), word_of(x));
    res.phi.set(var('y'), word_of(y));
    if (n == 1) {
      // Sigma omits w_1 = w_1'; absorb x0 and x1 into the z images, the same
      // move that derives the n = 1 instance from w_2 = w_2'.
      res.n = 2;
      for (int i = 0; i <= 2; ++i) res.phi.set(var('x', i), Word{});
      res.phi.set(var('z', 1), a[0]);
      res.phi.set(var('z', 2), a[1]);
    } else {
      for (int i = 0; i <= n; ++i) res.phi.set(var('x', i), a[i]);
      res.phi.set(var('z', 1), Word{});
      res.phi.set(var('z', 2), Word{});
    }
    if (apply(res.phi, make_w(res.n)) != u) {
      throw NotUnstableError("construction does not reproduce the word: " + u.str());
    }
    return res;
  };

  if (u2.empty()) {
    if (!d.u1.empty() || !d.u3.empty()) {
      throw NotUnstableError("claim 2: flanking letter with empty u2 in " + u.str());
    }
    // u = xyxy.
    return finish(2, {Word{}, Word{}, Word{}});
  }

  std::vector<Word> a;  // a[i] = image of x_i, each empty or one letter
  a.push_back(d.u1);
  std::size_t cursor = 0;
  if (!d.u1.empty()) {
    if (u2[0] == d.u1[0]) {
      a.push_back(Word{});
      cursor = 1;
    } else {
      a.push_back(word_of(u2[0]));
      if (u2.size() < 2 || u2[1] != d.u1[0]) {
        throw NotUnstableError("claim 6: a0 x y a1 a0 must be a prefix of " + u.str());
      }
      cursor = 2;
    }
  } else {
    a.push_back(word_of(u2[0]));
    cursor = 1;
  }

  for (int k = 1;; ++k) {
    const Word& prev = a[k - 1];
    const Word& curr = a[k];
    bool at_end = cursor == u2.size();
    if (!curr.empty()) {
      // Induction cases 1 (prev nonempty) and 2 (prev empty) share shape.
      if (at_end) {
        if (d.u3.size() != 1 || d.u3[0] != curr[0]) {
          throw NotUnstableError("terminal letter after the second xy must be " +
                                 curr.str() + " in " + u.str());
        }
        return finish(k, a);
      }
      const Variable c = u2[cursor];
      if (c == curr[0]) {
        a.push_back(Word{});
        cursor += 1;
      } else {
        if (cursor + 1 >= u2.size() || u2[cursor + 1] != curr[0]) {
          throw NotUnstableError(std::string(prev.empty() ? "induction case 2" :
                                                            "induction case 1") +
                                 ": expected the second occurrence of " + curr.str() +
                                 " right after " + c.str() + " in " + u.str());
        }
        a.push_back(word_of(c));
        cursor += 2;
      }
    } else if (!prev.empty()) {
      // Induction case 3.
      if (at_end) {
        if (!d.u3.empty()) {
          throw NotUnstableError("claim 2: trailing letter " + d.u3.str() +
                                 " without a second occurrence slot in " + u.str());
        }
        return finish(k, a);
      }
      a.push_back(word_of(u2[cursor]));
      cursor += 1;
    } else {
      throw NotUnstableError("two consecutive empty images; induction hypothesis "
                             "broken in " +
                             u.str());
    }
  }
}

const ReesMonoid& catalogue_monoid() {
  static const ReesMonoid m = ReesMonoid::build(catalogue_V_words());
  return m;
}

namespace {

std::optional<CriticalPair> find_adjacent_11(const Word& u, const Word& v) {
  for (std::size_t p = 0; p + 1 < u.size(); ++p) {
    const Variable& x = u[p];
    const Variable& y = u[p + 1];
    if (x == y) continue;
    if (occ_index(u, p) != 1 || occ_index(u, p + 1) != 1) continue;
    auto px = resolve(v, {x, 1});
    auto py = resolve(v, {y, 1});
    if (px && py && *px > *py) return CriticalPair{x, y, 1, 1, p};
  }
  return std::nullopt;
}

// The renaming under which w_n equals its own reverse: x and y swap, z1 and
// z2 swap, x_i goes to x_{n-i}.
Substitution reversal_renaming(int n) {
  Substitution rho;
  rho.set(var('x'), word_of(var('y')));
  rho.set(var('y'), word_of(var('x')));
  rho.set(var('z', 1), word_of(var('z', 2)));
  rho.set(var('z', 2), word_of(var('z', 1)));
  for (int i = 0; i <= n; ++i) rho.set(var('x', i), word_of(var('x', n - i)));
  return rho;
}

Elimination eliminate_forward(const Word& u, const Word& v, const CriticalPair& cp) {
  const Variable x = cp.x;
  const Variable y = cp.y;
  Word xyxy(std::vector<Variable>{x, y, x, y});
  Word yxyx(std::vector<Variable>{y, x, y, x});
  if (project(u, {x, y}) != xyxy || project(v, {x, y}) != yxyx) {
    throw NotUnstableError("unstable pair projections must be xyxy vs yxyx "
                           "(easy lemma): " +
                           u.str() + " vs " + v.str());
  }

  // Reduction 1: restrict to the smallest block containing x.
  BlockReduction block = reduce1_block(u, x);
  const Word& B = block.word;

  // Adjacent decomposition inside the block.
  AdjacentDecomposition dec = decompose_adjacent(B, x, y);

  // Reduction 2: trim shared affixes into z1/z2 images.
  TrimReduction trim = reduce2_trim(dec.u1, dec.u2, dec.u3);
  Word xy(std::vector<Variable>{x, y});
  Word reduced2 = concat(trim.u11, xy, trim.u2core);
  reduced2.append(xy);
  reduced2.append(trim.u32);
  {
    // The trimmed affixes share no letters with the rest (2-limitedness).
    auto rest = content(reduced2);
    for (const auto& w : {trim.u12, trim.u31}) {
      for (const auto& l : w) {
        if (rest.count(l)) {
          throw NotUnstableError("claim: trimmed affix letter " + l.str() +
                                 " reappears outside the affixes in " + B.str());
        }
      }
    }
  }

  // Reduction 3: collapse repeated factors.
  CollapseReduction collapse = reduce3_collapse(reduced2, x, y);
  const Word& core = collapse.word;

  validate_claims(core, x, y);
  PhiResult phi = build_phi(core, x, y);

  // Undo reduction 3, then reduction 2, through the substitution.  The
  // trimmed affixes append around whatever the z images already carry.
  Substitution lifted = compose(phi.phi, collapse.lift);
  lifted.set(var('z', 1), concat(lifted.image(var('z', 1)), trim.u12));
  lifted.set(var('z', 2), concat(trim.u31, lifted.image(var('z', 2))));
  int n = phi.n;
  if (apply(lifted, make_w(n)) != B) {
    throw std::logic_error("reduction lifts failed to rebuild the block " + B.str());
  }

  Identity rule{make_w(n), make_w_prime(n), "w_" + std::to_string(n)};
  Elimination e;
  e.step = make_step(rule, true, std::move(lifted), block.flank_left, block.flank_right, u);
  e.next = e.step.after;
  return e;
}

}  // namespace

Elimination eliminate_critical_pair(const Word& u, const Word& v) {
  if (u == v) throw std::invalid_argument("eliminate_critical_pair: no critical pair");
  Elimination e;
  if (auto cp = find_adjacent_11(u, v)) {
    e = eliminate_forward(u, v, *cp);
  } else {
    // The critical adjacency sits at the second occurrences; work on the
    // reversed identity, where it becomes a first-occurrence pair, and map
    // the step back (w_n equals its reverse up to the renaming rho).
    Word ur = reverse(u);
    Word vr = reverse(v);
    auto cpr = find_adjacent_11(ur, vr);
    if (!cpr) {
      throw NotUnstableError("no adjacent critical occurrence pair in either "
                             "orientation (adjacency lemma): " +
                             u.str() + " vs " + v.str());
    }
    Elimination er = eliminate_forward(ur, vr, *cpr);
    int n = std::stoi(er.step.rule.substr(2));
    Substitution rho = reversal_renaming(n);
    Substitution theta;
    for (const auto& q : content(make_w(n))) {
      theta.set(q, reverse(er.step.theta.image(apply(rho, word_of(q))[0])));
    }
    Identity rule{make_w(n), make_w_prime(n), er.step.rule};
    e.step = make_step(rule, er.step.forward, std::move(theta), reverse(er.step.right),
                       reverse(er.step.left), u);
    e.next = e.step.after;
    if (e.next != reverse(er.next)) {
      throw std::logic_error("reversed elimination mismatch");
    }
  }
  int before = count_unstable(u, v);
  int after = count_unstable(e.next, v);
  if (after >= before) {
    throw std::logic_error("unstable pair count did not drop: " + std::to_string(before) +
                           " -> " + std::to_string(after));
  }
  return e;
}

DeriveResult derive(const Word& u, const Word& v, const ReesMonoid& m) {
  if (u == v) {
    DerivationTrace t;
    t.start = u;
    t.end = v;
    return t;
  }
  auto verdict = m.satisfies(Identity{u, v, ""});
  if (!verdict.holds) return *verdict.witness;

  NormalizeResult nu = normalize_cubes(u);
  NormalizeResult nv = normalize_cubes(v, nu.cube_letters);

  std::size_t zlen = nu.cube_letters.size() * 3;
  Word zfront = nu.normalized.sub(0, zlen);
  Word ucore = nu.normalized.sub(zlen, nu.normalized.size());
  Word vcore = nv.normalized.sub(zlen, nv.normalized.size());
  if (nv.normalized.sub(0, zlen) != zfront) {
    throw std::logic_error("cube fronts disagree after normalization");
  }
  if (word_stats(ucore).occ != word_stats(vcore).occ) {
    throw std::logic_error("cores not balanced although the identity is satisfied");
  }

  DerivationTrace middle;
  middle.start = nu.normalized;
  middle.end = concat(zfront, vcore);
  Word cur = ucore;
  while (cur != vcore) {
    Elimination e = eliminate_critical_pair(cur, vcore);
    DerivationStep s = std::move(e.step);
    s.left = concat(zfront, s.left);
    s.before = concat(zfront, s.before);
    s.after = concat(zfront, s.after);
    middle.steps.push_back(std::move(s));
    cur = e.next;
  }

  DerivationTrace total =
      concat_traces(concat_traces(nu.trace, middle), reverse_trace(nv.trace));
  total = squash_trace(std::move(total));

  int maxn = 2;
  for (const auto& s : total.steps) {
    if (s.rule.rfind("w_", 0) == 0) maxn = std::max(maxn, std::stoi(s.rule.substr(2)));
  }
  auto check = verify_trace(total, RuleSet(sigma_members(maxn)));
  if (!check.ok) {
    throw std::logic_error("derived trace failed verification at step " +
                           std::to_string(check.failed_step) + ": " + check.reason);
  }
  return total;
}

DeriveResult derive(const Word& u, const Word& v) { return derive(u, v, catalogue_monoid()); }

}  // namespace eqbase
