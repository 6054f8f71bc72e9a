#include "eqbase/derivation.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace eqbase {

RuleSet::RuleSet(const std::vector<Identity>& ids) {
  for (const auto& id : ids) rules_.emplace(id.tag, id);
}

const Identity* RuleSet::find(const std::string& tag) const {
  auto it = rules_.find(tag);
  return it == rules_.end() ? nullptr : &it->second;
}

std::vector<std::string> RuleSet::tags() const {
  std::vector<std::string> ts;
  for (const auto& [t, _] : rules_) ts.push_back(t);
  return ts;
}

Word apply_step(const Word& w, const Identity& rule, const Substitution& theta,
                const Word& left, const Word& right, bool forward) {
  const Word& source = forward ? rule.lhs : rule.rhs;
  const Word& target = forward ? rule.rhs : rule.lhs;
  Word expect = concat(left, apply(theta, source), right);
  if (expect != w) {
    throw MalformedStepError("step precondition failed: expected " + expect.str() +
                             ", have " + w.str());
  }
  return concat(left, apply(theta, target), right);
}

VerifyResult verify_trace(const DerivationTrace& trace, const RuleSet& rules) {
  if (trace.steps.empty()) {
    if (trace.start != trace.end) {
      return {false, 0, "empty trace with distinct endpoints"};
    }
    return {true, 0, ""};
  }
  if (trace.steps.front().before != trace.start) {
    return {false, 0, "first step does not start at the trace start"};
  }
  if (trace.steps.back().after != trace.end) {
    return {false, trace.steps.size() - 1, "last step does not reach the trace end"};
  }
  std::unordered_set<Word> seen;
  seen.insert(trace.start);
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const DerivationStep& s = trace.steps[i];
    const Identity* rule = rules.find(s.rule);
    if (!rule) return {false, i, "unknown rule " + s.rule};
    if (i > 0 && trace.steps[i - 1].after != s.before) {
      return {false, i, "chain broken before step"};
    }
    Word after;
    try {
      after = apply_step(s.before, *rule, s.theta, s.left, s.right, s.forward);
    } catch (const MalformedStepError& e) {
      return {false, i, e.what()};
    }
    if (after != s.after) return {false, i, "recorded result differs from rewrite"};
    if (after == s.before) return {false, i, "trivial step"};
    if (!seen.insert(after).second) return {false, i, "repeated word in chain"};
  }
  return {true, 0, ""};
}

std::vector<PairStatus> unstable_pairs(const Word& u, const Word& v) {
  auto cu = content(u);
  auto cv = content(v);
  std::set<Variable> all = cu;
  all.insert(cv.begin(), cv.end());
  std::vector<Variable> vars(all.begin(), all.end());

  std::vector<PairStatus> out;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    for (std::size_t j = i + 1; j < vars.size(); ++j) {
      PairStatus ps;
      ps.x = vars[i];
      ps.y = vars[j];
      ps.stable = project(u, {ps.x, ps.y}) == project(v, {ps.x, ps.y});
      if (!ps.stable) {
        // Critical occurrence pairs in both orders.
        for (std::size_t p = 0; p + 1 < u.size(); ++p) {
          const Variable& a = u[p];
          const Variable& b = u[p + 1];
          bool match = (a == ps.x && b == ps.y) || (a == ps.y && b == ps.x);
          if (!match) continue;
          int ia = occ_index(u, p);
          int ib = occ_index(u, p + 1);
          auto pa = resolve(v, {a, ia});
          auto pb = resolve(v, {b, ib});
          if (pa && pb && *pa > *pb) {
            ps.critical.push_back({OccurrenceRef{a, ia}, OccurrenceRef{b, ib}});
          }
        }
      }
      out.push_back(std::move(ps));
    }
  }
  return out;
}

std::optional<CriticalPair> find_critical_pair(const Word& u, const Word& v) {
  for (std::size_t p = 0; p + 1 < u.size(); ++p) {
    const Variable& x = u[p];
    const Variable& y = u[p + 1];
    if (x == y) continue;
    int i = occ_index(u, p);
    int j = occ_index(u, p + 1);
    auto px = resolve(v, {x, i});
    auto py = resolve(v, {y, j});
    if (px && py && *px > *py) {
      return CriticalPair{x, y, i, j, p};
    }
  }
  return std::nullopt;
}

SearchResult bounded_search(const Word& u, const Word& v, const std::vector<Identity>& rules,
                            int max_depth, std::size_t max_width, Budget& budget) {
  RuleSet rule_set(rules);
  if (u == v) {
    DerivationTrace t;
    t.start = u;
    t.end = v;
    return {SearchResult::Status::found, std::move(t)};
  }

  struct Parent {
    Word from;
    DerivationStep step;
  };
  std::unordered_map<Word, Parent> parent;
  std::unordered_set<Word> visited{u};
  std::deque<Word> frontier{u};
  bool truncated = false;

  auto build_trace = [&](const Word& goal) {
    std::vector<DerivationStep> steps;
    Word cur = goal;
    while (cur != u) {
      auto it = parent.find(cur);
      steps.push_back(it->second.step);
      cur = it->second.from;
    }
    std::reverse(steps.begin(), steps.end());
    DerivationTrace t;
    t.start = u;
    t.end = goal;
    t.steps = std::move(steps);
    return t;
  };

  for (int depth = 0; depth < max_depth && !frontier.empty(); ++depth) {
    std::deque<Word> next;
    for (const Word& w : frontier) {
      for (const Identity& id : rules) {
        for (auto& hit : applies_nontrivially(id, w, budget)) {
          if (visited.count(hit.rewritten)) continue;
          visited.insert(hit.rewritten);
          DerivationStep step;
          step.rule = id.tag;
          step.forward = hit.forward;
          step.theta = hit.match.theta;
          step.left = hit.match.left;
          step.right = hit.match.right;
          step.before = w;
          step.after = hit.rewritten;
          parent.emplace(hit.rewritten, Parent{w, step});
          if (hit.rewritten == v) return {SearchResult::Status::found, build_trace(v)};
          next.push_back(hit.rewritten);
          if (next.size() > max_width) {
            truncated = true;
            next.resize(max_width);
            goto layer_done;
          }
        }
      }
    }
  layer_done:
    frontier = std::move(next);
  }
  if (!frontier.empty() || truncated) {
    return {SearchResult::Status::bounds_exceeded, std::nullopt};
  }
  return {SearchResult::Status::not_found_exhaustive, std::nullopt};
}

DerivationTrace reverse_trace(const DerivationTrace& t) {
  DerivationTrace r;
  r.start = t.end;
  r.end = t.start;
  for (auto it = t.steps.rbegin(); it != t.steps.rend(); ++it) {
    DerivationStep s = *it;
    std::swap(s.before, s.after);
    s.forward = !s.forward;
    r.steps.push_back(std::move(s));
  }
  return r;
}

DerivationTrace concat_traces(const DerivationTrace& a, const DerivationTrace& b) {
  if (a.end != b.start) {
    throw std::invalid_argument("concat_traces: junction mismatch");
  }
  DerivationTrace t;
  t.start = a.start;
  t.end = b.end;
  t.steps = a.steps;
  t.steps.insert(t.steps.end(), b.steps.begin(), b.steps.end());
  return t;
}

DerivationTrace squash_trace(DerivationTrace t) {
  // Remove cycles: whenever a word repeats in the chain, drop the loop.
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Word> chain{t.start};
    for (const auto& s : t.steps) chain.push_back(s.after);
    std::unordered_map<Word, std::size_t> first_at;
    for (std::size_t i = 0; i < chain.size(); ++i) {
      auto it = first_at.find(chain[i]);
      if (it != first_at.end()) {
        t.steps.erase(t.steps.begin() + it->second, t.steps.begin() + i);
        changed = true;
        break;
      }
      first_at.emplace(chain[i], i);
    }
  }
  return t;
}

}  // namespace eqbase
