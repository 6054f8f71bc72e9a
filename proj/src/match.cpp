#include "eqbase/match.hpp"

#include <algorithm>
#include <cassert>

namespace eqbase {

namespace {

class Matcher {
 public:
  Matcher(const Word& pattern, const Word& target, const std::set<Variable>& nonempty,
          Budget& budget)
      : pattern_(pattern), target_(target), nonempty_(nonempty), budget_(budget) {}

  // Enumerate all theta with pattern theta = target[start..e) for some e;
  // when whole_target, e must equal |target|.
  void run(std::size_t start, bool whole_target, std::vector<MatchResult>& out) {
    start_ = start;
    whole_target_ = whole_target;
    out_ = &out;
    dfs(0, start);
  }

 private:
  void dfs(std::size_t pi, std::size_t ti) {
    budget_.tick();
    if (pi == pattern_.size()) {
      if (whole_target_ && ti != target_.size()) return;
      MatchResult r;
      for (const auto& [v, w] : bound_) r.theta.set(v, w);
      r.left = target_.sub(0, start_);
      r.right = target_.sub(ti, target_.size());
      // Round-trip assertion: the defining equation holds literally.
      assert(concat(r.left, apply(r.theta, pattern_), r.right) == target_);
      out_->push_back(std::move(r));
      return;
    }
    const Variable& v = pattern_[pi];
    auto it = bound_.find(v);
    if (it != bound_.end()) {
      const Word& img = it->second;
      if (ti + img.size() > target_.size()) return;
      if (!std::equal(img.begin(), img.end(), target_.begin() + ti)) return;
      dfs(pi + 1, ti + img.size());
      return;
    }
    std::size_t min_len = nonempty_.count(v) ? 1 : 0;
    for (std::size_t len = min_len; ti + len <= target_.size(); ++len) {
      Word img = target_.sub(ti, ti + len);
      if (remaining_too_long(pi, v, img, ti + len)) break;
      bound_.emplace(v, std::move(img));
      dfs(pi + 1, ti + len);
      bound_.erase(v);
    }
  }

  // Lower bound on target length still needed by pattern positions after pi,
  // assuming v just got the given image.  Monotone in |image|, so the caller
  // may stop growing the image once this prunes.
  bool remaining_too_long(std::size_t pi, const Variable& v, const Word& img,
                          std::size_t ti) {
    std::size_t need = 0;
    for (std::size_t j = pi + 1; j < pattern_.size(); ++j) {
      const Variable& q = pattern_[j];
      if (q == v) {
        need += img.size();
      } else if (auto it = bound_.find(q); it != bound_.end()) {
        need += it->second.size();
      } else if (nonempty_.count(q)) {
        need += 1;
      }
    }
    return ti + need > target_.size();
  }

  const Word& pattern_;
  const Word& target_;
  const std::set<Variable>& nonempty_;
  Budget& budget_;
  std::size_t start_ = 0;
  bool whole_target_ = true;
  std::map<Variable, Word> bound_;
  std::vector<MatchResult>* out_ = nullptr;
};

}  // namespace

std::vector<MatchResult> match_exact(const Word& pattern, const Word& target,
                                     const std::set<Variable>& nonempty, Budget& budget) {
  std::vector<MatchResult> out;
  Matcher(pattern, target, nonempty, budget).run(0, true, out);
  return out;
}

std::vector<MatchResult> match_factor(const Word& pattern, const Word& target,
                                      const std::set<Variable>& nonempty, Budget& budget) {
  std::vector<MatchResult> out;
  Matcher m(pattern, target, nonempty, budget);
  for (std::size_t s = 0; s <= target.size(); ++s) m.run(s, false, out);
  return out;
}

std::vector<RewriteHit> applies_nontrivially(const Identity& id, const Word& target,
                                             Budget& budget) {
  std::vector<RewriteHit> hits;
  const std::set<Variable> none;
  for (bool forward : {true, false}) {
    const Word& src = forward ? id.lhs : id.rhs;
    const Word& dst = forward ? id.rhs : id.lhs;
    for (auto& m : match_factor(src, target, none, budget)) {
      Word rewritten = concat(m.left, apply(m.theta, dst), m.right);
      if (rewritten != target) {
        hits.push_back(RewriteHit{std::move(m), forward, std::move(rewritten)});
      }
    }
  }
  return hits;
}

std::vector<StuckVerdict> stuck_irredundancy_report(const std::vector<Identity>& ids,
                                                    Budget& budget) {
  std::vector<StuckVerdict> report;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    StuckVerdict verdict;
    verdict.tag = ids[i].tag;
    verdict.stuck = true;
    for (std::size_t j = 0; j < ids.size(); ++j) {
      if (i == j) continue;
      if (!applies_nontrivially(ids[j], ids[i].lhs, budget).empty() ||
          !applies_nontrivially(ids[j], ids[i].rhs, budget).empty()) {
        verdict.stuck = false;
        verdict.offenders.push_back(ids[j].tag);
      }
    }
    report.push_back(std::move(verdict));
  }
  return report;
}

}  // namespace eqbase
