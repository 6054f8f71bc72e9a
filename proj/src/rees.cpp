#include "eqbase/rees.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>

namespace eqbase {

std::vector<Word> factorial_closure(const std::vector<Word>& generators) {
  bool any_nonempty = false;
  std::unordered_set<Word> set;
  set.insert(Word{});
  for (const auto& g : generators) {
    if (!g.empty()) any_nonempty = true;
    for (std::size_t b = 0; b < g.size(); ++b) {
      for (std::size_t e = b + 1; e <= g.size(); ++e) set.insert(g.sub(b, e));
    }
  }
  if (!any_nonempty) {
    throw std::invalid_argument(
        "factorial_closure: need at least one nonempty word (0 = 1 unsupported)");
  }
  std::vector<Word> out(set.begin(), set.end());
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

ReesMonoid ReesMonoid::build(std::vector<Word> generators) {
  ReesMonoid m;
  m.factors_sorted_ = factorial_closure(generators);
  m.factor_set_.insert(m.factors_sorted_.begin(), m.factors_sorted_.end());
  m.generators_ = std::move(generators);
  for (const auto& g : m.generators_) m.max_len_ = std::max<int>(m.max_len_, g.size());
  // Right extensions: every split h = p.w of every factor h contributes w to
  // the extension list of p.
  for (const auto& h : m.factors_sorted_) {
    for (std::size_t i = 0; i <= h.size(); ++i) {
      m.right_ext_[h.sub(0, i)].push_back(h.sub(i, h.size()));
    }
  }
  for (auto& [p, exts] : m.right_ext_) {
    std::sort(exts.begin(), exts.end(), shortlex_less);
    exts.erase(std::unique(exts.begin(), exts.end()), exts.end());
  }
  return m;
}

const std::vector<Word>& ReesMonoid::right_extensions(const Word& prefix) const {
  static const std::vector<Word> kEmpty;
  auto it = right_ext_.find(prefix);
  return it == right_ext_.end() ? kEmpty : it->second;
}

ReesMonoid::Element ReesMonoid::value(const Word& w) const {
  if (w.size() > static_cast<std::size_t>(max_len_)) return std::nullopt;
  if (!factor_set_.count(w)) return std::nullopt;
  return w;
}

ReesMonoid::Element ReesMonoid::product(const Element& a, const Element& b) const {
  if (!a || !b) return std::nullopt;
  return value(concat(*a, *b));
}

ReesMonoid::Element ReesMonoid::evaluate(const Word& w, const Substitution& theta) const {
  return value(apply(theta, w));
}

namespace {

// One anchored pass of the satisfaction search: enumerate every substitution
// theta with (anchor side) theta in the factor set, evaluating the passive
// side alongside.  A counterexample with a zero anchor side has a nonzero
// passive side, so running the pass once per orientation decides the
// identity; substitutions zeroing both sides are never visited.
//
// Variables bind in the anchor side's first-occurrence order, so the anchor
// prefix always extends by the freshly bound image first and candidate
// images can be read off the surviving generator positions.  Images are
// tried in shortlex order, making the first counterexample of a pass the
// least one in the documented order.
class AnchoredSearch {
 public:
  AnchoredSearch(const ReesMonoid& m, const Word& anchor, const Word& passive)
      : m_(m), a_(anchor), p_(passive) {
    vars_ = first_occurrence_order(a_);
    for (const auto& x : first_occurrence_order(p_)) {
      if (std::find(vars_.begin(), vars_.end(), x) == vars_.end()) vars_.push_back(x);
    }
    std::map<Variable, int> index;
    for (std::size_t k = 0; k < vars_.size(); ++k) index[vars_[k]] = int(k);
    // Determined prefix length after binding variable k: the longest prefix
    // whose variables all have bind index <= k.
    auto prefix_lens = [&](const Word& w) {
      std::vector<std::size_t> lens(vars_.size());
      std::size_t p = 0;
      for (std::size_t k = 0; k < vars_.size(); ++k) {
        while (p < w.size() && index[w[p]] <= int(k)) ++p;
        lens[k] = p;
      }
      return lens;
    };
    alen_ = prefix_lens(a_);
    plen_ = prefix_lens(p_);
    auto var_indices = [&](const Word& w) {
      std::vector<int> is;
      for (const auto& x : w) is.push_back(index[x]);
      return is;
    };
    avar_ = var_indices(a_);
    pvar_ = var_indices(p_);
    for (const auto& x : vars_) {
      occ_a_.push_back(occ(x, a_));
      occ_p_.push_back(occ(x, p_));
    }
  }

  struct Hit {
    Substitution theta;
    ReesMonoid::Element anchor_value;   // always nonzero
    ReesMonoid::Element passive_value;  // differs from anchor_value
  };

  std::optional<Hit> find_counterexample() {
    images_.assign(vars_.size(), Word{});
    pa_.letters.clear();
    pp_.letters.clear();
    found_.reset();
    dfs(0, 0, true, 0, 0);
    return found_;
  }

 private:
  void dfs(std::size_t k, int wa, bool alive_p, std::size_t done_a, std::size_t done_p) {
    if (found_) return;
    if (k == vars_.size()) {
      ReesMonoid::Element val_a = pa_;  // in the factor set by construction
      ReesMonoid::Element val_p = alive_p ? ReesMonoid::Element(pp_) : std::nullopt;
      if (val_a != val_p) {
        Hit h;
        for (std::size_t i = 0; i < vars_.size(); ++i) h.theta.set(vars_[i], images_[i]);
        h.anchor_value = std::move(val_a);
        h.passive_value = std::move(val_p);
        found_ = std::move(h);
      }
      return;
    }
    const int L = m_.max_len();

    // Candidate images: words keeping the anchor prefix inside the factor
    // set, within the weight budget.  Binding order puts this variable's
    // first anchor-side occurrence right at the prefix end, so any other
    // image zeroes the anchor side for good.
    int cap = occ_a_[k] > 0 ? (L - wa) / occ_a_[k] : L;
    if (cap < 0) return;

    for (const Word& f : m_.right_extensions(pa_)) {
      if (int(f.size()) > cap) break;  // shortlex order: longer only
      images_[k] = f;
      std::size_t pa_mark = pa_.size();
      std::size_t pp_mark = pp_.size();
      bool ok_a = extend(avar_, done_a, alen_[k], pa_);
      if (ok_a) {
        bool na_p = alive_p && extend(pvar_, done_p, plen_[k], pp_);
        dfs(k + 1, wa + occ_a_[k] * int(f.size()), na_p, alen_[k], plen_[k]);
      }
      pa_.letters.resize(pa_mark);
      pp_.letters.resize(pp_mark);
      if (found_) return;
    }
    images_[k] = Word{};
  }

  // Append the images of positions [from, to); true iff the grown prefix is
  // still in the factor set.
  bool extend(const std::vector<int>& var_at, std::size_t from, std::size_t to, Word& out) {
    for (std::size_t p = from; p < to; ++p) out.append(images_[var_at[p]]);
    return m_.contains_factor(out);
  }

  const ReesMonoid& m_;
  const Word& a_;
  const Word& p_;
  std::vector<Variable> vars_;
  std::vector<std::size_t> alen_, plen_;
  std::vector<int> avar_, pvar_;
  std::vector<int> occ_a_, occ_p_;
  std::vector<Word> images_;
  Word pa_, pp_;
  std::optional<Hit> found_;
};

}  // namespace

ReesMonoid::SatisfiesResult ReesMonoid::satisfies(const Identity& id) const {
  const Word& u = id.lhs;
  const Word& v = id.rhs;
  if (u == v) return {true, std::nullopt};

  auto cu = content(u);
  auto cv = content(v);
  if (cu != cv) {
    // A variable on one side only: send it to the least single letter and
    // everything else to 1; the sides evaluate to 1 and to a non-identity
    // element (possibly zero).
    std::set<Variable> sym_diff;
    for (const auto& a : cu) {
      if (!cv.count(a)) sym_diff.insert(a);
    }
    for (const auto& a : cv) {
      if (!cu.count(a)) sym_diff.insert(a);
    }
    Variable x = *sym_diff.begin();
    SatisfactionWitness w;
    for (const auto& a : cu) w.theta.set(a, Word{});
    for (const auto& a : cv) w.theta.set(a, Word{});
    w.theta.set(x, factors()[1]);  // least nonempty factor, a single letter
    w.lhs_value = evaluate(u, w.theta);
    w.rhs_value = evaluate(v, w.theta);
    assert(w.lhs_value != w.rhs_value);
    return {false, std::move(w)};
  }

  // Pass 1: counterexamples whose lhs value is nonzero.  Pass 2 catches the
  // remaining ones (nonzero rhs, zero lhs).
  AnchoredSearch fwd(*this, u, v);
  if (auto hit = fwd.find_counterexample()) {
    SatisfactionWitness w{std::move(hit->theta), std::move(hit->anchor_value),
                          std::move(hit->passive_value)};
    return {false, std::move(w)};
  }
  AnchoredSearch bwd(*this, v, u);
  if (auto hit = bwd.find_counterexample()) {
    SatisfactionWitness w{std::move(hit->theta), std::move(hit->passive_value),
                          std::move(hit->anchor_value)};
    return {false, std::move(w)};
  }
  return {true, std::nullopt};
}

std::vector<std::pair<Identity, ReesMonoid::SatisfiesResult>> ReesMonoid::satisfies_all(
    const std::vector<Identity>& ids) const {
  std::vector<std::pair<Identity, SatisfiesResult>> out;
  out.reserve(ids.size());
  for (const auto& id : ids) out.emplace_back(id, satisfies(id));
  return out;
}

namespace {

// Shared candidate enumeration for isoterm and stability checks.  Candidates
// are the balanced rearrangements of w consistent with every pair's allowed
// projection patterns; for 2-limited words the pairwise projections determine
// the word, so this covers every w' the monoid could equate with w.
class CandidateSearch {
 public:
  CandidateSearch(const ReesMonoid& m, const Word& w) : m_(m), w_(w) {
    auto stats = word_stats(w);
    if (stats.max_occ > 2) {
      throw UndecidedError("isoterm check supports 2-limited words only: " + w.str());
    }
    bool squared = false;
    for (const auto& f : m.factors()) {
      if (f.size() == 2 && f[0] == f[1]) {
        squared = true;
        break;
      }
    }
    if (!squared) {
      throw UndecidedError(
          "isoterm check needs a squared letter in the factor set of the monoid");
    }
    vars_.assign(stats.content.begin(), stats.content.end());
    counts_ = stats.occ;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      for (std::size_t j = i + 1; j < vars_.size(); ++j) {
        Pair p;
        p.a = vars_[i];
        p.b = vars_[j];
        p.base = project(w, {p.a, p.b});
        p.allowed = allowed_patterns(p.a, p.b, p.base);
        pairs_.push_back(std::move(p));
      }
    }
  }

  // Restrict one pair's candidates to projections different from w's.
  // Returns false when no alternative projection is allowed at all.
  bool restrict_pair(const Variable& x, const Variable& y) {
    for (auto& p : pairs_) {
      if ((p.a == x && p.b == y) || (p.a == y && p.b == x)) {
        std::erase(p.allowed, p.base);
        return !p.allowed.empty();
      }
    }
    return false;
  }

  // First candidate w' != w (lexicographic order) with M |= w = w', if any.
  std::optional<Word> find_equated() {
    Word cand;
    std::vector<Word> progress(pairs_.size());
    std::optional<Word> hit;
    dfs(cand, progress, hit);
    return hit;
  }

 private:
  struct Pair {
    Variable a, b;
    Word base;
    std::vector<Word> allowed;
  };

  std::vector<Word> allowed_patterns(const Variable& a, const Variable& b,
                                     const Word& base) {
    std::vector<Word> all;
    Word cur;
    enumerate_patterns(a, counts_[a], b, counts_[b], cur, all);
    std::vector<Word> ok;
    for (const auto& p : all) {
      if (p == base || cached_satisfies(base, p)) ok.push_back(p);
    }
    return ok;
  }

  void enumerate_patterns(const Variable& a, int na, const Variable& b, int nb, Word& cur,
                          std::vector<Word>& out) {
    if (na == 0 && nb == 0) {
      out.push_back(cur);
      return;
    }
    if (na > 0) {
      cur.push_back(a);
      enumerate_patterns(a, na - 1, b, nb, cur, out);
      cur.letters.pop_back();
    }
    if (nb > 0) {
      cur.push_back(b);
      enumerate_patterns(a, na, b, nb - 1, cur, out);
      cur.letters.pop_back();
    }
  }

  // Two-variable satisfaction, cached up to joint renaming.
  bool cached_satisfies(const Word& u, const Word& v) {
    Word joint = concat(u, v);
    Word cform = canonical_form(joint);
    Word cu = cform.sub(0, u.size());
    Word cv = cform.sub(u.size(), cform.size());
    auto key = std::make_pair(cu, cv);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    bool holds = m_.satisfies(Identity{cu, cv, ""}).holds;
    cache_.emplace(std::move(key), holds);
    return holds;
  }

  void dfs(Word& cand, std::vector<Word>& progress, std::optional<Word>& hit) {
    if (hit) return;
    if (cand.size() == w_.size()) {
      if (cand == w_) return;
      if (m_.satisfies(Identity{w_, cand, ""}).holds) hit = cand;
      return;
    }
    for (const auto& x : vars_) {
      if (counts_[x] == 0) continue;
      bool ok = true;
      for (std::size_t pi = 0; pi < pairs_.size() && ok; ++pi) {
        const Pair& p = pairs_[pi];
        if (p.a != x && p.b != x) continue;
        Word next = progress[pi];
        next.push_back(x);
        bool prefix_ok = false;
        for (const auto& pat : p.allowed) {
          if (next.size() <= pat.size() &&
              std::equal(next.begin(), next.end(), pat.begin())) {
            prefix_ok = true;
            break;
          }
        }
        ok = prefix_ok;
      }
      if (!ok) continue;
      --counts_[x];
      cand.push_back(x);
      std::vector<std::size_t> touched;
      for (std::size_t pi = 0; pi < pairs_.size(); ++pi) {
        if (pairs_[pi].a == x || pairs_[pi].b == x) {
          progress[pi].push_back(x);
          touched.push_back(pi);
        }
      }
      dfs(cand, progress, hit);
      for (std::size_t pi : touched) progress[pi].letters.pop_back();
      cand.letters.pop_back();
      ++counts_[x];
      if (hit) return;
    }
  }

  const ReesMonoid& m_;
  const Word& w_;
  std::vector<Variable> vars_;
  std::map<Variable, int> counts_;
  std::vector<Pair> pairs_;
  std::map<std::pair<Word, Word>, bool> cache_;
};

}  // namespace

ReesMonoid::IsotermResult ReesMonoid::is_isoterm(const Word& w) const {
  CandidateSearch search(*this, w);
  if (auto hit = search.find_equated()) return {false, std::move(hit)};
  return {true, std::nullopt};
}

ReesMonoid::StabilityResult ReesMonoid::pair_stable(const Word& w, const Variable& x,
                                                    const Variable& y) const {
  auto cont = content(w);
  if (x == y || !cont.count(x) || !cont.count(y)) {
    throw std::invalid_argument("pair_stable: need two distinct variables of the word");
  }
  CandidateSearch search(*this, w);
  if (!search.restrict_pair(x, y)) return {true, std::nullopt};
  if (auto hit = search.find_equated()) return {false, std::move(hit)};
  return {true, std::nullopt};
}

}  // namespace eqbase
