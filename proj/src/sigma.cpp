#include "eqbase/sigma.hpp"

#include <set>
#include <stdexcept>

namespace eqbase {

namespace {

Variable var(char base, int sub = -1) { return Variable{base, sub}; }

Word xy_block(bool primed) {
  Word w;
  w.push_back(var('z', 1));
  if (primed) {
    w.push_back(var('y'));
    w.push_back(var('x'));
  } else {
    w.push_back(var('x'));
    w.push_back(var('y'));
  }
  w.push_back(var('z', 2));
  return w;
}

Word make_w_impl(int n, bool primed) {
  if (n < 1) throw std::invalid_argument("make_w: n must be >= 1");
  Word w;
  w.push_back(var('x', 0));
  w.append(xy_block(primed));
  w.append(make_u(n));
  w.append(xy_block(primed));
  w.push_back(var('x', n));
  return w;
}

}  // namespace

Word make_u(int n) {
  if (n < 1) throw std::invalid_argument("make_u: n must be >= 1");
  Word u;
  for (int i = 1; i <= n; ++i) {
    u.push_back(var('x', i));
    u.push_back(var('x', i - 1));
  }
  return u;
}

Word make_w(int n) { return make_w_impl(n, false); }

Word make_w_prime(int n) { return make_w_impl(n, true); }

std::vector<Identity> aperiodic_identities() {
  Word x(std::vector<Variable>{var('x')});
  Word xxx = concat(x, x, x);
  Word t1(std::vector<Variable>{var('t', 1)});
  Word t2(std::vector<Variable>{var('t', 2)});
  Identity a1{concat(concat(x, t1, x), t2, x), concat(xxx, t1, t2), "aperiodic-1"};
  Identity a2{concat(xxx, t1, t2), concat(t1, t2, xxx), "aperiodic-2"};
  Identity a3{xxx, concat(xxx, x), "aperiodic-3"};
  return {a1, a2, a3};
}

std::vector<Identity> sigma_members(int n_max) {
  if (n_max < 2) throw std::invalid_argument("sigma_members: n_max must be >= 2");
  auto ids = aperiodic_identities();
  for (int n = 2; n <= n_max; ++n) {
    ids.push_back(Identity{make_w(n), make_w_prime(n), "w_" + std::to_string(n)});
  }
  return ids;
}

std::vector<Word> catalogue_U() {
  return {
      parse_word("xyyx"),   parse_word("xxyy"),   parse_word("xtyxy"),
      parse_word("xytxy"),  parse_word("xyxty"),  parse_word("xyzyxz"),
      parse_word("zxyzyx"),
  };
}

std::vector<CatalogueEntry> catalogue_V() {
  struct Base {
    int group;
    int index;
    const char* text;
  };
  static const Base kBases[] = {
      {1, 1, "atxyaxy"},
      {2, 1, "abaxybxy"},      {2, 2, "abxyaxyb"},
      {3, 1, "abbxyaxy"},      {3, 2, "abxybaxy"},      {3, 3, "xyabbaxy"},
      {4, 1, "abxyacbcxy"},
      {5, 1, "axybcbacxy"},    {5, 2, "axybbcacxy"},    {5, 3, "axybbaccxy"},
      {5, 4, "axybbacxyc"},
      {6, 1, "axybcabxyc"},
      {7, 1, "axybcabdcxyd"},  {7, 2, "abxyacbddxyc"},  {7, 3, "abxyacbdxycd"},
      {7, 4, "axybcabdcdxy"},
      {8, 1, "xyabcadbecdexy"},
      {9, 1, "xydcdabcaebexy"}, {9, 2, "dxycdabcaebexy"}, {9, 3, "dxycdabcaebxye"},
  };

  std::vector<CatalogueEntry> entries;
  std::set<Word> seen;
  auto add = [&](CatalogueEntry e) {
    if (seen.insert(canonical_form(e.word)).second) entries.push_back(std::move(e));
  };

  for (const char* text : {"xxyy", "xyzyxz", "zxyzyx"}) {
    add(CatalogueEntry{parse_word(text), 0, 0, false, text});
  }
  for (const auto& b : kBases) {
    std::string label = std::to_string(b.group) + "." + std::to_string(b.index);
    Word w = parse_word(b.text);
    add(CatalogueEntry{w, b.group, b.index, false, label});
    add(CatalogueEntry{reverse(w), b.group, b.index, true, label + "R"});
  }
  if (entries.size() != 37) {
    throw std::logic_error("catalogue_V: expected 37 words, got " +
                           std::to_string(entries.size()));
  }
  return entries;
}

std::vector<Word> catalogue_V_words() {
  std::vector<Word> ws;
  for (const auto& e : catalogue_V()) ws.push_back(e.word);
  return ws;
}

}  // namespace eqbase
