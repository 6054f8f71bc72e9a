#include "eqbase/subst.hpp"

#include "eqbase/identity.hpp"

namespace eqbase {

std::string Substitution::str() const {
  std::string s;
  for (const auto& [v, w] : map) {
    if (!s.empty()) s += ", ";
    s += v.str() + "=" + w.str();
  }
  return s.empty() ? "(identity)" : s;
}

Word apply(const Substitution& s, const Word& w) {
  Word r;
  for (const auto& v : w) {
    auto it = s.map.find(v);
    if (it == s.map.end()) {
      r.push_back(v);
    } else {
      r.append(it->second);
    }
  }
  return r;
}

Substitution compose(const Substitution& a, const Substitution& b) {
  Substitution c;
  for (const auto& [v, w] : a.map) c.set(v, apply(b, w));
  for (const auto& [v, w] : b.map) {
    if (!a.map.count(v)) c.set(v, w);
  }
  return c;
}

Identity parse_identity(std::string_view text) {
  auto eq = text.find('=');
  if (eq == std::string_view::npos) {
    throw ParseError("identity must contain '='", 0);
  }
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  Identity id;
  id.lhs = parse_word(trim(text.substr(0, eq)));
  id.rhs = parse_word(trim(text.substr(eq + 1)));
  return id;
}

bool balanced(const Identity& id) {
  return word_stats(id.lhs).occ == word_stats(id.rhs).occ;
}

std::set<Variable> content(const Identity& id) {
  auto c = content(id.lhs);
  auto d = content(id.rhs);
  c.insert(d.begin(), d.end());
  return c;
}

}  // namespace eqbase
