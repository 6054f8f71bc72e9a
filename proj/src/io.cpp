#include "eqbase/io.hpp"

#include <fstream>
#include <set>

#include "json.hpp"

namespace eqbase {

namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace

std::string monoid_to_json(const ReesMonoid& m, bool include_factors) {
  json j;
  j["generator_words"] = json::array();
  for (const auto& g : m.generators()) j["generator_words"].push_back(g.str());
  j["max_len"] = m.max_len();
  if (include_factors) {
    j["factors"] = json::array();
    for (const auto& f : m.factors()) j["factors"].push_back(f.str());
  }
  return j.dump(2);
}

ReesMonoid monoid_from_json(const std::string& text) {
  json j = json::parse(text);
  std::vector<Word> gens;
  for (const auto& g : j.at("generator_words")) {
    gens.push_back(parse_word(g.get<std::string>()));
  }
  ReesMonoid m = ReesMonoid::build(gens);
  if (j.contains("max_len") && j["max_len"].get<int>() != m.max_len()) {
    throw std::runtime_error("monoid file max_len does not match the generators");
  }
  if (j.contains("factors")) {
    std::set<Word> listed;
    for (const auto& f : j["factors"]) listed.insert(parse_word(f.get<std::string>()));
    std::set<Word> actual(m.factors().begin(), m.factors().end());
    if (listed != actual) {
      throw std::runtime_error("monoid file factor list is not the factorial closure");
    }
  }
  return m;
}

void save_monoid(const ReesMonoid& m, const std::string& path, bool include_factors) {
  spit(path, monoid_to_json(m, include_factors));
}

ReesMonoid load_monoid(const std::string& path) { return monoid_from_json(slurp(path)); }

std::string trace_to_json(const DerivationTrace& t) {
  json j;
  j["start"] = t.start.str();
  j["end"] = t.end.str();
  j["steps"] = json::array();
  for (const auto& s : t.steps) {
    json step;
    step["rule"] = s.rule;
    step["direction"] = s.forward ? "forward" : "backward";
    json theta = json::object();
    for (const auto& [v, w] : s.theta.map) theta[v.str()] = w.str();
    step["substitution"] = theta;
    step["left"] = s.left.str();
    step["right"] = s.right.str();
    step["before"] = s.before.str();
    step["after"] = s.after.str();
    j["steps"].push_back(std::move(step));
  }
  return j.dump(2);
}

DerivationTrace trace_from_json(const std::string& text) {
  json j = json::parse(text);
  DerivationTrace t;
  t.start = parse_word(j.at("start").get<std::string>());
  t.end = parse_word(j.at("end").get<std::string>());
  for (const auto& step : j.at("steps")) {
    DerivationStep s;
    s.rule = step.at("rule").get<std::string>();
    s.forward = step.at("direction").get<std::string>() == "forward";
    for (const auto& [key, value] : step.at("substitution").items()) {
      Word var = parse_word(key);
      if (var.size() != 1) throw std::runtime_error("bad substitution key " + key);
      s.theta.set(var[0], parse_word(value.get<std::string>()));
    }
    s.left = parse_word(step.at("left").get<std::string>());
    s.right = parse_word(step.at("right").get<std::string>());
    s.before = parse_word(step.at("before").get<std::string>());
    s.after = parse_word(step.at("after").get<std::string>());
    t.steps.push_back(std::move(s));
  }
  return t;
}

void save_trace(const DerivationTrace& t, const std::string& path) {
  spit(path, trace_to_json(t));
}

DerivationTrace load_trace(const std::string& path) { return trace_from_json(slurp(path)); }

}  // namespace eqbase
