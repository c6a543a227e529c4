#pragma once

#include <algorithm>

#include <json.hpp>

#include "obstruction/decide.hpp"

namespace obstruction::decide {

inline constexpr int kSchemaVersion = 1;

inline std::vector<unsigned> subset_members(
    DivisorSubset mask, const std::vector<unsigned>& divisors) {
  std::vector<unsigned> out;
  for (std::size_t i = 0; i < divisors.size(); ++i)
    if (mask & (DivisorSubset(1) << i)) out.push_back(divisors[i]);
  return out;
}

inline DivisorSubset subset_from_members(
    const std::vector<unsigned>& members,
    const std::vector<unsigned>& divisors) {
  DivisorSubset mask = 0;
  for (unsigned d : members) {
    auto it = std::find(divisors.begin(), divisors.end(), d);
    if (it == divisors.end())
      throw std::invalid_argument("subset_from_members: not a divisor");
    mask |= DivisorSubset(1) << (it - divisors.begin());
  }
  return mask;
}

inline nlohmann::json report_to_json(const DecisionReport& r) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["k"] = r.k;
  j["m"] = r.m.get_str();
  j["verdict"] = r.verdict;
  j["hypothesis"] = to_string(r.hypothesis);
  if (r.shortcut) {
    j["shortcut"] = "perfect k-th power";
    j["root"] = r.root.get_str();
    return j;
  }
  j["a"] = r.a;
  j["b"] = r.b;
  j["n"] = r.n.get_str();
  nlohmann::json per_prime = nlohmann::json::array();
  for (const auto& [p, w] : r.per_prime) {
    nlohmann::json subsets = nlohmann::json::array();
    for (DivisorSubset s : w.subsets)
      subsets.push_back(subset_members(s, r.divisors_of_a));
    per_prime.push_back({{"p", p.get_str()},
                         {"subsets", subsets},
                         {"nodes_visited", w.stats.nodes_visited},
                         {"max_depth", w.stats.max_depth}});
  }
  j["per_prime"] = per_prime;
  nlohmann::json agg = nlohmann::json::array();
  for (DivisorSubset s : r.aggregate_T)
    agg.push_back(subset_members(s, r.divisors_of_a));
  j["aggregate_T"] = agg;
  return j;
}

inline DecisionReport report_from_json(const nlohmann::json& j) {
  if (j.at("schema_version").get<int>() != kSchemaVersion)
    throw std::invalid_argument("report_from_json: unknown schema version");
  DecisionReport r;
  r.k = j.at("k").get<unsigned>();
  r.m = Int(j.at("m").get<std::string>());
  r.verdict = j.at("verdict").get<bool>();
  const std::string hyp = j.at("hypothesis").get<std::string>();
  for (auto h : {Hypothesis::Unconditional, Hypothesis::Bunyakovsky,
                 Hypothesis::SchinzelH})
    if (to_string(h) == hyp) r.hypothesis = h;
  if (j.contains("shortcut")) {
    r.shortcut = true;
    r.root = Int(j.at("root").get<std::string>());
    return r;
  }
  r.a = j.at("a").get<unsigned>();
  r.b = j.at("b").get<unsigned>();
  r.n = Int(j.at("n").get<std::string>());
  r.divisors_of_a = arith::divisors(r.a);
  for (const auto& pp : j.at("per_prime")) {
    CombiResult w;
    for (const auto& subset : pp.at("subsets"))
      w.subsets.insert(subset_from_members(
          subset.get<std::vector<unsigned>>(), r.divisors_of_a));
    w.stats.nodes_visited = pp.at("nodes_visited").get<std::uint64_t>();
    w.stats.max_depth = pp.at("max_depth").get<int>();
    r.per_prime.emplace_back(Int(pp.at("p").get<std::string>()), std::move(w));
  }
  for (const auto& subset : j.at("aggregate_T"))
    r.aggregate_T.insert(subset_from_members(
        subset.get<std::vector<unsigned>>(), r.divisors_of_a));
  return r;
}

inline bool reports_equal(const DecisionReport& x, const DecisionReport& y) {
  if (x.k != y.k || x.m != y.m || x.verdict != y.verdict ||
      x.hypothesis != y.hypothesis || x.shortcut != y.shortcut)
    return false;
  if (x.shortcut) return x.root == y.root;
  if (x.a != y.a || x.b != y.b || x.n != y.n ||
      x.aggregate_T != y.aggregate_T ||
      x.per_prime.size() != y.per_prime.size())
    return false;
  for (std::size_t i = 0; i < x.per_prime.size(); ++i) {
    if (x.per_prime[i].first != y.per_prime[i].first ||
        x.per_prime[i].second.subsets != y.per_prime[i].second.subsets)
      return false;
  }
  return true;
}

}  // namespace obstruction::decide
