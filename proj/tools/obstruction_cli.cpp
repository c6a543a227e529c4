// Command-line front end: decide / table / witness / invariants / check.
//
// Exit codes for `decide`: 0 representable, 1 not representable, 2 bad input.
// All other subcommands: 0 on success, 2 on bad input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "obstruction/invariants.hpp"
#include "obstruction/oracle.hpp"
#include "obstruction/report_json.hpp"

using namespace obstruction;
using arith::Int;

namespace {

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open output file: " + out_path);
  out << text;
}

std::string power_notation(const decide::TableEntry& e) {
  std::ostringstream os;
  os << e.n << "^" << e.a;
  return os.str();
}

std::string invariant_set_to_string(const invariants::InvariantSet& s) {
  std::ostringstream os;
  os << "{";
  if (s.has_zero) os << "0";
  if (s.has_zero && s.has_half) os << ",";
  if (s.has_half) os << "1/2";
  os << "}";
  switch (s.status) {
    case invariants::Status::Exact: break;
    case invariants::Status::LowerBound: os << " (lower bound)"; break;
    case invariants::Status::NotCovered: os << " (not covered)"; break;
  }
  return os.str();
}

int cmd_decide(unsigned k, const Int& m, bool trace, bool want_witness,
               bool json, const std::string& out_path) {
  std::ostringstream os;
  if (m == 0) {
    // 0 = 0^2 + 0^2 + 0^k, before any machinery runs.
    if (json)
      os << nlohmann::json{{"schema_version", decide::kSchemaVersion},
                           {"k", k},
                           {"m", "0"},
                           {"verdict", true},
                           {"hypothesis", "unconditional"},
                           {"shortcut", "m = 0"}}
                .dump(2)
         << "\n";
    else
      os << "representable (unconditional): 0 = 0^2 + 0^2 + 0^" << k << "\n";
    write_output(os.str(), out_path);
    return 0;
  }

  decide::DecisionReport report = decide::ispossible(k, m);
  std::optional<oracle::Witness> witness;
  if (want_witness && report.verdict)
    witness = oracle::witness_search(k, m, 1000);

  if (json) {
    nlohmann::json j = decide::report_to_json(report);
    if (witness)
      j["witness"] = {witness->x.get_str(), witness->y.get_str(),
                      witness->z.get_str()};
    os << j.dump(2) << "\n";
  } else {
    if (!report.verdict) {
      os << "not representable (unconditional)\n";
    } else if (report.shortcut) {
      os << "representable (unconditional): " << m << " = " << report.root
         << "^" << k << "\n";
    } else {
      os << "representable, conditional on "
         << decide::to_string(report.hypothesis) << "\n";
    }
    if (witness)
      os << "witness: " << witness->x << "^2 + " << witness->y << "^2 + ("
         << witness->z << ")^" << k << " = " << m << "\n";
    if (trace && !report.shortcut) {
      os << "a=" << report.a << " b=" << report.b << " n=" << report.n << "\n";
      for (const auto& [p, w] : report.per_prime) {
        os << "p=" << p << " W={";
        bool first = true;
        for (auto s : w.subsets) {
          if (!first) os << ", ";
          os << combi::subset_to_string(s, report.divisors_of_a);
          first = false;
        }
        os << "} depth=" << w.stats.max_depth
           << " nodes=" << w.stats.nodes_visited << "\n";
      }
      os << "T={";
      bool first = true;
      for (auto s : report.aggregate_T) {
        if (!first) os << ", ";
        os << combi::subset_to_string(s, report.divisors_of_a);
        first = false;
      }
      os << "}\n";
    }
  }
  write_output(os.str(), out_path);
  return report.verdict ? 0 : 1;
}

int cmd_table(unsigned k, const Int& max, bool raw, bool json, bool full_scan,
              const std::string& out_path) {
  auto entries = decide::table_generate(
      k, max, full_scan ? decide::TableMode::FullScan : decide::TableMode::Fast);
  std::ostringstream os;
  if (json) {
    nlohmann::json j;
    j["schema_version"] = decide::kSchemaVersion;
    j["k"] = k;
    j["max"] = max.get_str();
    j["entries"] = nlohmann::json::array();
    for (const auto& e : entries)
      j["entries"].push_back(
          {{"m", e.m.get_str()}, {"n", e.n.get_str()}, {"a", e.a}});
    os << j.dump(2) << "\n";
  } else {
    bool first = true;
    for (const auto& e : entries) {
      if (!first) os << (raw ? " " : ", ");
      os << (raw ? e.m.get_str() : power_notation(e));
      first = false;
    }
    os << "\n";
  }
  write_output(os.str(), out_path);
  return 0;
}

int cmd_invariants(unsigned a, unsigned b, const Int& n, bool json,
                   const std::string& out_path) {
  std::vector<std::pair<std::string, invariants::InvariantSet>> rows;
  rows.emplace_back(
      "inf", invariants::invariant_set(a, b, n, hilbert::Place::real()));
  Int two_abn = 2 * Int(a) * Int(b) * n;
  for (const auto& [p, e] : arith::factorize(two_abn).factors)
    rows.emplace_back(p.get_str(), invariants::invariant_set(
                                       a, b, n, hilbert::Place::prime(p)));
  std::ostringstream os;
  if (json) {
    nlohmann::json j;
    j["schema_version"] = decide::kSchemaVersion;
    j["a"] = a;
    j["b"] = b;
    j["n"] = n.get_str();
    j["invariants"] = nlohmann::json::array();
    for (const auto& [place, s] : rows) {
      j["invariants"].push_back(
          {{"place", place},
           {"zero", s.has_zero},
           {"half", s.has_half},
           {"status", s.status == invariants::Status::Exact ? "exact"
                      : s.status == invariants::Status::LowerBound
                          ? "lower-bound"
                          : "not-covered"}});
    }
    os << j.dump(2) << "\n";
  } else {
    for (const auto& [place, s] : rows)
      os << place << ": " << invariant_set_to_string(s) << "\n";
  }
  write_output(os.str(), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integral representability of m = x^2 + y^2 + z^k (odd k)"};
  app.require_subcommand(1);

  std::string m_str, n_str, max_str, out_path;
  unsigned k = 0, a = 0, b = 0;
  bool trace = false, want_witness = false, json = false, raw = false,
       full_scan = false;
  unsigned long z_bound = 1000;

  auto* decide_cmd = app.add_subcommand("decide", "Decide one instance");
  decide_cmd->add_option("-k", k, "Exponent k (odd, >= 1)")->required();
  decide_cmd->add_option("-m", m_str, "Target integer m")->required();
  decide_cmd->add_flag("--trace", trace, "Print per-prime W sets and T");
  decide_cmd->add_flag("--witness", want_witness,
                       "Search for an explicit (x, y, z)");
  decide_cmd->add_flag("--json", json, "Machine-readable output");
  decide_cmd->add_option("--out", out_path, "Write output to a file");

  auto* table_cmd =
      app.add_subcommand("table", "List non-representable m up to a bound");
  table_cmd->add_option("-k", k, "Exponent k (odd, >= 3)")->required();
  table_cmd->add_option("--max", max_str, "Upper bound for m")->required();
  table_cmd->add_flag("--raw", raw, "Print raw integers instead of n^a");
  table_cmd->add_flag("--json", json, "Machine-readable output");
  table_cmd->add_flag("--full-scan", full_scan,
                      "Run the decision on every m (slow, validation only)");
  table_cmd->add_option("--out", out_path, "Write output to a file");

  auto* witness_cmd =
      app.add_subcommand("witness", "Brute-force witness search");
  witness_cmd->add_option("-k", k, "Exponent k (odd)")->required();
  witness_cmd->add_option("-m", m_str, "Target integer m")->required();
  witness_cmd->add_option("--bound", z_bound, "Scan |z| up to this bound");

  auto* inv_cmd =
      app.add_subcommand("invariants", "Local invariant sets I_v(a,b,n)");
  inv_cmd->add_option("-a", a)->required();
  inv_cmd->add_option("-b", b)->required();
  inv_cmd->add_option("-n", n_str)->required();
  inv_cmd->add_flag("--json", json, "Machine-readable output");
  inv_cmd->add_option("--out", out_path, "Write output to a file");

  auto* check_cmd = app.add_subcommand("check", "Obstruction detectors");
  std::string kind;
  check_cmd->add_option("kind", kind, "jagy | strong-approx | abthm")
      ->required();
  check_cmd->add_option("-a", a);
  check_cmd->add_option("-b", b);
  check_cmd->add_option("-n", n_str);
  check_cmd->add_option("-m", m_str);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (decide_cmd->parsed()) {
      if (k % 2 == 0) {
        std::cerr << "error: even k is outside the scope of this method\n";
        return 2;
      }
      return cmd_decide(k, Int(m_str), trace, want_witness, json, out_path);
    }
    if (table_cmd->parsed()) {
      if (k % 2 == 0 || k < 3) {
        std::cerr << "error: table requires odd k >= 3\n";
        return 2;
      }
      return cmd_table(k, Int(max_str), raw, json, full_scan, out_path);
    }
    if (witness_cmd->parsed()) {
      auto w = oracle::witness_search(k, Int(m_str), z_bound);
      if (w) {
        std::cout << w->x << "^2 + " << w->y << "^2 + (" << w->z << ")^" << k
                  << " = " << m_str << "\n";
      } else {
        std::cout << "no witness with |z| <= " << z_bound
                  << " (inconclusive)\n";
      }
      return 0;
    }
    if (inv_cmd->parsed()) return cmd_invariants(a, b, Int(n_str), json, out_path);
    if (check_cmd->parsed()) {
      if (kind == "jagy") {
        bool obstructed = invariants::check_jagy_obstruction(a, b, Int(n_str));
        std::cout << (obstructed ? "obstructed" : "not obstructed") << "\n";
      } else if (kind == "strong-approx") {
        bool fails = invariants::check_strong_approx_failure(a, b, Int(n_str));
        std::cout << (fails ? "fails" : "no failure detected") << "\n";
      } else if (kind == "abthm") {
        bool solvable = invariants::check_abthm(a, b, Int(m_str));
        std::cout << (solvable ? "solvable (conditional on Schinzel (H))"
                               : "no integral solutions")
                  << "\n";
      } else {
        std::cerr << "error: unknown check kind: " << kind << "\n";
        return 2;
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
