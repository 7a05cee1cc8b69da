// Runs every acceptance criterion at full size and prints one line each.
#include <chrono>
#include <cstdio>
#include <iostream>

#include "oracles.hpp"
#include "pursuitwidth/verify.hpp"

using namespace pw;

namespace {

struct Line {
  bool ok;
  std::string detail;
};

std::string summary(const SuiteReport& rep) {
  std::string s = std::to_string(rep.checks.size() - rep.failures()) + "/" + std::to_string(rep.checks.size()) + " checks";
  for (const auto& c : rep.checks)
    if (!c.ok) return s + "; first failure " + c.instance + ": " + c.detail;
  return s;
}

Line from_suite(const std::string& name, VerifyParams p) {
  SuiteReport rep = run_suite(name, p);
  return {rep.ok(), summary(rep)};
}

Line hierarchy(const VerifyParams& p) {
  std::vector<std::size_t> counts;
  for (int n = 1; n <= 4; ++n) counts.push_back(strongly_connected_classes(n).size());
  bool counts_ok = counts == std::vector<std::size_t>{1, 1, 5, 83};
  SuiteReport rep = run_suite("hierarchy", p);
  // Cross-check the small-graph cop numbers against the explicit fixpoint.
  auto graphs = exhaustive_corpus(4);
  int mismatches = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto& v = rep.checks[i].values;
    for (int idx : {0, 1}) {
      int r = idx + 1, k = static_cast<int>(v[idx].second);
      if (!oracle::cops_win_explicit(graphs[i].graph, k, r) || (k > 1 && oracle::cops_win_explicit(graphs[i].graph, k - 1, r)))
        ++mismatches;
    }
  }
  std::string d = summary(rep) + "; class counts " + (counts_ok ? "1,1,5,83" : "WRONG") +
                  "; explicit-oracle mismatches " + std::to_string(mismatches);
  return {rep.ok() && counts_ok && mismatches == 0, d};
}

Line imperfect(VerifyParams p) {
  p.parity_games = 200;
  SuiteReport rep = run_suite("imperfect", p);
  int compared = 0, mismatches = 0;
  for (const auto& [pg, eq] : parity_corpus(200, p.parity_seed)) {
    if (pg.size() > 6) continue;
    ++compared;
    if (zielonka_solve(pg).win0 != oracle::parity_win0(pg)) ++mismatches;
  }
  return {rep.ok() && mismatches == 0 && compared > 0,
          summary(rep) + "; enumeration oracle agrees on " + std::to_string(compared - mismatches) + "/" +
              std::to_string(compared) + " games"};
}

}  // namespace

int main() {
  VerifyParams p;
  struct Criterion {
    const char* name;
    std::function<Line()> run;
  };
  VerifyParams two_tree = p;
  two_tree.n = 2;
  std::vector<Criterion> criteria{
      {"hierarchy chain dw_1 <= dw_2 <= dw_n = dpw", [&] { return hierarchy(p); }},
      {"multiplied strategy: dw_r <= r * dw_1, team wins vs prudent isolating robbers",
       [&] { return from_suite("multiply", p); }},
      {"cleanup normal form keeps winning", [&] { return from_suite("cleanup", p); }},
      {"isolating and prudent robber transforms", [&] { return from_suite("robber-normal-forms", p); }},
      {"two-tree family: 4 top-down cops win, 2 SCC-restricted cops lose", [&] { return from_suite("two-tree", two_tree); }},
      {"tree family values, clearing schedules, separation", [&] { return from_suite("tree-family", p); }},
      {"knowledge histories lift back; lifted cops win with <= 2k", [&] { return from_suite("knowledge-lift", p); }},
      {"imperfect-information pipeline and solver oracle", [&] { return imperfect(p); }},
      {"symmetric graphs: tw_2 <= 2 * tw_1", [&] { return from_suite("symmetric", p); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Line line;
    try {
      line = criteria[i].run();
    } catch (const std::exception& e) {
      line = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char t[32];
    std::snprintf(t, sizeof t, "%.1fs", secs);
    std::cout << (line.ok ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].name << " (" << line.detail << ", "
              << t << ")\n";
    failed += !line.ok;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
