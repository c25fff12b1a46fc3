#include <cstdio>
#include <map>
#include <string>

#include "rooklab/verify.hpp"

using namespace rooklab;

namespace {

struct Criterion {
  const char* title;
  /// Per-check (or, for criterion 1, total) runtime budget in ms; 0 = none.
  double budget_ms;
  bool budget_is_total;
};

const std::map<int, Criterion> kCriteria{
    {1, {"reference spectra of SR(4,n), n=0..15", 300'000, true}},
    {2, {"integral spectrum, m<=6, n<=8, v<=1000", 0, false}},
    {3, {"smallest eigenvalue max(-n,-C(m,2))", 0, false}},
    {4, {"multiplicities of -C(m,2) and -n", 0, false}},
    {5, {"A+nI = N N^T, m,n<=5", 0, false}},
    {6, {"closed-form spectra n=3, n=4, m=3", 0, false}},
    {7, {"support partitions and common quotient", 0, false}},
    {8, {"diameter, clique and independence numbers", 120'000, false}},
    {9, {"automorphism group orders", 120'000, false}},
    {10, {"switching mates and closure >= 336", 600'000, false}},
    {11, {"eigenvector families F_pi and F_pw", 0, false}},
    {12, {"Gamma(m,n,pi) classification n<=4", 0, false}},
    {13, {"conjectured families (report only)", 0, false}},
    {0, {"supplementary module properties", 0, false}},
};

struct Tally {
  int checks = 0;
  int failed = 0;
  int reported = 0;
  int matched = 0;
  double total_ms = 0;
  double slowest_ms = 0;
  std::string first_problem;
};

}  // namespace

int main() {
  std::map<int, Tally> tallies;
  VerifyOptions options;
  options.max_vertices = 1000;
  options.closure_limit = 400;
  run_suite("all", options, [&](const VerificationReport& r) {
    Tally& t = tallies[r.criterion];
    ++t.checks;
    t.total_ms += r.runtime_ms;
    t.slowest_ms = std::max(t.slowest_ms, r.runtime_ms);
    if (r.status == Status::kFail) ++t.failed;
    if (r.status == Status::kReported) {
      ++t.reported;
      if (r.actual.contains("matches") && r.actual["matches"] == true) ++t.matched;
    }
    if (r.status != Status::kPass && t.first_problem.empty() && r.criterion != 13)
      t.first_problem = r.claim + " expected " + r.expected.dump() + " actual " + r.actual.dump();
  });

  bool all_pass = true;
  for (int id : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 0}) {
    const Criterion& c = kCriteria.at(id);
    const Tally& t = tallies[id];
    const std::string label = id == 0 ? "extra" : std::to_string(id);
    if (id == 13) {
      std::printf("REPORT criterion %-5s %s: %d comparisons, %d match the exact spectrum (%.1f s)\n", label.c_str(),
                  c.title, t.reported, t.matched, t.total_ms / 1000);
      continue;
    }
    bool pass = t.checks > 0 && t.failed == 0 && t.reported == 0;
    std::string budget;
    if (c.budget_ms > 0) {
      const double used = c.budget_is_total ? t.total_ms : t.slowest_ms;
      pass = pass && used < c.budget_ms;
      char buf[96];
      std::snprintf(buf, sizeof buf, ", %s %.1f s < %.0f s", c.budget_is_total ? "total" : "slowest check",
                    used / 1000, c.budget_ms / 1000);
      budget = buf;
    }
    all_pass = all_pass && pass;
    std::printf("%s   criterion %-5s %s: %d/%d checks exact (tolerance 0)%s\n", pass ? "PASS" : "FAIL", label.c_str(),
                c.title, t.checks - t.failed - t.reported, t.checks, budget.c_str());
    if (!t.first_problem.empty()) std::printf("         first problem: %s\n", t.first_problem.c_str());
  }
  return all_pass ? 0 : 1;
}
