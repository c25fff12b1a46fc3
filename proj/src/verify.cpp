#include "rooklab/verify.hpp"

#include <chrono>
#include <map>

#include "rooklab/canonical.hpp"
#include "rooklab/closed_forms.hpp"
#include "rooklab/eigenvectors.hpp"
#include "rooklab/invariants.hpp"
#include "rooklab/partitions.hpp"
#include "rooklab/spectrum.hpp"
#include "rooklab/switching.hpp"

namespace rooklab {

using nlohmann::json;

std::string_view status_name(Status s) {
  switch (s) {
    case Status::kPass: return "pass";
    case Status::kFail: return "fail";
    case Status::kReported: return "reported";
  }
  return "fail";
}

json VerificationReport::to_json() const {
  return {{"claim", claim},       {"criterion", criterion},   {"status", status_name(status)},
          {"expected", expected}, {"actual", actual},         {"runtime_ms", runtime_ms}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"all", "spectra", "partitions", "invariants", "switching", "gamma"};
  return names;
}

namespace {

std::string tag(int m, int n) { return ".m=" + std::to_string(m) + ".n=" + std::to_string(n); }

/// Object expectations only constrain the keys they name.
bool matches(const json& expected, const json& actual) {
  if (!expected.is_object()) return expected == actual;
  if (!actual.is_object()) return false;
  for (const auto& [key, value] : expected.items())
    if (!actual.contains(key) || actual[key] != value) return false;
  return true;
}

std::size_t sr_order(int m, int n) { return static_cast<std::size_t>(binom(n + m - 1, n)); }

class Runner {
 public:
  Runner(const VerifyOptions& options, const ReportSink& sink) : options_(options), sink_(sink) {}

  /// Times compute(), then passes when its result equals expected.
  template <typename F>
  void check(const std::string& claim, int criterion, const json& expected, F&& compute) {
    VerificationReport r;
    r.claim = claim;
    r.criterion = criterion;
    r.expected = expected;
    const auto start = std::chrono::steady_clock::now();
    try {
      r.actual = compute();
      r.status = matches(expected, r.actual) ? Status::kPass : Status::kFail;
    } catch (const std::exception& e) {
      r.actual = json{{"error", e.what()}};
      r.status = Status::kFail;
    }
    r.runtime_ms = elapsed_ms(start);
    sink_(r);
  }

  template <typename F>
  void report(const std::string& claim, int criterion, const json& expected, F&& compute) {
    VerificationReport r;
    r.claim = claim;
    r.criterion = criterion;
    r.expected = expected;
    r.status = Status::kReported;
    const auto start = std::chrono::steady_clock::now();
    try {
      r.actual = compute();
    } catch (const std::exception& e) {
      r.actual = json{{"error", e.what()}};
    }
    r.runtime_ms = elapsed_ms(start);
    sink_(r);
  }

  void skip(const std::string& claim, int criterion, std::size_t vertices) {
    VerificationReport r;
    r.claim = claim;
    r.criterion = criterion;
    r.status = Status::kReported;
    r.actual = json{{"skipped", "vertex count " + std::to_string(vertices) + " exceeds --max-vertices " +
                                    std::to_string(options_.max_vertices)}};
    sink_(r);
  }

  bool fits(std::size_t vertices) const { return vertices <= options_.max_vertices; }

  const SpectrumResult& sr_result(int m, int n) {
    auto key = std::make_pair(m, n);
    auto it = spectra_.find(key);
    if (it == spectra_.end()) it = spectra_.emplace(key, integral_spectrum_lenient(build_sr(m, n))).first;
    return it->second;
  }

  const Spectrum& sr_spectrum(int m, int n) {
    const auto& r = sr_result(m, n);
    if (r.missing != 0) throw IncompleteSpectrum(r.spectrum, r.missing);
    return r.spectrum;
  }

  const VerifyOptions& options() const { return options_; }

 private:
  static double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }

  VerifyOptions options_;
  const ReportSink& sink_;
  std::map<std::pair<int, int>, SpectrumResult> spectra_;
};

void spectra_suite(Runner& run) {
  for (int n = 0; n <= 15; ++n) {
    const std::string claim = "sr4_reference.n=" + std::to_string(n);
    const auto v = sr_order(4, n);
    if (!run.fits(v)) {
      run.skip(claim, 1, v);
      continue;
    }
    const std::string expected = Spectrum::parse(sr4_reference_spectrum(n)).to_string();
    run.check(claim, 1, expected, [&] { return run.sr_spectrum(4, n).to_string(); });
  }

  for (int m = 1; m <= 6; ++m) {
    for (int n = 0; n <= 8; ++n) {
      const auto v = sr_order(m, n);
      if (v > 1000) continue;
      if (!run.fits(v)) {
        run.skip("integral" + tag(m, n), 2, v);
        continue;
      }
      run.check("integral" + tag(m, n), 2, v, [&] { return run.sr_result(m, n).spectrum.total(); });
      run.check("smallest_eigenvalue" + tag(m, n), 3, smallest_eigenvalue_formula(m, n),
                [&] { return run.sr_spectrum(m, n).smallest(); });
      const std::int64_t bottom = -binom(m, 2);
      run.check("multiplicity.bottom" + tag(m, n), 4, bottom_multiplicity_formula(m, n),
                [&] { return run.sr_spectrum(m, n).multiplicity(bottom); });
      run.check("multiplicity.minus_n" + tag(m, n), 4, mahonian(m, n),
                [&] { return run.sr_spectrum(m, n).multiplicity(-n); });
    }
  }

  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= 5; ++n)
      run.check("halved_factorization" + tag(m, n), 5, true, [&] { return halved_factorization_check(m, n); });

  auto closed_form = [&](SpectrumFamily family, int m, int n, int criterion) {
    const std::string claim = "closed_form." + std::string(family_name(family)) + tag(m, n);
    const auto v = sr_order(m, n);
    if (v > 1000) return;
    if (!run.fits(v)) {
      run.skip(claim, criterion, v);
      return;
    }
    run.check(claim, criterion, predicted_spectrum(family, m, n).normalized().to_string(),
              [&] { return run.sr_spectrum(m, n).to_string(); });
  };
  for (int m = 1; m <= 8; ++m) closed_form(SpectrumFamily::kN0, m, 0, 6);
  for (int m = 1; m <= 8; ++m) closed_form(SpectrumFamily::kN1, m, 1, 6);
  for (int m = 2; m <= 8; ++m) closed_form(SpectrumFamily::kN2, m, 2, 6);
  for (int m = 3; m <= 8; ++m) closed_form(SpectrumFamily::kN3, m, 3, 6);
  for (int m = 4; m <= 8; ++m) closed_form(SpectrumFamily::kN4, m, 4, 6);
  for (int n = 1; n <= 12; ++n) closed_form(SpectrumFamily::kM3, 3, n, 6);

  auto conjectured = [&](SpectrumFamily family, int m, int n) {
    const std::string claim = "conjectured." + std::string(family_name(family)) + tag(m, n);
    const auto v = sr_order(m, n);
    if (!run.fits(v)) {
      run.skip(claim, 13, v);
      return;
    }
    const std::string predicted = predicted_spectrum(family, m, n).normalized().to_string();
    run.report(claim, 13, predicted, [&] {
      const std::string exact = run.sr_spectrum(m, n).to_string();
      return json{{"spectrum", exact}, {"matches", exact == predicted}};
    });
  };
  for (int m = 5; m <= 8; ++m) conjectured(SpectrumFamily::kN5, m, 5);
  for (int n = 6; n <= 16; ++n)
    if (family_supports(SpectrumFamily::kM4, 4, n)) conjectured(SpectrumFamily::kM4, 4, n);
}

void partitions_suite(Runner& run) {
  for (int m = 1; m <= 5; ++m) {
    for (int n = 1; n <= 5; ++n) {
      const Graph sr = build_sr(m, n);
      const Graph johnson = build_johnson(m + n - 1, n);
      run.check("support_quotient_equal" + tag(m, n), 7, true, [&] {
        const auto a = check_equitable(sr, support_partition(sr));
        const auto b = check_equitable(johnson, johnson_support_partition(johnson, m));
        return quotients_equal_by_label(a, b);
      });
      run.check("support_quotient_formula" + tag(m, n), 7, true, [&] {
        const auto e = check_equitable(sr, support_partition(sr));
        for (std::size_t s = 0; s < e.size(); ++s)
          for (std::size_t t = 0; t < e.size(); ++t)
            if (e.entries[s][t] != e_st_formula(e.labels[s], e.labels[t], n)) return false;
        return true;
      });
      run.check("support_quotient_spectrum" + tag(m, n), 7, common_quotient_spectrum(m, n).normalized().to_string(),
                [&] { return quotient_spectrum(check_equitable(sr, support_partition(sr))).to_string(); });
      run.check("weight_quotient_spectrum" + tag(m, n), 7, [&] {
        std::vector<Spectrum::Pair> pairs;
        for (int i = 0; i <= std::min(m, n) - 1; ++i) pairs.emplace_back((m - i) * (n - i) - n, 1);
        return Spectrum::from_pairs(pairs).to_string();
      }(), [&] { return quotient_spectrum(check_equitable(sr, weight_partition(sr))).to_string(); });
    }
  }
}

void invariants_suite(Runner& run) {
  for (int m = 1; m <= 6; ++m)
    for (int n = 0; n <= 6; ++n)
      run.check("diameter" + tag(m, n), 8, std::min(m - 1, n),
                [&] { return static_cast<int>(diameter(build_sr(m, n))); });
  for (int m = 2; m <= 6; ++m) {
    for (int n = 1; n <= 8; ++n) {
      if (sr_order(m, n) > 500) continue;
      run.check("clique_number" + tag(m, n), 8, std::max(m, n + 1),
                [&] { return static_cast<int>(clique_number(build_sr(m, n))); });
    }
  }
  for (int n = 0; n <= 10; ++n)
    run.check("independence" + tag(3, n), 8, independence_formula(3, n),
              [&] { return static_cast<std::int64_t>(independence_number(build_sr(3, n))); });
  for (int m = 4; m <= 9; ++m)
    run.check("independence" + tag(m, 3), 8, independence_formula(m, 3),
              [&] { return static_cast<std::int64_t>(independence_number(build_sr(m, 3))); });

  const std::vector<std::pair<int, int>> aut_cases{{4, 3}, {5, 3}, {4, 4}, {4, 5}, {5, 4}};
  for (auto [m, n] : aut_cases) {
    const auto expected = (n == 3 ? 2 : 1) * factorial(m);
    run.check("automorphisms" + tag(m, n), 9, expected,
              [&] { return static_cast<std::int64_t>(automorphism_count(build_sr(m, n))); });
  }

  for (int m = 3; m <= 6; ++m)
    run.check("digit_swap_automorphism" + tag(m, 3), 0, true, [&] {
      const Graph g = build_sr(m, 3);
      return is_automorphism(g, digit_swap_permutation(g));
    });
  for (int m = 2; m <= 5; ++m)
    for (int n = 1; n <= 5; ++n)
      run.check("k114_free" + tag(m, n), 0, false, [&] { return has_induced_k114(build_sr(m, n)); });
  for (int m = 2; m <= 5; ++m)
    for (int n = 1; n <= 5; ++n)
      run.check("maximal_cliques_classify" + tag(m, n), 0, true, [&] {
        const Graph g = build_sr(m, n);
        for (const auto& c : maximal_cliques(g))
          if (c.size() >= 2) classify_clique(g, c);
        return true;
      });
  for (int m = 3; m <= 5; ++m)
    for (int n = 3; n <= 5; ++n)
      run.check("local_two_cliques_iff_single_support" + tag(m, n), 0, true, [&] {
        const Graph g = build_sr(m, n);
        for (std::size_t u = 0; u < g.order(); ++u) {
          int nonzero = 0;
          for (int e : g.label(u)) nonzero += e != 0;
          if (local_cliques_at_most_two(g, u) != (nonzero == 1)) return false;
        }
        return true;
      });
}

void switching_suite(Runner& run) {
  const std::vector<std::tuple<int, int, const char*>> constructions{
      {4, 3, "v1"}, {4, 4, "v1"}, {4, 3, "line"}, {5, 3, "line"}};
  for (auto [m, n, name] : constructions) {
    run.check("switch." + std::string(name) + tag(m, n), 10, json{{"cospectral", true}, {"isomorphic", false}}, [&] {
      const Graph g = build_sr(m, n);
      const Graph h = gm_switch(g, validate_switching_set(g, named_switching_set(g, name)));
      return json{{"cospectral", integral_spectrum(g) == integral_spectrum(h)}, {"isomorphic", isomorphic(g, h)}};
    });
  }
  run.check("switching_closure" + tag(4, 3), 10, json{{"at_least_336", true}, {"all_cospectral", true}}, [&] {
    const Graph g = build_sr(4, 3);
    const auto closure = switching_closure(g, run.options().closure_limit);
    const Spectrum s = integral_spectrum(g);
    bool cospectral = true;
    for (const auto& h : closure.representatives) cospectral = cospectral && integral_spectrum(h) == s;
    return json{{"at_least_336", closure.classes >= 336}, {"all_cospectral", cospectral},
                {"classes", closure.classes}, {"capped", closure.capped}};
  });
}

void gamma_suite(Runner& run) {
  for (int m = 1; m <= 5; ++m) {
    for (int n = 0; n <= static_cast<int>(binom(m, 2)); ++n) {
      run.check("f_pi" + tag(m, n), 11, json{{"eigenvectors", true}, {"rank", mahonian(m, n)}}, [&] {
        const Graph g = build_sr(m, n);
        std::vector<SparseVector> family;
        bool all = true;
        for (const auto& pi : permutations_with_inversions(m, n)) {
          family.push_back(f_pi(pi));
          all = all && verify_eigenvector(g, family.back(), -n);
        }
        return json{{"eigenvectors", all}, {"rank", rank(stack_rows(family, g.order()))}};
      });
    }
  }
  for (int m = 2; m <= 4; ++m) {
    for (int n = 0; n <= 8; ++n) {
      const auto expected = bottom_multiplicity_formula(m, n);
      run.check("f_pw" + tag(m, n), 11, json{{"count", expected}, {"eigenvectors", true}, {"rank", expected}}, [&] {
        const Graph g = build_sr(m, n);
        std::vector<SparseVector> family;
        bool all = true;
        for (const auto& p : canonical_p_values(m, n)) {
          family.push_back(f_pw(p, canonical_w(m), m, n));
          all = all && verify_eigenvector(g, family.back(), -binom(m, 2));
        }
        const std::size_t r = family.empty() ? 0 : rank(stack_rows(family, g.order()));
        return json{{"count", family.size()}, {"eigenvectors", all}, {"rank", r}};
      });
    }
  }

  const std::vector<std::vector<std::string>> expected_classes{
      {"Q_1"}, {"Q_2"}, {"K_{3,3}", "Q_3"}, {"K_{3,3} x K_2", "Q_4"}};
  for (int n = 1; n <= 4; ++n) {
    run.check("gamma_classes.n=" + std::to_string(n), 12,
              json{{"classes", expected_classes[static_cast<std::size_t>(n - 1)]}, {"integral", true}}, [&] {
                std::vector<std::string> names;
                bool integral = true;
                for (const auto& c : classify_gamma(n)) {
                  names.push_back(c.name.empty() ? "unnamed:" + std::to_string(c.vertices) : c.name);
                  integral = integral && c.spectrum.missing == 0;
                }
                std::sort(names.begin(), names.end());
                return json{{"classes", names}, {"integral", integral}};
              });
  }
  for (int m = 3; m <= 4; ++m)
    run.check("gamma_reversal_is_transposition_cayley.m=" + std::to_string(m), 12, true, [&] {
      return isomorphic(gamma_graph(Permutation::reversal(m)), transposition_cayley_graph(m));
    });
  for (int n = 1; n <= 3; ++n)
    run.check("gamma_beyond_2n_reduces.n=" + std::to_string(n), 0, true, [&] {
      const auto base = classify_gamma(n);
      const auto wide = classify_gamma(n, std::min(7, 2 * n + 3));
      return base.size() == wide.size();
    });

  for (int m = 3; m <= 6; ++m)
    run.check("eigenvector.n3_m-3.m=" + std::to_string(m), 0, json{{"eigenvectors", true}, {"rank", m - 1}}, [&] {
      const Graph g = build_sr(m, 3);
      std::vector<SparseVector> family;
      bool all = true;
      for (int h = 1; h <= m; ++h) {
        family.push_back(small_n_eigenvector(SmallEigenvectorKind::kN3MMinus3, m, h));
        all = all && verify_eigenvector(g, family.back(), m - 3);
      }
      return json{{"eigenvectors", all}, {"rank", rank(stack_rows(family, g.order()))}};
    });
  for (int m = 4; m <= 6; ++m) {
    run.check("eigenvector.n4_2m-5.m=" + std::to_string(m), 0, json{{"eigenvectors", true}, {"rank", m}}, [&] {
      const Graph g = build_sr(m, 4);
      std::vector<SparseVector> family;
      bool all = true;
      for (int h = 1; h <= m; ++h) {
        family.push_back(small_n_eigenvector(SmallEigenvectorKind::kN4TwoMMinus5, m, h));
        all = all && verify_eigenvector(g, family.back(), 2L * m - 5);
      }
      return json{{"eigenvectors", all}, {"rank", rank(stack_rows(family, g.order()))}};
    });
    run.check("eigenvector.n4_m-6.m=" + std::to_string(m), 0, json{{"eigenvectors", true}, {"rank", binom(m, 2)}},
              [&] {
                const Graph g = build_sr(m, 4);
                std::vector<SparseVector> family;
                bool all = true;
                for (int h = 1; h <= m; ++h)
                  for (int i = h + 1; i <= m; ++i) {
                    family.push_back(small_n_eigenvector(SmallEigenvectorKind::kN4MMinus6, m, h, i));
                    all = all && verify_eigenvector(g, family.back(), m - 6);
                  }
                return json{{"eigenvectors", all}, {"rank", rank(stack_rows(family, g.order()))}};
              });
  }
}

}  // namespace

void run_suite(std::string_view suite, const VerifyOptions& options, const ReportSink& sink) {
  Runner run(options, sink);
  const bool all = suite == "all";
  bool known = all;
  if (all || suite == "spectra") {
    spectra_suite(run);
    known = true;
  }
  if (all || suite == "partitions") {
    partitions_suite(run);
    known = true;
  }
  if (all || suite == "invariants") {
    invariants_suite(run);
    known = true;
  }
  if (all || suite == "switching") {
    switching_suite(run);
    known = true;
  }
  if (all || suite == "gamma") {
    gamma_suite(run);
    known = true;
  }
  if (!known) throw Error("unknown suite: " + std::string(suite));
}

std::vector<VerificationReport> run_suite(std::string_view suite, const VerifyOptions& options) {
  std::vector<VerificationReport> out;
  run_suite(suite, options, [&](const VerificationReport& r) { out.push_back(r); });
  return out;
}

}  // namespace rooklab
