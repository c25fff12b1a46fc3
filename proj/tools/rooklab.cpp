#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rooklab/canonical.hpp"
#include "rooklab/closed_forms.hpp"
#include "rooklab/eigenvectors.hpp"
#include "rooklab/graph.hpp"
#include "rooklab/graph_io.hpp"
#include "rooklab/invariants.hpp"
#include "rooklab/partitions.hpp"
#include "rooklab/spectrum.hpp"
#include "rooklab/switching.hpp"
#include "rooklab/verify.hpp"

using namespace rooklab;
using ordered = nlohmann::ordered_json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Common {
  int m = 0;
  int n = 0;
  std::string graph = "sr";
  std::string format = "text";
  std::size_t max_vertices = 2000;
};

void add_mn(CLI::App* cmd, Common& c) {
  cmd->add_option("m", c.m, "number of coordinates (or v for a Johnson graph)")->required()->check(CLI::NonNegativeNumber);
  cmd->add_option("n", c.n, "coordinate sum (or subset size)")->required()->check(CLI::NonNegativeNumber);
}

void add_graph_kind(CLI::App* cmd, Common& c) {
  cmd->add_option("--graph", c.graph, "sr: SR(m,n); johnson: J(m,n)")->check(CLI::IsMember({"sr", "johnson"}));
}

void add_limit(CLI::App* cmd, Common& c) {
  cmd->add_option("--max-vertices", c.max_vertices, "refuse larger graphs (exit 2)");
}

Graph make_graph(const Common& c) {
  const std::int64_t order = c.graph == "sr" ? binom(c.n + c.m - 1, c.n) : binom(c.m, c.n);
  if (order > static_cast<std::int64_t>(c.max_vertices))
    throw SizeLimit("graph has " + std::to_string(order) + " vertices; --max-vertices is " +
                    std::to_string(c.max_vertices));
  return c.graph == "sr" ? build_sr(c.m, c.n) : build_johnson(c.m, c.n);
}

std::string graph_name(const Common& c) {
  return (c.graph == "sr" ? "SR(" : "J(") + std::to_string(c.m) + "," + std::to_string(c.n) + ")";
}

int cmd_spectrum(const Common& c, const std::string& engine) {
  const Graph g = make_graph(c);
  SpectrumOptions options;
  options.engine = engine == "bareiss" ? SpectrumEngine::kBareiss : SpectrumEngine::kCertifiedModular;
  const auto result = integral_spectrum_lenient(g, options);
  if (c.format == "json") {
    ordered out{{"graph", graph_name(c)},
                {"vertices", g.order()},
                {"spectrum", result.spectrum.to_string()},
                {"pairs", result.spectrum.to_json()["pairs"]},
                {"integral", result.missing == 0},
                {"method", result.method}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << result.spectrum.to_string() << "\n";
    if (result.missing != 0) std::cout << "non-integral eigenvalues: " << result.missing << "\n";
  }
  return result.missing == 0 ? kExitPass : kExitFail;
}

int cmd_invariants(const Common& c) {
  const Graph g = make_graph(c);
  ordered out;
  try {
    out["diameter"] = diameter(g);
  } catch (const Disconnected&) {
    out["diameter"] = nullptr;
  }
  out["clique_number"] = clique_number(g);
  out["independence_number"] = independence_number(g);
  out["aut_order"] = automorphism_count(g);
  out["k114_free"] = !has_induced_k114(g);
  std::cout << out.dump() << "\n";
  return kExitPass;
}

ordered class_json(const GammaClass& c) {
  ordered out{{"name", c.name.empty() ? nullptr : ordered(c.name)},
              {"vertices", c.vertices},
              {"degree", c.degree},
              {"bipartite", c.bipartite},
              {"permutations", c.members},
              {"example_pi", c.first_pi.to_string()}};
  if (c.spectrum.missing == 0) {
    out["spectrum"] = c.spectrum.spectrum.to_string();
  } else {
    out["integrality_failure"] = {{"integral_part", c.spectrum.spectrum.to_string()},
                                  {"missing", c.spectrum.missing}};
  }
  return out;
}

int cmd_gamma(int n, const std::string& pi_text, int max_m) {
  if (!pi_text.empty()) {
    const Permutation pi = Permutation::parse(pi_text);
    if (pi.inversions() != n)
      throw Error("permutation " + pi.to_string() + " has " + std::to_string(pi.inversions()) + " inversions, not " +
                  std::to_string(n));
    const Graph g = gamma_graph(pi);
    const auto spectrum = integral_spectrum_lenient(g);
    ordered out{{"pi", pi.to_string()},
                {"m", pi.size()},
                {"n", n},
                {"vertices", g.order()},
                {"degree", n},
                {"bipartite", bipartition(g).has_value()},
                {"spectrum", spectrum.spectrum.to_string()},
                {"integral", spectrum.missing == 0},
                {"graph6", to_graph6(g)}};
    std::cout << out.dump() << "\n";
    return spectrum.missing == 0 ? kExitPass : kExitFail;
  }
  const auto classes = classify_gamma(n, max_m > 0 ? std::optional<int>(max_m) : std::nullopt);
  ordered list = ordered::array();
  bool integral = true;
  for (const auto& c : classes) {
    list.push_back(class_json(c));
    integral = integral && c.spectrum.missing == 0;
  }
  std::cout << ordered{{"n", n}, {"classes", list}}.dump(2) << "\n";
  if (!integral) std::cerr << "warning: some Gamma graph has a non-integral spectrum\n";
  return kExitPass;
}

std::vector<int> parse_indices(const std::string& text) {
  std::vector<int> out;
  std::string current;
  for (char ch : text + ",") {
    if (ch == ',' || ch == ' ') {
      if (!current.empty()) out.push_back(std::stoi(current));
      current.clear();
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      current += ch;
    } else {
      throw Error("bad vertex list: " + text);
    }
  }
  return out;
}

int cmd_switch(const Common& c, const std::string& set) {
  const Graph g = make_graph(c);
  const bool numeric = !set.empty() && std::isdigit(static_cast<unsigned char>(set.front()));
  const auto members = numeric ? parse_indices(set) : named_switching_set(g, set);
  const SwitchingSet b = validate_switching_set(g, members);
  const Graph h = gm_switch(g, b);
  const bool cospectral = integral_spectrum(g) == integral_spectrum(h);
  const bool iso = isomorphic(g, h);
  if (c.format == "json") {
    ordered out{{"graph", graph_name(c)},
                {"set", b.members},
                {"graph6", to_graph6(h)},
                {"cospectral", cospectral},
                {"isomorphic", iso}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "graph6: " << to_graph6(h) << "\n";
    std::cout << "cospectral: " << (cospectral ? "true" : "false") << ", isomorphic: " << (iso ? "true" : "false")
              << "\n";
  }
  return kExitPass;
}

int cmd_quotient(const Common& c, const std::string& partition) {
  if (c.n < 1 || c.m < 1) throw UnsupportedParameters("quotients need m, n >= 1");
  Common sized = c;
  sized.graph = "sr";
  const Graph sr = make_graph(sized);
  QuotientMatrix e;
  if (c.graph == "johnson") {
    if (partition != "support") throw UnsupportedParameters("Johnson graphs only have the support partition here");
    const Graph j = build_johnson(c.m + c.n - 1, c.n);
    e = check_equitable(j, johnson_support_partition(j, c.m));
  } else {
    e = check_equitable(sr, partition == "weight" ? weight_partition(sr) : support_partition(sr));
  }
  if (c.format == "csv") {
    std::cout << e.to_csv();
  } else {
    nlohmann::json out = e.to_json();
    out["spectrum"] = quotient_spectrum(e).to_string();
    std::cout << out.dump() << "\n";
  }
  return kExitPass;
}

int cmd_verify(const std::string& suite, std::size_t max_vertices, std::size_t closure_limit) {
  VerifyOptions options;
  options.max_vertices = max_vertices;
  options.closure_limit = closure_limit;
  bool failed = false;
  run_suite(suite, options, [&](const VerificationReport& r) {
    failed = failed || r.status == Status::kFail;
    std::cout << r.to_json().dump() << std::endl;
  });
  return failed ? kExitFail : kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simplicial rook graph toolkit"};
  app.require_subcommand(1);

  Common spec_opts;
  std::string engine = "certified";
  auto* spectrum = app.add_subcommand("spectrum", "integral adjacency spectrum");
  add_mn(spectrum, spec_opts);
  add_graph_kind(spectrum, spec_opts);
  add_limit(spectrum, spec_opts);
  spectrum->add_option("--format", spec_opts.format)->check(CLI::IsMember({"text", "json"}));
  spectrum->add_option("--engine", engine)->check(CLI::IsMember({"certified", "bareiss"}));

  std::string suite = "all";
  std::size_t verify_max = 1000;
  std::size_t closure_limit = 400;
  auto* verify = app.add_subcommand("verify", "run the verification battery (JSON lines)");
  verify->add_option("--suite", suite)->check(CLI::IsMember(suite_names()));
  verify->add_option("--max-vertices", verify_max);
  verify->add_option("--closure-limit", closure_limit);

  Common inv_opts;
  auto* invariants = app.add_subcommand("invariants", "diameter, clique and independence numbers, |Aut|");
  add_mn(invariants, inv_opts);
  add_graph_kind(invariants, inv_opts);
  inv_opts.max_vertices = 500;
  add_limit(invariants, inv_opts);

  int gamma_n = 0;
  std::string pi_text;
  int max_m = 0;
  auto* gamma = app.add_subcommand("gamma", "classify the graphs Gamma(m,n,pi)");
  gamma->add_option("n", gamma_n)->required()->check(CLI::Range(0, 6));
  gamma->add_option("--pi", pi_text, "a single permutation, e.g. 231");
  gamma->add_option("--max-m", max_m, "scan m up to this value (default 2n)");

  Common sw_opts;
  std::string set;
  auto* sw = app.add_subcommand("switch", "Godsil-McKay switching on SR(m,n)");
  add_mn(sw, sw_opts);
  sw_opts.max_vertices = 500;
  add_limit(sw, sw_opts);
  sw->add_option("--set", set, "v1, line, or four comma-separated vertex indices")->required();
  sw->add_option("--format", sw_opts.format)->check(CLI::IsMember({"text", "json"}));

  Common q_opts;
  std::string partition = "support";
  q_opts.format = "json";
  auto* quotient = app.add_subcommand("quotient", "quotient matrix of an equitable partition");
  add_mn(quotient, q_opts);
  add_graph_kind(quotient, q_opts);
  add_limit(quotient, q_opts);
  quotient->add_option("--partition", partition)->check(CLI::IsMember({"support", "weight"}));
  quotient->add_option("--format", q_opts.format)->check(CLI::IsMember({"json", "csv"}));

  Common g6_opts;
  auto* export_g6 = app.add_subcommand("export-graph6", "print the graph in graph6 format");
  add_mn(export_g6, g6_opts);
  add_graph_kind(export_g6, g6_opts);
  add_limit(export_g6, g6_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*spectrum) return cmd_spectrum(spec_opts, engine);
    if (*verify) return cmd_verify(suite, verify_max, closure_limit);
    if (*invariants) return cmd_invariants(inv_opts);
    if (*gamma) return cmd_gamma(gamma_n, pi_text, max_m);
    if (*sw) return cmd_switch(sw_opts, set);
    if (*quotient) return cmd_quotient(q_opts, partition);
    if (*export_g6) {
      std::cout << to_graph6(make_graph(g6_opts)) << "\n";
      return kExitPass;
    }
  } catch (const SizeLimit& e) {
    std::cerr << "size limit: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotSwitchable& e) {
    std::cerr << "not switchable: " << e.what() << "\n";
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
