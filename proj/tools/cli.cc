// Copyright 2026 The Parity Factor Kit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pfk/connectivity.h"
#include "pfk/degree_spec.h"
#include "pfk/errors.h"
#include "pfk/factor_finder.h"
#include "pfk/generators.h"
#include "pfk/graph_io.h"
#include "pfk/harness.h"
#include "pfk/parity_criteria.h"

namespace pfk::cli {
namespace {

using nlohmann::json;

constexpr uint64_t kDefaultSeed = 20260101;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exactly one of these picks the degree bounds.
struct SpecOptions {
  std::optional<int> even;
  std::optional<int> odd;
  std::optional<int> g_const;
  std::string g_file;
  std::string gf_file;

  void Register(CLI::App& app) {
    app.add_option("--even", even, "even factor with every degree >= M");
    app.add_option("--odd", odd, "odd factor with every degree >= M");
    app.add_option("--g-const", g_const,
                   "d_F(v) >= M and d_F(v) = M (mod 2) everywhere");
    app.add_option("--g-file", g_file, "per-vertex lower bounds, lines 'v g'");
    app.add_option("--gf-file", gf_file,
                   "per-vertex windows, lines 'v g f' (full (g,f) criterion)");
  }
};

// Lower bounds, plus upper bounds when the (g,f) form was requested.
struct ResolvedSpec {
  std::vector<int> g;
  std::optional<std::vector<int>> f;
  std::string description;
};

ResolvedSpec Resolve(const SpecOptions& options, const Graph& graph) {
  const int sources = options.even.has_value() + options.odd.has_value() +
                      options.g_const.has_value() + !options.g_file.empty() +
                      !options.gf_file.empty();
  if (sources != 1) {
    throw UsageError(
        "give exactly one of --even, --odd, --g-const, --g-file, --gf-file");
  }
  const int n = graph.num_vertices();
  if (options.even) {
    if (*options.even <= 0 || *options.even % 2 != 0) {
      throw UsageError("--even needs a positive even M");
    }
    return {std::vector<int>(n, *options.even), std::nullopt,
            "even factor, min degree " + std::to_string(*options.even)};
  }
  if (options.odd) {
    if (*options.odd <= 0 || *options.odd % 2 == 0) {
      throw UsageError("--odd needs a positive odd M");
    }
    return {std::vector<int>(n, *options.odd), std::nullopt,
            "odd factor, min degree " + std::to_string(*options.odd)};
  }
  if (options.g_const) {
    if (*options.g_const < 0) throw UsageError("--g-const needs M >= 0");
    return {std::vector<int>(n, *options.g_const), std::nullopt,
            "min degree " + std::to_string(*options.g_const) + " with parity"};
  }
  if (!options.g_file.empty()) {
    DegreeBounds bounds = ReadDegreeBoundsFile(options.g_file, n);
    if (bounds.f) throw ParseError(0, options.g_file + ": expected 'v g' lines");
    return {std::move(bounds.g), std::nullopt, "lower bounds from file"};
  }
  DegreeBounds bounds = ReadDegreeBoundsFile(options.gf_file, n);
  if (!bounds.f) throw ParseError(0, options.gf_file + ": expected 'v g f' lines");
  const DegreeSpec spec{bounds.g, *bounds.f};
  const std::vector<SpecViolation> violations = ValidateSpec(graph, spec);
  if (!violations.empty()) {
    throw ParseError(0, options.gf_file + ": vertex " +
                            std::to_string(violations.front().vertex) + ": " +
                            ToString(violations.front().kind));
  }
  return {spec.g, spec.f, "(g,f)-parity factor from file"};
}

// The (g, f) pair handed to the gadget: explicit f, or the degree cap.
std::optional<DegreeSpec> GadgetSpec(const Graph& graph, const ResolvedSpec& spec) {
  if (spec.f) return DegreeSpec{spec.g, *spec.f};
  return CapUpperBounds(graph, spec.g);
}

std::string SetText(const VertexSet& set) {
  std::string out = "{";
  for (int v : set.Members()) {
    if (out.size() > 1) out += ",";
    out += std::to_string(v);
  }
  return out + "}";
}

json CertificateJson(const DeficiencyCertificate& cert, bool full_pair,
                     bool proven_maximal) {
  json components = json::array();
  for (const Component& c : cert.odd_components) {
    components.push_back({{"vertices", c.vertices}, {"edges_to_t", c.edges_to_t}});
  }
  json out = {{"T", cert.t.Members()},
              {"value", cert.value},
              {"odd_components", components},
              {"maximal", proven_maximal}};
  if (full_pair) out["S"] = cert.s.Members();
  return out;
}

void PrintCertificate(std::ostream& out, const DeficiencyCertificate& cert,
                      bool full_pair, bool proven_maximal) {
  if (full_pair) out << "S = " << SetText(cert.s) << "\n";
  out << "T = " << SetText(cert.t) << "\n";
  out << (full_pair ? "eta = " : "delta = ") << cert.value << "\n";
  out << "odd components: " << cert.odd_components.size() << "\n";
  for (const Component& c : cert.odd_components) {
    out << "  C = "
        << SetText(VertexSet::FromMembers(cert.t.universe(), c.vertices))
        << "  e(C,T) = " << c.edges_to_t << "\n";
  }
  if (!proven_maximal) out << "(found by local search; maximality not proven)\n";
}

struct CommonOptions {
  std::string graph_path;
  bool as_json = false;
  std::optional<int> max_n;

  EnumerationLimits Limits() const {
    EnumerationLimits limits = EnumerationLimits::FromEnvironment();
    if (max_n) {
      if (*max_n <= 0 || *max_n > 63) throw UsageError("--max-n must be in 1..63");
      limits.max_pair_vertices = limits.max_subset_vertices = *max_n;
    }
    return limits;
  }
};

int CmdCheck(const CommonOptions& common, const SpecOptions& options,
             std::ostream& out) {
  const Graph graph = ReadGraphFile(common.graph_path);
  const ResolvedSpec spec = Resolve(options, graph);
  const EnumerationLimits limits = common.Limits();
  const int n = graph.num_vertices();
  const bool full_pair = spec.f.has_value();

  bool exists = false;
  bool exhaustive = false;
  std::optional<DeficiencyCertificate> cert;
  if (full_pair && n <= limits.max_pair_vertices) {
    ExistenceVerdict verdict = LovaszExists(graph, {spec.g, *spec.f}, limits);
    exists = verdict.exists;
    cert = std::move(verdict.certificate);
    exhaustive = true;
  } else if (!full_pair && n <= limits.max_subset_vertices) {
    ExistenceVerdict verdict = MinParityExists(graph, spec.g, limits);
    exists = verdict.exists;
    cert = std::move(verdict.certificate);
    exhaustive = true;
  } else {
    // Above the cap: decide through the gadget, then look for a witness.
    const std::optional<DegreeSpec> gadget_spec = GadgetSpec(graph, spec);
    exists = gadget_spec && FindParityFactor(graph, *gadget_spec).has_value();
    if (!exists && !full_pair) {
      VertexSet start(n);
      for (int v = 0; v < n; ++v) {
        if (spec.g[v] > graph.Degree(v)) start.Insert(v);
      }
      DeficiencyCertificate climbed = ClimbMinDegreeDeficiency(graph, spec.g, start);
      if (climbed.value > 0) cert = std::move(climbed);
    }
  }

  if (common.as_json) {
    json result = {{"exists", exists},
                   {"criterion", full_pair ? "lovasz" : "min-degree"},
                   {"exhaustive", exhaustive}};
    if (cert) result["certificate"] = CertificateJson(*cert, full_pair, exhaustive);
    out << result.dump(2) << "\n";
  } else {
    out << "spec: " << spec.description << "\n";
    out << "exists: " << (exists ? "yes" : "no") << "\n";
    if (cert) {
      out << "certificate:\n";
      PrintCertificate(out, *cert, full_pair, exhaustive);
    } else if (!exists) {
      out << "certificate: none found (graph exceeds the enumeration cap; "
             "decided by perfect matching)\n";
    }
  }
  return exists ? kExists : kNotExists;
}

int CmdFind(const CommonOptions& common, const SpecOptions& options,
            std::ostream& out) {
  const Graph graph = ReadGraphFile(common.graph_path);
  const ResolvedSpec spec = Resolve(options, graph);
  const std::optional<DegreeSpec> gadget_spec = GadgetSpec(graph, spec);
  std::optional<ParityFactor> factor;
  if (gadget_spec) factor = FindParityFactor(graph, *gadget_spec);
  if (factor && !VerifyFactor(graph, factor->edges, *gadget_spec).empty()) {
    throw std::logic_error("constructed factor failed verification");
  }
  if (common.as_json) {
    json edges = json::array();
    if (factor) {
      for (const Edge& e : factor->edges) edges.push_back({e.u, e.v});
    }
    json result = {{"exists", factor.has_value()},
                   {"edges", edges},
                   {"degrees", factor ? factor->degrees : std::vector<int>{}}};
    out << result.dump(2) << "\n";
  } else if (factor) {
    for (const Edge& e : factor->edges) out << e.u << ' ' << e.v << "\n";
  } else {
    out << "# no factor exists (" << spec.description << ")\n";
  }
  return factor ? kExists : kNotExists;
}

int CmdDeficiency(const CommonOptions& common, const SpecOptions& options,
                  bool full_lovasz, std::ostream& out) {
  const Graph graph = ReadGraphFile(common.graph_path);
  const ResolvedSpec spec = Resolve(options, graph);
  const EnumerationLimits limits = common.Limits();
  DeficiencyCertificate cert;
  if (full_lovasz) {
    std::vector<int> f;
    if (spec.f) {
      f = *spec.f;
    } else {
      // Open upper bound: the largest value of g's parity that is at most
      // max(d(v), g(v)); a factor never needs more.
      for (int v = 0; v < graph.num_vertices(); ++v) {
        const int top = std::max(graph.Degree(v), spec.g[v]);
        f.push_back((top - spec.g[v]) % 2 == 0 ? top : top - 1);
      }
    }
    cert = MaxEta(graph, {spec.g, f}, limits);
  } else {
    if (spec.f) throw UsageError("--gf-file needs --full-lovasz in deficiency");
    cert = MaxMinDegreeDeficiency(graph, spec.g, limits);
  }
  if (common.as_json) {
    out << json{{"criterion", full_lovasz ? "lovasz" : "min-degree"},
                {"max", cert.value},
                {"certificate", CertificateJson(cert, full_lovasz, true)}}
               .dump(2)
        << "\n";
  } else {
    out << (full_lovasz ? "max eta = " : "max delta = ") << cert.value << "\n";
    PrintCertificate(out, cert, full_lovasz, true);
  }
  return cert.value <= 0 ? kExists : kNotExists;
}

int CmdLambda(const CommonOptions& common, std::ostream& out) {
  const Graph graph = ReadGraphFile(common.graph_path);
  if (graph.num_vertices() < 2) {
    throw ParseError(0, "edge connectivity needs at least 2 vertices");
  }
  const CutCertificate cut = EdgeConnectivity(graph);
  if (common.as_json) {
    out << json{{"lambda", cut.value}, {"shore", cut.side.Members()}}.dump(2)
        << "\n";
  } else {
    out << "lambda = " << cut.value << "\n";
    out << "shore = " << SetText(cut.side) << "\n";
  }
  return kExists;
}

int CmdVerify(const std::string& config_path, const CampaignConfig& overrides,
              const CLI::App& app, bool as_json, std::ostream& out) {
  CampaignConfig config;
  if (!config_path.empty()) config = ReadCampaignConfig(config_path);
  const auto given = [&](const char* name) { return app.count(name) > 0; };
  if (given("--mode")) config.mode = overrides.mode;
  if (given("--m")) config.m_values = overrides.m_values;
  if (given("--instances")) config.instance_counts = overrides.instance_counts;
  if (given("--n-min")) config.n_min = overrides.n_min;
  if (given("--n-max")) config.n_max = overrides.n_max;
  if (given("--seed")) config.seed = overrides.seed;
  if (given("--no-proof-steps")) config.proof_steps = false;
  if (config.instance_counts.size() == 1 && config.m_values.size() > 1) {
    config.instance_counts.assign(config.m_values.size(),
                                  config.instance_counts[0]);
  }
  ValidateCampaignConfig(config);
  const CampaignSummary summary = RunCampaign(config);
  out << (as_json ? SummaryJson(summary) + "\n" : SummaryTable(summary));
  return summary.ok() ? kExists : kNotExists;
}

// Small-n oracle equivalence: criteria vs exhaustive factor search vs
// gadget matching, and the min-degree criterion vs the capped gadget.
int CmdSelftest(int max_n, uint64_t seed, std::ostream& out) {
  if (max_n < 1 || max_n > 5) throw UsageError("--max-n must be in 1..5");
  std::mt19937_64 rng(seed);
  int64_t cases = 0;
  int64_t disagreements = 0;
  for (int n = 1; n <= max_n; ++n) {
    const SmallGraphEnumeration graphs(n);
    for (uint64_t i = 0; i < graphs.size(); ++i) {
      const Graph graph = graphs.At(i);
      for (int trial = 0; trial < 4; ++trial) {
        DegreeSpec spec{std::vector<int>(n), std::vector<int>(n)};
        std::vector<int> g(n);
        for (int v = 0; v < n; ++v) {
          const int d = graph.Degree(v);
          spec.f[v] = std::uniform_int_distribution<int>(0, d)(rng);
          spec.g[v] = spec.f[v] -
                      2 * std::uniform_int_distribution<int>(0, spec.f[v] / 2)(rng);
          g[v] = std::uniform_int_distribution<int>(0, d + 1)(rng);
        }
        const bool lovasz = LovaszExists(graph, spec).exists;
        const bool brute = BruteForceFactor(graph, spec).has_value();
        const bool gadget = FindParityFactor(graph, spec).has_value();
        const bool min_degree = MinParityExists(graph, g).exists;
        const auto capped = CapUpperBounds(graph, g);
        const bool capped_gadget =
            capped && FindParityFactor(graph, *capped).has_value();
        ++cases;
        if (lovasz != brute || brute != gadget || min_degree != capped_gadget) {
          ++disagreements;
          out << "disagreement: n=" << n << " graph #" << i << "\n";
        }
      }
    }
  }
  out << "selftest: " << cases << " cases, " << disagreements
      << " disagreements\n";
  return disagreements == 0 ? kExists : kNotExists;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Parity factor toolkit: existence criteria, factor "
               "construction and edge-connectivity campaigns",
               "pfk"};
  app.require_subcommand(1);

  CommonOptions common;
  SpecOptions spec_options;
  bool full_lovasz = false;

  const auto add_graph = [&](CLI::App* sub) {
    sub->add_option("graph", common.graph_path, "graph file")->required();
    sub->add_flag("--json", common.as_json, "JSON output");
  };

  CLI::App* check = app.add_subcommand("check", "decide whether a factor exists");
  add_graph(check);
  spec_options.Register(*check);
  check->add_option("--max-n", common.max_n, "enumeration cap override");

  CLI::App* find = app.add_subcommand("find", "construct a factor");
  add_graph(find);
  SpecOptions find_options;
  find_options.Register(*find);

  CLI::App* deficiency =
      app.add_subcommand("deficiency", "maximum deficiency and its maximizer");
  add_graph(deficiency);
  SpecOptions deficiency_options;
  deficiency_options.Register(*deficiency);
  deficiency->add_flag("--full-lovasz", full_lovasz,
                       "maximize eta(S,T) over disjoint pairs");
  deficiency->add_option("--max-n", common.max_n, "enumeration cap override");

  CLI::App* lambda = app.add_subcommand("lambda", "edge connectivity");
  add_graph(lambda);

  CLI::App* gen = app.add_subcommand("gen", "generate graphs");
  gen->require_subcommand(1);
  int family_m = 0;
  CLI::App* gen_remark1 =
      gen->add_subcommand("remark1", "hubbed K_{2m} copies (tightness family)");
  gen_remark1->add_option("--m", family_m, "even m >= 2")->required();
  int random_n = 0;
  int random_k = 0;
  uint64_t random_seed = kDefaultSeed;
  CLI::App* gen_random =
      gen->add_subcommand("random", "random simple graph with lambda >= k");
  gen_random->add_option("--n", random_n)->required();
  gen_random->add_option("--k", random_k)->required();
  gen_random->add_option("--seed", random_seed);
  std::string graph_name;
  CLI::App* gen_named = gen->add_subcommand(
      "named", "complete(n), cycle(n), path(n), star(k) or petersen");
  gen_named->add_option("name", graph_name)->required();

  CLI::App* verify = app.add_subcommand("verify", "run a verification campaign");
  std::string config_path;
  CampaignConfig overrides;
  std::string mode_name;
  bool no_proof_steps = false;
  verify->add_option("config", config_path, "key=value campaign file");
  verify->add_option("--mode", mode_name)
      ->check(CLI::IsMember({"even", "odd", "tightness"}));
  verify->add_option("--m", overrides.m_values)->delimiter(',');
  verify->add_option("--instances", overrides.instance_counts)->delimiter(',');
  verify->add_option("--n-min", overrides.n_min);
  verify->add_option("--n-max", overrides.n_max);
  verify->add_option("--seed", overrides.seed);
  verify->add_flag("--no-proof-steps", no_proof_steps);
  verify->add_flag("--json", common.as_json, "JSON summary");

  CLI::App* selftest =
      app.add_subcommand("selftest", "small-n oracle equivalence check");
  int selftest_n = 4;
  uint64_t selftest_seed = kDefaultSeed;
  selftest->add_option("--max-n", selftest_n, "largest order (<= 5)");
  selftest->add_option("--seed", selftest_seed);

  std::vector<std::string> argv_storage = {"pfk"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& arg : argv_storage) argv.push_back(arg.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExists : kUsageError;
  }

  try {
    if (*check) return CmdCheck(common, spec_options, out);
    if (*find) return CmdFind(common, find_options, out);
    if (*deficiency) {
      return CmdDeficiency(common, deficiency_options, full_lovasz, out);
    }
    if (*lambda) return CmdLambda(common, out);
    if (*gen) {
      if (*gen_remark1) {
        const HubbedCliques family = TightnessFamily(family_m);
        out << FormatGraph(family.graph,
                           {"hubbed cliques m=" + std::to_string(family_m),
                            "hubs " + SetText(family.hubs)});
      } else if (*gen_random) {
        out << FormatGraph(RandomKEdgeConnected(random_n, random_k, random_seed),
                           {"random n=" + std::to_string(random_n) +
                            " k=" + std::to_string(random_k) +
                            " seed=" + std::to_string(random_seed)});
      } else {
        out << FormatGraph(NamedGraph(graph_name), {graph_name});
      }
      return kExists;
    }
    if (*verify) {
      if (!mode_name.empty()) {
        overrides.mode = mode_name == "even"  ? CampaignMode::kEven
                         : mode_name == "odd" ? CampaignMode::kOdd
                                              : CampaignMode::kTightness;
      }
      return CmdVerify(config_path, overrides, *verify, common.as_json, out);
    }
    if (*selftest) return CmdSelftest(selftest_n, selftest_seed, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const InvalidArgumentError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ParseError& e) {
    err << "malformed input: " << e.what() << "\n";
    return kInputError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const CapExceededError& e) {
    err << "error: " << e.what() << " (raise it with --max-n or PFK_MAX_N)\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInputError;
  }
  return kUsageError;
}

}  // namespace pfk::cli
