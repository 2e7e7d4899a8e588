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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Detail lines are indented beneath their criterion.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.h"
#include "json.hpp"
#include "pfk/connectivity.h"
#include "pfk/factor_finder.h"
#include "pfk/generators.h"
#include "pfk/graph_io.h"
#include "pfk/harness.h"
#include "pfk/matching.h"
#include "pfk/parity_criteria.h"
#include "testing/oracles.h"

namespace pfk {
namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;

  void Check(bool ok, const std::string& what) {
    details.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    pass = pass && ok;
  }
  void Note(const std::string& what) { details.push_back("info " + what); }
};

template <typename... Args>
std::string Format(const char* fmt, Args... args) {
  char buffer[512];
  std::snprintf(buffer, sizeof buffer, fmt, args...);
  return buffer;
}

std::string SetText(const VertexSet& set) {
  std::string out = "{";
  for (int v : set.Members()) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

// Valid spec with f <= degree.
DegreeSpec RandomSpec(const Graph& graph, std::mt19937_64& rng) {
  return testing::RandomSpecWithinDegree(graph, rng);
}

// 1. Lovász criterion, exhaustive factor search and gadget matching agree.
Outcome OracleEquivalence() {
  Outcome outcome;
  std::mt19937_64 rng(101);
  int64_t cases = 0, disagreements = 0;
  for (int n = 1; n <= 5; ++n) {
    SmallGraphEnumeration(n).ForEach([&](const Graph& g) {
      for (int trial = 0; trial < 20; ++trial) {
        const DegreeSpec spec = RandomSpec(g, rng);
        const bool lovasz = LovaszExists(g, spec).exists;
        const bool brute = BruteForceFactor(g, spec).has_value();
        const bool gadget = HasPerfectMatching(BuildGadget(g, spec).h);
        ++cases;
        if (lovasz != brute || brute != gadget) {
          ++disagreements;
          if (disagreements <= 3) {
            outcome.Note("disagreement on\n" + FormatGraph(g));
          }
        }
      }
    });
  }
  outcome.Check(disagreements == 0,
                Format("%lld graph/spec cases, %lld disagreements",
                       static_cast<long long>(cases),
                       static_cast<long long>(disagreements)));
  return outcome;
}

// 2. Min-degree criterion agrees with the capped gadget search.
Outcome UnboundedEquivalence() {
  Outcome outcome;
  std::mt19937_64 rng(202);
  int64_t cases = 0, disagreements = 0;
  const auto check = [&](const Graph& g) {
    std::vector<int> lower(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) {
      lower[v] = std::uniform_int_distribution<int>(0, g.Degree(v) + 1)(rng);
    }
    const auto capped = CapUpperBounds(g, lower);
    const bool found = capped && FindParityFactor(g, *capped).has_value();
    ++cases;
    disagreements += found != MinParityExists(g, lower).exists;
  };
  for (int n = 1; n <= 5; ++n) {
    SmallGraphEnumeration(n).ForEach([&](const Graph& g) {
      for (int trial = 0; trial < 4; ++trial) check(g);
    });
  }
  const SmallGraphEnumeration six(6);
  for (int trial = 0; trial < 2000; ++trial) {
    check(six.At(std::uniform_int_distribution<uint64_t>(0, six.size() - 1)(rng)));
  }
  outcome.Check(disagreements == 0,
                Format("%lld cases (all n <= 5, 2000 sampled n = 6), %lld "
                       "disagreements",
                       static_cast<long long>(cases),
                       static_cast<long long>(disagreements)));
  return outcome;
}

int RunCli(const std::vector<std::string>& args, std::string* out_text) {
  std::ostringstream out, err;
  const int code = cli::Run(args, out, err);
  if (out_text) *out_text = out.str();
  return code;
}

// 3. Hubbed-clique tightness family, m = 2 and m = 4.
Outcome TightnessFamilyReproduction() {
  Outcome outcome;
  const auto dir = std::filesystem::temp_directory_path() / "pfk_acceptance";
  std::filesystem::create_directories(dir);
  for (int m : {2, 4}) {
    const HubbedCliques family = TightnessFamily(m);
    const Graph& g = family.graph;
    const int n = g.num_vertices();
    const std::vector<int> high(n, m + 2);

    const int lambda = EdgeConnectivity(g).value;
    outcome.Check(lambda == m + 1, Format("m=%d: lambda = %d (want %d)", m, lambda, m + 1));
    outcome.Check(g.MinDegree() == m + 1,
                  Format("m=%d: min degree = %d (want %d)", m, g.MinDegree(), m + 1));
    const int hub_delta = MinDegreeDeficiency(g, family.hubs, high);
    outcome.Check(hub_delta == 2 * (m + 1),
                  Format("m=%d: delta(hubs) with g = %d is %d (want %d)", m, m + 2,
                         hub_delta, 2 * (m + 1)));

    const std::string path = (dir / ("family_" + std::to_string(m) + ".txt")).string();
    std::ofstream(path) << FormatGraph(g);
    std::string text;
    const int check_code =
        RunCli({"check", path, "--even", std::to_string(m + 2), "--json"}, &text);
    outcome.Check(check_code == cli::kNotExists,
                  Format("m=%d: check --even %d exits %d (want 4)", m, m + 2, check_code));
    // The certificate must be the hub set.
    std::vector<int> reported;
    const nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
    if (doc.contains("certificate")) {
      reported = doc["certificate"]["T"].get<std::vector<int>>();
    }
    outcome.Check(reported == family.hubs.Members(),
                  Format("m=%d: certificate T is the hub set %s (reported %s)", m,
                         SetText(family.hubs).c_str(),
                         doc.contains("certificate")
                             ? SetText(VertexSet::FromMembers(n, reported)).c_str()
                             : "none"));

    // Exact enumeration inside the hub set's closure (hubs and their
    // neighbours).
    VertexSet pool = family.hubs;
    for (int h : family.hubs.Members()) {
      for (int id : g.IncidentEdges(h)) pool.Insert(g.Opposite(id, h));
    }
    const DeficiencyCertificate within = MaxMinDegreeDeficiencyWithin(g, high, pool);
    outcome.Check(within.value > 0,
                  Format("m=%d: max delta over T within %d-vertex hub closure = %d "
                         "at T = %s",
                         m, pool.Size(), within.value, SetText(within.t).c_str()));
    if (n <= EnumerationLimits{}.max_subset_vertices) {
      const DeficiencyCertificate global = MaxMinDegreeDeficiency(g, high);
      outcome.Note(Format("m=%d: global max delta = %d at T = %s", m, global.value,
                          SetText(global.t).c_str()));
    }

    const int find_code = RunCli({"find", path, "--even", std::to_string(m)}, nullptr);
    outcome.Check(find_code == cli::kExists,
                  Format("m=%d: find --even %d exits %d (want 0)", m, m, find_code));
  }
  std::filesystem::remove_all(dir);
  return outcome;
}

CampaignSummary Campaign(const std::string& name) {
  return RunCampaign(ReadCampaignConfig(std::string(PFK_CONFIG_DIR) + "/" + name));
}

void ReportCampaign(Outcome& outcome, const CampaignSummary& summary,
                    const std::vector<int>& expected) {
  std::vector<int> confirmed(summary.config.m_values.size(), 0);
  for (const TheoremReport& r : summary.reports) {
    for (size_t i = 0; i < summary.config.m_values.size(); ++i) {
      if (summary.config.m_values[i] == r.m &&
          r.outcome == TheoremReport::Outcome::kConfirmed && r.violations.empty()) {
        ++confirmed[i];
      }
    }
  }
  for (size_t i = 0; i < expected.size(); ++i) {
    outcome.Check(confirmed[i] == expected[i],
                  Format("m=%d: %d/%d instances confirmed", summary.config.m_values[i],
                         confirmed[i], expected[i]));
  }
  outcome.Check(summary.defects == 0, Format("%d defects", summary.defects));
  if (summary.repro) outcome.Note("repro bundle:\n" + summary.repro->graph_text);
}

const CampaignSummary& EvenCampaign() {
  static const CampaignSummary summary = Campaign("even.cfg");
  return summary;
}
const CampaignSummary& OddCampaign() {
  static const CampaignSummary summary = Campaign("odd.cfg");
  return summary;
}

// 4. Even campaign.
Outcome EvenTheoremCampaign() {
  Outcome outcome;
  ReportCampaign(outcome, EvenCampaign(), {200, 50});
  return outcome;
}

// 5. Odd campaign.
Outcome OddTheoremCampaign() {
  Outcome outcome;
  ReportCampaign(outcome, OddCampaign(), {200, 50});
  return outcome;
}

std::string TallyText(const InequalityTally& tally) {
  return Format("%lld checked, %lld violations%s",
                static_cast<long long>(tally.checked),
                static_cast<long long>(tally.violations),
                tally.exhaustive ? "" : " (sampled)");
}

// 6. Proof-step inequalities on the campaign instances, and the minimality
// inequality on exhaustive (S, T, v) triples.
Outcome ProofStepInequalities() {
  Outcome outcome;
  const EvenProofSteps& even = EvenCampaign().even_steps;
  const OddProofSteps& odd = OddCampaign().odd_steps;
  outcome.Check(even.case_one.violations == 0 && even.case_one.checked > 0,
                "even case one: " + TallyText(even.case_one));
  outcome.Check(even.case_two.violations == 0 && even.case_two.checked > 0,
                "even case two: " + TallyText(even.case_two));
  outcome.Check(odd.degree_bound.violations == 0 && odd.degree_bound.checked > 0,
                "odd degree bound: " + TallyText(odd.degree_bound));

  std::mt19937_64 rng(606);
  MinimalityCheck total;
  const auto check = [&](const Graph& g) {
    const int n = g.num_vertices();
    DegreeSpec spec{std::vector<int>(n), std::vector<int>(n)};
    for (int v = 0; v < n; ++v) {
      spec.f[v] = g.MaxDegree() + 1 + std::uniform_int_distribution<int>(0, 1)(rng);
      spec.g[v] = spec.f[v] % 2 +
                  2 * std::uniform_int_distribution<int>(0, spec.f[v] / 2)(rng);
    }
    const MinimalityCheck result = CheckMinimalityInequality(g, spec);
    total.stated.Merge(result.stated);
    total.corrected.Merge(result.corrected);
  };
  for (int n = 1; n <= 5; ++n) SmallGraphEnumeration(n).ForEach(check);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = std::uniform_int_distribution<int>(6, 8)(rng);
    check(RandomSimpleGraph(n, std::uniform_real_distribution<double>(0.2, 0.8)(rng),
                            rng()));
  }
  outcome.Check(total.stated.violations == 0,
                "minimality inequality, stated form: " + TallyText(total.stated));
  for (size_t i = 0; i < total.stated.examples.size() && i < 2; ++i) {
    outcome.Note("  e.g. " + total.stated.examples[i]);
  }
  outcome.Note("minimality inequality, exact-difference form: " +
               TallyText(total.corrected));
  return outcome;
}

// 7. Matching engine against brute force.
Outcome MatchingEngine() {
  Outcome outcome;
  int64_t cases = 0, disagreements = 0;
  for (int n = 0; n <= 6; ++n) {
    SmallGraphEnumeration(n).ForEach([&](const Graph& g) {
      ++cases;
      disagreements += MaxMatching(g).size() != BruteForceMatchingSize(g);
    });
  }
  std::mt19937_64 rng(707);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 10)(rng);
    const Graph g =
        RandomSimpleGraph(n, std::uniform_real_distribution<double>(0.1, 0.9)(rng), rng());
    ++cases;
    disagreements += MaxMatching(g).size() != BruteForceMatchingSize(g);
  }
  outcome.Check(disagreements == 0,
                Format("%lld graphs (all n <= 6, 500 random n <= 10), %lld "
                       "disagreements",
                       static_cast<long long>(cases),
                       static_cast<long long>(disagreements)));
  const Matching petersen = MaxMatching(PetersenGraph());
  outcome.Check(petersen.size() == 5, Format("Petersen matching size %d", petersen.size()));
  return outcome;
}

// 8. Regression fixtures.
Outcome RegressionFixtures() {
  Outcome outcome;
  const Graph petersen = PetersenGraph();
  const DegreeSpec two = DegreeSpec::Constant(10, 2, 2);
  const auto factor = FindParityFactor(petersen, two);
  outcome.Check(factor && factor->edges.size() == 10 &&
                    VerifyFactor(petersen, factor->edges, two).empty(),
                "Petersen 2-factor found and verified");

  int confirmed = 0;
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    const int n = 6 + static_cast<int>(seed % 9);
    const Graph g = RandomConnectedWithMinDegree(n, 2, 3, seed);
    if (HasBridge(g) || g.MinDegree() < 3) continue;
    const TheoremReport report = CheckTheoremEven(g, 2);
    confirmed += report.outcome == TheoremReport::Outcome::kConfirmed &&
                 report.violations.empty();
  }
  outcome.Check(confirmed == 20,
                Format("%d/20 bridgeless graphs with min degree >= 3 have an "
                       "even factor with min degree 2",
                       confirmed));
  return outcome;
}

}  // namespace
}  // namespace pfk

int main() {
  using Criterion = std::pair<const char*, std::function<pfk::Outcome()>>;
  const std::vector<Criterion> criteria = {
      {"oracle equivalence (Lovasz / brute force / gadget)", pfk::OracleEquivalence},
      {"unbounded-mode equivalence", pfk::UnboundedEquivalence},
      {"tightness family reproduction", pfk::TightnessFamilyReproduction},
      {"even-factor campaign", pfk::EvenTheoremCampaign},
      {"odd-factor campaign", pfk::OddTheoremCampaign},
      {"proof-step inequalities", pfk::ProofStepInequalities},
      {"matching engine", pfk::MatchingEngine},
      {"regression fixtures", pfk::RegressionFixtures},
  };
  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    const pfk::Outcome outcome = criteria[i].second();
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (outcome.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": "
              << criteria[i].first << " (" << pfk::Format("%.1f", seconds) << " s)\n";
    for (const std::string& line : outcome.details) std::cout << "    " << line << "\n";
    std::cout.flush();
    failures += !outcome.pass;
  }
  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) + " criteria failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
