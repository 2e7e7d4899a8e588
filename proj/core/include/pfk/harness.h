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

// Verification campaigns for the edge-connectivity sufficient conditions:
//
//   even m: lambda(G) >= m and delta(G) >= m + 1  =>  G has an even factor
//           with every degree >= m;
//   odd m:  lambda(G) >= m + 1                    =>  G has an odd factor
//           with every degree >= m.
//
// Each instance is graded by actually constructing the factor through the
// gadget reduction and re-verifying it. The inequalities used to derive the
// conditions are also checked set by set, as a falsification attempt.

#ifndef PFK_HARNESS_H_
#define PFK_HARNESS_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pfk/degree_spec.h"
#include "pfk/factor_finder.h"
#include "pfk/graph.h"
#include "pfk/parity_criteria.h"

namespace pfk {

struct TheoremReport {
  enum class Outcome {
    kHypothesesFail,  // conclusion not asserted
    kConfirmed,       // factor found and verified
    kDefect,          // hypotheses hold, no valid factor
    kOrderParityProbe,  // odd m, odd order: no odd factor can exist
  };

  std::string instance_id;
  FactorParity parity = FactorParity::kEven;
  int m = 0;
  int order = 0;
  int lambda = 0;
  int min_degree = 0;
  // Named hypothesis checks, in a fixed order.
  std::vector<std::pair<std::string, bool>> hypotheses;
  bool hypotheses_hold = false;
  bool conclusion_checked = false;
  std::optional<ParityFactor> factor;
  // Violations of g = m, f = capped degree, plus a kBelowLower/kParity entry
  // for any degree that is not >= m with the required parity.
  std::vector<FactorViolation> violations;
  Outcome outcome = Outcome::kHypothesesFail;
  double seconds = 0;
};

std::string ToString(TheoremReport::Outcome outcome);

// Throws InvalidArgumentError unless m is even and positive.
TheoremReport CheckTheoremEven(const Graph& graph, int m,
                               std::string instance_id = "");
// Throws InvalidArgumentError unless m is odd and positive. The order parity
// is recorded as an extra "even_order" entry that is not a hypothesis.
TheoremReport CheckTheoremOdd(const Graph& graph, int m,
                              std::string instance_id = "");

// Outcome of checking one family of inequalities over many vertex sets.
struct InequalityTally {
  int64_t checked = 0;
  int64_t violations = 0;
  bool exhaustive = true;
  // Human-readable description of the first few violations.
  std::vector<std::string> examples;

  void Merge(const InequalityTally& other);
};

struct SetSampling {
  // Every T is visited when n is at most this.
  int exhaustive_max_vertices = 14;
  // Otherwise this many uniform random subsets.
  int samples = 1000;
  uint64_t seed = 1;
};

// For every visited T (hypotheses of the even condition assumed):
//   case_one:  sum_{x in T} d_G(x) >= (m + 1)|T|
//   case_two:  every component C of G - T with e_G(C, T) odd has
//              e_G(C, T) >= m + 1, and sum_{x in T} d_G(x) >= (m + 1) tau(T)
//   deficiency: m|T| - sum_{x in T} d_G(x) + tau(T) <= 0
struct EvenProofSteps {
  InequalityTally case_one;
  InequalityTally case_two;
  InequalityTally deficiency;
};
EvenProofSteps CheckEvenProofSteps(const Graph& graph, int m,
                                   const SetSampling& sampling = {});

// For every visited T (odd tau rule):
//   degree_bound: sum_{x in T} d_G(x) >= max{(m + 1)|T|, (m + 1) tau(T)}
//   deficiency:   m|T| - sum_{x in T} d_G(x) + tau(T) <= 0
struct OddProofSteps {
  InequalityTally degree_bound;
  InequalityTally deficiency;
};
OddProofSteps CheckOddProofSteps(const Graph& graph, int m,
                                 const SetSampling& sampling = {});

// Removing one vertex v from S in eta(S, T) when f(w) >= Delta(G) + 1
// everywhere. For every disjoint (S, T) with S nonempty and every v in S:
//   stated:    eta(S - v, T) - eta(S, T) >= f(v) + 2 e_G(v, T) - d_G(v) - 1
//   corrected: eta(S - v, T) - eta(S, T) >= f(v) - d_G(v) - 1 >= 0
// The exact difference is f(v) - e_G(v, T) + tau(S - v, T) - tau(S, T), so
// the stated bound can fail whenever v has neighbours in T. Exhaustive over
// 3^n pairs; throws CapExceededError above limits.max_pair_vertices.
struct MinimalityCheck {
  InequalityTally stated;
  InequalityTally corrected;
};
MinimalityCheck CheckMinimalityInequality(const Graph& graph,
                                          const DegreeSpec& spec,
                                          const EnumerationLimits& limits = {});

enum class CampaignMode { kEven, kOdd, kTightness };

struct CampaignConfig {
  CampaignMode mode = CampaignMode::kEven;
  std::vector<int> m_values = {2};
  // Instances per m value (ignored in tightness mode).
  std::vector<int> instance_counts = {200};
  int n_min = 6;
  int n_max = 14;
  uint64_t seed = 1;
  bool proof_steps = true;
  SetSampling sampling;
};

// Reads "key=value" lines ('#' comments allowed): mode, m, instances, n_min,
// n_max, seed, proof_steps, exhaustive_max_n, samples. List values are comma
// separated. Throws ParseError on syntax, InvalidArgumentError on
// inconsistent values.
CampaignConfig ParseCampaignConfig(std::istream& in);
CampaignConfig ReadCampaignConfig(const std::string& path);
// Throws InvalidArgumentError; e.g. an odd m in even mode.
void ValidateCampaignConfig(const CampaignConfig& config);

// Everything needed to replay a failing instance.
struct ReproBundle {
  std::string instance_id;
  uint64_t seed = 0;
  int m = 0;
  std::string graph_text;
  DegreeSpec spec;
};

struct TightnessResult {
  int m = 0;
  bool even_family = true;
  int order = 0;
  int lambda = 0;
  int min_degree = 0;
  int hub_deficiency = 0;         // delta(hubs) with g = m + 2
  int expected_hub_deficiency = 0;  // 2(m + 1)
  bool factor_at_m_plus_2 = false;
  bool factor_at_m = false;
  bool confirmed = false;  // even m only; odd m is a probe
};

struct CampaignSummary {
  CampaignConfig config;
  std::vector<TheoremReport> reports;
  std::vector<TightnessResult> tightness;
  int confirmed = 0;
  int hypothesis_misses = 0;
  int defects = 0;
  int order_parity_probes = 0;
  EvenProofSteps even_steps;
  OddProofSteps odd_steps;
  std::optional<ReproBundle> repro;

  bool ok() const;
};

// Generates the instances, grades them and aggregates. Stops at the first
// defect and keeps its repro bundle.
CampaignSummary RunCampaign(const CampaignConfig& config);

std::string SummaryTable(const CampaignSummary& summary);
std::string SummaryJson(const CampaignSummary& summary);

}  // namespace pfk

#endif  // PFK_HARNESS_H_
