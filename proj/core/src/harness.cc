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

#include "pfk/harness.h"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <istream>
#include <random>
#include <sstream>

#include "json.hpp"
#include "mask_graph.h"
#include "pfk/connectivity.h"
#include "pfk/errors.h"
#include "pfk/generators.h"
#include "pfk/graph_io.h"

namespace pfk {
namespace {

constexpr size_t kMaxExamples = 5;

std::string MaskText(uint64_t mask) {
  std::string out = "{";
  for (uint64_t rest = mask; rest != 0; rest &= rest - 1) {
    if (out.size() > 1) out += ",";
    out += std::to_string(std::countr_zero(rest));
  }
  return out + "}";
}

void Record(InequalityTally& tally, bool holds, const std::string& detail) {
  ++tally.checked;
  if (holds) return;
  ++tally.violations;
  if (tally.examples.size() < kMaxExamples) tally.examples.push_back(detail);
}

uint64_t Mix(uint64_t seed, uint64_t a, uint64_t b) {
  // splitmix64 finaliser over the combined words.
  uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (a + 1) + 0xbf58476d1ce4e5b9ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int Lambda(const Graph& graph) {
  return graph.num_vertices() >= 2 ? EdgeConnectivity(graph).value : 0;
}

// Calls fn(T) for every T (n small) or for `samples` random T.
template <typename Fn>
bool VisitSets(const internal::MaskGraph& mg, const SetSampling& sampling,
               Fn&& fn) {
  const int n = mg.num_vertices();
  if (n <= sampling.exhaustive_max_vertices) {
    for (uint64_t t = 0; t <= mg.full(); ++t) {
      fn(t);
      if (t == mg.full()) break;
    }
    return true;
  }
  std::mt19937_64 rng(sampling.seed);
  for (int i = 0; i < sampling.samples; ++i) fn(rng() & mg.full());
  return false;
}

// Grades `factor` against g = m with the required parity and d_F >= m.
std::vector<FactorViolation> GradeFactor(const Graph& graph,
                                         const ParityFactor& factor,
                                         const DegreeSpec& spec, int m) {
  std::vector<FactorViolation> out = VerifyFactor(graph, factor.edges, spec);
  for (int v = 0; v < graph.num_vertices(); ++v) {
    const int d = factor.degrees[v];
    if (d < m) out.push_back({v, d, FactorViolation::Kind::kBelowLower});
    if ((d - m) % 2 != 0) out.push_back({v, d, FactorViolation::Kind::kParity});
  }
  return out;
}

void RunConclusion(const Graph& graph, TheoremReport& report) {
  report.conclusion_checked = true;
  const std::vector<int> g(graph.num_vertices(), report.m);
  const std::optional<DegreeSpec> spec = CapUpperBounds(graph, g);
  if (spec) report.factor = FindParityFactor(graph, *spec);
  if (report.factor) {
    report.violations = GradeFactor(graph, *report.factor, *spec, report.m);
    report.outcome = report.violations.empty() ? TheoremReport::Outcome::kConfirmed
                                               : TheoremReport::Outcome::kDefect;
  } else {
    report.outcome = TheoremReport::Outcome::kDefect;
  }
}

TheoremReport StartReport(const Graph& graph, int m, FactorParity parity,
                          std::string instance_id) {
  TheoremReport report;
  report.instance_id = std::move(instance_id);
  report.parity = parity;
  report.m = m;
  report.order = graph.num_vertices();
  report.lambda = Lambda(graph);
  report.min_degree = graph.MinDegree();
  return report;
}

double SecondsSince(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

std::vector<int> ParseIntList(const std::string& text, int line_number) {
  std::vector<int> out;
  std::stringstream fields(text);
  std::string item;
  while (std::getline(fields, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError(line_number, "expected an integer list, found '" + text + "'");
    }
  }
  if (out.empty()) throw ParseError(line_number, "empty list");
  return out;
}

std::string Trim(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = text.find_last_not_of(" \t\r");
  return text.substr(first, last - first + 1);
}

std::string ModeName(CampaignMode mode) {
  switch (mode) {
    case CampaignMode::kEven:
      return "even";
    case CampaignMode::kOdd:
      return "odd";
    case CampaignMode::kTightness:
      return "tightness";
  }
  return "unknown";
}

TightnessResult RunTightness(int m) {
  const HubbedCliques family =
      m % 2 == 0 ? TightnessFamily(m) : MakeHubbedCliques(m);
  const Graph& graph = family.graph;
  TightnessResult result;
  result.m = m;
  result.even_family = m % 2 == 0;
  result.order = graph.num_vertices();
  result.lambda = Lambda(graph);
  result.min_degree = graph.MinDegree();
  const int n = graph.num_vertices();
  result.hub_deficiency =
      MinDegreeDeficiency(graph, family.hubs, std::vector<int>(n, m + 2));
  result.expected_hub_deficiency = 2 * (m + 1);
  if (auto spec = CapUpperBounds(graph, std::vector<int>(n, m + 2))) {
    result.factor_at_m_plus_2 = FindParityFactor(graph, *spec).has_value();
  }
  if (result.even_family) {
    result.factor_at_m =
        CheckTheoremEven(graph, m).outcome == TheoremReport::Outcome::kConfirmed;
  } else if (auto spec = CapUpperBounds(graph, std::vector<int>(n, m))) {
    result.factor_at_m = FindParityFactor(graph, *spec).has_value();
  }
  result.confirmed = result.even_family && result.lambda == m + 1 &&
                     result.min_degree == m + 1 &&
                     result.hub_deficiency == result.expected_hub_deficiency &&
                     !result.factor_at_m_plus_2 && result.factor_at_m;
  return result;
}

nlohmann::json TallyJson(const InequalityTally& tally) {
  return {{"checked", tally.checked},
          {"violations", tally.violations},
          {"exhaustive", tally.exhaustive},
          {"examples", tally.examples}};
}

std::string ViolationKindName(FactorViolation::Kind kind) {
  switch (kind) {
    case FactorViolation::Kind::kBelowLower:
      return "below_lower";
    case FactorViolation::Kind::kAboveUpper:
      return "above_upper";
    case FactorViolation::Kind::kParity:
      return "parity";
  }
  return "unknown";
}

}  // namespace

std::string ToString(TheoremReport::Outcome outcome) {
  switch (outcome) {
    case TheoremReport::Outcome::kHypothesesFail:
      return "hypotheses-fail";
    case TheoremReport::Outcome::kConfirmed:
      return "confirmed";
    case TheoremReport::Outcome::kDefect:
      return "DEFECT";
    case TheoremReport::Outcome::kOrderParityProbe:
      return "order-parity-probe";
  }
  return "unknown";
}

TheoremReport CheckTheoremEven(const Graph& graph, int m,
                               std::string instance_id) {
  if (m <= 0 || m % 2 != 0) {
    throw InvalidArgumentError("even-factor check needs an even m > 0, got " +
                               std::to_string(m));
  }
  const auto start = std::chrono::steady_clock::now();
  TheoremReport report =
      StartReport(graph, m, FactorParity::kEven, std::move(instance_id));
  report.hypotheses = {{"lambda>=m", report.lambda >= m},
                       {"min_degree>=m+1", report.min_degree >= m + 1}};
  report.hypotheses_hold = report.hypotheses[0].second && report.hypotheses[1].second;
  if (report.hypotheses_hold) RunConclusion(graph, report);
  report.seconds = SecondsSince(start);
  return report;
}

TheoremReport CheckTheoremOdd(const Graph& graph, int m,
                              std::string instance_id) {
  if (m <= 0 || m % 2 == 0) {
    throw InvalidArgumentError("odd-factor check needs an odd m > 0, got " +
                               std::to_string(m));
  }
  const auto start = std::chrono::steady_clock::now();
  TheoremReport report =
      StartReport(graph, m, FactorParity::kOdd, std::move(instance_id));
  const bool even_order = report.order % 2 == 0;
  report.hypotheses = {{"lambda>=m+1", report.lambda >= m + 1},
                       {"even_order", even_order}};
  report.hypotheses_hold = report.hypotheses[0].second;
  if (report.hypotheses_hold) {
    RunConclusion(graph, report);
    // With lambda >= 1 the graph is connected, so odd order rules out every
    // all-odd-degree factor by the handshake lemma.
    if (!report.factor && !even_order) {
      report.outcome = TheoremReport::Outcome::kOrderParityProbe;
    }
  }
  report.seconds = SecondsSince(start);
  return report;
}

void InequalityTally::Merge(const InequalityTally& other) {
  checked += other.checked;
  violations += other.violations;
  exhaustive = exhaustive && other.exhaustive;
  for (const std::string& example : other.examples) {
    if (examples.size() < kMaxExamples) examples.push_back(example);
  }
}

EvenProofSteps CheckEvenProofSteps(const Graph& graph, int m,
                                   const SetSampling& sampling) {
  const internal::MaskGraph mg(graph);
  const std::vector<int> degrees = graph.Degrees();
  EvenProofSteps steps;
  const bool exhaustive = VisitSets(mg, sampling, [&](uint64_t t) {
    const int size = std::popcount(t);
    const int degree_sum = internal::MaskGraph::Sum(degrees, t);
    Record(steps.case_one, degree_sum >= (m + 1) * size,
           "T=" + MaskText(t) + ": degree sum " + std::to_string(degree_sum) +
               " < (m+1)|T| = " + std::to_string((m + 1) * size));
    int tau = 0;
    bool boundary_ok = true;
    std::string detail;
    mg.ForEachComponent(mg.full() & ~t, [&](uint64_t c) {
      const int boundary = mg.EdgesBetween(c, t);
      if (boundary % 2 == 0) return;
      ++tau;
      if (boundary < m + 1 && boundary_ok) {
        boundary_ok = false;
        detail = "T=" + MaskText(t) + ", C=" + MaskText(c) + ": e(C,T) = " +
                 std::to_string(boundary) + " < m+1";
      }
    });
    if (boundary_ok && degree_sum < (m + 1) * tau) {
      boundary_ok = false;
      detail = "T=" + MaskText(t) + ": degree sum " + std::to_string(degree_sum) +
               " < (m+1)tau = " + std::to_string((m + 1) * tau);
    }
    Record(steps.case_two, boundary_ok, detail);
    const int deficiency = m * size - degree_sum + tau;
    Record(steps.deficiency, deficiency <= 0,
           "T=" + MaskText(t) + ": deficiency " + std::to_string(deficiency));
  });
  steps.case_one.exhaustive = steps.case_two.exhaustive =
      steps.deficiency.exhaustive = exhaustive;
  return steps;
}

OddProofSteps CheckOddProofSteps(const Graph& graph, int m,
                                 const SetSampling& sampling) {
  const internal::MaskGraph mg(graph);
  const std::vector<int> degrees = graph.Degrees();
  OddProofSteps steps;
  const bool exhaustive = VisitSets(mg, sampling, [&](uint64_t t) {
    const int size = std::popcount(t);
    const int degree_sum = internal::MaskGraph::Sum(degrees, t);
    int tau = 0;
    mg.ForEachComponent(mg.full() & ~t, [&](uint64_t c) {
      tau += (mg.EdgesParity(c, t) + std::popcount(c)) & 1;
    });
    const int bound = (m + 1) * std::max(size, tau);
    Record(steps.degree_bound, degree_sum >= bound,
           "T=" + MaskText(t) + ": degree sum " + std::to_string(degree_sum) +
               " < " + std::to_string(bound));
    const int deficiency = m * size - degree_sum + tau;
    Record(steps.deficiency, deficiency <= 0,
           "T=" + MaskText(t) + ": deficiency " + std::to_string(deficiency));
  });
  steps.degree_bound.exhaustive = steps.deficiency.exhaustive = exhaustive;
  return steps;
}

MinimalityCheck CheckMinimalityInequality(const Graph& graph,
                                          const DegreeSpec& spec,
                                          const EnumerationLimits& limits) {
  RequireValidSpec(graph, spec);
  const int n = graph.num_vertices();
  if (n > limits.max_pair_vertices || n > 63) {
    throw CapExceededError("minimality check over " + std::to_string(n) +
                           " vertices exceeds the pair cap");
  }
  const int max_degree = graph.MaxDegree();
  for (int v = 0; v < n; ++v) {
    if (spec.f[v] < max_degree + 1) {
      throw InvalidArgumentError("minimality check needs f(v) >= max degree + 1");
    }
  }
  const internal::MaskGraph mg(graph);
  const std::vector<int> degrees = graph.Degrees();
  const auto eta = [&](uint64_t s, uint64_t t) {
    int tau = 0;
    mg.ForEachComponent(mg.full() & ~(s | t), [&](uint64_t c) {
      tau += (mg.EdgesParity(c, t) + internal::MaskGraph::Sum(spec.f, c)) & 1;
    });
    return internal::MaskGraph::Sum(spec.g, t) -
           (internal::MaskGraph::Sum(degrees, t) - mg.EdgesBetween(t, s)) -
           internal::MaskGraph::Sum(spec.f, s) + tau;
  };
  MinimalityCheck check;
  for (uint64_t s = 1; s <= mg.full() && n > 0; ++s) {
    const uint64_t free = mg.full() & ~s;
    uint64_t t = 0;
    do {
      const int base = eta(s, t);
      for (uint64_t rest = s; rest != 0; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        const int diff = eta(s & ~(uint64_t{1} << v), t) - base;
        const int to_t = mg.EdgesTo(v, t);
        const int stated = spec.f[v] + 2 * to_t - degrees[v] - 1;
        const int corrected = spec.f[v] - degrees[v] - 1;
        const std::string where = "S=" + MaskText(s) + ", T=" + MaskText(t) +
                                  ", v=" + std::to_string(v) + ": difference " +
                                  std::to_string(diff);
        Record(check.stated, diff >= stated && stated >= 0,
               where + " vs bound " + std::to_string(stated));
        Record(check.corrected, diff >= corrected && corrected >= 0,
               where + " vs bound " + std::to_string(corrected));
      }
      t = (t - free) & free;
    } while (t != 0);
    if (s == mg.full()) break;
  }
  return check;
}

CampaignConfig ParseCampaignConfig(std::istream& in) {
  CampaignConfig config;
  bool counts_given = false;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const std::string trimmed = Trim(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    const auto eq = trimmed.find('=');
    if (eq == std::string::npos) {
      throw ParseError(line_number, "expected key=value");
    }
    const std::string key = Trim(trimmed.substr(0, eq));
    const std::string value = Trim(trimmed.substr(eq + 1));
    const auto single = [&] {
      const std::vector<int> list = ParseIntList(value, line_number);
      if (list.size() != 1) throw ParseError(line_number, key + " takes one value");
      return list[0];
    };
    if (key == "mode") {
      if (value == "even") {
        config.mode = CampaignMode::kEven;
      } else if (value == "odd") {
        config.mode = CampaignMode::kOdd;
      } else if (value == "tightness") {
        config.mode = CampaignMode::kTightness;
      } else {
        throw ParseError(line_number, "mode must be even, odd or tightness");
      }
    } else if (key == "m") {
      config.m_values = ParseIntList(value, line_number);
    } else if (key == "instances") {
      config.instance_counts = ParseIntList(value, line_number);
      counts_given = true;
    } else if (key == "n_min") {
      config.n_min = single();
    } else if (key == "n_max") {
      config.n_max = single();
    } else if (key == "seed") {
      try {
        config.seed = std::stoull(value);
      } catch (const std::exception&) {
        throw ParseError(line_number, "seed must be a non-negative integer");
      }
    } else if (key == "proof_steps") {
      if (value == "true" || value == "1") {
        config.proof_steps = true;
      } else if (value == "false" || value == "0") {
        config.proof_steps = false;
      } else {
        throw ParseError(line_number, "proof_steps must be true or false");
      }
    } else if (key == "exhaustive_max_n") {
      config.sampling.exhaustive_max_vertices = single();
    } else if (key == "samples") {
      config.sampling.samples = single();
    } else {
      throw ParseError(line_number, "unknown key '" + key + "'");
    }
  }
  if (!counts_given && config.instance_counts.size() == 1) {
    config.instance_counts.assign(config.m_values.size(),
                                  config.instance_counts[0]);
  }
  return config;
}

CampaignConfig ReadCampaignConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  return ParseCampaignConfig(in);
}

void ValidateCampaignConfig(const CampaignConfig& config) {
  if (config.m_values.empty()) throw InvalidArgumentError("no m values given");
  for (int m : config.m_values) {
    if (m <= 0) throw InvalidArgumentError("m values must be positive");
    if (config.mode == CampaignMode::kEven && m % 2 != 0) {
      throw InvalidArgumentError("even campaign given odd m = " +
                                 std::to_string(m));
    }
    if (config.mode == CampaignMode::kOdd && m % 2 == 0) {
      throw InvalidArgumentError("odd campaign given even m = " +
                                 std::to_string(m));
    }
  }
  if (config.mode == CampaignMode::kTightness) return;
  if (config.instance_counts.size() != config.m_values.size() &&
      config.instance_counts.size() != 1) {
    throw InvalidArgumentError("instances must list one count, or one per m");
  }
  for (int count : config.instance_counts) {
    if (count < 0) throw InvalidArgumentError("instance counts must be >= 0");
  }
  if (config.n_min < 1 || config.n_min > config.n_max || config.n_max > 63) {
    throw InvalidArgumentError("need 1 <= n_min <= n_max <= 63");
  }
  for (int m : config.m_values) {
    const int smallest = m + 2;
    if (config.n_max < smallest ||
        (config.mode == CampaignMode::kOdd &&
         std::max(config.n_min, smallest) + 1 > config.n_max &&
         std::max(config.n_min, smallest) % 2 != 0)) {
      throw InvalidArgumentError("n range admits no instance for m = " +
                                 std::to_string(m));
    }
  }
  if (config.sampling.samples < 0) {
    throw InvalidArgumentError("samples must be >= 0");
  }
}

bool CampaignSummary::ok() const {
  return defects == 0 && !repro && even_steps.case_one.violations == 0 &&
         even_steps.case_two.violations == 0 &&
         even_steps.deficiency.violations == 0 &&
         odd_steps.degree_bound.violations == 0 &&
         odd_steps.deficiency.violations == 0;
}

CampaignSummary RunCampaign(const CampaignConfig& config) {
  ValidateCampaignConfig(config);
  CampaignSummary summary;
  summary.config = config;

  if (config.mode == CampaignMode::kTightness) {
    for (int m : config.m_values) {
      TightnessResult result = RunTightness(m);
      if (result.even_family && !result.confirmed) ++summary.defects;
      summary.tightness.push_back(result);
    }
    return summary;
  }

  const bool even = config.mode == CampaignMode::kEven;
  for (size_t mi = 0; mi < config.m_values.size(); ++mi) {
    const int m = config.m_values[mi];
    const int count = config.instance_counts.size() == 1
                          ? config.instance_counts[0]
                          : config.instance_counts[mi];
    int low = std::max(config.n_min, m + 2);
    int high = config.n_max;
    if (!even) {
      low += low % 2;
      high -= high % 2;
    }
    for (int i = 0; i < count; ++i) {
      const uint64_t seed = Mix(config.seed, static_cast<uint64_t>(m), i);
      std::mt19937_64 rng(seed);
      int n = std::uniform_int_distribution<int>(low, high)(rng);
      if (!even) n -= n % 2;
      std::ostringstream id;
      id << ModeName(config.mode) << "-m" << m << "-" << i;
      const Graph graph = even ? RandomConnectedWithMinDegree(n, m, m + 1, seed)
                               : RandomKEdgeConnected(n, m + 1, seed);
      TheoremReport report = even ? CheckTheoremEven(graph, m, id.str())
                                  : CheckTheoremOdd(graph, m, id.str());
      switch (report.outcome) {
        case TheoremReport::Outcome::kConfirmed:
          ++summary.confirmed;
          break;
        case TheoremReport::Outcome::kHypothesesFail:
          ++summary.hypothesis_misses;
          break;
        case TheoremReport::Outcome::kOrderParityProbe:
          ++summary.order_parity_probes;
          break;
        case TheoremReport::Outcome::kDefect:
          ++summary.defects;
          break;
      }
      if (config.proof_steps && report.hypotheses_hold) {
        SetSampling sampling = config.sampling;
        sampling.seed = seed;
        if (even) {
          const EvenProofSteps steps = CheckEvenProofSteps(graph, m, sampling);
          summary.even_steps.case_one.Merge(steps.case_one);
          summary.even_steps.case_two.Merge(steps.case_two);
          summary.even_steps.deficiency.Merge(steps.deficiency);
        } else if (n % 2 == 0) {
          const OddProofSteps steps = CheckOddProofSteps(graph, m, sampling);
          summary.odd_steps.degree_bound.Merge(steps.degree_bound);
          summary.odd_steps.deficiency.Merge(steps.deficiency);
        }
      }
      const bool defect = report.outcome == TheoremReport::Outcome::kDefect;
      summary.reports.push_back(std::move(report));
      if (defect) {
        const std::vector<int> g(n, m);
        summary.repro = ReproBundle{
            id.str(), seed, m,
            FormatGraph(graph, {"repro bundle " + id.str(),
                                "seed " + std::to_string(seed)}),
            CapUpperBounds(graph, g).value_or(DegreeSpec{g, g})};
        return summary;
      }
    }
  }
  return summary;
}

std::string SummaryTable(const CampaignSummary& summary) {
  std::ostringstream out;
  const CampaignConfig& config = summary.config;
  out << "campaign mode=" << ModeName(config.mode) << " seed=" << config.seed
      << "\n";
  if (config.mode == CampaignMode::kTightness) {
    out << "  m  order  lambda  min_deg  delta(hubs)  expected  factor@m+2  "
           "factor@m  status\n";
    for (const TightnessResult& r : summary.tightness) {
      char row[160];
      std::snprintf(row, sizeof row, "%3d  %5d  %6d  %7d  %11d  %8d  %10s  %8s  %s\n",
                    r.m, r.order, r.lambda, r.min_degree, r.hub_deficiency,
                    r.expected_hub_deficiency,
                    r.factor_at_m_plus_2 ? "yes" : "no",
                    r.factor_at_m ? "yes" : "no",
                    !r.even_family ? "probe"
                                   : (r.confirmed ? "confirmed" : "DEFECT"));
      out << row;
    }
  } else {
    out << "  instances:        " << summary.reports.size() << "\n"
        << "  confirmed:        " << summary.confirmed << "\n"
        << "  hypothesis miss:  " << summary.hypothesis_misses << "\n"
        << "  order-parity:     " << summary.order_parity_probes << "\n"
        << "  defects:          " << summary.defects << "\n";
    const auto tally = [&](const std::string& name, const InequalityTally& t) {
      if (t.checked == 0) return;
      out << "  " << name << ": " << t.checked << " sets, " << t.violations
          << " violations" << (t.exhaustive ? "" : " (sampled)") << "\n";
      for (const std::string& e : t.examples) out << "    " << e << "\n";
    };
    tally("even case-one     ", summary.even_steps.case_one);
    tally("even case-two     ", summary.even_steps.case_two);
    tally("even deficiency   ", summary.even_steps.deficiency);
    tally("odd degree bound  ", summary.odd_steps.degree_bound);
    tally("odd deficiency    ", summary.odd_steps.deficiency);
  }
  if (summary.repro) {
    out << "  repro bundle for " << summary.repro->instance_id << ":\n"
        << summary.repro->graph_text;
  }
  out << (summary.ok() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string SummaryJson(const CampaignSummary& summary) {
  nlohmann::json out;
  const CampaignConfig& config = summary.config;
  out["mode"] = ModeName(config.mode);
  out["seed"] = config.seed;
  out["m"] = config.m_values;
  out["ok"] = summary.ok();
  out["counts"] = {{"instances", summary.reports.size()},
                   {"confirmed", summary.confirmed},
                   {"hypothesis_misses", summary.hypothesis_misses},
                   {"order_parity_probes", summary.order_parity_probes},
                   {"defects", summary.defects}};
  out["proof_steps"] = {
      {"even_case_one", TallyJson(summary.even_steps.case_one)},
      {"even_case_two", TallyJson(summary.even_steps.case_two)},
      {"even_deficiency", TallyJson(summary.even_steps.deficiency)},
      {"odd_degree_bound", TallyJson(summary.odd_steps.degree_bound)},
      {"odd_deficiency", TallyJson(summary.odd_steps.deficiency)}};
  nlohmann::json records = nlohmann::json::array();
  for (const TheoremReport& r : summary.reports) {
    nlohmann::json hypotheses = nlohmann::json::object();
    for (const auto& [name, holds] : r.hypotheses) hypotheses[name] = holds;
    nlohmann::json violations = nlohmann::json::array();
    for (const FactorViolation& v : r.violations) {
      violations.push_back({{"vertex", v.vertex},
                            {"degree", v.degree},
                            {"kind", ViolationKindName(v.kind)}});
    }
    records.push_back({{"id", r.instance_id},
                       {"m", r.m},
                       {"order", r.order},
                       {"lambda", r.lambda},
                       {"min_degree", r.min_degree},
                       {"hypotheses", hypotheses},
                       {"conclusion_checked", r.conclusion_checked},
                       {"factor_found", r.factor.has_value()},
                       {"factor_edges", r.factor ? r.factor->edges.size() : 0},
                       {"violations", violations},
                       {"outcome", ToString(r.outcome)},
                       {"seconds", r.seconds}});
  }
  out["instances"] = records;
  nlohmann::json tightness = nlohmann::json::array();
  for (const TightnessResult& r : summary.tightness) {
    tightness.push_back({{"m", r.m},
                         {"even_family", r.even_family},
                         {"order", r.order},
                         {"lambda", r.lambda},
                         {"min_degree", r.min_degree},
                         {"hub_deficiency", r.hub_deficiency},
                         {"expected_hub_deficiency", r.expected_hub_deficiency},
                         {"factor_at_m_plus_2", r.factor_at_m_plus_2},
                         {"factor_at_m", r.factor_at_m},
                         {"confirmed", r.confirmed}});
  }
  out["tightness"] = tightness;
  if (summary.repro) {
    out["repro"] = {{"id", summary.repro->instance_id},
                    {"seed", summary.repro->seed},
                    {"m", summary.repro->m},
                    {"graph", summary.repro->graph_text},
                    {"g", summary.repro->spec.g},
                    {"f", summary.repro->spec.f}};
  }
  return out.dump(2);
}

}  // namespace pfk
