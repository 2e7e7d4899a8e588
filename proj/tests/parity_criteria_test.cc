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

#include "pfk/parity_criteria.h"

#include <bit>
#include <random>

#include "gtest/gtest.h"
#include "pfk/errors.h"
#include "pfk/factor_finder.h"
#include "pfk/generators.h"
#include "testing/oracles.h"

namespace pfk {
namespace {

using Kind = SpecViolation::Kind;

std::vector<int> Constant(const Graph& g, int value) {
  return std::vector<int>(g.num_vertices(), value);
}

TEST(ValidateSpecTest, Examples) {
  const Graph k4 = CompleteGraph(4);
  EXPECT_TRUE(ValidateSpec(k4, DegreeSpec::Constant(4, 2, 2)).empty());

  DegreeSpec parity = DegreeSpec::Constant(4, 2, 2);
  parity.g[1] = 1;
  EXPECT_EQ(ValidateSpec(k4, parity),
            (std::vector<SpecViolation>{{1, Kind::kParity}}));

  DegreeSpec order = DegreeSpec::Constant(4, 2, 2);
  order.g[3] = 3;
  order.f[3] = 1;
  EXPECT_EQ(ValidateSpec(k4, order),
            (std::vector<SpecViolation>{{3, Kind::kOrder}}));

  EXPECT_THROW(ValidateSpec(k4, DegreeSpec::Constant(3, 0, 0)),
               InvalidArgumentError);
}

TEST(TauTest, Examples) {
  const Graph k1 = Graph::Build(1, {});
  EXPECT_EQ(Tau(k1, VertexSet(1), VertexSet(1), DegreeSpec::Constant(1, 1, 1),
                TauRule::kFParity),
            1);

  const HubbedCliques family = TightnessFamily(2);
  const DegreeSpec four = DegreeSpec::Constant(15, 4, 4);
  EXPECT_EQ(Tau(family.graph, VertexSet(15), family.hubs, four, TauRule::kGParity), 3);
  EXPECT_EQ(Tau(family.graph, VertexSet(15), family.hubs, four, TauRule::kFParity), 3);
  for (const Component& c :
       OddComponents(family.graph, VertexSet(15), family.hubs, four,
                     TauRule::kGParity)) {
    EXPECT_EQ(c.edges_to_t, 3);
  }

  const Graph star = StarGraph(3);
  EXPECT_EQ(Tau(star, VertexSet(4), VertexSet::Of(4, {0}),
                DegreeSpec::Constant(4, 1, 1), TauRule::kFParity),
            0);
}

TEST(TauTest, RejectsOverlap) {
  const Graph k3 = CompleteGraph(3);
  EXPECT_THROW(Tau(k3, VertexSet::Of(3, {0}), VertexSet::Of(3, {0}),
                   DegreeSpec::Constant(3, 0, 0), TauRule::kFParity),
               InvalidArgumentError);
}

TEST(EtaTest, Examples) {
  const DegreeSpec one2 = DegreeSpec::Constant(2, 1, 1);
  EXPECT_EQ(Eta(CompleteGraph(2), VertexSet(2), VertexSet(2), one2), 0);
  EXPECT_EQ(Eta(Graph::Build(1, {}), VertexSet(1), VertexSet(1),
                DegreeSpec::Constant(1, 1, 1)),
            1);
  EXPECT_EQ(Eta(CompleteGraph(3), VertexSet(3), VertexSet::Of(3, {0}),
                DegreeSpec::Constant(3, 2, 2)),
            0);
}

TEST(EtaTest, RejectsInvalidSpec) {
  EXPECT_THROW(Eta(CompleteGraph(2), VertexSet(2), VertexSet(2),
                   DegreeSpec::Constant(2, 1, 2)),
               InvalidArgumentError);
}

TEST(LovaszExistsTest, Examples) {
  EXPECT_TRUE(LovaszExists(CompleteGraph(4), DegreeSpec::Constant(4, 1, 1)).exists);

  const ExistenceVerdict k1 =
      LovaszExists(Graph::Build(1, {}), DegreeSpec::Constant(1, 1, 1));
  ASSERT_FALSE(k1.exists);
  ASSERT_TRUE(k1.certificate.has_value());
  EXPECT_TRUE(k1.certificate->s.Empty());
  EXPECT_TRUE(k1.certificate->t.Empty());
  EXPECT_EQ(k1.certificate->value, 1);

  EXPECT_TRUE(LovaszExists(PetersenGraph(), DegreeSpec::Constant(10, 2, 2)).exists);
}

TEST(LovaszExistsTest, CapIsEnforced) {
  EnumerationLimits limits;
  limits.max_pair_vertices = 4;
  EXPECT_THROW(LovaszExists(CompleteGraph(5), DegreeSpec::Constant(5, 0, 0), limits),
               CapExceededError);
  limits.max_subset_vertices = 4;
  EXPECT_THROW(MinParityExists(CompleteGraph(5), std::vector<int>(5, 0), limits),
               CapExceededError);
}

TEST(MinDegreeDeficiencyTest, Examples) {
  const HubbedCliques family = TightnessFamily(2);
  EXPECT_EQ(MinDegreeDeficiency(family.graph, family.hubs, Constant(family.graph, 4)),
            6);

  // T empty: components with odd g(V(C)).
  const Graph two_parts = Graph::Build(5, {{0, 1}, {2, 3}, {3, 4}});
  EXPECT_EQ(MinDegreeDeficiency(two_parts, VertexSet(5), Constant(two_parts, 1)), 1);

  EXPECT_EQ(MinDegreeDeficiency(StarGraph(3), VertexSet::Of(4, {0}),
                                Constant(StarGraph(3), 1)),
            -2);
}

TEST(MinParityExistsTest, Examples) {
  EXPECT_TRUE(MinParityExists(CompleteGraph(4), std::vector<int>(4, 1)).exists);
  EXPECT_TRUE(MinParityExists(PetersenGraph(), std::vector<int>(10, 2)).exists);
}

TEST(MinParityExistsTest, HubbedCliquesCertificateIsTheTrueMaximizer) {
  const HubbedCliques family = TightnessFamily(2);
  const std::vector<int> g = Constant(family.graph, 4);
  const ExistenceVerdict verdict = MinParityExists(family.graph, g);
  ASSERT_FALSE(verdict.exists);

  // Oracle: scan every T for the maximum and its smallest encoding.
  int best = -1 << 30;
  uint64_t arg = 0;
  for (uint64_t t = 0; t < (uint64_t{1} << 15); ++t) {
    const int value = testing::OracleDelta(family.graph, t, g);
    if (value > best) {
      best = value;
      arg = t;
    }
  }
  EXPECT_EQ(best, 12);
  EXPECT_EQ(verdict.certificate->value, best);
  EXPECT_EQ(verdict.certificate->t.ToMask(), arg);
  // The hub set is a witness, not the maximizer.
  EXPECT_NE(verdict.certificate->t, family.hubs);
}

TEST(CorollaryExistsTest, Examples) {
  EXPECT_TRUE(CorollaryExists(PetersenGraph(), 2, FactorParity::kEven).exists);
  EXPECT_TRUE(CorollaryExists(CompleteGraph(2), 1, FactorParity::kOdd).exists);
  EXPECT_FALSE(
      CorollaryExists(TightnessFamily(2).graph, 4, FactorParity::kEven).exists);
  EXPECT_THROW(CorollaryExists(PetersenGraph(), 3, FactorParity::kEven),
               InvalidArgumentError);
  EXPECT_THROW(CorollaryExists(PetersenGraph(), 2, FactorParity::kOdd),
               InvalidArgumentError);
  EXPECT_THROW(CorollaryExists(PetersenGraph(), 0, FactorParity::kEven),
               InvalidArgumentError);
}

TEST(ClimbTest, ReachesAPositiveWitnessOnHubbedCliques) {
  const HubbedCliques family = TightnessFamily(4);
  const std::vector<int> g = Constant(family.graph, 6);
  const DeficiencyCertificate climbed =
      ClimbMinDegreeDeficiency(family.graph, g, family.hubs);
  EXPECT_GE(climbed.value, 10);
  EXPECT_EQ(climbed.value, MinDegreeDeficiency(family.graph, climbed.t, g));
}

TEST(MaxEtaTest, WorkerCountDoesNotChangeTheCertificate) {
  const Graph g = RandomSimpleGraph(11, 0.35, 3);
  std::mt19937_64 rng(5);
  const DegreeSpec spec = testing::RandomSpecWithinDegree(g, rng);
  EnumerationLimits one;
  one.workers = 1;
  EnumerationLimits many;
  many.workers = 5;
  const DeficiencyCertificate a = MaxEta(g, spec, one);
  const DeficiencyCertificate b = MaxEta(g, spec, many);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.s, b.s);
  EXPECT_EQ(a.t, b.t);
}

// Exhaustive over all graphs n <= 4, sampled up to n = 7: certificates match
// an oracle scan (value and smallest encoding), tau is bounded by the number
// of components, and the Lovász verdict agrees with factor search.
TEST(ParityCriteriaPropertyTest, LovaszAgreesWithOracles) {
  std::mt19937_64 rng(17);
  const auto check = [&](const Graph& g) {
    const int n = g.num_vertices();
    const DegreeSpec spec = testing::RandomSpecWithinDegree(g, rng);
    const DeficiencyCertificate cert = MaxEta(g, spec);
    int best = -1 << 30;
    uint64_t best_s = 0, best_t = 0;
    const uint64_t full = (uint64_t{1} << n) - 1;
    for (uint64_t s = 0; s <= full; ++s) {
      for (uint64_t t = 0; t <= full; ++t) {
        if (s & t) continue;
        const int value = testing::OracleEta(g, s, t, spec);
        if (value > best) {
          best = value;
          best_s = s;
          best_t = t;
        }
        if (n <= 5) {
          const VertexSet vs = VertexSet::FromMask(n, s);
          const VertexSet vt = VertexSet::FromMask(n, t);
          EXPECT_LE(Tau(g, vs, vt, spec, TauRule::kFParity),
                    static_cast<int>(ComponentsAfterRemoval(g, vs.Union(vt)).size()));
          EXPECT_EQ(Tau(g, vs, vt, spec, TauRule::kFParity),
                    Tau(g, vs, vt, spec, TauRule::kGParity));
        }
      }
    }
    EXPECT_EQ(cert.value, best);
    EXPECT_EQ(cert.s.ToMask(), best_s);
    EXPECT_EQ(cert.t.ToMask(), best_t);
    EXPECT_EQ(static_cast<int>(cert.odd_components.size()),
              Tau(g, cert.s, cert.t, spec, TauRule::kFParity));
    EXPECT_EQ(LovaszExists(g, spec).exists, testing::OracleFactorExists(g, spec));
  };
  for (int n = 1; n <= 4; ++n) {
    SmallGraphEnumeration(n).ForEach(check);
  }
  for (int trial = 0; trial < 150; ++trial) {
    const int n = std::uniform_int_distribution<int>(5, 7)(rng);
    check(RandomSimpleGraph(n, 0.5, rng()));
  }
}

// Corollary and min-degree criteria coincide for constant g; the min-degree
// criterion agrees with the Lovász criterion under the degree cap; the
// necessity inequality holds against every factor found by brute force.
TEST(ParityCriteriaPropertyTest, SpecialisationsAreCoherent) {
  std::mt19937_64 rng(23);
  const auto check = [&](const Graph& g) {
    const int n = g.num_vertices();
    const int m = std::uniform_int_distribution<int>(1, 4)(rng);
    const FactorParity parity = m % 2 == 0 ? FactorParity::kEven : FactorParity::kOdd;
    const std::vector<int> constant(n, m);
    EXPECT_EQ(CorollaryExists(g, m, parity).exists,
              MinParityExists(g, constant).exists);
    for (uint64_t t = 0; t < (uint64_t{1} << n); t += 1 + (n > 6) * 3) {
      const VertexSet vt = VertexSet::FromMask(n, t);
      EXPECT_EQ(CorollaryTau(g, vt, parity),
                Tau(g, VertexSet(n), vt, DegreeSpec{constant, constant},
                    TauRule::kGParity));
    }

    std::vector<int> lower(n);
    for (int v = 0; v < n; ++v) {
      lower[v] = std::uniform_int_distribution<int>(0, g.Degree(v) + 1)(rng);
    }
    const bool min_degree = MinParityExists(g, lower).exists;
    const auto capped = CapUpperBounds(g, lower);
    EXPECT_EQ(min_degree, capped && LovaszExists(g, *capped).exists);

    if (!capped || g.num_edges() > kBruteForceFactorMaxEdges) return;
    const auto factor = BruteForceFactor(g, *capped);
    EXPECT_EQ(factor.has_value(), min_degree);
    if (!factor) return;
    for (uint64_t t = 0; t < (uint64_t{1} << n); ++t) {
      const VertexSet vt = VertexSet::FromMask(n, t);
      int graph_degrees = 0, factor_degrees = 0, lower_sum = 0;
      for (int v : vt.Members()) {
        graph_degrees += g.Degree(v);
        factor_degrees += factor->degrees[v];
        lower_sum += lower[v];
      }
      const int tau = Tau(g, VertexSet(n), vt, DegreeSpec{lower, lower},
                          TauRule::kGParity);
      EXPECT_GE(graph_degrees - tau, factor_degrees);
      EXPECT_GE(factor_degrees, lower_sum);
    }
  };
  for (int n = 1; n <= 5; ++n) SmallGraphEnumeration(n).ForEach(check);
  for (int trial = 0; trial < 100; ++trial) {
    check(RandomSimpleGraph(std::uniform_int_distribution<int>(6, 8)(rng), 0.45,
                            rng()));
  }
}

}  // namespace
}  // namespace pfk
