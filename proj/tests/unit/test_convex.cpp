// Copyright 2026 The antiembed Authors
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


#include <gtest/gtest.h>

#include <algorithm>

#include "antiembed/antitree.hpp"
#include "antiembed/convex.hpp"
#include "antiembed/embedding.hpp"
#include "antiembed/errors.hpp"
#include "antiembed/generators.hpp"
#include "antiembed/oracle.hpp"

namespace antiembed {
namespace {

std::vector<Arc> sorted(std::vector<Arc> v) {
  std::sort(v.begin(), v.end());
  return v;
}

Digraph bidirected_complete(int n) {
  std::vector<Arc> arcs;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = 0; b < n; ++b) {
      if (a != b) arcs.push_back({a, b});
    }
  }
  return Digraph(n, arcs);
}

std::vector<AntiTree> caterpillars(int k) {
  std::vector<AntiTree> out;
  for (AntiTree& t : enumerate_antitrees(k)) {
    if (is_caterpillar(t)) out.push_back(std::move(t));
  }
  return out;
}

TEST(Convex, SideSets) {
  const Digraph d(4, {{0, 2}, {0, 1}});
  const ConvexDigraph c = ConvexDigraph::with_id_order(d);
  const SideSets a = side_sets(c, {0, 2});
  EXPECT_EQ(a.left, (std::vector<VertexId>{1}));
  EXPECT_EQ(a.right, (std::vector<VertexId>{3}));
  const SideSets b = side_sets(c, {0, 1});
  EXPECT_TRUE(b.left.empty());
  EXPECT_EQ(b.right, (std::vector<VertexId>{2, 3}));
}

TEST(Convex, SideSetsAreMirrored) {
  const ConvexDigraph c = ConvexDigraph::with_random_order(bidirected_complete(6), 3);
  for (VertexId x = 0; x < 6; ++x) {
    for (VertexId y = 0; y < 6; ++y) {
      if (x == y) continue;
      EXPECT_EQ(side_sets(c, {x, y}).left, side_sets(c, {y, x}).right);
    }
  }
}

TEST(Convex, RejectsBadOrder) {
  EXPECT_THROW(ConvexDigraph(Digraph(3), {0, 1, 1}), InvalidInput);
}

TEST(GoodArcs, SingleArcMakesEveryArcGood) {
  const AntiTree arc = make_antitree(2, {{0, 1}});
  const Digraph d = gen_random_arcs(6, 11, 9);
  const ConvexDigraph c = ConvexDigraph::with_id_order(d);
  EXPECT_EQ(sorted(good_arcs(c, arc).final_good()), sorted(d.arcs()));
  EXPECT_EQ(sorted(good_arcs_mindeg(c, arc).final_good()), sorted(d.arcs()));
  EXPECT_EQ(good_arcs_mindeg(c, arc).lower_bound(), d.size());
}

TEST(GoodArcs, BoundsAndSoundnessOnRandomHosts) {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const int n = 2 + static_cast<int>(seed % 6);
    const int k = 1 + static_cast<int>(seed % 4);
    const Digraph d = gen_random_arcs(n, static_cast<int>((seed * 7) % (n * (n - 1) + 1)), seed);
    const AntiTree t = random_caterpillar(k, seed);
    const ConvexDigraph c = ConvexDigraph::with_random_order(d, seed);
    const auto brute = sorted(brute_force_good_arcs(c, t));
    for (GoodArcVariant v : {GoodArcVariant::Density, GoodArcVariant::MinDegree}) {
      const GoodArcTable tab = compute_good_arcs(c, t, v);
      const auto found = tab.final_good();
      EXPECT_GE(static_cast<long>(found.size()), tab.lower_bound());
      for (const Arc& a : found) {
        ASSERT_TRUE(std::binary_search(brute.begin(), brute.end(), a)) << "seed " << seed;
        const Embedding e = tab.witness(a);
        ASSERT_TRUE(is_valid_embedding(t.digraph(), d, e));
        const SpineDecomposition& sd = tab.spine();
        EXPECT_EQ(e.map[sd.final_arc.tail], a.tail);
        EXPECT_EQ(e.map[sd.final_arc.head], a.head);
      }
    }
  }
}

// The DP set can be strictly smaller than the set of good arcs.
TEST(GoodArcs, DynamicProgramMissesAGoodArcOnKnownInstance) {
  const Digraph d(4, {{0, 1}, {0, 3}, {2, 3}});
  const AntiTree t = make_antitree(4, {{0, 1}, {2, 1}, {2, 3}});
  const ConvexDigraph c = ConvexDigraph::with_id_order(d);
  EXPECT_EQ(good_arcs(c, t).final_good().size(), 0U);
  EXPECT_EQ(brute_force_good_arcs(c, t).size(), 1U);
}

TEST(GoodArcs, NonCaterpillarRejected) {
  const AntiTree spider = make_antitree(7, {{0, 1}, {2, 1}, {0, 3}, {4, 3}, {0, 5}, {6, 5}});
  const ConvexDigraph c = ConvexDigraph::with_id_order(bidirected_complete(7));
  EXPECT_THROW(good_arcs(c, spider), NotACaterpillar);
}

TEST(EmbedCaterpillar, CompleteHostTakesEveryCaterpillar) {
  for (int k = 1; k <= 5; ++k) {
    const Digraph d = bidirected_complete(k + 1);
    for (const AntiTree& t : caterpillars(k)) {
      const Embedding e = embed_caterpillar(d, t);
      EXPECT_TRUE(is_valid_embedding(t.digraph(), d, e));
    }
  }
}

TEST(EmbedCaterpillar, SmallHostsMatchOracle) {
  for (int n = 2; n <= 4; ++n) {
    enumerate_digraphs(n, 1, [&](const Digraph& d) {
      for (int k = 1; k <= 3; ++k) {
        if (d.size() <= (k - 1) * n) break;
        for (const AntiTree& t : caterpillars(k)) {
          EXPECT_EQ(oracle_embed(d, t).verdict, Verdict::Embeds);
          EXPECT_TRUE(is_valid_embedding(t.digraph(), d, embed_caterpillar(d, t)));
        }
      }
      return true;
    });
  }
}

TEST(EmbedCaterpillar, DensityViolationIsRefused) {
  const AntiTree t = make_antitree(3, {{0, 1}, {2, 1}});
  EXPECT_THROW(embed_caterpillar(Digraph(3, {{0, 1}, {1, 2}, {2, 0}}), t), HypothesisViolated);
}

TEST(EmbedCaterpillar, RandomOrderStillValid) {
  const Digraph d = gen_random_dense(8, 3, 4);
  for (const AntiTree& t : caterpillars(3)) {
    CaterpillarOptions opt;
    opt.random_order_seed = 77;
    EXPECT_TRUE(is_valid_embedding(t.digraph(), d, embed_caterpillar(d, t, opt)));
  }
}

TEST(EmbedCaterpillarMinDegree, FanoIncidence) {
  const Digraph fano = gen_incidence(2);
  ASSERT_EQ(fano.order(), 14);
  ASSERT_EQ(fano.size(), 21);
  int checked = 0;
  for (const AntiTree& t : caterpillars(3)) {
    if (t.plus_vertices().size() > t.minus_vertices().size()) continue;
    ASSERT_EQ(oracle_embed(fano, t).verdict, Verdict::Embeds);
    EXPECT_TRUE(is_valid_embedding(t.digraph(), fano, embed_caterpillar_mindeg(fano, t)));
    ++checked;
  }
  EXPECT_GT(checked, 0);
}

TEST(EmbedCaterpillarMinDegree, ReversedFanoUsesReversal) {
  const Digraph rf = reverse(gen_incidence(2));
  for (const AntiTree& t : caterpillars(3)) {
    if (t.plus_vertices().size() < t.minus_vertices().size()) continue;
    EXPECT_TRUE(is_valid_embedding(t.digraph(), rf, embed_caterpillar_mindeg(rf, t)));
  }
}

}  // namespace
}  // namespace antiembed
