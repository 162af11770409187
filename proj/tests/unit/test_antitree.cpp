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

#include <numeric>

#include "antiembed/antitree.hpp"
#include "antiembed/errors.hpp"
#include "antiembed/generators.hpp"

namespace antiembed {
namespace {

AntiTree out_star(int k) {
  std::vector<Arc> arcs;
  for (int i = 1; i <= k; ++i) arcs.push_back({0, i});
  return validate_antitree(Digraph(k + 1, arcs));
}

// Double star: u=0 -> v=1, u -> 2, u -> 3, 4 -> v, 5 -> v.
AntiTree double_star() { return make_antitree(6, {{0, 1}, {0, 2}, {0, 3}, {4, 1}, {5, 1}}); }

TEST(AntiTree, SignsOfAPath) {
  const AntiTree t = make_antitree(3, {{0, 1}, {2, 1}});
  EXPECT_EQ(t.sign(0), Sign::Plus);
  EXPECT_EQ(t.sign(1), Sign::Minus);
  EXPECT_EQ(t.sign(2), Sign::Plus);
  EXPECT_EQ(t.k(), 2);
}

TEST(AntiTree, DirectedPathIsRejectedWithWitness) {
  try {
    make_antitree(3, {{0, 1}, {1, 2}});
    FAIL() << "expected NotAntidirected";
  } catch (const NotAntidirected& ex) {
    EXPECT_EQ(ex.witness, (std::array<VertexId, 3>{0, 1, 2}));
  }
}

TEST(AntiTree, RejectsNonTrees) {
  EXPECT_THROW(make_antitree(4, {{0, 1}, {2, 1}}), NotATree);
  EXPECT_THROW(make_antitree(3, {{0, 1}, {0, 2}, {2, 1}}), Error);
}

TEST(AntiTree, OutStarSidesAndDegrees) {
  const AntiTree t = out_star(5);
  EXPECT_EQ(t.plus_vertices(), (std::vector<VertexId>{0}));
  EXPECT_EQ(t.minus_vertices().size(), 5U);
  const DegreeStats ds = degree_stats(t);
  EXPECT_EQ(ds.delta, 5);
  EXPECT_EQ(ds.delta2, 1);
  EXPECT_EQ(ds.argmax_u, 0);
}

TEST(AntiTree, DoubleStarDegrees) {
  const DegreeStats ds = degree_stats(double_star());
  EXPECT_EQ(ds.delta, 3);
  EXPECT_EQ(ds.delta2, 3);
  EXPECT_EQ(ds.argmax_u, 0);
  EXPECT_EQ(ds.argmax2_v, 1);
}

TEST(AntiTree, PathDegrees) {
  const AntiTree p = make_antitree(5, {{0, 1}, {2, 1}, {2, 3}, {4, 3}});
  const DegreeStats ds = degree_stats(p);
  EXPECT_EQ(ds.delta, 2);
  EXPECT_EQ(ds.delta2, 2);
}

TEST(AntiTree, RootedViewOfAPath) {
  const AntiTree p = make_antitree(4, {{0, 1}, {2, 1}, {2, 3}});
  const RootedAntiTree r = rooted_view(p, 0);
  EXPECT_EQ(r.parent, (std::vector<VertexId>{-1, 0, 1, 2}));
  EXPECT_EQ(std::accumulate(r.depth.begin(), r.depth.end(), 0), 3 * 4 / 2);
  const RootedAntiTree s = rooted_view(out_star(4), 0);
  for (VertexId leaf = 1; leaf <= 4; ++leaf) {
    EXPECT_EQ(s.parent[leaf], 0);
    EXPECT_EQ(s.depth[leaf], 1);
  }
}

TEST(AntiTree, PathsAndDistances) {
  const AntiTree t = double_star();
  EXPECT_EQ(tree_path(t, 2, 4), (std::vector<VertexId>{2, 0, 1, 4}));
  const auto dist = tree_distances(t, 2);
  EXPECT_EQ(dist[5], 3);
}

TEST(AntiTree, CaterpillarDecomposition) {
  const AntiTree path = make_antitree(4, {{0, 1}, {2, 1}, {2, 3}});
  const SpineDecomposition sd = caterpillar_decompose(path);
  EXPECT_EQ(sd.spine.size(), 4U);
  for (const auto& l : sd.leaves_at) EXPECT_TRUE(l.empty());

  const SpineDecomposition ds = caterpillar_decompose(double_star());
  ASSERT_EQ(ds.spine.size(), 4U);
  EXPECT_EQ(ds.spine[1], 0);
  EXPECT_EQ(ds.spine[2], 1);
  EXPECT_EQ(ds.leaves_at[0].size() + ds.leaves_at[1].size(), 2U);
  EXPECT_EQ(ds.final_vertex, ds.spine.back());
}

TEST(AntiTree, SpiderIsNotACaterpillar) {
  // Centre 0 with three legs of length two.
  const AntiTree spider = make_antitree(7, {{0, 1}, {2, 1}, {0, 3}, {4, 3}, {0, 5}, {6, 5}});
  EXPECT_FALSE(is_caterpillar(spider));
  EXPECT_THROW(caterpillar_decompose(spider), NotACaterpillar);
  EXPECT_TRUE(is_caterpillar(double_star()));
}

TEST(AntiTree, DoubleBroomMembership) {
  const DoubleBroom b = double_broom(double_star(), 0, 1);
  EXPECT_EQ(b.vertices.size(), 6U);
  // Arc 6 -> 2 hangs a vertex at distance two from u.
  const AntiTree bigger = make_antitree(7, {{0, 1}, {0, 2}, {0, 3}, {4, 1}, {5, 1}, {6, 2}});
  const DoubleBroom c = double_broom(bigger, 0, 1);
  EXPECT_EQ(c.vertices.size(), 6U);
  EXPECT_FALSE(c.member[6]);
}

TEST(AntiTree, DoubleBroomOfPathWithPendants) {
  // u=0 - x=1 - y=2 - v=3 with leaves 4 on u and 5 on v.
  const AntiTree t = make_antitree(6, {{0, 1}, {2, 1}, {2, 3}, {0, 4}, {5, 3}});
  const DoubleBroom b = double_broom(t, 0, 3);
  EXPECT_EQ(b.vertices.size(), 6U);
  EXPECT_EQ(b.path_uv, (std::vector<VertexId>{0, 1, 2, 3}));
}

TEST(AntiTree, ClassCountsAgreeWithHandCount) {
  // k=3: the path and the two stars. k=4: path, star and fork, each with two sign choices.
  const std::vector<std::size_t> expected{1, 2, 3, 6};
  for (int k = 1; k <= 4; ++k) EXPECT_EQ(enumerate_antitrees(k).size(), expected[k - 1]) << "k=" << k;
}

TEST(AntiTree, CanonicalFormIgnoresLabels) {
  const AntiTree a = make_antitree(3, {{0, 1}, {2, 1}});
  const AntiTree b = make_antitree(3, {{1, 0}, {1, 2}});
  const AntiTree c = make_antitree(3, {{2, 0}, {1, 0}});
  EXPECT_EQ(canonical_form(a), canonical_form(c));
  EXPECT_NE(canonical_form(a), canonical_form(b));
}

TEST(AntiTree, ReverseSwapsSides) {
  const AntiTree t = reverse_tree(out_star(3));
  EXPECT_EQ(t.sign(0), Sign::Minus);
  EXPECT_EQ(t.minus_vertices(), (std::vector<VertexId>{0}));
}

TEST(AntiTree, InducedSubtree) {
  const std::vector<VertexId> keep{0, 1, 4};
  const InducedTree it = induced_subtree(double_star(), keep);
  EXPECT_EQ(it.tree.k(), 2);
  EXPECT_EQ(it.from_original[2], -1);
}

TEST(AntiTree, RandomGeneratorsProduceKArcTrees) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    EXPECT_EQ(random_antitree(9, seed).k(), 9);
    EXPECT_TRUE(is_caterpillar(random_caterpillar(7, seed)));
    EXPECT_EQ(random_two_hub_antitree(13, seed).k(), 13);
  }
}

}  // namespace
}  // namespace antiembed
