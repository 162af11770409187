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

#include "antiembed/digraph.hpp"
#include "antiembed/errors.hpp"

namespace antiembed {
namespace {

TEST(Digraph, DegreesAndNeighbourhoods) {
  const Digraph d(3, {{0, 1}, {2, 1}});
  EXPECT_EQ(d.order(), 3);
  EXPECT_EQ(d.size(), 2);
  EXPECT_EQ(d.out_degree(0), 1);
  EXPECT_EQ(d.in_degree(1), 2);
  EXPECT_EQ(d.degree(1, Sign::Minus), 2);
  EXPECT_TRUE(d.has_arc(2, 1));
  EXPECT_FALSE(d.has_arc(1, 2));
  const auto in1 = d.in_neighbors(1);
  EXPECT_EQ(std::vector<VertexId>(in1.begin(), in1.end()), (std::vector<VertexId>{0, 2}));
}

TEST(Digraph, RejectsLoopsDuplicatesAndRange) {
  EXPECT_THROW(Digraph(2, {{0, 0}}), InvalidInput);
  EXPECT_THROW(Digraph(2, {{0, 1}, {0, 1}}), InvalidInput);
  EXPECT_THROW(Digraph(2, {{0, 2}}), InvalidInput);
}

TEST(Digraph, PseudoSemidegree) {
  // D1 = 0->1<-2: out-vertices have out-degree 1, the sink has in-degree 2.
  const Digraph d1(3, {{0, 1}, {2, 1}});
  const DegreeProfile p = degree_profile(d1);
  EXPECT_EQ(p.delta_plus_bar, 1);
  EXPECT_EQ(p.delta_minus_bar, 2);
  EXPECT_EQ(p.delta0_bar, 1);
  EXPECT_EQ(pseudo_degree(d1, Sign::Plus), 1);
  EXPECT_EQ(degree_profile(Digraph(4)).delta0_bar, 0);
}

TEST(Digraph, PlusMinusSets) {
  const Digraph d(4, {{0, 1}, {1, 2}});
  const auto [plus, minus] = plus_minus_sets(d);
  EXPECT_EQ(plus, (std::vector<VertexId>{0, 1}));
  EXPECT_EQ(minus, (std::vector<VertexId>{1, 2}));
}

TEST(Digraph, ReverseIsAnInvolution) {
  const Digraph d(4, {{0, 1}, {1, 2}, {3, 0}});
  const Digraph r = reverse(d);
  EXPECT_TRUE(r.has_arc(1, 0));
  EXPECT_FALSE(r.has_arc(0, 1));
  EXPECT_EQ(reverse(r), d);
}

TEST(Digraph, ArcListRoundTrip) {
  const GraphFile g = parse_graph("# comment\n4 3 root 2\n0 1\n2 1\n2 3\n");
  ASSERT_TRUE(g.root.has_value());
  EXPECT_EQ(*g.root, 2);
  EXPECT_EQ(g.graph.size(), 3);
  const GraphFile again = parse_graph(to_arc_list(g.graph, g.root));
  EXPECT_EQ(again.graph, g.graph);
  EXPECT_EQ(again.root, g.root);
}

TEST(Digraph, JsonRoundTrip) {
  const Digraph d(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(parse_graph(to_json_text(d)).graph, d);
}

TEST(Digraph, ParserRejectsBadInput) {
  EXPECT_THROW(parse_graph("3 2\n0 1\n"), InvalidInput);
  EXPECT_THROW(parse_graph("x y\n"), InvalidInput);
  EXPECT_THROW(parse_graph("2 1\n0 5\n"), InvalidInput);
}

TEST(Digraph, DotExportListsArcs) {
  const std::string dot = to_dot(Digraph(2, {{0, 1}}), "G");
  EXPECT_NE(dot.find("digraph G"), std::string::npos);
  EXPECT_NE(dot.find("0 -> 1"), std::string::npos);
}

TEST(Digraph, InducedSubdigraphDropsIsolated) {
  const Digraph d(5, {{0, 1}, {3, 4}, {1, 2}});
  const Arc keep[] = {{3, 4}};
  const Subdigraph s = induced_subdigraph(d, keep, true);
  EXPECT_EQ(s.graph.order(), 2);
  EXPECT_EQ(s.new_to_old, (std::vector<VertexId>{3, 4}));
  EXPECT_EQ(s.old_to_new[0], -1);
}

TEST(VertexSet, Operations) {
  VertexSet a(130);
  VertexSet b(130);
  a.insert(3);
  a.insert(129);
  b.insert(129);
  b.insert(64);
  EXPECT_EQ(a.and_count(b), 1);
  VertexSet c = a;
  c |= b;
  EXPECT_EQ(c.count(), 3);
  c -= a;
  EXPECT_EQ(c.to_vector(), (std::vector<VertexId>{64}));
  c.erase(64);
  EXPECT_TRUE(c.empty());
}

}  // namespace
}  // namespace antiembed
