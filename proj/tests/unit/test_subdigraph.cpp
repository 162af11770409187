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

#include "antiembed/errors.hpp"
#include "antiembed/generators.hpp"
#include "antiembed/subdigraph.hpp"

namespace antiembed {
namespace {

Digraph bidirected_complete(int n) {
  std::vector<Arc> arcs;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = 0; b < n; ++b) {
      if (a != b) arcs.push_back({a, b});
    }
  }
  return Digraph(n, arcs);
}

void expect_half_pseudo_degree(const Digraph& p, int k) {
  ASSERT_GT(p.size(), 0);
  for (VertexId v = 0; v < p.order(); ++v) {
    if (p.out_degree(v) > 0) EXPECT_GE(2 * p.out_degree(v), k);
    if (p.in_degree(v) > 0) EXPECT_GE(2 * p.in_degree(v), k);
  }
}

TEST(Prune, CompleteHostUnchanged) {
  const Digraph d = bidirected_complete(5);
  EXPECT_EQ(prune_pseudo(d, 4), d);
}

TEST(Prune, SmallPathUnchanged) {
  const Digraph d1(3, {{0, 1}, {2, 1}});
  EXPECT_EQ(prune_pseudo(d1, 1), d1);
}

TEST(Prune, CascadeRemovesPendantPath) {
  // Complete core on 0..5 plus a pendant path 6->7<-8->9.
  std::vector<Arc> arcs = bidirected_complete(6).arcs();
  arcs.insert(arcs.end(), {{6, 7}, {8, 7}, {8, 9}, {0, 6}});
  const Digraph d(10, arcs);
  const int k = 4;
  ASSERT_GT(d.size(), (k - 1) * d.order());
  const PruneReport rep = prune_pseudo_report(d, k);
  expect_half_pseudo_degree(rep.result, k);
  for (VertexId v = 6; v < 10; ++v) {
    EXPECT_EQ(rep.result.out_degree(v) + rep.result.in_degree(v), 0);
  }
  EXPECT_EQ(rep.deleted_arcs, 4);
}

TEST(Prune, RandomDenseHosts) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int k = 1 + static_cast<int>(seed % 7);
    const int n = k + 1 + static_cast<int>(seed % 9);
    const Digraph d = gen_random_dense(n, k, seed);
    expect_half_pseudo_degree(prune_pseudo(d, k), k);
    expect_half_pseudo_degree(prune_pseudo_report(d, k, seed).result, k);
  }
}

TEST(Prune, SparseHostRefused) {
  EXPECT_THROW(prune_pseudo(Digraph(4, {{0, 1}}), 3), HypothesisViolated);
}

TEST(Bipartite, SplitOfPath) {
  const BipartiteGraph h = split_bipartite(Digraph(3, {{0, 1}, {2, 1}}));
  EXPECT_EQ(h.edges, (std::vector<std::pair<VertexId, VertexId>>{{0, 1}, {2, 1}}));
  EXPECT_EQ(h.a_degrees()[0], 1);
  EXPECT_EQ(h.a_degrees()[2], 1);
  EXPECT_EQ(h.b_degrees()[1], 2);
  EXPECT_EQ(h.a_degrees()[1], 0);
}

TEST(Bipartite, SplitIsABijectionOnArcs) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Digraph d = gen_random_arcs(7, static_cast<int>(seed % 43), seed);
    const BipartiteGraph h = split_bipartite(d);
    EXPECT_EQ(h.edge_count(), d.size());
    EXPECT_EQ(merge_bipartite(h), d);
  }
  EXPECT_EQ(split_bipartite(Digraph(4)).edge_count(), 0);
}

TEST(Bipartite, CompleteBipartiteIsFixpoint) {
  const int m = 6;
  const int k = 3;
  std::vector<Arc> arcs;
  for (VertexId a = 0; a < m; ++a) {
    for (VertexId b = m; b < 2 * m; ++b) arcs.push_back({a, b});
  }
  const BipartiteGraph h = split_bipartite(Digraph(2 * m, arcs));
  const BipartitePruneResult res = prune_bipartite(h, k, 2);
  EXPECT_EQ(res.graph.edges, h.edges);
  EXPECT_EQ(res.tag, SelectionCase::I);
  const BipartiteAudit audit = audit_bipartite(h, res.graph, k, 2);
  EXPECT_TRUE(audit.density);
  EXPECT_TRUE(audit.pair_sums);
  EXPECT_TRUE(audit.case_i);
}

TEST(Bipartite, SecondLoopProducesCaseTwo) {
  // A side of 6 vertices with degree 6 into B = 6..11, plus one B vertex
  // 12 of degree r-1 = 1 fed from vertex 0.
  const int k = 3;
  const int r = 2;
  std::vector<Arc> arcs;
  for (VertexId a = 0; a < 6; ++a) {
    for (VertexId b = 6; b < 12; ++b) arcs.push_back({a, b});
  }
  arcs.push_back({0, 12});
  const BipartiteGraph h = split_bipartite(Digraph(13, arcs));
  const BipartitePruneResult res = prune_bipartite(h, k, r);
  const BipartiteAudit audit = audit_bipartite(h, res.graph, k, r);
  EXPECT_TRUE(audit.density);
  EXPECT_TRUE(audit.pair_sums);
  EXPECT_TRUE(res.tag == SelectionCase::I ? audit.case_i : audit.case_ii);
}

TEST(Select, CompleteHost) {
  const int k = 6;
  const Digraph d = bidirected_complete(2 * k);
  const SelectionResult sel = select_subdigraph(d, k, (k + 1) / 2);
  EXPECT_TRUE(sel.audit.density_condition);
  EXPECT_TRUE(sel.audit.pair_sum_condition);
  EXPECT_TRUE(sel.tag == SelectionCase::I ? sel.audit.case_i : sel.audit.case_ii);
}

TEST(Select, FanoSmallK) {
  const SelectionResult sel = select_subdigraph(gen_incidence(2), 2, 1);
  EXPECT_GT(sel.sub.size(), 0);
  EXPECT_TRUE(sel.audit.density_condition);
  EXPECT_TRUE(sel.audit.pair_sum_condition);
}

TEST(Select, RandomHostsRevalidate) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const int k = 1 + static_cast<int>(seed % 8);
    const int n = k + 1 + static_cast<int>(seed % 11);
    const int r = 1 + static_cast<int>(seed % ((k + 1) / 2));
    const Digraph d = gen_random_dense(n, k, seed);
    const SelectionResult sel = select_subdigraph(d, k, r);
    const SelectionAudit fresh = audit_selection(d, sel.sub, k, r);
    ASSERT_TRUE(fresh.density_condition && fresh.pair_sum_condition) << "seed " << seed;
    if (sel.tag == SelectionCase::I) {
      EXPECT_TRUE(fresh.case_i);
      EXPECT_GE(sel.sub.out_degree(sel.witness_vertex), k);
    } else {
      EXPECT_TRUE(fresh.case_ii);
      EXPECT_GE(sel.sub.in_degree(sel.witness_vertex), k);
    }
    for (const Arc& a : sel.sub.arcs()) EXPECT_TRUE(d.has_arc(a.tail, a.head));
  }
}

TEST(Select, BadParametersRejected) {
  const Digraph d = bidirected_complete(6);
  EXPECT_THROW(select_subdigraph(d, 4, 0), Error);
  EXPECT_THROW(select_subdigraph(d, 4, 3), HypothesisViolated);
}

}  // namespace
}  // namespace antiembed
