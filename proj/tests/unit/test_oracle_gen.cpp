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

#include "antiembed/antitree.hpp"
#include "antiembed/embedding.hpp"
#include "antiembed/errors.hpp"
#include "antiembed/freeness.hpp"
#include "antiembed/generators.hpp"
#include "antiembed/oracle.hpp"

namespace antiembed {
namespace {

AntiTree out_star(int k) {
  std::vector<Arc> arcs;
  for (int i = 1; i <= k; ++i) arcs.push_back({0, i});
  return validate_antitree(Digraph(k + 1, arcs));
}

TEST(Oracle, StarsIntoSmallPath) {
  const Digraph d1(3, {{0, 1}, {2, 1}});
  const SearchStats in = oracle_embed(d1, make_antitree(3, {{0, 1}, {2, 1}}));
  ASSERT_EQ(in.verdict, Verdict::Embeds);
  EXPECT_TRUE(is_valid_embedding(make_antitree(3, {{0, 1}, {2, 1}}).digraph(), d1, *in.witness));
  EXPECT_EQ(oracle_embed(d1, out_star(2)).verdict, Verdict::NotContained);
}

TEST(Oracle, BudgetGivesInconclusive) {
  const Digraph d = gen_burr(5);
  const SearchStats st = oracle_embed(d, random_antitree(5, 3), 1);
  EXPECT_NE(st.verdict, Verdict::NotContained);
}

TEST(Oracle, FixedAndBlockedVertices) {
  const Digraph d(4, {{0, 1}, {2, 1}, {2, 3}});
  const AntiTree t = make_antitree(2, {{0, 1}});
  SearchProblem p;
  p.host = &d;
  p.tree = &t;
  p.fixed = {2, -1};
  VertexSet blocked(4);
  blocked.insert(1);
  p.blocked = blocked;
  const SearchStats st = exact_search(p);
  ASSERT_EQ(st.verdict, Verdict::Embeds);
  EXPECT_EQ(st.witness->map, (std::vector<VertexId>{2, 3}));
}

TEST(Embedding, CheckerCatchesErrors) {
  const Digraph host(3, {{0, 1}, {2, 1}});
  const Digraph tree(3, {{0, 1}, {2, 1}});
  EXPECT_TRUE(check_embedding(tree, host, {{0, 1, 2}}).ok);
  EXPECT_FALSE(check_embedding(tree, host, {{0, 1, 0}}).ok);  // not injective
  EXPECT_FALSE(check_embedding(tree, host, {{1, 0, 2}}).ok);  // wrong arc
  EXPECT_FALSE(check_embedding(tree, host, {{0, 1}}).ok);     // wrong length
}

TEST(Burr, ShapeAndRegularity) {
  const Digraph b2 = gen_burr(2);
  EXPECT_EQ(b2.order(), 4);
  EXPECT_EQ(b2.size(), 4);
  for (int k = 2; k <= 12; ++k) {
    const Digraph d = gen_burr(k);
    EXPECT_EQ(d.size(), (k - 1) * (4 * k - 4));
    for (VertexId v = 0; v < d.order(); ++v) {
      EXPECT_EQ(d.out_degree(v), k - 1);
      EXPECT_EQ(d.in_degree(v), k - 1);
    }
  }
}

TEST(Burr, OutStarAbsentOtherTreesPresent) {
  for (int k = 2; k <= 4; ++k) {
    const Digraph d = gen_burr(k);
    const std::string star = canonical_form(out_star(k));
    for (const AntiTree& t : enumerate_antitrees(k)) {
      const Verdict v = oracle_embed(d, t).verdict;
      if (canonical_form(t) == star) {
        EXPECT_EQ(v, Verdict::NotContained) << "k=" << k;
        continue;
      }
      // Every semidegree of the host is k-1, so only a degree-k star centre can block.
      if (degree_stats(t).delta < k) EXPECT_EQ(v, Verdict::Embeds) << "k=" << k << " " << canonical_form(t);
    }
  }
}

TEST(Incidence, FanoPlane) {
  const Digraph d = gen_incidence(2);
  EXPECT_EQ(d.order(), 14);
  EXPECT_EQ(d.size(), 21);
  EXPECT_TRUE(is_k2s_free(d, 2));
  EXPECT_EQ(audit_projective_plane(d, 2), "");
  for (VertexId v = 0; v < d.order(); ++v) EXPECT_TRUE(d.out_degree(v) == 0 || d.in_degree(v) == 0);
}

TEST(Incidence, OrderTwentyFive) {
  const Digraph d = gen_incidence(25);
  EXPECT_EQ(d.order(), 1302);
  EXPECT_EQ(d.size(), 16926);
  EXPECT_GT(d.size(), 12 * d.order());
  EXPECT_EQ(audit_projective_plane(d, 25), "");
}

TEST(Incidence, UnsupportedOrderRejected) { EXPECT_THROW(gen_incidence(6), InvalidInput); }

TEST(RandomHosts, DeterministicAndExact) {
  EXPECT_EQ(gen_random_arcs(9, 30, 4), gen_random_arcs(9, 30, 4));
  EXPECT_EQ(gen_random_arcs(9, 30, 4).size(), 30);
  const Digraph d = gen_random_dense(10, 4, 1);
  EXPECT_EQ(d.size(), 3 * 10 + 1);
  EXPECT_THROW(gen_random_arcs(3, 7, 0), InvalidInput);
}

TEST(Enumerate, Counts) {
  long count = 0;
  enumerate_digraphs(2, 0, [&](const Digraph&) { return ++count, true; });
  EXPECT_EQ(count, 4);
  count = 0;
  enumerate_digraphs(2, 2, [&](const Digraph&) { return ++count, true; });
  EXPECT_EQ(count, 1);
  count = 0;
  enumerate_digraphs(3, 0, [&](const Digraph&) { return ++count, true; });
  EXPECT_EQ(count, 64);
  count = 0;
  enumerate_digraphs(4, 0, [&](const Digraph&) { return ++count, true; });
  EXPECT_EQ(count, 4096);
}

TEST(Enumerate, SinkCanStopEarly) {
  long count = 0;
  enumerate_digraphs(4, 0, [&](const Digraph&) { return ++count < 10; });
  EXPECT_EQ(count, 10);
}

}  // namespace
}  // namespace antiembed
