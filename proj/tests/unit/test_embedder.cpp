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

#include "antiembed/embedder.hpp"
#include "antiembed/errors.hpp"
#include "antiembed/generators.hpp"
#include "json.hpp"

namespace antiembed {
namespace {

const Digraph& pg25() {
  static const Digraph d = gen_incidence(25);
  return d;
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

AntiTree out_star(int k) {
  std::vector<Arc> arcs;
  for (int i = 1; i <= k; ++i) arcs.push_back({0, i});
  return validate_antitree(Digraph(k + 1, arcs));
}

// Smallest integer c with den * c >= num.
int ceil_div(int num, int den) {
  int c = 0;
  while (den * c < num) ++c;
  return c;
}

void expect_success(const Digraph& d, const AntiTree& t, const EmbedOutcome& o) {
  ASSERT_TRUE(o.ok()) << to_string(o.status) << ": " << o.message;
  ASSERT_TRUE(o.embedding.has_value());
  EXPECT_TRUE(is_valid_embedding(t.digraph(), d, *o.embedding));
  EXPECT_FALSE(o.fallback.has_value());
}

TEST(Thresholds, TableUpToSixty) {
  for (int k = 1; k <= 60; ++k) {
    const Thresholds th = thresholds(k);
    EXPECT_EQ(th.s, ceil_div(k, 12)) << k;
    EXPECT_EQ(th.quarter, k / 4) << k;
    EXPECT_EQ(th.delta2_small, k / 4 + 2) << k;
    EXPECT_EQ(th.half_up, ceil_div(k, 2)) << k;
    EXPECT_EQ(th.five_twelfths_up, ceil_div(5 * k, 12)) << k;
    EXPECT_EQ(th.seven_twelfths_up, ceil_div(7 * k, 12)) << k;
  }
}

TEST(Pipeline, SingleArc) {
  const AntiTree arc = make_antitree(2, {{0, 1}});
  const Digraph d(3, {{2, 0}});
  expect_success(d, arc, embed_antitree(d, arc));
}

TEST(Pipeline, BurrHostRefusedOnDensity) {
  for (int k = 2; k <= 6; ++k) {
    const EmbedOutcome o = embed_antitree(gen_burr(k), out_star(k));
    EXPECT_EQ(o.status, OutcomeStatus::Refused);
    EXPECT_EQ(o.exit_code(), 2);
    ASSERT_TRUE(o.failure.has_value());
    EXPECT_FALSE(o.failure->witness.has_value());
  }
}

TEST(Pipeline, ForceOracleCertifiesBurrNonContainment) {
  EmbedOptions opt;
  opt.force_oracle = true;
  const EmbedOutcome o = embed_antitree(gen_burr(4), out_star(4), opt);
  ASSERT_TRUE(o.fallback.has_value());
  EXPECT_EQ(o.fallback->verdict, Verdict::NotContained);
  EXPECT_FALSE(o.ok());
}

TEST(Pipeline, NonFreeHostRefusedWithWitness) {
  const Digraph d = bidirected_complete(5);
  const AntiTree t = make_antitree(4, {{0, 1}, {2, 1}, {2, 3}});
  const EmbedOutcome o = embed_antitree(d, t);
  ASSERT_EQ(o.status, OutcomeStatus::Refused);
  ASSERT_TRUE(o.failure->witness.has_value());
  EXPECT_TRUE(witness_holds(d, *o.failure->witness, 1));
}

TEST(Pipeline, CompleteHostInForceMode) {
  // Antidirected path with 8 arcs into the complete digraph on 9 vertices.
  std::vector<Arc> arcs;
  for (VertexId i = 0; i < 8; ++i) arcs.push_back(i % 2 == 0 ? Arc{i, i + 1} : Arc{i + 1, i});
  const AntiTree path = validate_antitree(Digraph(9, arcs));
  const Digraph d = bidirected_complete(9);
  EmbedOptions opt;
  opt.check_hypotheses = false;
  expect_success(d, path, embed_antitree(d, path, opt));
}

TEST(Pipeline, ProjectivePlaneOutStar) {
  const AntiTree star = out_star(13);
  const EmbedOutcome o = embed_antitree(pg25(), star);
  expect_success(pg25(), star, o);
  ASSERT_TRUE(o.tag.has_value());
  EXPECT_EQ(o.tag->branch, Branch::MidDelta);
}

TEST(Pipeline, ProjectivePlaneInStarUsesReversal) {
  const AntiTree star = reverse_tree(out_star(13));
  expect_success(pg25(), star, embed_antitree(pg25(), star));
}

TEST(Pipeline, ProjectivePlaneRandomTrees) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const AntiTree t = random_antitree(13, seed, 0.4 * static_cast<double>(seed % 3));
    const EmbedOutcome o = embed_antitree(pg25(), t);
    expect_success(pg25(), t, o);
    EXPECT_EQ(o.trace.failed(), 0);
  }
}

TEST(Pipeline, ProjectivePlaneBroomHeavyTree) {
  int done = 0;
  for (std::uint64_t seed = 0; done < 3; ++seed) {
    const AntiTree t = random_two_hub_antitree(13, seed);
    if (degree_stats(t).delta2 < 6) continue;
    const EmbedOutcome o = embed_antitree(pg25(), t);
    expect_success(pg25(), t, o);
    ASSERT_TRUE(o.tag.has_value());
    EXPECT_TRUE(o.tag->branch == Branch::BroomB_I || o.tag->branch == Branch::BroomB_II ||
                o.tag->branch == Branch::BroomA);
    ++done;
  }
}

TEST(Pipeline, ReversalReturnsSameMap) {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const AntiTree t = random_antitree(13, seed + 40, 0.5);
    const EmbedOutcome a = embed_antitree(pg25(), t);
    const EmbedOutcome b = embed_antitree(reverse(pg25()), reverse_tree(t));
    ASSERT_TRUE(a.ok() && b.ok());
    EXPECT_EQ(a.embedding->map, b.embedding->map);
  }
}

TEST(Pipeline, ExitCodes) {
  EmbedOutcome o;
  o.status = OutcomeStatus::Success;
  EXPECT_EQ(o.exit_code(), 0);
  o.status = OutcomeStatus::Refused;
  EXPECT_EQ(o.exit_code(), 2);
  o.status = OutcomeStatus::Inconclusive;
  EXPECT_EQ(o.exit_code(), 3);
  o.status = OutcomeStatus::InternalAssertion;
  EXPECT_EQ(o.exit_code(), 4);
}

TEST(Pipeline, OutcomeJson) {
  const AntiTree arc = make_antitree(2, {{0, 1}});
  const Digraph d(2, {{1, 0}});
  const auto j = nlohmann::json::parse(outcome_to_json(embed_antitree(d, arc)));
  EXPECT_EQ(j.at("status"), "success");
  EXPECT_EQ(j.at("exit_code"), 0);
  EXPECT_EQ(j.at("embedding").size(), 2U);
}

TEST(LowDelta, PathIntoPrunedPlane) {
  // Max degree 2 is at most floor(13/4).
  std::vector<Arc> arcs;
  for (VertexId i = 0; i < 13; ++i) arcs.push_back(i % 2 == 0 ? Arc{i, i + 1} : Arc{i + 1, i});
  const AntiTree path = validate_antitree(Digraph(14, arcs));
  const Digraph core = prune_pseudo(pg25(), 13);
  expect_success(core, path, embed_low_delta(core, path));
}

TEST(LowDelta, RefusesHighDegree) {
  EXPECT_EQ(embed_low_delta(pg25(), out_star(13)).status, OutcomeStatus::Refused);
}

TEST(MidDelta, StarAndSpider) {
  expect_success(pg25(), out_star(13), embed_mid_delta(pg25(), out_star(13)));
  // Centre 0 with six legs of length two, plus one leaf.
  std::vector<Arc> arcs;
  for (VertexId i = 0; i < 6; ++i) {
    arcs.push_back({0, 1 + 2 * i});
    arcs.push_back({2 + 2 * i, 1 + 2 * i});
  }
  arcs.push_back({0, 13});
  const AntiTree spider = validate_antitree(Digraph(14, arcs));
  expect_success(pg25(), spider, embed_mid_delta(pg25(), spider));
}

TEST(StarProcedures, RespectCoreMask) {
  const Digraph core = prune_pseudo(pg25(), 13);
  VertexId anchor = 0;
  while (pg25().out_degree(anchor) < 13) ++anchor;
  std::vector<Arc> arcs;
  for (VertexId i = 0; i < 6; ++i) {
    arcs.push_back({0, 1 + 2 * i});
    arcs.push_back({2 + 2 * i, 1 + 2 * i});
  }
  arcs.push_back({0, 13});
  const AntiTree spider = validate_antitree(Digraph(14, arcs));
  for (const EmbedOutcome& o :
       {embed_wide_star(pg25(), core, spider, anchor), embed_radius_two(pg25(), core, spider, anchor)}) {
    expect_success(pg25(), spider, o);
    EXPECT_TRUE(respects_mask(spider, *o.embedding, core));
    EXPECT_EQ(o.embedding->map[0], anchor);
  }
}

TEST(StarProcedures, RefuseWeakAnchor) {
  const Digraph core = prune_pseudo(pg25(), 13);
  VertexId line = 0;
  while (pg25().out_degree(line) > 0) ++line;
  EXPECT_EQ(embed_wide_star(pg25(), core, out_star(13), line).status, OutcomeStatus::Refused);
}

AntiTree broom_heavy_tree(std::uint64_t seed) {
  for (;; ++seed) {
    AntiTree t = random_two_hub_antitree(13, seed);
    const DegreeStats ds = degree_stats(t);
    if (ds.delta2 >= 6 && t.sign(ds.argmax_u) == Sign::Plus) return t;
  }
}

TEST(DoubleBroom, PlanOnPlaneIsCaseB) {
  const AntiTree t = broom_heavy_tree(1);
  const BroomPlan plan = plan_double_broom(pg25(), t);
  EXPECT_TRUE(plan.tag.branch == Branch::BroomB_I || plan.tag.branch == Branch::BroomB_II);
  EXPECT_FALSE(plan.subcase_padded);
  const SelectionAudit a = audit_selection(pg25(), plan.selection.sub, 13, plan.tag.r);
  EXPECT_TRUE(a.density_condition && a.pair_sum_condition);
}

// Case B-II on the plane: every vertex has semidegree 26, so the whole host
// meets the second selection condition with an in-vertex witness.
TEST(DoubleBroom, ConstructedCaseTwoPlan) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const AntiTree t = broom_heavy_tree(100 + 37 * seed);
    BroomPlan plan = plan_double_broom(pg25(), t);
    plan.tag.branch = Branch::BroomB_II;
    plan.selection.sub = pg25();
    plan.selection.tag = SelectionCase::II;
    VertexId line = 0;
    while (pg25().in_degree(line) < 13) ++line;
    plan.selection.witness_vertex = line;
    plan.selection.audit = audit_selection(pg25(), pg25(), 13, plan.tag.r);
    ASSERT_TRUE(plan.selection.audit.case_ii);

    const BroomEmbedding be = embed_double_broom(pg25(), plan, t);
    ASSERT_TRUE(be.ok) << be.message;
    for (VertexId x : plan.broom.vertices) EXPECT_GE(be.partial.map[x], 0);
    const EmbedOutcome o = extend_from_broom(pg25(), plan, t, be.partial);
    expect_success(pg25(), t, o);
    EXPECT_TRUE(respects_mask(t, *o.embedding, plan.selection.sub));
    for (VertexId x : plan.broom.vertices) EXPECT_EQ(o.embedding->map[x], be.partial.map[x]);
  }
}

TEST(DoubleBroom, ExtensionOfFullBroomIsIdentity) {
  const AntiTree t = make_antitree(6, {{0, 1}, {0, 2}, {0, 3}, {4, 1}, {5, 1}});
  const BroomPlan plan = plan_double_broom(pg25(), t);
  ASSERT_EQ(plan.broom.vertices.size(), 6U);
  EmbedOptions opt;
  opt.check_hypotheses = false;
  const BroomEmbedding be = embed_double_broom(pg25(), plan, t, opt);
  ASSERT_TRUE(be.ok) << be.message;
  const EmbedOutcome o = extend_from_broom(pg25(), plan, t, be.partial, opt);
  ASSERT_TRUE(o.ok());
  EXPECT_EQ(o.embedding->map, be.partial.map);
}

TEST(DoubleBroom, SmallBroomTakesCaseA) {
  // k = 40: centres u=0 and v=1 of degree 13 each, plus a 15-arc path hanging
  // off leaf 2 of u. The broom has 26 vertices, at most 3k/4.
  std::vector<Arc> arcs{{0, 1}};
  for (VertexId i = 2; i < 14; ++i) arcs.push_back({0, i});
  for (VertexId i = 14; i < 26; ++i) arcs.push_back({i, 1});
  VertexId prev = 2;
  for (VertexId i = 26; i < 41; ++i) {
    arcs.push_back(i % 2 == 0 ? Arc{i, prev} : Arc{prev, i});
    prev = i;
  }
  const AntiTree t = validate_antitree(Digraph(41, arcs));
  ASSERT_EQ(t.k(), 40);
  const Digraph host = bidirected_complete(60);
  const BroomPlan plan = plan_double_broom(host, t);
  EXPECT_EQ(plan.tag.branch, Branch::BroomA);
  EXPECT_EQ(plan.broom.vertices.size(), 26U);
  EmbedOptions opt;
  opt.check_hypotheses = false;
  const EmbedOutcome o = embed_big_delta2(host, t, opt);
  expect_success(host, t, o);
  EXPECT_EQ(o.tag->branch, Branch::BroomA);
}

TEST(Fallback, ReportsGroundTruth) {
  const EmbedOutcome o = oracle_fallback(Digraph(3, {{0, 1}, {2, 1}}), out_star(2), 1000);
  ASSERT_TRUE(o.fallback.has_value());
  EXPECT_EQ(o.fallback->verdict, Verdict::NotContained);
}

}  // namespace
}  // namespace antiembed
