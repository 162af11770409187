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

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "antiembed/digraph.hpp"

namespace antiembed {

// ---- pseudo-semidegree pruning ---------------------------------------------

struct PruneReport {
  Digraph result;
  int deleted_arcs = 0;
  int out_triggers = 0;  // vertices whose out-arcs were stripped
  int in_triggers = 0;   // vertices whose in-arcs were stripped
  int max_step = 0;      // largest number of arcs removed by one step
};

// Strips all out-arcs of any vertex with 0 < deg+ < k/2 and all in-arcs of
// any vertex with 0 < deg- < k/2 until none is left. The vertex set is kept.
// Without a seed the least vertex id is processed first (out side before in
// side); with a seed the next trigger is drawn at random.
PruneReport prune_pseudo_report(const Digraph& d, int k,
                                std::optional<std::uint64_t> fuzz_seed = std::nullopt);
inline Digraph prune_pseudo(const Digraph& d, int k) { return prune_pseudo_report(d, k).result; }

// ---- bipartite machinery ----------------------------------------------------

// Bipartite graph whose A side holds copies u+ and whose B side holds copies
// v- of digraph vertices; both sides share the id universe of the digraph.
struct BipartiteGraph {
  VertexSet a_side;
  VertexSet b_side;
  std::vector<std::pair<VertexId, VertexId>> edges;  // (a, b), sorted

  int universe() const { return a_side.universe(); }
  int vertex_count() const { return a_side.count() + b_side.count(); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  std::vector<int> a_degrees() const;
  std::vector<int> b_degrees() const;
};

BipartiteGraph split_bipartite(const Digraph& d);

// Digraph on the same universe with an arc uv for every edge u+v-.
Digraph merge_bipartite(const BipartiteGraph& h);

enum class SelectionCase { I, II };
const char* to_string(SelectionCase c);

struct BipartitePruneResult {
  BipartiteGraph graph;
  SelectionCase tag = SelectionCase::I;
  bool second_loop = false;
  int deletions = 0;
};

// Requires r <= ceil(k/2), |A| = |B| and e(H) > (k-1)|H|/2.
BipartitePruneResult prune_bipartite(const BipartiteGraph& h, int k, int r);

struct BipartiteAudit {
  bool density = false;      // e(H') > (k-1)|H'|/2
  bool pair_sums = false;    // deg(a) + deg(b) >= k for all a in A', b in B'
  bool case_i = false;
  bool case_ii = false;
};

// Checks the output conditions from scratch. `original` supplies deg_H(a).
BipartiteAudit audit_bipartite(const BipartiteGraph& original, const BipartiteGraph& sub, int k, int r);

// ---- subdigraph selection ---------------------------------------------------

struct SelectionAudit {
  int arcs = 0;
  int plus_count = 0;   // |(D')+|
  int minus_count = 0;  // |(D')-|
  int min_pair_sum = 0; // min deg+(a) + deg-(b) over (D')+ x (D')-
  int pseudo_out = 0;
  int pseudo_in = 0;
  int max_out = 0;
  int max_in = 0;
  bool density_condition = false;
  bool pair_sum_condition = false;
  bool case_i = false;
  bool case_ii = false;
};

struct SelectionResult {
  Digraph sub;  // same vertex ids as the input digraph
  SelectionCase tag = SelectionCase::I;
  VertexId witness_vertex = -1;  // out-degree >= k for case I, in-degree >= k for case II
  SelectionAudit audit;
};

// Audits a candidate subdigraph of d from scratch. Pair sums are checked over
// every pair of an out-vertex and an in-vertex.
SelectionAudit audit_selection(const Digraph& d, const Digraph& sub, int k, int r);

// Requires 1 <= r <= ceil(k/2), k <= |V(d)| and a(d) > (k-1)|V(d)|.
SelectionResult select_subdigraph(const Digraph& d, int k, int r);

}  // namespace antiembed
