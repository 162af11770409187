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

#include <span>
#include <string>
#include <vector>

#include "antiembed/digraph.hpp"

namespace antiembed {

// An oriented tree with no directed path of length two. Every vertex is a pure
// source (sign +) or a pure sink (sign -), so the arc between two adjacent
// vertices always runs from the + end to the - end.
class AntiTree {
 public:
  AntiTree() = default;

  const Digraph& digraph() const { return d_; }
  int k() const { return d_.size(); }
  int order() const { return d_.order(); }
  Sign sign(VertexId v) const { return sign_[v]; }
  // Undirected neighbours, sorted by id.
  std::span<const VertexId> neighbors(VertexId v) const { return adj_[v]; }
  int degree(VertexId v) const { return static_cast<int>(adj_[v].size()); }
  bool is_leaf(VertexId v) const { return adj_[v].size() == 1; }
  const std::vector<VertexId>& plus_vertices() const { return plus_; }
  const std::vector<VertexId>& minus_vertices() const { return minus_; }

  friend AntiTree validate_antitree(const Digraph& t);

 private:
  Digraph d_;
  std::vector<Sign> sign_;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<VertexId> plus_, minus_;
};

// Throws NotATree (including the arcless case) or NotAntidirected.
AntiTree validate_antitree(const Digraph& t);
AntiTree make_antitree(int n, std::initializer_list<Arc> arcs);
AntiTree reverse_tree(const AntiTree& t);

struct DegreeStats {
  int delta = 0;
  int delta2 = 0;
  VertexId argmax_u = -1;
  VertexId argmax2_v = -1;
  std::vector<VertexId> leaves;
  std::vector<VertexId> non_leaves;
  // Leaf and non-leaf neighbours of each vertex.
  std::vector<std::vector<VertexId>> leaves_of;
  std::vector<std::vector<VertexId>> non_leaves_of;
};

DegreeStats degree_stats(const AntiTree& t);

struct RootedAntiTree {
  VertexId root = -1;
  std::vector<VertexId> parent;  // -1 at the root
  std::vector<int> depth;
  std::vector<VertexId> bfs_order;
  std::vector<std::vector<VertexId>> children;  // sorted by id
};

RootedAntiTree rooted_view(const AntiTree& t, VertexId root);

// Vertex sequence of the unique a-b path, a first.
std::vector<VertexId> tree_path(const AntiTree& t, VertexId a, VertexId b);
std::vector<int> tree_distances(const AntiTree& t, VertexId src);

struct SpineDecomposition {
  std::vector<VertexId> spine;                  // s_0 .. s_L, s_L is the final vertex
  std::vector<std::vector<VertexId>> leaves_at;  // indexed by tree vertex
  VertexId final_vertex = -1;
  Arc final_arc;
};

// The spine is the lexicographically least longest path. Throws
// NotACaterpillar with the least-id vertex at distance >= 2 from it.
SpineDecomposition caterpillar_decompose(const AntiTree& t);
bool is_caterpillar(const AntiTree& t);
// Classical criterion: removing all leaves leaves a path (or nothing).
bool leaf_stripped_is_path(const AntiTree& t);

struct DoubleBroom {
  VertexId u = -1;
  VertexId v = -1;
  std::vector<VertexId> vertices;  // sorted
  std::vector<VertexId> path_uv;
  std::vector<char> member;        // indexed by tree vertex
};

DoubleBroom double_broom(const AntiTree& t, VertexId u, VertexId v);

// Subtree spanned by a connected vertex set, relabelled 0..m-1 in increasing
// order of original id.
struct InducedTree {
  AntiTree tree;
  std::vector<VertexId> to_original;
  std::vector<VertexId> from_original;  // -1 outside the set
};

InducedTree induced_subtree(const AntiTree& t, std::span<const VertexId> vertices);

// Isomorphism invariant that respects signs.
std::string canonical_form(const AntiTree& t);

// One representative per isomorphism class of antidirected trees with k arcs,
// sorted by canonical form. Throws BoundExceeded when k > max_k.
std::vector<AntiTree> enumerate_antitrees(int k, int max_k = 8);

}  // namespace antiembed
