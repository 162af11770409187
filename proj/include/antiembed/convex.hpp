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
#include <vector>

#include "antiembed/antitree.hpp"
#include "antiembed/digraph.hpp"
#include "antiembed/embedding.hpp"

namespace antiembed {

// A digraph drawn with its vertices on a circle, in the given clockwise order.
class ConvexDigraph {
 public:
  ConvexDigraph(Digraph d, std::vector<VertexId> order);
  static ConvexDigraph with_id_order(const Digraph& d);
  static ConvexDigraph with_random_order(const Digraph& d, std::uint64_t seed);

  const Digraph& digraph() const { return d_; }
  const std::vector<VertexId>& order() const { return order_; }
  int position(VertexId v) const { return pos_[v]; }
  // Number of clockwise steps from a to b, in 0..n-1.
  int clockwise_steps(VertexId a, VertexId b) const {
    const int n = d_.order();
    return (pos_[b] - pos_[a] + n) % n;
  }

 private:
  Digraph d_;
  std::vector<VertexId> order_;
  std::vector<int> pos_;
};

struct SideSets {
  Arc arc;
  std::vector<VertexId> left;   // strictly after tail and before head, clockwise
  std::vector<VertexId> right;  // everything else except the endpoints
};

// Side sets of the chord between arc.tail (playing x) and arc.head (playing y).
SideSets side_sets(const ConvexDigraph& c, Arc arc);

enum class GoodArcVariant { Density, MinDegree };

// Result of the stage-by-stage good-arc computation for a caterpillar.
// Stage j (1-based) concerns the subtree spanned by spine vertices s_0..s_j
// and the leaves hanging from s_1..s_{j-1}; stage L is the whole caterpillar.
class GoodArcTable {
 public:
  int stages() const { return static_cast<int>(pred_.size()); }
  const SpineDecomposition& spine() const { return spine_; }
  GoodArcVariant variant() const { return variant_; }

  // Host arcs good at the given stage (1..stages()), sorted.
  std::vector<Arc> good_arcs(int stage) const;
  std::vector<Arc> final_good() const { return good_arcs(stages()); }
  bool is_good(Arc host_arc) const;

  // Embedding of the whole caterpillar witnessing that host_arc is good.
  Embedding witness(Arc host_arc) const;
  // Embedding of the stage-j subtree; entries of vertices outside it are -1.
  Embedding stage_witness(int stage, Arc host_arc) const;

  // The guaranteed lower bound on |final_good()| for this variant.
  long lower_bound() const { return lower_bound_; }

  friend GoodArcTable compute_good_arcs(const ConvexDigraph& c, const AntiTree& t,
                                        GoodArcVariant variant);

 private:
  int arc_index(VertexId tail, VertexId head) const;
  Arc stage_arc(int stage, VertexId x, VertexId y) const;
  std::vector<VertexId> tau(int stage_from, VertexId x) const;

  ConvexDigraph convex_{Digraph{}, {}};
  AntiTree tree_;
  SpineDecomposition spine_;
  GoodArcVariant variant_ = GoodArcVariant::Density;
  std::vector<int> offset_;              // CSR offsets into sorted out-lists
  std::vector<std::vector<int>> pred_;   // per stage, per host arc: -1 not good, -2 base, else arc index
  long lower_bound_ = 0;
};

GoodArcTable compute_good_arcs(const ConvexDigraph& c, const AntiTree& t, GoodArcVariant variant);
inline GoodArcTable good_arcs(const ConvexDigraph& c, const AntiTree& t) {
  return compute_good_arcs(c, t, GoodArcVariant::Density);
}
inline GoodArcTable good_arcs_mindeg(const ConvexDigraph& c, const AntiTree& t) {
  return compute_good_arcs(c, t, GoodArcVariant::MinDegree);
}

// Exhaustive goodness: every host arc that admits an embedding of the whole
// caterpillar with the final edge on it and the parity side free of images.
// Exponential; desk scale only.
std::vector<Arc> brute_force_good_arcs(const ConvexDigraph& c, const AntiTree& t);

struct CaterpillarOptions {
  std::optional<std::uint64_t> random_order_seed;
};

// Requires a(d) > (k-1)|V(d)|.
Embedding embed_caterpillar(const Digraph& d, const AntiTree& t, const CaterpillarOptions& opt = {});

// Requires 2a(d) > (k-1)(|D+|+|D-|) and matching sign balance; reverses both
// inputs internally when the balance holds the other way round.
Embedding embed_caterpillar_mindeg(const Digraph& d, const AntiTree& t,
                                   const CaterpillarOptions& opt = {});

}  // namespace antiembed
