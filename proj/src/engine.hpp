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

// Shared machinery for the lemma procedures: a partial embedding under a
// placement policy, greedy growth, the exchange moves and the bounded search.

#include <cstdint>
#include <optional>
#include <vector>

#include "antiembed/antitree.hpp"
#include "antiembed/digraph.hpp"
#include "antiembed/embedder.hpp"
#include "antiembed/oracle.hpp"

namespace antiembed::detail {

struct Policy {
  const Digraph* arcs = nullptr;   // arcs available to the embedding
  VertexSet core;                  // where restricted tree vertices may go
  std::vector<char> free_vertex;   // per tree vertex: may leave the core
};

// Policy whose core is every vertex with an arc in `core_graph`.
Policy make_policy(const Digraph& arcs, const Digraph& core_graph, const AntiTree& t);

// Tree vertices allowed to be placed; empty means all.
using Mask = std::vector<char>;

class PartialMap {
 public:
  PartialMap(const AntiTree& t, const Policy& p);

  const AntiTree& tree() const { return *t_; }
  const Policy& policy() const { return *p_; }
  const Digraph& host() const { return *p_->arcs; }

  VertexId img(VertexId v) const { return img_[v]; }
  VertexId owner(VertexId h) const { return owner_[h]; }
  bool placed(VertexId v) const { return img_[v] >= 0; }
  int count() const { return count_; }
  const VertexSet& image() const { return used_; }

  void place(VertexId v, VertexId h);
  void unplace(VertexId v);

  // h unused and inside v's domain.
  bool allowed(VertexId v, VertexId h) const;
  // Arcs to every placed tree neighbour of v exist.
  bool consistent(VertexId v, VertexId h) const;
  bool admissible(VertexId v, VertexId h) const { return allowed(v, h) && consistent(v, h); }
  // Admissible images for v. Free vertices try non-core vertices first.
  std::vector<VertexId> candidates(VertexId v) const;
  // Unused core vertices in N^s(h).
  int free_core_slots(VertexId h, Sign s) const;

  std::vector<VertexId> state() const { return img_; }
  void restore(const std::vector<VertexId>& s);
  bool complete(const Mask& mask) const;
  Embedding embedding() const { return Embedding{img_}; }

 private:
  const AntiTree* t_;
  const Policy* p_;
  std::vector<VertexId> img_;
  std::vector<VertexId> owner_;
  VertexSet used_;
  int count_ = 0;
};

inline bool in_mask(const Mask& m, VertexId v) { return m.empty() || m[v] != 0; }

// Places unplaced mask vertices next to placed ones, restricted vertices
// first, least candidate first, until nothing more fits. Returns the number
// of placements.
int grow(PartialMap& pm, const Mask& mask);

// (w, w') with w placed, w' an unplaced mask neighbour without candidates.
std::vector<std::pair<VertexId, VertexId>> stalls(const PartialMap& pm, const Mask& mask);

// Tree vertices on the side of `child` when the edge {parent, child} is cut.
std::vector<VertexId> side_of(const AntiTree& t, VertexId parent, VertexId child);

// A leaf x (not adjacent to w) sits on a host neighbour of f(w) usable by w';
// x moves to another slot next to its parent and w' takes the old image.
bool leaf_exchange(PartialMap& pm, VertexId w, VertexId w2, const Mask& mask, Trace& tr);

// An occupant y of a usable neighbour of f(w), farthest from w first: y's
// side is cut off, w' takes f(y), y is re-placed next to its parent and the
// side regrows. Kept only if the number of placed vertices grows.
bool subtree_exchange(PartialMap& pm, VertexId w, VertexId w2, const Mask& mask, Trace& tr);

// Moves w (with its side away from root) to another image next to its parent,
// preferring images with few neighbours on the root path and many free slots.
// Kept only if the number of placed vertices grows.
bool relocate_vertex(PartialMap& pm, VertexId root, VertexId w, const Mask& mask, Trace& tr);

// grow + exchanges until complete or stuck. Each accepted exchange must raise
// the placed count (checked).
bool run_extension(PartialMap& pm, VertexId root, const Mask& mask, Trace& tr, const std::string& scope);

// Budgeted exact search under the policy, with optional pinned images, over
// the mask vertices (which must span a subtree).
std::optional<Embedding> bounded_net(const AntiTree& t, const Policy& p, const std::vector<VertexId>& pins,
                                     const Mask& mask, std::uint64_t budget, SearchStats* stats);

}  // namespace antiembed::detail
