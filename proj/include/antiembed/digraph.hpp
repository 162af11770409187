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
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "antiembed/errors.hpp"
#include "antiembed/types.hpp"

namespace antiembed {

// Fixed-universe bitset over vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);

  int universe() const { return n_; }
  void insert(VertexId v) { w_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(VertexId v) { w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool contains(VertexId v) const { return (w_[v >> 6] >> (v & 63)) & 1U; }
  bool empty() const;
  int count() const;
  // |this ∩ other| without materialising the intersection.
  int and_count(const VertexSet& other) const;

  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);
  bool operator==(const VertexSet& o) const = default;

  std::vector<VertexId> to_vector() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t word = w_[i];
      while (word != 0) {
        const int bit = __builtin_ctzll(word);
        f(static_cast<VertexId>(i * 64 + bit));
        word &= word - 1;
      }
    }
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

// Immutable simple digraph: no loops, no duplicate arcs. Antiparallel pairs
// (u,v) and (v,u) are allowed.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);
  Digraph(int n, std::span<const Arc> arcs);
  Digraph(int n, std::initializer_list<Arc> arcs);

  int order() const { return n_; }
  int size() const { return static_cast<int>(arcs_.size()); }
  // Arcs in insertion order.
  const std::vector<Arc>& arcs() const { return arcs_; }

  // Neighbour lists sorted by id. Algorithms iterate these so that results do
  // not depend on the order in which arcs were supplied.
  std::span<const VertexId> out_neighbors(VertexId v) const { return out_sorted_[v]; }
  std::span<const VertexId> in_neighbors(VertexId v) const { return in_sorted_[v]; }
  std::span<const VertexId> neighbors(VertexId v, Sign s) const {
    return s == Sign::Plus ? out_neighbors(v) : in_neighbors(v);
  }
  // Neighbour lists in arc insertion order.
  std::span<const VertexId> out_adjacency(VertexId v) const { return out_adj_[v]; }
  std::span<const VertexId> in_adjacency(VertexId v) const { return in_adj_[v]; }

  const VertexSet& out_set(VertexId v) const { return out_bits_[v]; }
  const VertexSet& in_set(VertexId v) const { return in_bits_[v]; }
  const VertexSet& neighbor_set(VertexId v, Sign s) const {
    return s == Sign::Plus ? out_set(v) : in_set(v);
  }

  int out_degree(VertexId v) const { return static_cast<int>(out_adj_[v].size()); }
  int in_degree(VertexId v) const { return static_cast<int>(in_adj_[v].size()); }
  int degree(VertexId v, Sign s) const { return s == Sign::Plus ? out_degree(v) : in_degree(v); }

  bool has_arc(VertexId u, VertexId v) const { return out_bits_[u].contains(v); }
  bool contains_vertex(VertexId v) const { return v >= 0 && v < n_; }

  // Same order and same arc set (insertion order ignored).
  bool operator==(const Digraph& o) const;

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<VertexId>> out_adj_, in_adj_, out_sorted_, in_sorted_;
  std::vector<VertexSet> out_bits_, in_bits_;
};

struct DegreeProfile {
  std::vector<int> out_deg;
  std::vector<int> in_deg;
  int delta_plus_bar = 0;
  int delta_minus_bar = 0;
  int delta0_bar = 0;
  int min_out = 0;
  int min_in = 0;
  int max_out = 0;
  int max_in = 0;
};

DegreeProfile degree_profile(const Digraph& d);

// Minimum positive out- (Plus) or in-degree (Minus); 0 when there is none.
int pseudo_degree(const Digraph& d, Sign s);

// (D+, D-): vertices of positive out-degree and of positive in-degree.
std::pair<std::vector<VertexId>, std::vector<VertexId>> plus_minus_sets(const Digraph& d);

Digraph reverse(const Digraph& d);

struct Subdigraph {
  Digraph graph;
  // new id -> old id, and old id -> new id (-1 when dropped).
  std::vector<VertexId> new_to_old;
  std::vector<VertexId> old_to_new;
};

// Same vertex set, arc set replaced by keep_arcs (which must be arcs of d).
// With drop_isolated, vertices left without arcs are removed and the rest
// renumbered in increasing order.
Subdigraph induced_subdigraph(const Digraph& d, std::span<const Arc> keep_arcs,
                              bool drop_isolated = false);

// Digraph with extra arcs appended (used by generators and tests).
Digraph with_arcs(const Digraph& d, std::span<const Arc> extra);

// ---- text formats ----------------------------------------------------------

struct GraphFile {
  Digraph graph;
  std::optional<VertexId> root;
};

// Accepts either the arc-list format ("n m [root r]" then m lines "u v", '#'
// comments) or JSON {"n": .., "arcs": [[u,v],..], "root": r}. Detected by the
// first non-blank character.
GraphFile parse_graph(std::string_view text);
GraphFile read_graph_file(const std::string& path);

std::string to_arc_list(const Digraph& d, std::optional<VertexId> root = std::nullopt);
std::string to_json_text(const Digraph& d);
std::string to_dot(const Digraph& d, std::string_view name = "D");

}  // namespace antiembed
