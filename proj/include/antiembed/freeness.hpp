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

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "antiembed/digraph.hpp"

namespace antiembed {

// Two vertices whose sign-typed neighbourhoods share s vertices, i.e. one of
// the three orientations of K_{2,s}.
struct ForbiddenWitness {
  VertexId a = -1;
  VertexId b = -1;
  Sign sign_a = Sign::Plus;
  Sign sign_b = Sign::Plus;
  std::vector<VertexId> common;
};

// N^{sa}(a) ∩ N^{sb}(b), excluding a and b. Requires a != b.
std::vector<VertexId> common_neighborhood(const Digraph& d, VertexId a, Sign sa, VertexId b, Sign sb);

// Empty when d is K_{2,s}-free; otherwise a witness with exactly s common
// vertices (the least ones).
std::optional<ForbiddenWitness> find_k2s(const Digraph& d, int s);
inline bool is_k2s_free(const Digraph& d, int s) { return !find_k2s(d, s).has_value(); }

// Recheck a witness from scratch.
bool witness_holds(const Digraph& d, const ForbiddenWitness& w, int s);

struct Probe {
  VertexId vertex = -1;
  Sign sign = Sign::Plus;
};

struct NeighborSumReport {
  int k = 0;
  long sum = 0;           // Σ |N^{sign_i}(a_i) ∩ S|
  bool within_bound = false;  // 4*sum < 5k
};

// Three-probe neighbourhood sum against a set of at most k vertices. In a
// K_{2,ceil(k/12)}-free digraph with pairwise distinct probes the sum stays
// below 5k/4.
NeighborSumReport k4_bound_check(const Digraph& d, int k, std::span<const VertexId> S,
                                 std::span<const Probe> probes);
NeighborSumReport k4_bound_check(const Digraph& d, int k, const VertexSet& S,
                                 std::span<const Probe> probes);

inline int s_for_k(int k) { return (k + 11) / 12; }

}  // namespace antiembed
