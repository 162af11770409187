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

#include "antiembed/freeness.hpp"

#include <algorithm>

namespace antiembed {

std::vector<VertexId> common_neighborhood(const Digraph& d, VertexId a, Sign sa, VertexId b,
                                          Sign sb) {
  if (a == b) throw InvalidInput("common_neighborhood needs two distinct vertices");
  VertexSet c = d.neighbor_set(a, sa);
  c &= d.neighbor_set(b, sb);
  c.erase(a);
  c.erase(b);
  return c.to_vector();
}

std::optional<ForbiddenWitness> find_k2s(const Digraph& d, int s) {
  if (s < 1) throw InvalidInput("s must be positive");
  const int n = d.order();
  constexpr Sign kSigns[2] = {Sign::Plus, Sign::Minus};
  for (VertexId a = 0; a < n; ++a) {
    for (Sign sa : kSigns) {
      if (d.degree(a, sa) < s) continue;
      for (VertexId b = a + 1; b < n; ++b) {
        for (Sign sb : kSigns) {
          if (d.degree(b, sb) < s) continue;
          const VertexSet& na = d.neighbor_set(a, sa);
          const VertexSet& nb = d.neighbor_set(b, sb);
          // Loops are excluded, so neither a nor b can be counted here.
          if (na.and_count(nb) < s) continue;
          ForbiddenWitness w{a, b, sa, sb, common_neighborhood(d, a, sa, b, sb)};
          w.common.resize(s);
          return w;
        }
      }
    }
  }
  return std::nullopt;
}

bool witness_holds(const Digraph& d, const ForbiddenWitness& w, int s) {
  if (w.a == w.b || static_cast<int>(w.common.size()) != s) return false;
  std::vector<VertexId> seen = w.common;
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  for (VertexId c : w.common) {
    if (c == w.a || c == w.b) return false;
    if (!d.neighbor_set(w.a, w.sign_a).contains(c)) return false;
    if (!d.neighbor_set(w.b, w.sign_b).contains(c)) return false;
  }
  return true;
}

NeighborSumReport k4_bound_check(const Digraph& d, int k, const VertexSet& S,
                                 std::span<const Probe> probes) {
  if (probes.size() != 3) throw InvalidInput("k4_bound_check needs exactly three probes");
  if (S.count() > k) throw InvalidInput("probe set larger than k");
  if (probes[0].vertex == probes[1].vertex || probes[0].vertex == probes[2].vertex ||
      probes[1].vertex == probes[2].vertex) {
    throw InvalidInput("k4_bound_check needs three distinct probe vertices");
  }
  NeighborSumReport r;
  r.k = k;
  for (const Probe& p : probes) r.sum += d.neighbor_set(p.vertex, p.sign).and_count(S);
  r.within_bound = 4 * r.sum < 5L * k;
  return r;
}

NeighborSumReport k4_bound_check(const Digraph& d, int k, std::span<const VertexId> S,
                                 std::span<const Probe> probes) {
  VertexSet set(d.order());
  for (VertexId v : S) set.insert(v);
  return k4_bound_check(d, k, set, probes);
}

}  // namespace antiembed
