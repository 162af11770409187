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

#include "antiembed/embedding.hpp"

namespace antiembed {

EmbeddingCheck check_embedding(const Digraph& tree, const Digraph& host, const Embedding& e) {
  if (static_cast<int>(e.map.size()) != tree.order()) {
    return {false, "map has " + std::to_string(e.map.size()) + " entries for a tree of order " +
                       std::to_string(tree.order())};
  }
  std::vector<VertexId> owner(host.order(), -1);
  for (VertexId x = 0; x < tree.order(); ++x) {
    const VertexId h = e.map[x];
    if (h < 0 || h >= host.order()) return {false, "vertex " + std::to_string(x) + " unmapped or out of range"};
    if (owner[h] >= 0) {
      return {false, "vertices " + std::to_string(owner[h]) + " and " + std::to_string(x) +
                         " share image " + std::to_string(h)};
    }
    owner[h] = x;
  }
  for (const Arc& a : tree.arcs()) {
    if (!host.has_arc(e.map[a.tail], e.map[a.head])) {
      return {false, "tree arc " + std::to_string(a.tail) + "->" + std::to_string(a.head) +
                         " maps to non-arc " + std::to_string(e.map[a.tail]) + "->" +
                         std::to_string(e.map[a.head])};
    }
  }
  return {true, {}};
}

}  // namespace antiembed
