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

#include <string>
#include <vector>

#include "antiembed/digraph.hpp"

namespace antiembed {

// Injective vertex map from a tree into a host; map[x] is the image of x.
struct Embedding {
  std::vector<VertexId> map;
  bool operator==(const Embedding&) const = default;
};

struct EmbeddingCheck {
  bool ok = false;
  std::string reason;
};

// Independent check: total, in range, injective, every tree arc lands on a
// host arc with the same direction.
EmbeddingCheck check_embedding(const Digraph& tree, const Digraph& host, const Embedding& e);
inline bool is_valid_embedding(const Digraph& tree, const Digraph& host, const Embedding& e) {
  return check_embedding(tree, host, e).ok;
}

}  // namespace antiembed
