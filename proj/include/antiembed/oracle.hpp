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
#include <functional>
#include <optional>
#include <vector>

#include "antiembed/antitree.hpp"
#include "antiembed/digraph.hpp"
#include "antiembed/embedding.hpp"

namespace antiembed {

enum class Verdict { Embeds, NotContained, Inconclusive };
const char* to_string(Verdict v);

struct SearchStats {
  Verdict verdict = Verdict::Inconclusive;
  std::optional<Embedding> witness;  // set iff verdict == Embeds
  std::uint64_t nodes_expanded = 0;
  int max_depth = 0;
  double elapsed_ms = 0.0;
};

// A constrained embedding search. Tree vertices may be pinned to a host
// vertex and may be restricted to a domain; host vertices may be blocked.
struct SearchProblem {
  const Digraph* host = nullptr;
  const AntiTree* tree = nullptr;
  std::vector<VertexId> fixed;           // per tree vertex, -1 when free
  std::vector<std::optional<VertexSet>> domains;  // per tree vertex, nullopt = any
  std::optional<VertexSet> blocked;      // host vertices that may not be used
  std::optional<std::uint64_t> node_budget;
};

// Exact backtracking over tree vertices in BFS order from a centroid (or from
// a pinned vertex when there is one). Candidates are filtered by sign-degree
// and by the number of still unused neighbours, and tried in order of
// increasing degree slack. NotContained is reported only after an exhaustive
// search.
SearchStats exact_search(const SearchProblem& p);

SearchStats oracle_embed(const Digraph& d, const AntiTree& t,
                         std::optional<std::uint64_t> budget = std::nullopt);

// Streams every labelled digraph on n vertices with at least min_arcs arcs.
// The callback returns false to stop early. With dedup only the least
// labelling (by adjacency bitmask) of each isomorphism class is emitted.
// n > 5 requires allow_large.
void enumerate_digraphs(int n, int min_arcs, const std::function<bool(const Digraph&)>& sink,
                        bool dedup = false, bool allow_large = false);

}  // namespace antiembed
