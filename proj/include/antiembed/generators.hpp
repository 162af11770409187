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
#include <string>
#include <vector>

#include "antiembed/antitree.hpp"
#include "antiembed/digraph.hpp"

namespace antiembed {

// Orientation of K_{2k-2,2k-2}: a_i (ids 0..2k-3) sends to b_{i+1..i+k-1}
// (ids 2k-2.., indices mod 2k-2) and receives from the other b_j.
Digraph gen_burr(int k);

// Point-to-line incidence digraph of PG(2,q): points get ids 0..N-1, lines
// N..2N-1 with N = q^2+q+1, and every arc runs point -> line.
Digraph gen_incidence(int q);
const std::vector<int>& supported_plane_orders();

// Checks that any two points share exactly one line and any two lines share
// exactly one point. Returns an empty string on success, else a description.
std::string audit_projective_plane(const Digraph& d, int q);

// Uniform simple digraph with exactly (k-1)n+1 arcs.
Digraph gen_random_dense(int n, int k, std::uint64_t seed);

// Uniform digraph with exactly m arcs.
Digraph gen_random_arcs(int n, int m, std::uint64_t seed);

// Random antidirected tree with k arcs. Vertex i attaches to an earlier
// vertex; with probability hub_bias it attaches to vertex 0 instead, which
// pushes up the maximum degree.
AntiTree random_antitree(int k, std::uint64_t seed, double hub_bias = 0.0);

// Random antidirected tree with two hubs at distance one to three. Each
// later vertex joins either hub with probability hub_share / 2, otherwise a
// uniform earlier vertex. Used to reach trees with a large second degree.
AntiTree random_two_hub_antitree(int k, std::uint64_t seed, double hub_share = 0.8);

// Random caterpillar with k arcs: a random spine length and leaves spread
// over the inner spine vertices.
AntiTree random_caterpillar(int k, std::uint64_t seed);

}  // namespace antiembed
