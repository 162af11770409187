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

#include <compare>
#include <cstdint>

namespace antiembed {

// Dense vertex index. A digraph of order n uses ids 0..n-1.
using VertexId = std::int32_t;

enum class Sign : std::int8_t { Plus, Minus };

constexpr Sign opposite(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
constexpr char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

struct Arc {
  VertexId tail = 0;
  VertexId head = 0;
  friend constexpr auto operator<=>(const Arc&, const Arc&) = default;
};

constexpr Arc reversed(Arc a) { return {a.head, a.tail}; }

}  // namespace antiembed
