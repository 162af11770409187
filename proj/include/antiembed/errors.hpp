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

#include <array>
#include <stdexcept>
#include <string>

#include "antiembed/types.hpp"

namespace antiembed {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad ids, loops, duplicate arcs, unparsable files.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A stated precondition of an operation does not hold for the given input.
class HypothesisViolated : public Error {
 public:
  using Error::Error;
};

class NotATree : public Error {
 public:
  using Error::Error;
};

class NotAntidirected : public Error {
 public:
  NotAntidirected(VertexId a, VertexId b, VertexId c)
      : Error("directed path of length two: " + std::to_string(a) + "->" + std::to_string(b) +
              "->" + std::to_string(c)),
        witness{a, b, c} {}
  std::array<VertexId, 3> witness;
};

class NotACaterpillar : public Error {
 public:
  explicit NotACaterpillar(VertexId w)
      : Error("not a caterpillar: vertex " + std::to_string(w) +
              " lies at distance >= 2 from the spine"),
        witness(w) {}
  VertexId witness;
};

// A step that must succeed under the operation's hypotheses did not.
// Seeing one of these means a bug in this library.
class InternalAssertion : public Error {
 public:
  InternalAssertion(std::string tag_, const std::string& detail)
      : Error("internal assertion [" + tag_ + "]: " + detail), tag(std::move(tag_)) {}
  std::string tag;
};

// A desk-scale guard (enumeration size, search budget) was exceeded.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace antiembed
